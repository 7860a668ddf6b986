#include "cyclarc/ints.hpp"

#include <algorithm>
#include <cmath>

#include "cyclarc/errors.hpp"

namespace cyclarc {

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(Int q, Int* p_out, int* h_out) {
    if (q < 2) return false;
    Int p = q;
    for (Int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    Int m = q;
    int h = 0;
    while (m % p == 0) {
        m /= p;
        ++h;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (h_out) *h_out = h;
    return true;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw MathError("integer overflow in multiplication");
    return r;
}

Int checked_pow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

Int mod_pow(Int base, Int exp, Int mod) {
    if (mod <= 0) throw MathError("mod_pow: nonpositive modulus");
    unsigned __int128 r = 1, b = static_cast<unsigned __int128>(((base % mod) + mod) % mod);
    Int e = exp;
    while (e > 0) {
        if (e & 1) r = (r * b) % static_cast<unsigned __int128>(mod);
        b = (b * b) % static_cast<unsigned __int128>(mod);
        e >>= 1;
    }
    return static_cast<Int>(r);
}

Int isqrt(Int n) {
    if (n < 0) throw MathError("isqrt of negative");
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) throw MathError("factorize: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<Int> divisors_of(Int n) {
    std::vector<Int> out{1};
    for (auto& [p, e] : factorize(n)) {
        size_t m = out.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < m; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclarc
