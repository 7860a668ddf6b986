#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclarc {

using Int = std::int64_t;

/// Deterministic primality test by trial division. Desk scale only.
bool is_prime(Int n);

/// Writes q = p^h with p prime if q is a prime power. Returns false otherwise.
bool is_prime_power(Int q, Int* p_out = nullptr, int* h_out = nullptr);

/// a*b with overflow check; throws MathError on overflow.
Int checked_mul(Int a, Int b);

/// base^exp with overflow check.
Int checked_pow(Int base, int exp);

Int mod_pow(Int base, Int exp, Int mod);

/// Floor of the square root.
Int isqrt(Int n);

/// Trial-division factorization, (prime, exponent) pairs in increasing order.
std::vector<std::pair<Int, int>> factorize(Int n);

std::vector<Int> prime_divisors(Int n);

/// All positive divisors, sorted increasing.
std::vector<Int> divisors_of(Int n);

}  // namespace cyclarc
