#include "cyclarc/upoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cyclarc/errors.hpp"

namespace cyclarc {

UPoly::UPoly(FieldPtr f, std::vector<Element> c) : f_(std::move(f)), c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Element& e) {
    UPoly r(e.field());
    if (!e.is_zero()) r.c_ = {e};
    return r;
}

UPoly UPoly::x(const FieldPtr& f) { return UPoly(f, {f->zero(), f->one()}); }

UPoly UPoly::from_prime_coeffs(const FieldPtr& f, const std::vector<Int>& c) {
    std::vector<Element> e;
    e.reserve(c.size());
    for (Int v : c) e.push_back(f->from_int(v));
    return UPoly(f, std::move(e));
}

Element UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return f_->zero();
    return c_[i];
}

const Element& UPoly::lc() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(f_);
    UPoly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const Element& s) const {
    UPoly r(f_);
    r.c_ = c_;
    for (auto& e : r.c_) e *= s;
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

UPoly UPoly::shifted(int k) const {
    if (is_zero()) return *this;
    UPoly r(f_);
    r.c_.assign(c_.size() + k, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r(f_);
    if (c_.size() < 2) return r;
    r.c_.resize(c_.size() - 1, f_->zero());
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * f_->from_int(static_cast<Int>(i));
    r.trim();
    return r;
}

Element UPoly::eval(const Element& x) const {
    Element acc = f_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    UPoly q(f_), r = *this;
    int dd = d.degree();
    Element lci = d.lc().inverse();
    if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, f_->zero());
    while (r.degree() >= dd) {
        Element c = r.lc() * lci;
        int shift = r.degree() - dd;
        q.c_[shift] = c;
        for (int i = 0; i <= dd; ++i) r.c_[i + shift] -= c * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

UPoly UPoly::div_exact(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

UPoly UPoly::powmod(Int e, const UPoly& m) const {
    if (e < 0) throw MathError("negative exponent in powmod");
    UPoly acc = UPoly::constant(f_->one()).mod(m);
    UPoly base = this->mod(m);
    while (e > 0) {
        if (e & 1) acc = (acc * base).mod(m);
        base = (base * base).mod(m);
        e >>= 1;
    }
    return acc;
}

std::string UPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << "; ";
        os << c_[i].str();
    }
    os << "]";
    return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

namespace {

// x^(S^k) mod m where S is the field size: k successive exponent-S powerings.
UPoly frob_power_of_x(const UPoly& m, int k) {
    const FieldPtr& f = m.field();
    UPoly cur = UPoly::x(f).mod(m);
    for (int i = 0; i < k; ++i) cur = cur.powmod(f->size(), m);
    return cur;
}

UPoly frob_power(const UPoly& h, const UPoly& m) { return h.powmod(m.field()->size(), m); }

// Extracts the p-th root of a polynomial in x^p (all exponents divisible by p).
UPoly pth_root_poly(const UPoly& f) {
    const FieldPtr& F = f.field();
    Int p = F->characteristic();
    std::vector<Element> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        c.push_back(F->pth_root(f.coeff(i)));
    return UPoly(F, std::move(c));
}

bool is_pth_power_shape(const UPoly& f) {
    Int p = f.field()->characteristic();
    for (int i = 0; i <= f.degree(); ++i)
        if (i % p != 0 && !f.coeff(i).is_zero()) return false;
    return true;
}

void squarefree_rec(const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
    const FieldPtr& F = f.field();
    if (f.degree() < 1) return;
    UPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); multiplicities scale by p.
        squarefree_rec(pth_root_poly(f), mult * static_cast<int>(F->characteristic()), out);
        return;
    }
    UPoly c = gcd(f, d);
    UPoly w = f.div_exact(c);
    int i = 1;
    while (w.degree() > 0) {
        UPoly y = gcd(w, c);
        UPoly part = w.div_exact(y);
        if (part.degree() > 0) out.emplace_back(part.monic(), mult * i);
        w = y;
        c = c.div_exact(y);
        ++i;
    }
    if (c.degree() > 0) {
        if (!is_pth_power_shape(c)) throw MathError("squarefree decomposition failed");
        squarefree_rec(pth_root_poly(c), mult * static_cast<int>(F->characteristic()), out);
    }
}

}  // namespace

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    if (f.is_zero()) throw InputError("squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    squarefree_rec(f.monic(), 1, out);
    // Merge equal parts that can arise from the char-p recursion.
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.second < b.second; });
    return out;
}

bool is_irreducible(const UPoly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    UPoly m = f.monic();
    UPoly x = UPoly::x(f.field()).mod(m);
    UPoly xq = frob_power_of_x(m, d);
    if (xq != x) return false;
    for (Int r : prime_divisors(d)) {
        UPoly xr = frob_power_of_x(m, d / static_cast<int>(r));
        if (gcd(xr - x, m).degree() != 0) return false;
    }
    return true;
}

namespace {

// Distinct-degree factorization of a monic squarefree polynomial:
// (product of irreducibles of degree k, k) pairs.
std::vector<std::pair<UPoly, int>> ddf(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    UPoly rest = f;
    UPoly x = UPoly::x(f.field());
    UPoly h = x.mod(rest);
    int k = 0;
    while (rest.degree() > 0) {
        ++k;
        if (2 * k > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        h = frob_power(h, rest);
        UPoly g = gcd(h - x.mod(rest), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            rest = rest.div_exact(g);
            h = h.mod(rest);
        }
    }
    return out;
}

UPoly random_poly(const FieldPtr& F, int deg_below, std::mt19937_64& rng) {
    std::vector<Element> c;
    for (int i = 0; i < deg_below; ++i)
        c.push_back(F->element_by_index(static_cast<Int>(rng() % static_cast<std::uint64_t>(F->size()))));
    return UPoly(F, std::move(c));
}

// Equal-degree splitting: g monic squarefree, all irreducible factors of
// degree k. Appends the factors to out.
void edf(const UPoly& g, int k, std::mt19937_64& rng, std::vector<UPoly>& out) {
    const FieldPtr& F = g.field();
    if (g.degree() == k) {
        out.push_back(g);
        return;
    }
    Int p = F->characteristic();
    UPoly splitter(F);
    for (int tries = 0; tries < 256; ++tries) {
        UPoly h = random_poly(F, g.degree(), rng);
        if (h.degree() < 1) continue;
        UPoly c = gcd(h, g);
        if (c.degree() > 0 && c.degree() < g.degree()) {
            splitter = c;
            break;
        }
        if (p == 2) {
            // Trace map to GF(2) over the degree-k factor fields.
            int m = F->degree() * k;
            UPoly t = h.mod(g), acc = t;
            for (int i = 1; i < m; ++i) {
                t = (t * t).mod(g);
                acc = acc + t;
            }
            UPoly c2 = gcd(acc, g);
            if (c2.degree() > 0 && c2.degree() < g.degree()) {
                splitter = c2;
                break;
            }
        } else {
            // Norm to GF(S) followed by the (S-1)/2 power; exponents stay small.
            UPoly n = h.mod(g), hi = n;
            for (int i = 1; i < k; ++i) {
                hi = frob_power(hi, g);
                n = (n * hi).mod(g);
            }
            UPoly r = n.powmod((F->size() - 1) / 2, g);
            UPoly c2 = gcd(r - UPoly::constant(F->one()), g);
            if (c2.degree() > 0 && c2.degree() < g.degree()) {
                splitter = c2;
                break;
            }
        }
    }
    if (splitter.is_zero()) throw MathError("equal-degree splitting did not converge");
    edf(splitter.monic(), k, rng, out);
    edf(g.div_exact(splitter).monic(), k, rng, out);
}

bool upoly_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        Int ia = a.coeff(i).index(), ib = b.coeff(i).index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

}  // namespace

UFactorization factor(const UPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw InputError("factorization of zero");
    UFactorization out;
    out.unit = f.lc();
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed ^ (0x517cc1b727220a95ULL * static_cast<std::uint64_t>(f.field()->size())) ^
                        static_cast<std::uint64_t>(f.degree()));
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        for (auto& [prod, k] : ddf(part)) {
            std::vector<UPoly> irr;
            edf(prod, k, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(g, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](auto& a, auto& b) { return a.second != b.second ? a.second < b.second : upoly_less(a.first, b.first); });
    return out;
}

std::vector<Element> roots_in_field(const UPoly& f) {
    if (f.is_zero()) throw InputError("roots of the zero polynomial");
    const FieldPtr& F = f.field();
    std::vector<Element> roots;
    if (f.degree() < 1) return roots;
    UPoly m = f.monic();
    // gcd with x^S - x isolates the part that splits into distinct linear factors.
    UPoly xq = frob_power_of_x(m, 1);
    UPoly lin = gcd(xq - UPoly::x(F).mod(m), m);
    if (lin.degree() < 1) return roots;
    std::mt19937_64 rng(0xabcdef1234567890ULL ^ static_cast<std::uint64_t>(F->size()));
    std::vector<UPoly> parts;
    edf(lin.monic(), 1, rng, parts);
    for (auto& g : parts) roots.push_back(-(g.coeff(0)));
    std::sort(roots.begin(), roots.end(),
              [](const Element& a, const Element& b) { return a.index() < b.index(); });
    return roots;
}

}  // namespace cyclarc
