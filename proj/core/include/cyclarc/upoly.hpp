#pragma once

#include <cstdint>
#include <vector>

#include "cyclarc/field.hpp"

namespace cyclarc {

/// Dense univariate polynomial over a finite field, low degree first,
/// trailing zeros trimmed. The zero polynomial has degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(FieldPtr f) : f_(std::move(f)) {}
    UPoly(FieldPtr f, std::vector<Element> c);

    static UPoly zero(const FieldPtr& f) { return UPoly(f); }
    static UPoly constant(const Element& e);
    static UPoly x(const FieldPtr& f);
    /// Builds from prime-field integer coefficients (reduced mod p).
    static UPoly from_prime_coeffs(const FieldPtr& f, const std::vector<Int>& c);

    const FieldPtr& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Element>& coeffs() const { return c_; }
    Element coeff(int i) const;
    const Element& lc() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Element& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly monic() const;
    UPoly shifted(int k) const;  // multiply by x^k
    UPoly derivative() const;
    Element eval(const Element& x) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly mod(const UPoly& d) const { return divmod(d).second; }
    /// Exact division; throws MathError if the remainder is nonzero.
    UPoly div_exact(const UPoly& d) const;

    /// this^e mod m.
    UPoly powmod(Int e, const UPoly& m) const;

    std::string str() const;

private:
    void trim();
    FieldPtr f_;
    std::vector<Element> c_;
};

UPoly gcd(UPoly a, UPoly b);

/// Squarefree decomposition f = prod f_i^i (monic parts), char-p aware.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

bool is_irreducible(const UPoly& f);

/// Full factorization into monic irreducibles with multiplicities, plus the
/// leading unit. Deterministic: the internal splitting randomness is seeded
/// from the seed argument only.
struct UFactorization {
    Element unit;
    std::vector<std::pair<UPoly, int>> factors;  // sorted for reproducibility
};
UFactorization factor(const UPoly& f, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Distinct roots of f lying in its coefficient field.
std::vector<Element> roots_in_field(const UPoly& f);

}  // namespace cyclarc
