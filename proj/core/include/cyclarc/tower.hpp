#pragma once

#include <array>

#include "cyclarc/field.hpp"
#include "cyclarc/linalg.hpp"
#include "cyclarc/upoly.hpp"

namespace cyclarc {

/// The field chain GF(p) < GF(q) < GF(q^3) with a distinguished primitive
/// element omega of GF(q^3) and the coefficients of its minimal polynomial
/// x^3 - a x^2 - b x - c over GF(q).
///
/// GF(q^3) is represented as a degree-3h extension of the prime field with an
/// explicit embedding of GF(q), so subfield membership tests stay exact.
/// Everything is deterministic for fixed (p, h): canonical moduli, canonical
/// embedding, first primitive element in canonical element order.
struct TowerContext {
    FieldPtr base;  // GF(q)
    FieldPtr ext;   // GF(q^3)
    FieldHom embed;
    Element omega;
    std::array<Element, 3> min_abc;  // a, b, c over the base field
    Int q = 0;

    /// Coordinates of an extension element in the basis 1, omega, omega^2,
    /// returned as base-field elements.
    std::array<Element, 3> omega_coords(const Element& x) const;
    Element from_omega_coords(const Element& c0, const Element& c1, const Element& c2) const;

    /// x -> x^(q^j) on the extension.
    Element frobenius(const Element& x, int j) const;
    bool in_base_subfield(const Element& x) const;

    Mat coord_solver;  // 3h x 3h over GF(p): inverse of the omega-basis map
};

/// Builds the tower for q = p^h. Throws InputError for non-prime p or fields
/// past the exact-arithmetic size cap.
TowerContext build_tower(Int p, int h);

/// Monic minimal polynomial of x over GF(q), coefficients low to high in the
/// base field. Degree 1 or 3.
std::vector<Element> minimal_polynomial(const TowerContext& ctx, const Element& x);

/// The n distinct n-th roots of unity. If they do not all lie in the given
/// field a splitting extension is constructed and reported.
struct RootsOfUnity {
    FieldPtr field;        // where the roots live
    bool extended = false; // true if field != requested field
    FieldHom embed;        // requested field -> field (identity-ish when not extended)
    std::vector<Element> roots;
};
RootsOfUnity nth_roots_of_unity(const FieldPtr& f, Int n);

}  // namespace cyclarc
