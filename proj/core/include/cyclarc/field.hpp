#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cyclarc/ints.hpp"

namespace cyclarc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class Element;

/// GF(p^d), realized as GF(p)[x] modulo a monic irreducible polynomial of
/// degree d. Elements are coefficient vectors over the prime field, low
/// degree first. Immutable after construction.
///
/// With no explicit modulus the canonical one is chosen: the monic
/// irreducible of degree d whose non-leading coefficient vector (c0..c_{d-1}),
/// read as base-p digits, is smallest. Rebuilding GF(p^d) therefore always
/// reproduces identical element encodings.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr prime_field(Int p);
    static FieldPtr make(Int p, int degree);
    static FieldPtr make(Int p, const std::vector<Int>& modulus);

    /// Text form "p^h/c0,c1,...,1" (modulus coefficients low to high).
    std::string spec_string() const;
    static FieldPtr parse_spec(const std::string& spec);

    Int characteristic() const { return p_; }
    int degree() const { return deg_; }
    Int size() const { return size_; }           // p^d
    Int mult_order() const { return size_ - 1; } // |F*|
    const std::vector<Int>& modulus() const { return mod_; }

    bool same_as(const Field& other) const;

    Element zero() const;
    Element one() const;
    Element from_int(Int v) const;
    Element element(std::vector<Int> coeffs) const;
    /// Element whose coefficient vector is the base-p digit expansion of idx.
    /// Defines the canonical element order used for deterministic searches.
    Element element_by_index(Int idx) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    Element pow(const Element& a, Int e) const;

    /// x -> x^(p^times), the base Frobenius iterated.
    Element frobenius_p(const Element& a, int times) const;
    /// Inverse of the p-power map: x -> x^(p^(d-1)).
    Element pth_root(const Element& a) const;

    /// Multiplicative order; requires a != 0.
    Int element_order(const Element& a) const;
    /// Least element (canonical order) of multiplicative order p^d - 1.
    const Element& generator() const;

    const std::vector<std::pair<Int, int>>& order_factorization() const;

private:
    Field(Int p, int deg, std::vector<Int> mod);
    std::vector<Int> reduce(std::vector<Int> raw) const;

    Int p_;
    int deg_;
    Int size_;
    std::vector<Int> mod_;  // monic, length deg_+1

    mutable std::once_flag fact_once_;
    mutable std::vector<std::pair<Int, int>> order_fact_;
    mutable std::once_flag gen_once_;
    mutable std::shared_ptr<Element> gen_;
};

/// A value of a specific finite field. Carries its field; mixed-field
/// arithmetic throws.
class Element {
public:
    Element() = default;
    Element(FieldPtr f, std::vector<Int> c) : field_(std::move(f)), c_(std::move(c)) {}

    const FieldPtr& field() const { return field_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool valid() const { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    Element operator+(const Element& o) const { return field_->add(*this, o); }
    Element operator-(const Element& o) const { return field_->sub(*this, o); }
    Element operator-() const { return field_->neg(*this); }
    Element operator*(const Element& o) const { return field_->mul(*this, o); }
    Element operator/(const Element& o) const { return field_->mul(*this, field_->inv(o)); }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element inverse() const { return field_->inv(*this); }
    Element pow(Int e) const { return field_->pow(*this, e); }

    /// Base-p digit encoding; inverse of Field::element_by_index.
    Int index() const;
    /// "c0,c1,..." low degree first.
    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Int> c_;
};

/// The canonical embedding GF(p^a) -> GF(p^b) for a | b: the source generator
/// x is sent to the least root (canonical element order) of the source
/// modulus in the target field.
class FieldHom {
public:
    FieldHom() = default;
    FieldHom(FieldPtr src, FieldPtr dst, Element gen_image);

    /// Constructs the canonical embedding; requires src.degree() | dst.degree()
    /// and equal characteristic.
    static FieldHom embedding(const FieldPtr& src, const FieldPtr& dst);

    static FieldHom identity(const FieldPtr& f);

    const FieldPtr& src() const { return src_; }
    const FieldPtr& dst() const { return dst_; }
    Element apply(const Element& a) const;

    /// Preimage of an element that lies in the embedded subfield; throws if
    /// it does not.
    Element section(const Element& a) const;

private:
    FieldPtr src_, dst_;
    Element gen_image_;
    std::vector<Element> pow_;            // gen_image^0 .. ^(src_deg-1)
    mutable std::vector<std::vector<Int>> section_mat_;  // lazily built solve data
    mutable std::once_flag section_once_;
    void build_section() const;
};

}  // namespace cyclarc
