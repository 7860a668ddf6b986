#include "cyclarc/tower.hpp"

#include "cyclarc/errors.hpp"

namespace cyclarc {

namespace {
constexpr Int kTowerSizeCap = Int(1) << 48;
}

std::array<Element, 3> TowerContext::omega_coords(const Element& x) const {
    FieldPtr gfp = Field::prime_field(ext->characteristic());
    std::vector<Element> rhs;
    rhs.reserve(ext->degree());
    for (Int c : x.coeffs()) rhs.push_back(gfp->from_int(c));
    std::vector<Element> v = coord_solver.apply(rhs);
    int h = base->degree();
    std::array<Element, 3> out{base->zero(), base->zero(), base->zero()};
    for (int j = 0; j < 3; ++j) {
        std::vector<Int> cc(h, 0);
        for (int l = 0; l < h; ++l) cc[l] = v[j * h + l].coeffs()[0];
        out[j] = base->element(std::move(cc));
    }
    return out;
}

Element TowerContext::from_omega_coords(const Element& c0, const Element& c1,
                                        const Element& c2) const {
    Element w2 = omega * omega;
    return embed.apply(c0) + embed.apply(c1) * omega + embed.apply(c2) * w2;
}

Element TowerContext::frobenius(const Element& x, int j) const {
    Element r = x;
    int jj = ((j % 3) + 3) % 3;
    for (int i = 0; i < jj; ++i) r = r.pow(q);
    return r;
}

bool TowerContext::in_base_subfield(const Element& x) const {
    return frobenius(x, 1) == x;
}

TowerContext build_tower(Int p, int h) {
    if (!is_prime(p)) throw InputError("tower characteristic must be prime");
    if (h < 1) throw InputError("tower degree must be positive");
    Int q = checked_pow(p, h);
    Int q3 = checked_mul(checked_mul(q, q), q);
    if (q3 >= kTowerSizeCap)
        throw InputError("field size cap exceeded: q^3 must stay below 2^48 for exact desk-scale work");

    TowerContext ctx;
    ctx.q = q;
    ctx.base = Field::make(p, h);
    ctx.ext = Field::make(p, 3 * h);
    ctx.embed = FieldHom::embedding(ctx.base, ctx.ext);
    ctx.omega = ctx.ext->generator();

    // Minimal polynomial of omega over GF(q) from its Frobenius conjugates.
    Element w = ctx.omega;
    Element w1 = ctx.frobenius(w, 1);
    Element w2 = ctx.frobenius(w, 2);
    Element e1 = w + w1 + w2;
    Element e2 = w * w1 + w * w2 + w1 * w2;
    Element e3 = w * w1 * w2;
    Element a = ctx.embed.section(e1);
    Element b = ctx.embed.section(-e2);
    Element c = ctx.embed.section(e3);
    ctx.min_abc = {a, b, c};

    // Verify p(omega) = 0 for p(x) = x^3 - a x^2 - b x - c.
    Element lhs = w * w * w - ctx.embed.apply(a) * w * w - ctx.embed.apply(b) * w - ctx.embed.apply(c);
    if (!lhs.is_zero()) throw MathError("tower construction: minimal polynomial check failed");

    // Basis-change solver: (c0,c1,c2) in GF(q)^3 -> c0 + c1 w + c2 w^2 as a
    // GF(p)-linear map, inverted once.
    FieldPtr gfp = Field::prime_field(p);
    int n = 3 * h;
    Mat M(gfp, n, n);
    Element wpow = ctx.ext->one();
    for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < h; ++l) {
            std::vector<Int> basecoeff(h, 0);
            basecoeff[l] = 1;
            Element img = ctx.embed.apply(ctx.base->element(basecoeff)) * wpow;
            for (int i = 0; i < n; ++i) M.at(i, j * h + l) = gfp->from_int(img.coeffs()[i]);
        }
        wpow = wpow * ctx.omega;
    }
    ctx.coord_solver = M.inverse();
    return ctx;
}

std::vector<Element> minimal_polynomial(const TowerContext& ctx, const Element& x) {
    if (!x.field()->same_as(*ctx.ext)) throw InputError("element not in the tower extension");
    if (ctx.in_base_subfield(x)) {
        return {-ctx.embed.section(x), ctx.base->one()};
    }
    Element x1 = ctx.frobenius(x, 1);
    Element x2 = ctx.frobenius(x, 2);
    Element e1 = x + x1 + x2;
    Element e2 = x * x1 + x * x2 + x1 * x2;
    Element e3 = x * x1 * x2;
    return {-ctx.embed.section(e3), ctx.embed.section(e2), -ctx.embed.section(e1), ctx.base->one()};
}

RootsOfUnity nth_roots_of_unity(const FieldPtr& f, Int n) {
    if (n < 1) throw InputError("nth_roots_of_unity: n must be positive");
    Int p = f->characteristic();
    if (n % p == 0)
        throw InputError("n-th roots of unity are inseparable: characteristic divides n"
                         " (excluded case k^2-k+1 = 0 mod p)");
    RootsOfUnity out;
    Int s_mod_n = f->size() % n;
    // Least m with size^m = 1 mod n.
    int m = 1;
    Int acc = s_mod_n % n;
    while (acc != 1 % n) {
        acc = (acc * s_mod_n) % n;
        ++m;
        if (m > 4096) throw MathError("roots of unity: order search overflow");
    }
    if (m == 1) {
        out.field = f;
        out.extended = false;
        out.embed = FieldHom::identity(f);
    } else {
        out.field = Field::make(p, f->degree() * m);
        out.extended = true;
        out.embed = FieldHom::embedding(f, out.field);
    }
    std::vector<Element> cc(static_cast<size_t>(n) + 1, out.field->zero());
    cc[0] = -out.field->one();
    cc[static_cast<size_t>(n)] = out.field->one();
    UPoly f_xn1(out.field, std::move(cc));
    out.roots = roots_in_field(f_xn1);
    if (static_cast<Int>(out.roots.size()) != n)
        throw MathError("expected exactly n distinct n-th roots of unity");
    return out;
}

}  // namespace cyclarc
