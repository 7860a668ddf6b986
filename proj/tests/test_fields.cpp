#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cyclarc/errors.hpp"
#include "cyclarc/field.hpp"
#include "cyclarc/tower.hpp"
#include "cyclarc/upoly.hpp"

using namespace cyclarc;

namespace {

Element random_element(const FieldPtr& f, std::mt19937_64& rng) {
    return f->element_by_index(static_cast<Int>(rng() % static_cast<std::uint64_t>(f->size())));
}

}  // namespace

TEST_CASE("canonical modulus of GF(8) is x^3+x+1") {
    FieldPtr f8 = Field::make(2, 3);
    CHECK(f8->modulus() == std::vector<Int>{1, 1, 0, 1});
    CHECK(f8->spec_string() == "2^3/1,1,0,1");
    FieldPtr round = Field::parse_spec(f8->spec_string());
    CHECK(round->same_as(*f8));
}

TEST_CASE("field axioms hold on sampled triples") {
    std::mt19937_64 rng(7);
    for (auto [p, d] : {std::pair<Int, int>{5, 2}, {2, 3}, {7, 1}, {3, 3}}) {
        FieldPtr f = Field::make(p, d);
        for (int i = 0; i < 40; ++i) {
            Element a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("reducible user modulus is rejected") {
    // x^2 + 1 = (x+2)(x+3) over GF(5)
    CHECK_THROWS_AS(Field::make(5, std::vector<Int>{1, 0, 1}), InputError);
    CHECK_THROWS_AS(Field::make(4, 1), InputError);  // non-prime characteristic
}

TEST_CASE("build_tower (2,1): GF(2) in GF(8), omega of order 7") {
    TowerContext t = build_tower(2, 1);
    CHECK(t.q == 2);
    CHECK(t.ext->size() == 8);
    CHECK(t.ext->element_order(t.omega) == 7);
    // min poly of omega is the field modulus x^3+x+1, i.e. (a,b,c) = (0,1,1)
    CHECK(t.min_abc[0] == t.base->from_int(0));
    CHECK(t.min_abc[1] == t.base->from_int(1));
    CHECK(t.min_abc[2] == t.base->from_int(1));
}

TEST_CASE("build_tower (5,2): omega order is 15624, checked against prime divisors") {
    TowerContext t = build_tower(5, 2);
    CHECK(t.ext->size() == 15625);
    // independent oracle: 15624 = 2^3 * 3^2 * 7 * 31
    CHECK(t.omega.pow(15624).is_one());
    for (Int r : {2, 3, 7, 31}) CHECK_FALSE(t.omega.pow(15624 / r).is_one());
}

TEST_CASE("build_tower (3,1): omega order 26") {
    TowerContext t = build_tower(3, 1);
    CHECK(t.omega.pow(26).is_one());
    for (Int r : {2, 13}) CHECK_FALSE(t.omega.pow(26 / r).is_one());
}

TEST_CASE("minimal polynomial properties") {
    TowerContext t = build_tower(2, 1);
    // degree-1 case for subfield elements
    auto mp1 = minimal_polynomial(t, t.embed.apply(t.base->one()));
    CHECK(mp1.size() == 2);

    // Frobenius conjugates share a minimal polynomial
    auto a = minimal_polynomial(t, t.omega);
    auto b = minimal_polynomial(t, t.frobenius(t.omega, 1));
    CHECK(a == b);

    TowerContext t2 = build_tower(3, 2);
    auto m = minimal_polynomial(t2, t2.omega);
    CHECK(m.size() == 4);
    // result annihilates omega
    Element acc = t2.ext->zero(), wp = t2.ext->one();
    for (auto& coef : m) {
        acc = acc + t2.embed.apply(coef) * wp;
        wp = wp * t2.omega;
    }
    CHECK(acc.is_zero());
    // irreducible over GF(q): no root in the base field (checked exhaustively)
    for (Int i = 0; i < t2.base->size(); ++i) {
        Element x = t2.base->element_by_index(i);
        Element v = t2.base->zero(), xp = t2.base->one();
        for (auto& coef : m) {
            v = v + coef * xp;
            xp = xp * x;
        }
        CHECK_FALSE(v.is_zero());
    }
}

TEST_CASE("frobenius fixes exactly the base subfield") {
    TowerContext t = build_tower(3, 1);
    int fixed = 0;
    for (Int i = 0; i < t.ext->size(); ++i) {
        Element x = t.ext->element_by_index(i);
        if (t.frobenius(x, 1) == x) ++fixed;
        CHECK(t.frobenius(x, 3) == x);
        CHECK(t.frobenius(t.frobenius(x, 1), 1) == t.frobenius(x, 2));
    }
    CHECK(fixed == 3);  // |GF(3)|
}

TEST_CASE("norms land in the base subfield") {
    TowerContext t = build_tower(5, 1);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        Element x = random_element(t.ext, rng);
        if (x.is_zero()) continue;
        Element n = x * t.frobenius(x, 1) * t.frobenius(x, 2);
        CHECK(t.in_base_subfield(n));
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    TowerContext t = build_tower(2, 2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        Element a = random_element(t.base, rng), b = random_element(t.base, rng);
        CHECK(t.embed.apply(a + b) == t.embed.apply(a) + t.embed.apply(b));
        CHECK(t.embed.apply(a * b) == t.embed.apply(a) * t.embed.apply(b));
        CHECK(t.embed.section(t.embed.apply(a)) == a);
    }
}

TEST_CASE("omega coordinate map inverts the omega basis") {
    TowerContext t = build_tower(3, 2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Element x = random_element(t.ext, rng);
        auto [c0, c1, c2] = t.omega_coords(x);
        CHECK(t.from_omega_coords(c0, c1, c2) == x);
    }
}

TEST_CASE("nth roots of unity: small cases") {
    FieldPtr f7 = Field::prime_field(7);
    auto r3 = nth_roots_of_unity(f7, 3);
    CHECK_FALSE(r3.extended);
    std::set<Int> got;
    for (auto& r : r3.roots) got.insert(r.index());
    CHECK(got == std::set<Int>{1, 2, 4});

    auto r1 = nth_roots_of_unity(f7, 1);
    CHECK(r1.roots.size() == 1);
    CHECK(r1.roots[0].is_one());
}

TEST_CASE("nth roots of unity: splitting extension GF(5^4) for n=13") {
    FieldPtr f5 = Field::prime_field(5);
    auto r = nth_roots_of_unity(f5, 13);
    CHECK(r.extended);
    CHECK(r.field->size() == 625);
    CHECK(r.roots.size() == 13);
    for (auto& u : r.roots) CHECK(u.pow(13).is_one());
    // closed under multiplication and inversion
    for (auto& u : r.roots)
        for (auto& v : r.roots) {
            Element w = u * v;
            bool found = false;
            for (auto& z : r.roots) found |= (z == w);
            CHECK(found);
        }
}

TEST_CASE("characteristic dividing n is rejected") {
    CHECK_THROWS_AS(nth_roots_of_unity(Field::prime_field(7), 14), InputError);
}

TEST_CASE("upoly factorization round trip") {
    FieldPtr f = Field::prime_field(7);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Element> cs;
        int deg = 2 + static_cast<int>(rng() % 7);
        for (int i = 0; i <= deg; ++i) cs.push_back(random_element(f, rng));
        UPoly g(f, cs);
        if (g.degree() < 1) continue;
        auto fac = factor(g, 99);
        UPoly prod = UPoly::constant(fac.unit);
        for (auto& [h, m] : fac.factors) {
            CHECK(is_irreducible(h));
            for (int i = 0; i < m; ++i) prod = prod * h;
        }
        CHECK(prod == g);
    }
}

TEST_CASE("roots in field") {
    FieldPtr f = Field::prime_field(11);
    // (x-3)(x-5)^2 * (x^2+1), where x^2+1 is irreducible over GF(11)
    UPoly g = UPoly::from_prime_coeffs(f, {1, 0, 1});
    UPoly h = UPoly::from_prime_coeffs(f, {-3, 1}) * UPoly::from_prime_coeffs(f, {-5, 1}) *
              UPoly::from_prime_coeffs(f, {-5, 1}) * g;
    auto roots = roots_in_field(h);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].index() == 3);
    CHECK(roots[1].index() == 5);
}

TEST_CASE("tower size cap produces a clear error") {
    CHECK_THROWS_AS(build_tower(2, 17), InputError);
}
