#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cdvf/residue.hpp"
#include "test_util.hpp"

using cdvf::errc;
using cdvf::FqElt;
using cdvf::ResidueElt;
using cdvf::ResidueField;
using cdvf::RFPtr;
using cdvf::RPoly;

namespace {

RFPtr f2() { return ResidueField::make_fp(2); }
RFPtr f3() { return ResidueField::make_fp(3); }
RFPtr f4() { return ResidueField::make_fq(2, {1, 1, 1}); }
RFPtr f8() { return ResidueField::make_fq(2, {1, 1, 0, 1}); }
RFPtr f9() { return ResidueField::make_fq(3, {1, 0, 1}); }
RFPtr f16() { return ResidueField::make_fq(2, {1, 1, 0, 0, 1}); }
RFPtr f2u() { return ResidueField::make_fpu(2); }
RFPtr f3u() { return ResidueField::make_fpu(3); }
RFPtr f4u() { return ResidueField::make_fqu(2, {1, 1, 1}); }

}  // namespace

// The scalar tables below were worked out by hand from the defining
// relations before the field code existed, and the tests compare the
// library against them rather than against itself.

TEST_CASE("hand multiplication table of the quartic-root field on two elements") {
    RFPtr f = f4();  // w^2 = w + 1
    FqElt w{0, 1}, w1{1, 1}, one{1};
    CHECK(f->sc_mul(w, w) == w1);
    CHECK(f->sc_mul(w, w1) == one);
    CHECK(f->sc_mul(w1, w1) == w);
    CHECK(f->sc_inv(w) == w1);
    CHECK(f->sc_inv(w1) == w);
}

TEST_CASE("hand powers in the degree-three extension of F2") {
    RFPtr f = f8();  // w^3 = w + 1
    FqElt w{0, 1};
    CHECK(f->sc_pow(w, 3) == FqElt{1, 1});
    CHECK(f->sc_pow(w, 4) == FqElt{0, 1, 1});
    CHECK(f->sc_pow(w, 7) == FqElt{1});
}

TEST_CASE("hand powers in the quadratic extension of F3") {
    RFPtr f = f9();  // w^2 = -1
    FqElt w{0, 1}, w1{1, 1};
    CHECK(f->sc_pow(w, 2) == FqElt{2});
    CHECK(f->sc_mul(w1, w1) == FqElt{0, 2});
    CHECK(f->sc_pow(w, 4) == FqElt{1});
}

TEST_CASE("hand powers in the degree-four extension of F2") {
    RFPtr f = f16();  // w^4 = w + 1
    FqElt w{0, 1};
    CHECK(f->sc_pow(w, 4) == FqElt{1, 1});
    CHECK(f->sc_pow(w, 5) == FqElt{0, 1, 1});
    CHECK(f->sc_pow(w, 15) == FqElt{1});
}

TEST_CASE("every nonzero scalar multiplies back against its inverse") {
    for (const RFPtr& f : {f8(), f9()}) {
        for (unsigned long i = 1; i < f->sc_count(); ++i) {
            FqElt a = f->sc_from_index(i);
            CHECK(f->sc_mul(a, f->sc_inv(a)) == f->sc_one());
        }
    }
}

TEST_CASE("p-th root composed with the p-th power is the identity") {
    for (const RFPtr& f : {f4(), f9()}) {
        for (unsigned long i = 0; i < f->sc_count(); ++i) {
            FqElt a = f->sc_from_index(i);
            CHECK(f->sc_pow(f->sc_pth_root(a), static_cast<unsigned long>(f->p)) == a);
        }
    }
}

TEST_CASE("field factories validate their parameters") {
    expect_errc(errc::syntax_error, [] { ResidueField::make_fp(4); });
    expect_errc(errc::syntax_error, [] { ResidueField::make_fp(1); });
    // w^2 + 1 factors over F2, so it cannot define a scalar extension
    expect_errc(errc::reducible_residue, [] { ResidueField::make_fq(2, {1, 0, 1}); });
    CHECK(f4()->sc_count() == 4);
    CHECK(f16()->sc_count() == 16);
    CHECK(f2u()->sc_count() == 2);
}

TEST_CASE("rational function arithmetic clears denominators") {
    RFPtr f = f2u();
    ResidueElt u = ResidueElt::gen_u(f);
    ResidueElt one = ResidueElt::one(f);
    ResidueElt e = (u + one) / u;
    CHECK(e * u == u + one);
    CHECK(e - one == u.inv());
    CHECK(e * e.inv() == one);
    CHECK((u / u) == one);
    expect_errc(errc::division_by_zero, [&] { u / ResidueElt::zero(f); });
}

TEST_CASE("p-th power membership looks at u-exponents only") {
    RFPtr f = f2u();
    ResidueElt u = ResidueElt::gen_u(f);
    CHECK((u * u).is_pth_power());
    CHECK_FALSE(u.is_pth_power());
    CHECK_FALSE((u * u + u).is_pth_power());
    CHECK(ResidueElt::one(f).is_pth_power());
    CHECK(ResidueElt::zero(f).is_pth_power());
    // scalars are perfect, so a scalar factor never obstructs
    RFPtr g = f4u();
    ResidueElt wu2 = ResidueElt::gen_w(g) * ResidueElt::gen_u(g) * ResidueElt::gen_u(g);
    CHECK(wu2.is_pth_power());
    CHECK_FALSE((ResidueElt::gen_w(g) * ResidueElt::gen_u(g)).is_pth_power());
}

TEST_CASE("residue polynomials evaluate and differentiate in characteristic p") {
    RFPtr f = f2u();
    ResidueElt u = ResidueElt::gen_u(f);
    ResidueElt one = ResidueElt::one(f);
    RPoly q = RPoly::from_coeffs(f, {one, u, one});  // X^2 + u X + 1
    CHECK(q.eval(one) == u);
    RPoly dq = q.derivative();
    CHECK(dq.degree() == 0);  // the X^2 term dies in characteristic 2
    CHECK(dq.eval(u) == u);
}

TEST_CASE("finite field root search is exhaustive") {
    RFPtr f = f2();
    RPoly q = RPoly::from_coeffs(f, {ResidueElt::one(f), ResidueElt::one(f), ResidueElt::one(f)});
    auto rs = cdvf::rpoly_roots(q);  // X^2 + X + 1 has no roots over F2
    CHECK(rs.complete);
    CHECK(rs.roots.empty());
    RFPtr g = f4();
    RPoly q4 = RPoly::from_coeffs(g, {ResidueElt::one(g), ResidueElt::one(g), ResidueElt::one(g)});
    auto rs4 = cdvf::rpoly_roots(q4);  // both primitive cube roots of unity
    CHECK(rs4.complete);
    CHECK(rs4.roots.size() == 2);
}

TEST_CASE("function field root search honors coefficient degree bounds") {
    RFPtr f = f3u();
    ResidueElt u = ResidueElt::gen_u(f);
    ResidueElt u10 = u.pow(10);
    // X^2 - u^10 splits as (X - u^5)(X + u^5); the roots have u-degree 5,
    // well beyond the X-degree of the polynomial
    RPoly q = RPoly::from_coeffs(f, {-u10, ResidueElt::zero(f), ResidueElt::one(f)});
    auto rs = cdvf::rpoly_roots(q);
    CHECK(rs.complete);
    CHECK(rs.roots.size() == 2);
    ResidueElt u5 = u.pow(5);
    bool found = false;
    for (const auto& r : rs.roots) found = found || r == u5;
    CHECK(found);
    CHECK_FALSE(cdvf::rpoly_irreducible(q));
}

TEST_CASE("roots with denominators are found") {
    RFPtr f = f2u();
    ResidueElt u = ResidueElt::gen_u(f);
    // (X + 1/u)(X + u) = X^2 + (u + 1/u) X + 1
    RPoly q = RPoly::from_coeffs(f, {ResidueElt::one(f), u + u.inv(), ResidueElt::one(f)});
    auto rs = cdvf::rpoly_roots(q);
    CHECK(rs.complete);
    CHECK(rs.roots.size() == 2);
    bool found = false;
    for (const auto& r : rs.roots) found = found || r == u.inv();
    CHECK(found);
}

TEST_CASE("irreducibility decisions across both residue branches") {
    RFPtr f = f2();
    auto one = ResidueElt::one(f);
    CHECK(cdvf::rpoly_irreducible(RPoly::from_coeffs(f, {one, one, one})));
    CHECK(cdvf::rpoly_irreducible(
        RPoly::from_coeffs(f, {one, one, ResidueElt::zero(f), one})));  // X^3 + X + 1
    RFPtr g = f4();
    auto g1 = ResidueElt::one(g);
    CHECK_FALSE(cdvf::rpoly_irreducible(RPoly::from_coeffs(g, {g1, g1, g1})));
    RFPtr h = f3();
    auto h1 = ResidueElt::one(h);
    CHECK(cdvf::rpoly_irreducible(
        RPoly::from_coeffs(h, {h1, ResidueElt::zero(h), h1})));  // X^2 + 1
    CHECK_FALSE(cdvf::rpoly_irreducible(
        RPoly::from_coeffs(h, {-h1, ResidueElt::zero(h), h1})));  // X^2 - 1
    RFPtr fu = f2u();
    ResidueElt u = ResidueElt::gen_u(fu);
    CHECK(cdvf::rpoly_irreducible(
        RPoly::from_coeffs(fu, {u, ResidueElt::zero(fu), ResidueElt::one(fu)})));  // X^2 + u
    expect_errc(errc::undecidable_residue, [&] {
        cdvf::rpoly_irreducible(RPoly::from_coeffs(
            fu, {u, ResidueElt::zero(fu), ResidueElt::zero(fu), ResidueElt::zero(fu),
                 ResidueElt::one(fu)}));  // degree 4 is out of scope
    });
}

TEST_CASE("printing stays reparseable by eye") {
    RFPtr f = f4u();
    ResidueElt e = ResidueElt::gen_w(f) * ResidueElt::gen_u(f) + ResidueElt::one(f);
    CHECK(e.to_string() == "w*u+1");
    ResidueElt q = ResidueElt::one(f) / ResidueElt::gen_u(f);
    CHECK(q.to_string() == "(1)/(u)");
}
