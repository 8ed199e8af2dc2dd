#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "cdvf/poly.hpp"
#include "test_util.hpp"

using cdvf::bigint;
using cdvf::errc;
using cdvf::KPoly;
using cdvf::NewtonPolygon;
using cdvf::OLElt;
using cdvf::PREC_INF;
using cdvf::ResidueElt;
using cdvf::ResidueField;
using cdvf::RFPtr;
using cdvf::TSeries;
using cdvf::ValRat;

namespace {

RFPtr f2() { return ResidueField::make_fp(2); }
RFPtr f3() { return ResidueField::make_fp(3); }
RFPtr f5() { return ResidueField::make_fp(5); }

TSeries S(const RFPtr& f, long off, std::initializer_list<long> cs, long prec = PREC_INF) {
    std::vector<ResidueElt> v;
    for (long c : cs) v.push_back(ResidueElt::from_int(f, c));
    return TSeries::make(f, off, std::move(v), prec);
}

TSeries mono(const RFPtr& f, long c, long e) {
    return TSeries::monomial(f, ResidueElt::from_int(f, c), e);
}

ValRat half() { return ValRat(bigint(1), bigint(2)); }

}  // namespace

// The resultant expectations below were computed by hand ahead of the
// implementation, each by two routes (expanding the Sylvester determinant
// and multiplying values over the roots), and are frozen here as data.

TEST_CASE("resultant of the wild quadratic with its derivative") {
    RFPtr f = f3();
    KPoly P = KPoly::from_coeffs(f, {mono(f, 1, 1), mono(f, 1, 1), S(f, 0, {1})});
    KPoly dP = P.derivative();
    CHECK(dP.degree() == 1);
    CHECK(dP.coeff(1).same_exact(S(f, 0, {2})));
    // det of [[1,t,t],[2,t,0],[0,2,t]] is t + 2 t^2 in characteristic 3
    CHECK(cdvf::resultant(P, dP).same_exact(S(f, 1, {1, 2})));
}

TEST_CASE("resultant against a constant is that constant to the degree") {
    RFPtr f = f2();
    KPoly P = KPoly::from_coeffs(f, {mono(f, 1, 1), mono(f, 1, 1), S(f, 0, {1})});
    KPoly t = KPoly::from_coeffs(f, {mono(f, 1, 1)});
    CHECK(cdvf::resultant(P, t).same_exact(mono(f, 1, 2)));
}

TEST_CASE("resultant of a split polynomial matches the product over its roots") {
    RFPtr f = f5();
    // (X - t)(X - t^2) paired with X - 1 gives (t - 1)(t^2 - 1)
    KPoly split = KPoly::from_coeffs(f, {mono(f, 1, 3), S(f, 1, {-1, -1}), S(f, 0, {1})});
    KPoly g = KPoly::from_coeffs(f, {S(f, 0, {-1}), S(f, 0, {1})});
    CHECK(cdvf::resultant(split, g).same_exact(S(f, 0, {1, 4, 4, 1})));
}

TEST_CASE("swapping the resultant arguments flips the expected sign") {
    RFPtr f = f5();
    KPoly a = KPoly::from_coeffs(f, {mono(f, -1, 1), S(f, 0, {1})});  // X - t
    KPoly b = KPoly::from_coeffs(f, {S(f, 0, {-1}), S(f, 0, {1})});   // X - 1
    CHECK(cdvf::resultant(a, b).same_exact(S(f, 0, {4, 1})));
    CHECK(cdvf::resultant(b, a).same_exact(S(f, 0, {1, 4})));
}

TEST_CASE("resultant with truncated entries keeps a readable valuation") {
    RFPtr f = f3();
    KPoly P = KPoly::from_coeffs(f, {S(f, 1, {1}, 6), mono(f, 1, 1), S(f, 0, {1})});
    KPoly g = KPoly::from_coeffs(f, {mono(f, 1, 1), S(f, 0, {2})});
    TSeries r = cdvf::resultant(P, g);
    CHECK_FALSE(r.is_exact());
    CHECK(r.val() == ValRat(1));
    CHECK(r.coeff_at(1) == ResidueElt::one(f));
    CHECK(r.coeff_at(2) == ResidueElt::from_int(f, 2));
}

TEST_CASE("synthetic division strips a known root") {
    RFPtr f = f5();
    KPoly split = KPoly::from_coeffs(f, {mono(f, 1, 3), S(f, 1, {-1, -1}), S(f, 0, {1})});
    KPoly q = split.deflated_at(mono(f, 1, 1));
    CHECK(q.degree() == 1);
    CHECK(q.coeff(0).same_exact(mono(f, -1, 2)));
    expect_errc(errc::internal_error, [&] { split.deflated_at(S(f, 0, {1})); });
}

TEST_CASE("evaluation follows the Horner chain") {
    RFPtr f = f3();
    KPoly P = KPoly::from_coeffs(f, {mono(f, 1, 1), mono(f, 1, 1), S(f, 0, {1})});
    // P(t) = t^2 + t*t + t = t + 2 t^2
    CHECK(P.eval(mono(f, 1, 1)).same_exact(S(f, 1, {1, 2})));
    CHECK(P.eval(TSeries::zero(f)).same_exact(mono(f, 1, 1)));
}

TEST_CASE("polygon of the wild quadratic") {
    RFPtr f = f2();
    KPoly P = KPoly::from_coeffs(f, {mono(f, 1, 1), mono(f, 1, 1), S(f, 0, {1})});
    NewtonPolygon np = cdvf::np_of_poly(P);
    CHECK(np.d == 2);
    CHECK(np.last_finite == 2);
    REQUIRE(np.vertices.size() == 2);
    CHECK(np.vertices[0].first == 0);
    CHECK(np.vertices[1].first == 2);
    auto sl = np.slopes();
    REQUIRE(sl.size() == 1);
    CHECK(sl[0].first == half());
    CHECK(sl[0].second == 2);
    CHECK(np.breakpoints().empty());
    CHECK(cdvf::np_type_matches(np, {0, 2}));
    CHECK(cdvf::np_type_matches(np, {0, 1, 2}));
    CHECK(np.value_at(1) == half());
    CHECK(np.slope_between(0, 2) == half());
}

TEST_CASE("polygon with trailing zero coefficients ends in an infinite slope") {
    RFPtr f = f2();
    // X * (X^2 + t X + t^2)
    KPoly P = KPoly::from_coeffs(
        f, {TSeries::zero(f), mono(f, 1, 2), mono(f, 1, 1), S(f, 0, {1})});
    NewtonPolygon np = cdvf::np_of_poly(P);
    CHECK(np.d == 3);
    CHECK(np.last_finite == 2);
    auto sl = np.slopes();
    REQUIRE(sl.size() == 2);
    CHECK(sl[0].first == ValRat(1));
    CHECK(sl[0].second == 2);
    CHECK(sl[1].first.is_inf());
    CHECK(sl[1].second == 1);
    CHECK(np.breakpoints() == std::vector<long>{2});
    CHECK_FALSE(cdvf::np_type_matches(np, {0, 3}));
    CHECK(cdvf::np_type_matches(np, {0, 2, 3}));
    CHECK_FALSE(np.is_affine_between(1, 3));
    CHECK(np.slope_between(2, 3).is_inf());
    CHECK(np.value_at(3).is_inf());
}

TEST_CASE("an interior infinite point does not disturb the hull") {
    NewtonPolygon np = cdvf::np_from_vals({ValRat(0), ValRat::infinity(), ValRat(2)});
    auto sl = np.slopes();
    REQUIRE(sl.size() == 1);
    CHECK(sl[0].first == ValRat(1));
    CHECK(sl[0].second == 2);
    CHECK(np.last_finite == 2);
}

TEST_CASE("polygon type lists must span the degree") {
    NewtonPolygon np = cdvf::np_from_vals({ValRat(0), ValRat(1), ValRat(1)});
    expect_errc(errc::internal_error, [&] { cdvf::np_type_matches(np, {1, 2}); });
    expect_errc(errc::internal_error, [&] { cdvf::np_type_matches(np, {0, 1}); });
    expect_errc(errc::internal_error, [&] { cdvf::np_type_matches(np, {0, 2, 2}); });
}

TEST_CASE("root shift of the wild quadratic") {
    RFPtr f = f2();
    auto host = std::make_shared<const KPoly>(
        KPoly::from_coeffs(f, {mono(f, 1, 1), mono(f, 1, 1), S(f, 0, {1})}));
    auto sh = cdvf::shifted_by_root(host);
    REQUIRE(sh.size() == 3);
    CHECK(sh[0].is_exact_zero());
    // 2z + t collapses to t in characteristic 2
    REQUIRE(sh[1].coeffs().size() == 1);
    CHECK(sh[1].coeffs()[0].same_exact(mono(f, 1, 1)));
    NewtonPolygon np = cdvf::np_of_shifted(sh);
    CHECK(np.vals[0] == ValRat(0));
    CHECK(np.vals[1] == ValRat(1));
    CHECK(np.vals[2].is_inf());
    auto sl = np.slopes();
    REQUIRE(sl.size() == 2);
    CHECK(sl[0].first == ValRat(1));
    CHECK(sl[1].first.is_inf());
}

TEST_CASE("root shift of the tame quadratic") {
    RFPtr f = f3();
    auto host = std::make_shared<const KPoly>(
        KPoly::from_coeffs(f, {mono(f, -1, 1), TSeries::zero(f), S(f, 0, {1})}));
    auto sh = cdvf::shifted_by_root(host);
    CHECK(sh[0].is_exact_zero());
    CHECK(sh[1].val() == half());
    auto sl = cdvf::np_of_shifted(sh).slopes();
    REQUIRE(sl.size() == 2);
    CHECK(sl[0].first == half());
    CHECK(sl[0].second == 1);
    CHECK(sl[1].first.is_inf());
}

TEST_CASE("quotient ring elements reduce and take valuations") {
    RFPtr f = f2();
    auto host = std::make_shared<const KPoly>(
        KPoly::from_coeffs(f, {mono(f, 1, 1), mono(f, 1, 2), TSeries::zero(f), S(f, 0, {1})}));
    OLElt z = OLElt::gen(host);
    // z^3 = t^2 z + t in this quotient
    OLElt z3 = z.pow(3);
    CHECK(z3.as_poly().coeff(0).same_exact(mono(f, 1, 1)));
    CHECK(z3.as_poly().coeff(1).same_exact(mono(f, 1, 2)));
    CHECK(z.val() == ValRat(bigint(1), bigint(3)));
    OLElt a = z * z + OLElt::from_series(host, mono(f, 1, 1));
    OLElt b = z + OLElt::from_series(host, mono(f, 1, 1));
    CHECK(a.val() == ValRat(bigint(2), bigint(3)));
    CHECK(b.val() == ValRat(bigint(1), bigint(3)));
    CHECK((a * b).val() == ValRat(1));
}

TEST_CASE("valuation of a uniformizer multiple in the wild quadratic") {
    RFPtr f = f2();
    auto host = std::make_shared<const KPoly>(
        KPoly::from_coeffs(f, {mono(f, 1, 1), mono(f, 1, 1), S(f, 0, {1})}));
    OLElt tz = OLElt::gen(host).scaled(mono(f, 1, 1));
    CHECK(tz.val() == ValRat(bigint(3), bigint(2)));
    CHECK(OLElt::zero(host).val().is_inf());
}
