#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>
#include <vector>

#include "cdvf/parse.hpp"
#include "cdvf/report.hpp"
#include "test_util.hpp"

using cdvf::CDVF;
using cdvf::errc;
using cdvf::KPoly;
using cdvf::ReportJSON;
using cdvf::TSeries;

namespace {

// Fixed point of print-then-parse: the canonical spelling must reproduce
// itself exactly.
void roundtrip_poly(const std::string& base_text, const std::string& poly_text) {
    CDVF base = cdvf::parse_base(base_text);
    std::string once = cdvf::print_poly(base, cdvf::parse_poly(base, poly_text));
    std::string twice = cdvf::print_poly(base, cdvf::parse_poly(base, once));
    CHECK(once == twice);
}

std::string msg_of(errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const cdvf::error& e) {
        CHECK(e.code() == code);
        return e.what();
    }
    FAIL("expected an error");
    return "";
}

}  // namespace

TEST_CASE("base descriptors parse and print canonically") {
    CHECK(cdvf::print_base(cdvf::parse_base("laurent(p=2)")) == "laurent(p=2)");
    CHECK(cdvf::print_base(cdvf::parse_base("laurent( p = 5 , k = Fp )")) == "laurent(p=5)");
    CHECK(cdvf::print_base(cdvf::parse_base("laurent(p=2,k=Fq:w^2+w+1)")) ==
          "laurent(p=2,k=Fq:w^2+w+1)");
    CHECK(cdvf::print_base(cdvf::parse_base("laurent(p=3,k=Fp(u))")) ==
          "laurent(p=3,k=Fp(u))");
    CHECK(cdvf::print_base(cdvf::parse_base("laurent(p=3,k=Fq(u):w^2+1)")) ==
          "laurent(p=3,k=Fq(u):w^2+1)");
}

TEST_CASE("base descriptor rejections") {
    expect_errc(errc::syntax_error, [] { cdvf::parse_base("laurent(p=4)"); });
    expect_errc(errc::syntax_error, [] { cdvf::parse_base("laurent(q=2)"); });
    expect_errc(errc::syntax_error, [] { cdvf::parse_base("laurent(p=2"); });
    expect_errc(errc::syntax_error, [] { cdvf::parse_base("laurent(p=2,k=Fr)"); });
    // w^2+1 = (w+1)^2 over F2: not a field
    expect_errc(errc::reducible_residue, [] { cdvf::parse_base("laurent(p=2,k=Fq:w^2+1)"); });
}

TEST_CASE("syntax errors carry line and column positions") {
    CDVF K = cdvf::parse_base("laurent(p=2)");
    std::string m =
        msg_of(errc::syntax_error, [&] { cdvf::parse_poly(K, "X^2 + + t"); });
    CHECK(m.find("line 1, col 7") != std::string::npos);

    m = msg_of(errc::syntax_error, [&] { cdvf::parse_poly(K, "X^2 +\n t^"); });
    CHECK(m.find("line 2") != std::string::npos);

    // division by a non-monomial cannot stay exact and is refused
    expect_errc(errc::syntax_error, [&] { cdvf::parse_poly(K, "X/(1+t)"); });
    expect_errc(errc::division_by_zero, [&] { cdvf::parse_poly(K, "X/0"); });
    expect_errc(errc::syntax_error, [&] { cdvf::parse_poly(K, "(1+t)^-1"); });

    // u and w only exist over bases that declare them
    expect_errc(errc::syntax_error, [&] { cdvf::parse_poly(K, "X^2+u"); });
    expect_errc(errc::syntax_error, [&] { cdvf::parse_poly(K, "X^2+w"); });
}

TEST_CASE("whitespace and parentheses do not change the value") {
    CDVF K = cdvf::parse_base("laurent(p=2)");
    std::string a = cdvf::print_poly(K, cdvf::parse_poly(K, "X^2+t*X+t"));
    std::string b = cdvf::print_poly(K, cdvf::parse_poly(K, "  X ^ 2 + ( t * X ) + t "));
    CHECK(a == b);
    CHECK(a == "X^2+t*X+t");
}

TEST_CASE("printed polynomials parse back to themselves") {
    roundtrip_poly("laurent(p=2)", "X^2+t*X+t");
    roundtrip_poly("laurent(p=3)", "X^2-t");
    roundtrip_poly("laurent(p=3)", "X^3 + 2*t^2*X + t^5");
    roundtrip_poly("laurent(p=2,k=Fp(u))", "X^2+t*X+u");
    roundtrip_poly("laurent(p=2,k=Fp(u))", "X^2 + X/u + u^2*t^3");
    roundtrip_poly("laurent(p=2,k=Fp(u))", "X^2 + (u^2+u)*t*X + u*t^-2");
    roundtrip_poly("laurent(p=2,k=Fq:w^2+w+1)", "X^3 + w*t*X + (w+1)*t");
    roundtrip_poly("laurent(p=3,k=Fq(u):w^2+1)", "X^2 + (w*u+1)*X + w*u^3*t^2");
    roundtrip_poly("laurent(p=2)", "X^4 + t^-1*X^2 + t");
}

TEST_CASE("combined inputs advance the presentation between steps") {
    // the second polynomial lives over the rebased field where the new
    // transcendental is u1; the literal u is accepted as an alias for it
    auto [b1, p1] = cdvf::parse_input("laurent(p=2,k=Fp(u)); X^2+t*X+u; X^2+t*X+u1");
    auto [b2, p2] = cdvf::parse_input("laurent(p=2,k=Fp(u)); X^2+t*X+u; X^2+t*X+u");
    REQUIRE(p1.size() == 2);
    REQUIRE(p2.size() == 2);
    CHECK(b1.k->same(*b2.k));
    // both spellings parse to the same second-step polynomial
    CHECK(p1[1].coeff(0).coeff_at(0) == p2[1].coeff(0).coeff_at(0));

    // an Eisenstein step renames the uniformizer to z
    auto [b3, p3] = cdvf::parse_input("laurent(p=2); X^2+t*X+t; X^2+z*X+z");
    auto [b4, p4] = cdvf::parse_input("laurent(p=2); X^2+t*X+t; X^2+t*X+t");
    CHECK(p3[1].coeff(0).offset() == p4[1].coeff(0).offset());
}

TEST_CASE("series parsing for radicial hints") {
    CDVF K = cdvf::parse_base("laurent(p=2,k=Fp(u))");
    TSeries h = cdvf::parse_series(K, "u");
    CHECK(h.is_exact());
    CHECK(h.coeff_at(0) == cdvf::ResidueElt::gen_u(K.k));
    CHECK_NOTHROW(cdvf::parse_series(K, "u^2 + t^3"));
    // the step variable is not a series atom
    expect_errc(errc::syntax_error, [&] { cdvf::parse_series(K, "X+1"); });
}

TEST_CASE("reports are byte-identical across repeated construction") {
    const std::vector<std::string> inputs = {
        "laurent(p=2); X^2+t*X+t",
        "laurent(p=2,k=Fp(u)); X^2+t*X+u",
        "laurent(p=3); X^3+t*X+t",
        "laurent(p=2,k=Fp(u)); X^2+t*X+u; X^2+t*X+u1",
    };
    for (const std::string& in : inputs) {
        std::vector<std::string> dumps;
        for (int rep = 0; rep < 3; ++rep) {
            auto [base, polys] = cdvf::parse_input(in);
            dumps.push_back(cdvf::build_report(base, polys, 512).dump());
        }
        CHECK(dumps[0] == dumps[1]);
        CHECK(dumps[1] == dumps[2]);
    }
}

TEST_CASE("report blocks appear exactly where defined") {
    auto [kb, kp] = cdvf::parse_input("laurent(p=2); X^2+t*X+t");
    ReportJSON full = cdvf::build_report(kb, kp, 512);
    CHECK(full["schema_version"] == 1);
    CHECK(full["input"] == "laurent(p=2); X^2+t*X+t");
    CHECK(full.contains("ramification"));
    CHECK(full.contains("newton"));
    CHECK(full.contains("components"));
    CHECK(full["ramification"]["conductor"] == "2/1");
    CHECK(full["ramification"]["log_conductor"]["value"] == "1/1");
    CHECK(full["ramification"]["herbrand"]["upper_breaks"][0] == "1/1");
    CHECK(full["ramification"]["checks"]["classical_match"] == true);

    // fierce: no herbrand block, no classical check, bound check present
    auto [fb, fp] = cdvf::parse_input("laurent(p=2,k=Fp(u)); X^2+t*X+u");
    ReportJSON fierce = cdvf::build_report(fb, fp, 512);
    CHECK(fierce.contains("ramification"));
    CHECK_FALSE(fierce["ramification"].contains("herbrand"));
    CHECK_FALSE(fierce["ramification"]["checks"].contains("classical_match"));
    CHECK(fierce["ramification"]["checks"]["dif_ram_bound"] == true);

    // etale: no different bound check
    auto [eb, ep] = cdvf::parse_input("laurent(p=2,k=Fp(u)); X^2+X+u");
    ReportJSON et = cdvf::build_report(eb, ep, 512);
    CHECK_FALSE(et["ramification"]["checks"].contains("dif_ram_bound"));
    CHECK(et["ramification"]["conductor"] == "0/1");

    // multi-step towers stop at the accumulated invariants
    auto [tb, tp] = cdvf::parse_input("laurent(p=2,k=Fp(u)); X^2+t*X+u; X^2+t*X+u1");
    ReportJSON tower = cdvf::build_report(tb, tp, 512);
    CHECK_FALSE(tower.contains("ramification"));
    CHECK_FALSE(tower.contains("newton"));
    CHECK_FALSE(tower.contains("components"));
    CHECK(tower["extension"]["degree"] == 4);
    CHECK(tower["invariants"]["discriminant_vK"] == "8/1");
}

TEST_CASE("component CSV doubles each jump") {
    auto [b, p] = cdvf::parse_input("laurent(p=2); X^2+t*X+t");
    std::string csv = cdvf::components_csv(cdvf::components_profile(b, p, 512));
    CHECK(csv == "r,count\n0/1,1\n2/1,1\n2/1,2\n");
}

TEST_CASE("error JSON carries code, message and exit") {
    cdvf::error e(errc::syntax_error, "line 1, col 3: expected a digit");
    ReportJSON j = cdvf::json_error(e);
    CHECK(j["error"]["code"] == "SyntaxError");
    CHECK(j["error"]["message"] == "line 1, col 3: expected a digit");
    CHECK(j["error"]["exit"] == 2);
    CHECK_FALSE(j["error"].contains("detail"));

    cdvf::error d =
        cdvf::error(errc::splits_after_base_change, "split").with_detail("factors=X,X+1");
    ReportJSON jd = cdvf::json_error(d);
    CHECK(jd["error"]["detail"] == "factors=X,X+1");
    CHECK(jd["error"]["exit"] == 4);
}

TEST_CASE("exit codes group the error taxonomy") {
    CHECK(cdvf::exit_code_for(errc::syntax_error) == 2);
    CHECK(cdvf::exit_code_for(errc::inseparable) == 2);
    CHECK(cdvf::exit_code_for(errc::fierce_input) == 2);
    CHECK(cdvf::exit_code_for(errc::precision_exhausted) == 3);
    CHECK(cdvf::exit_code_for(errc::precision_cap_exceeded) == 3);
    CHECK(cdvf::exit_code_for(errc::undecidable_galois) == 4);
    CHECK(cdvf::exit_code_for(errc::splits_after_base_change) == 4);
    CHECK(cdvf::exit_code_for(errc::not_normalizable) == 4);
    CHECK(cdvf::exit_code_for(errc::law_violation) == 5);
    CHECK(cdvf::exit_code_for(errc::internal_error) == 5);
}
