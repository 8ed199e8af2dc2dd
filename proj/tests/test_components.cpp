#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "cdvf/components.hpp"
#include "cdvf/parse.hpp"
#include "cdvf/ramification.hpp"
#include "component_oracle.hpp"
#include "test_util.hpp"

using cdvf::ComponentProfile;
using cdvf::errc;
using cdvf::Tower;
using cdvf::ValRat;
using oracle::Mat;

namespace {

const ValRat INF = ValRat::infinity();

Tower tower_of(const std::string& input) {
    auto [base, polys] = cdvf::parse_input(input);
    return cdvf::make_tower(base, polys, 64);
}

}  // namespace

TEST_CASE("two-point profiles jump at twice the distance") {
    // hand value: S = d + d, so one jump at 2d separating both points
    Mat M = {{INF, ValRat(1)}, {ValRat(1), INF}};
    ComponentProfile pr = cdvf::profile_from_matrix(M);
    CHECK(pr.jumps == std::vector<ValRat>{ValRat(2)});
    CHECK(pr.counts == std::vector<long>{1, 2});

    Mat Mh = {{INF, ValRat(1, 2)}, {ValRat(1, 2), INF}};
    ComponentProfile ph = cdvf::profile_from_matrix(Mh);
    CHECK(ph.jumps == std::vector<ValRat>{ValRat(1)});

    // distance zero: the points separate as soon as r leaves 0
    Mat Mz = {{INF, ValRat(0)}, {ValRat(0), INF}};
    ComponentProfile pz = cdvf::profile_from_matrix(Mz);
    CHECK(pz.jumps == std::vector<ValRat>{ValRat(0)});
    CHECK(pz.counts == std::vector<long>{1, 2});
}

TEST_CASE("one point never jumps") {
    ComponentProfile pr = cdvf::profile_from_distances({}, true);
    CHECK(pr.jumps.empty());
    CHECK(pr.counts == std::vector<long>{1});
    CHECK(cdvf::conductor_from_profile(pr, 1) == ValRat(0));
}

TEST_CASE("heterogeneous three-point profile") {
    // distances {1, 1/2} from the first point; completion gives v_12 = 1/2.
    // Hand sums: S(0,1) = 1+1+1/2 = 5/2, S(0,2) = S(1,2) = 3/2, so the far
    // point leaves at 3/2 and the close pair at 5/2.
    ComponentProfile pr = cdvf::profile_from_distances({ValRat(1), ValRat(1, 2)}, true);
    CHECK(pr.jumps == std::vector<ValRat>{ValRat(3, 2), ValRat(5, 2)});
    CHECK(pr.counts == std::vector<long>{1, 2, 3});
    CHECK(cdvf::conductor_from_profile(pr, 3) == ValRat(5, 2));
}

TEST_CASE("equidistant three-point profile splits at once") {
    // all sums are 1+1+1 = 3: one jump straight to three clusters
    ComponentProfile pr = cdvf::profile_from_distances({ValRat(1), ValRat(1)}, true);
    CHECK(pr.jumps == std::vector<ValRat>{ValRat(3)});
    CHECK(pr.counts == std::vector<long>{1, 3});
}

TEST_CASE("production profiles match the radius oracle on worked examples") {
    std::vector<Mat> cases;
    cases.push_back({{INF, ValRat(1)}, {ValRat(1), INF}});
    cases.push_back({{INF, ValRat(0)}, {ValRat(0), INF}});
    cases.push_back({{INF, ValRat(1), ValRat(1, 2)},
                     {ValRat(1), INF, ValRat(1, 2)},
                     {ValRat(1, 2), ValRat(1, 2), INF}});
    for (const Mat& M : cases) {
        ComponentProfile got = cdvf::profile_from_matrix(M);
        ComponentProfile want = oracle::profile(M);
        CHECK(oracle::same_profile(got, want));
    }
}

TEST_CASE("random ultrametric matrices agree with the oracle") {
    std::mt19937 rng(20240811);
    long trials = 0;
    for (int rep = 0; rep < 150; ++rep) {
        size_t n = 2 + rng() % 3;  // sizes 2..4
        Mat M = oracle::random_ultrametric(rng, n);
        ComponentProfile got = cdvf::profile_from_matrix(M);
        ComponentProfile want = oracle::profile(M);
        REQUIRE(oracle::same_profile(got, want));
        cdvf::check_profile_laws(got, static_cast<long>(n));

        // the count at each jump is the left value (left continuity)
        for (size_t k = 0; k < got.jumps.size(); ++k)
            CHECK(oracle::count_at(M, got.jumps[k]) == got.counts[k]);

        // root labels carry no information
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        ComponentProfile gp = cdvf::profile_from_matrix(oracle::permuted(M, perm));
        CHECK(oracle::same_profile(got, gp));
        ++trials;
    }
    CHECK(trials >= 100);
}

TEST_CASE("matrix validation rejects non-ultrametric input") {
    // bad triple: two smallest entries differ
    Mat bad = {{INF, ValRat(1), ValRat(2)},
               {ValRat(1), INF, ValRat(3)},
               {ValRat(2), ValRat(3), INF}};
    expect_errc(errc::not_ultrametric, [&] { cdvf::profile_from_matrix(bad); });

    Mat asym = {{INF, ValRat(1)}, {ValRat(2), INF}};
    expect_errc(errc::not_ultrametric, [&] { cdvf::profile_from_matrix(asym); });

    Mat diag = {{ValRat(0), ValRat(1)}, {ValRat(1), INF}};
    expect_errc(errc::not_ultrametric, [&] { cdvf::profile_from_matrix(diag); });

    Mat offinf = {{INF, INF}, {INF, INF}};
    expect_errc(errc::not_ultrametric, [&] { cdvf::profile_from_matrix(offinf); });

    Mat ragged = {{INF, ValRat(1)}};
    expect_errc(errc::not_ultrametric, [&] { cdvf::profile_from_matrix(ragged); });
}

TEST_CASE("profile law checks catch hand-built corruption") {
    ComponentProfile good = cdvf::profile_from_distances({ValRat(1)}, true);
    CHECK_NOTHROW(cdvf::check_profile_laws(good, 2));

    ComponentProfile dec = good;
    dec.counts = {2, 1};
    expect_errc(errc::law_violation, [&] { cdvf::check_profile_laws(dec, 2); });

    ComponentProfile lens = good;
    lens.counts = {1, 2, 3};
    expect_errc(errc::law_violation, [&] { cdvf::check_profile_laws(lens, 2); });

    ComponentProfile order = good;
    order.jumps = {ValRat(2), ValRat(1)};
    order.counts = {1, 2, 3};
    expect_errc(errc::law_violation, [&] { cdvf::check_profile_laws(order, 3); });

    ComponentProfile over = good;
    over.counts = {1, 5};
    expect_errc(errc::law_violation, [&] { cdvf::check_profile_laws(over, 2); });

    // terminal count short of the degree: no conductor yet
    expect_errc(errc::incomplete_splitting,
                [&] { cdvf::conductor_from_profile(good, 3); });
}

TEST_CASE("extension profiles reproduce the conductor") {
    // degrees 2 and 3 over the three base fields; the last jump of the
    // component profile must equal the independently computed conductor
    const std::vector<std::string> corpus = {
        "laurent(p=2); X^2+t*X+t",
        "laurent(p=2); X^2+t^3*X+t",
        "laurent(p=2); X^3-t",
        "laurent(p=2); X^3+t^2*X+t",
        "laurent(p=3); X^2-t",
        "laurent(p=3); X^2+t*X+t",
        "laurent(p=3); X^3+t*X+t",
        "laurent(p=3); X^3+t^2*X+t",
        "laurent(p=2,k=Fp(u)); X^2+t*X+u",
        "laurent(p=2,k=Fp(u)); X^2+X+u",
        "laurent(p=2,k=Fp(u)); X^2+t*X+t",
        "laurent(p=2,k=Fp(u)); X^3-t",
    };
    for (const std::string& in : corpus) {
        Tower tw = tower_of(in);
        ComponentProfile pr = cdvf::components_for(tw, 64);
        cdvf::check_profile_laws(pr, tw.degree);
        CHECK(cdvf::conductor_from_profile(pr, tw.degree) == cdvf::conductor_value(tw));
    }
}

TEST_CASE("homogeneity is certified exactly where promised") {
    // degree <= 3 is always certified
    ComponentProfile low = cdvf::components_for(tower_of("laurent(p=2); X^3-t"), 64);
    CHECK_FALSE(low.homogeneous_assumed);
    // degree 4 over p = 2 is neither small nor of degree p: flagged
    ComponentProfile quartic =
        cdvf::components_for(tower_of("laurent(p=2); X^4+t*X+t"), 64);
    CHECK(quartic.homogeneous_assumed);
    CHECK(cdvf::conductor_from_profile(quartic, 4) == ValRat(4, 3));
}
