#include "cdvf/components.hpp"

#include <algorithm>

#include "cdvf/ramification.hpp"

namespace cdvf {
namespace {

struct UnionFind {
    std::vector<long> parent;

    explicit UnionFind(long n) : parent(static_cast<size_t>(n)) {
        for (long i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    long find(long x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(long a, long b) { parent[static_cast<size_t>(find(a))] = find(b); }
    long classes() {
        long n = 0;
        for (long i = 0; i < static_cast<long>(parent.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }
};

void validate_matrix(const std::vector<std::vector<ValRat>>& M) {
    const long n = static_cast<long>(M.size());
    check(n >= 1, errc::not_ultrametric, "matrix must have at least one point");
    for (long i = 0; i < n; ++i) {
        check(static_cast<long>(M[static_cast<size_t>(i)].size()) == n, errc::not_ultrametric,
              "matrix must be square");
        check(M[static_cast<size_t>(i)][static_cast<size_t>(i)].is_inf(), errc::not_ultrametric,
              "diagonal entries must be +inf");
    }
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            const ValRat& v = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
            check(v == M[static_cast<size_t>(j)][static_cast<size_t>(i)], errc::not_ultrametric,
                  "matrix must be symmetric");
            check(!v.is_inf(), errc::not_ultrametric,
                  "off-diagonal entries must be finite (points must be distinct)");
        }
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            for (long k = j + 1; k < n; ++k) {
                ValRat a = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
                ValRat b = M[static_cast<size_t>(i)][static_cast<size_t>(k)];
                ValRat c = M[static_cast<size_t>(j)][static_cast<size_t>(k)];
                // the two smallest of every triple must coincide
                if (a > b) std::swap(a, b);
                if (b > c) std::swap(b, c);
                if (a > b) std::swap(a, b);
                check(a == b, errc::not_ultrametric,
                      "triple violates the ultrametric two-smallest-equal rule");
            }
}

}  // namespace

ComponentProfile profile_from_matrix(const std::vector<std::vector<ValRat>>& M) {
    validate_matrix(M);
    const long n = static_cast<long>(M.size());
    // overlap sums S(i,j); the diagonal +inf folds the i and j terms into
    // the plain entry v_ij
    std::vector<std::vector<ValRat>> S(static_cast<size_t>(n),
                                       std::vector<ValRat>(static_cast<size_t>(n), ValRat(0)));
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            ValRat s(0);
            for (long k = 0; k < n; ++k)
                s = s + vr_min(M[static_cast<size_t>(i)][static_cast<size_t>(k)],
                               M[static_cast<size_t>(k)][static_cast<size_t>(j)]);
            S[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
            S[static_cast<size_t>(j)][static_cast<size_t>(i)] = s;
        }
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            check(S[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                      S[static_cast<size_t>(j)][static_cast<size_t>(i)],
                  errc::internal_error, "overlap sums must come out symmetric");
    std::vector<ValRat> cands;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) cands.push_back(S[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    ComponentProfile pr;
    pr.counts.push_back(1);
    // the count on ]c, next] equals the class count of the relation S > c
    for (const ValRat& c : cands) {
        UnionFind uf(n);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                if (S[static_cast<size_t>(i)][static_cast<size_t>(j)] > c) uf.unite(i, j);
        long cnt = uf.classes();
        if (cnt != pr.counts.back()) {
            pr.jumps.push_back(c);
            pr.counts.push_back(cnt);
        }
    }
    return pr;
}

ComponentProfile profile_from_distances(const std::vector<ValRat>& dist, bool verified) {
    const long n = static_cast<long>(dist.size()) + 1;
    std::vector<std::vector<ValRat>> M(static_cast<size_t>(n),
                                       std::vector<ValRat>(static_cast<size_t>(n), ValRat::infinity()));
    for (long j = 1; j < n; ++j) {
        M[0][static_cast<size_t>(j)] = dist[static_cast<size_t>(j - 1)];
        M[static_cast<size_t>(j)][0] = dist[static_cast<size_t>(j - 1)];
    }
    for (long i = 1; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            ValRat v = vr_min(dist[static_cast<size_t>(i - 1)], dist[static_cast<size_t>(j - 1)]);
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            M[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        }
    ComponentProfile pr = profile_from_matrix(M);
    pr.homogeneous_assumed = !verified;
    return pr;
}

ComponentProfile components_for(const Tower& tw, long prec) {
    std::vector<ValRat> dist = root_distances(tw);
    bool verified = false;
    if (tw.degree <= 3) {
        verified = true;
    } else if (tw.degree == tw.base.p() &&
               std::all_of(dist.begin(), dist.end(),
                           [&](const ValRat& d) { return d == dist.front(); })) {
        try {
            require_galois_presented(tw, prec);
            verified = true;
        } catch (const error& e) {
            if (e.code() != errc::undecidable_galois) throw;
        }
    }
    return profile_from_distances(dist, verified);
}

void check_profile_laws(const ComponentProfile& pr, long n) {
    check(!pr.counts.empty(), errc::law_violation, "profile must carry at least one count");
    check(pr.counts.size() == pr.jumps.size() + 1, errc::law_violation,
          "profile must carry one more count than jumps");
    check(pr.counts.front() == 1, errc::law_violation, "profile must start merged");
    for (size_t k = 0; k < pr.jumps.size(); ++k) {
        check(!pr.jumps[k].is_inf(), errc::law_violation, "jumps must be finite");
        check(pr.jumps[k] >= ValRat(0), errc::law_violation, "jumps must be nonnegative");
        if (k) check(pr.jumps[k - 1] < pr.jumps[k], errc::law_violation, "jumps must ascend");
        check(pr.counts[k] < pr.counts[k + 1], errc::law_violation, "counts must ascend");
    }
    check(pr.counts.back() <= n, errc::law_violation, "count exceeds the number of points");
}

ValRat conductor_from_profile(const ComponentProfile& pr, long n) {
    check_profile_laws(pr, n);
    check(pr.counts.back() == n, errc::incomplete_splitting,
          "the profile never separates all points");
    return pr.jumps.empty() ? ValRat(0) : pr.jumps.back();
}

}  // namespace cdvf
