#pragma once
// Brute-force radius oracle for component profiles, shared by the unit and
// acceptance suites. It works directly from the generic-point identity
// v(f(x)) = sum_k min(radius, v(center - z_k)): for each root it solves the
// smallest disc radius whose generic value reaches the level r, then merges
// roots that land in each other's discs. No clustering shortcut is used, so
// agreement with the production construction is a real cross-check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cdvf/components.hpp"
#include "cdvf/valrat.hpp"

namespace oracle {

using cdvf::ComponentProfile;
using cdvf::ValRat;
using Mat = std::vector<std::vector<ValRat>>;

// Generic value of v(f) on the sphere v(x - z_i) = x. The diagonal entry is
// +inf, so vr_min folds the self term to x like every term below radius.
inline ValRat f_eval(const Mat& M, size_t i, const ValRat& x) {
    ValRat acc(0);
    for (const ValRat& v : M[i]) acc = acc + cdvf::vr_min(x, v);
    return acc;
}

// Smallest rho with f_eval(i, rho) >= r, by walking the piecewise-linear
// segments between the sorted distances. Assumes r > f_eval at rho = 0 is
// possible, which holds for r <= degree * max distance + slack; callers
// only pass levels drawn from f_eval values.
inline ValRat rho_min(const Mat& M, size_t i, const ValRat& r) {
    std::vector<ValRat> w;
    for (size_t k = 0; k < M[i].size(); ++k)
        if (k != i) w.push_back(M[i][k]);
    std::sort(w.begin(), w.end());
    ValRat knot(0), base(0);
    size_t m = 0;
    while (true) {
        long slope = static_cast<long>(w.size() - m) + 1;
        if (m == w.size() || base + (w[m] - knot) * ValRat(slope) >= r)
            return knot + (r - base) / ValRat(slope);
        base = base + (w[m] - knot) * ValRat(slope);
        knot = w[m];
        ++m;
    }
}

// Number of components of the tube at level r: roots are joined when one
// lies inside the other's minimal disc, then closed transitively.
inline long count_at(const Mat& M, const ValRat& r) {
    const size_t n = M.size();
    if (r <= ValRat(0)) return 1;
    std::vector<ValRat> rho;
    for (size_t i = 0; i < n; ++i) rho.push_back(rho_min(M, i, r));
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (M[i][j] >= rho[i] || M[i][j] >= rho[j]) parent[find(i)] = find(j);
    long classes = 0;
    for (size_t i = 0; i < n; ++i)
        if (find(i) == i) ++classes;
    return classes;
}

// Full step function. Candidate levels are the generic values at the
// pairwise distances; the count is constant strictly between them.
inline ComponentProfile profile(const Mat& M) {
    const size_t n = M.size();
    std::vector<ValRat> cands;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (j != i) cands.push_back(f_eval(M, i, M[i][j]));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    ComponentProfile pr;
    pr.counts = {1};
    long prev = 1;
    for (size_t c = 0; c < cands.size(); ++c) {
        ValRat past =
            c + 1 < cands.size() ? (cands[c] + cands[c + 1]) / ValRat(2) : cands[c] + ValRat(1);
        long after = count_at(M, past);
        if (after != prev) {
            pr.jumps.push_back(cands[c]);
            pr.counts.push_back(after);
            prev = after;
        }
    }
    return pr;
}

// Random ultrametric matrix built as an explicit cluster hierarchy: the
// pairs crossing a split sit at the join level, children recurse at levels
// at least as deep. Every valuation-style ultrametric arises this way.
inline void fill_hierarchy(Mat& M, std::vector<size_t> ids, const ValRat& low,
                           std::mt19937& rng) {
    if (ids.size() <= 1) return;
    ValRat level = low + ValRat(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 4));
    std::shuffle(ids.begin(), ids.end(), rng);
    size_t cut = 1 + rng() % (ids.size() - 1);
    std::vector<size_t> a(ids.begin(), ids.begin() + static_cast<long>(cut));
    std::vector<size_t> b(ids.begin() + static_cast<long>(cut), ids.end());
    for (size_t i : a)
        for (size_t j : b) M[i][j] = M[j][i] = level;
    fill_hierarchy(M, a, level, rng);
    fill_hierarchy(M, b, level, rng);
}

inline Mat random_ultrametric(std::mt19937& rng, size_t n) {
    Mat M(n, std::vector<ValRat>(n, ValRat::infinity()));
    std::vector<size_t> ids(n);
    std::iota(ids.begin(), ids.end(), size_t{0});
    fill_hierarchy(M, ids, ValRat(0), rng);
    return M;
}

inline Mat permuted(const Mat& M, const std::vector<size_t>& perm) {
    const size_t n = M.size();
    Mat out(n, std::vector<ValRat>(n, ValRat::infinity()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[perm[i]][perm[j]] = M[i][j];
    return out;
}

inline bool same_profile(const ComponentProfile& a, const ComponentProfile& b) {
    return a.jumps == b.jumps && a.counts == b.counts;
}

}  // namespace oracle
