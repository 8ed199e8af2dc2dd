#pragma once
// Component-counting step functions: how many clusters the embeddings of a
// step fall into as the separating radius grows.

#include <vector>

#include "cdvf/extension.hpp"

namespace cdvf {

// Right-continuous-from-the-left step function r -> cluster count.
// counts[k] is the value on the interval ]jumps[k-1], jumps[k]] (counts[0]
// reaches down to -infinity); counts.back() holds past the last jump.
struct ComponentProfile {
    std::vector<ValRat> jumps;   // ascending, finite
    std::vector<long> counts;    // ascending, one longer than jumps
    bool homogeneous_assumed = false;
};

// Clustering of n points from their symmetric matrix of pairwise
// valuations (diagonal +inf). Points i and j share a cluster at level r
// exactly when S(i, j) = sum_k min(v_ik, v_kj) reaches r, closed
// transitively. The matrix must be ultrametric: in every triple the two
// smallest entries coincide.
ComponentProfile profile_from_matrix(const std::vector<std::vector<ValRat>>& M);

// Matrix completion from the distance list d_i = v(z - z_i) of one row:
// v_ij = min(d_i, d_j) for the remaining pairs, which is automatically
// ultrametric. `verified` records whether this homogeneity was certified
// for the input at hand or merely assumed.
ComponentProfile profile_from_distances(const std::vector<ValRat>& dist, bool verified);

// Profile of a single-step tower. Homogeneity is certified for degree <= 3
// and for equidistant degree-p steps whose conjugates live in the presented
// field; anything else carries homogeneous_assumed = true.
ComponentProfile components_for(const Tower& tw, long prec);

// Structural sanity of a profile over n points; violations are bugs and
// raise law_violation.
void check_profile_laws(const ComponentProfile& pr, long n);

// The level past which all n points separate, i.e. the last jump. Raises
// incomplete_splitting when the terminal count falls short of n.
ValRat conductor_from_profile(const ComponentProfile& pr, long n);

}  // namespace cdvf
