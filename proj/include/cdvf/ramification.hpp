#pragma once
// Ramification invariants of a single monogenic step: root distances of the
// shifted defining polynomial, the conductor and its logarithmic variant,
// lower/upper numbering profiles, the degree-p polygon law, and base-change
// transformations (tame stretch and unramified extension of scalars).
//
// Everything here is exact. A working precision enters only where a rebase
// or a Hensel lift produces genuinely infinite series (the Galois
// presentation check and split factors); those paths throw
// precision_exhausted when starved, and with_precision retries them.

#include <string>
#include <vector>

#include "cdvf/extension.hpp"
#include "cdvf/poly.hpp"

namespace cdvf {

// Runs fn(prec) with prec doubling from 32 up to cap until it stops
// throwing precision_exhausted. At the cap the failure converts to
// precision_cap_exceeded.
template <typename Fn>
auto with_precision(long cap, Fn&& fn) -> decltype(fn(long{})) {
    long prec = cap < 32 ? cap : 32;
    for (;;) {
        try {
            return fn(prec);
        } catch (const error& e) {
            if (e.code() != errc::precision_exhausted)
                throw;
            if (prec >= cap)
                fail(errc::precision_cap_exceeded,
                     "no exact answer within precision cap " + std::to_string(cap));
            prec = prec * 2 < cap ? prec * 2 : cap;
        }
    }
}

// Polygon of the shifted defining polynomial P(X + z), point i reading the
// coefficient of X^(d-i). Its finite slopes are the valuations of z - z'
// over the conjugates z' != z; the infinite tail has width exactly 1.
NewtonPolygon shifted_polygon(const Tower& tw);

// The finite slopes of shifted_polygon expanded by width: the ascending
// multiset of d-1 conjugate distances. Empty for a degree-1 step.
std::vector<ValRat> root_distances(const Tower& tw);

// Conductor of the step: the smallest a past which the generator discs
// separate all embeddings. Sum of the root distances plus their maximum;
// zero exactly for etale steps, at most 1 for tame ones.
ValRat conductor_value(const Tower& tw);

struct LogConductor {
    bool exact = false;
    ValRat value;  // meaningful when exact
    ValRat lo, hi;  // max(c-1, 0) <= c_log <= c holds unconditionally
    std::string provenance;
};

// Logarithmic conductor. Eisenstein steps admit the uniformizer itself as a
// log generator, which settles c_log = max(c-1, 0); unit-monogenic steps
// have e = 1 and the generator decouples from the uniformizer, which
// settles c_log = c. The unconditional bounds are reported alongside.
LogConductor log_conductor(const Tower& tw);

// Lower-numbering data of a residue-separable single step, in the
// normalized valuation of L. phi converts lower to upper numbering and psi
// inverts it; both are exact piecewise-linear maps.
struct HerbrandProfile {
    long e = 1;
    long r0 = 1;                       // order of the inertia-level group
    std::vector<ValRat> i_values;      // e * root distances, ascending
    std::vector<ValRat> lower_breaks;  // distinct i - 1
    std::vector<ValRat> upper_breaks;  // phi of the lower breaks

    long r_at(const ValRat& u) const;
    ValRat phi(const ValRat& u) const;
    ValRat psi(const ValRat& v) const;
    ValRat classical_conductor() const;  // max upper break + 1, or 0
};

// Throws fierce_input for s >= 1 and NotGaloisPresented (undecidable_galois)
// when the conjugates of the generator cannot be certified to lie in the
// presented field itself. Degree <= 2 needs no certificate.
HerbrandProfile herbrand_profile(const Tower& tw, long prec);

// Certifies that every conjugate of the step generator lies in the step's
// own field: all conjugate differences must have integral valuation there
// and the residual polynomial of every polygon segment must split into
// distinct linear factors over the top residue field.
void require_galois_presented(const Tower& tw, long prec);

// conductor == classical upper-numbering conductor (phi of the last lower
// break plus one). A theorem for the supported inputs; exposed as a check.
bool conductor_matches_classical(const Tower& tw, long prec);

// different_vL < e * conductor for non-etale steps. Throws etale_input when
// the step is etale (the bound degenerates to 0 < 0 there).
bool dif_ram_bound_holds(const Tower& tw);

// Shifted-polygon law for a wildly ramified step of degree p over L: the
// polygon has type [0, p-1, p] and its low segment has slope c/p where c is
// the conductor. Violations are law_violation (the statement is a theorem).
struct TowerNPReport {
    long p = 0;
    std::vector<ValRat> point_vals;  // polygon heights, index 0 = leading
    std::vector<long> type_breaks;   // {0, p-1, p}
    ValRat low_slope;                // slope on [0, p-1], equals b/p
    ValRat b;                        // conductor of the step
};
TowerNPReport np_tower_check(const CDVF& L, const KPoly& PM);

struct BaseChangeResult {
    CDVF newbase;
    KPoly P2;    // defining polynomial over newbase
    Tower tw;    // the revalidated single-step tower
    long m = 1;  // tame stretch exponent, 1 for unramified changes
};

// Base change along k((t)) -> k((s)), t = s^m, with gcd(m, p) = 1.
// Eisenstein steps are rescaled by the right power of s to stay Eisenstein
// when possible; when the stretched step splits completely instead, the
// factorization is reported through splits_after_base_change with a
// "factors=...;conductors=..." detail payload. Steps that neither
// revalidate nor split are not_normalizable.
BaseChangeResult tame_base_change(const CDVF& base, const KPoly& P, long m, long prec);

// Base change along the unramified extension defined by residue_step (a
// unit-monogenic step with s = 0). The defining polynomial moves through
// the coefficientwise embedding; a step that turns reducible either splits
// completely (reported as above) or is refused as undecidable_residue.
BaseChangeResult unramified_base_change(const CDVF& base, const KPoly& P,
                                        const KPoly& residue_step, long prec);

}  // namespace cdvf
