#pragma once
// Validated monogenic steps over a Laurent series field, towers of such
// steps, and the classification and elimination of fierce ramification.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdvf/poly.hpp"

namespace cdvf {

// A presentation of a complete discretely valued field k((t)). The symbol
// names are display data only; arithmetic runs through the residue field
// pointer and the series layer.
struct CDVF {
    RFPtr k;
    std::string uni = "t";   // uniformizer symbol
    std::string usym = "u";  // transcendental symbol, when the residue field has one
    long p() const { return k->p; }
};

enum class StepKind { Eisenstein, UnitMonogenic };

// One validated monogenic step. Eisenstein steps are totally ramified of
// index deg P; unit-monogenic steps are unramified with residue extension
// defined by the reduction of P, whose inseparable exponent is s.
struct StepDesc {
    StepKind kind;
    KPoly P;
    long degree = 0;
    long e = 1, f = 1, s = 0;
    RPoly pbar;  // reduction of P, unit-monogenic only
    RPoly qbar;  // separable part q with pbar = q(X^{p^s}), unit-monogenic only
};

StepDesc validate_step(const CDVF& base, const KPoly& P);

// Re-presentation of the top field of a step as a fresh k'((t')) together
// with the embedding of the base field and the image of the root.
struct Rebase {
    CDVF to;
    long prec = 0;  // absolute cutoff the mapped data is valid to
    bool exact = false;
    std::function<TSeries(const TSeries&)> map;
    std::function<ResidueElt(const ResidueElt&)> res_map;
    TSeries gen_image;
};

struct TowerLevel {
    CDVF base;
    StepDesc step;
    std::optional<Rebase> reb;  // present for every level that has a successor
};

struct Tower {
    CDVF base;
    std::vector<TowerLevel> levels;
    long degree = 1, e = 1, f = 1, s = 0;
    ValRat different_vL{0};      // of the top field over the bottom, top-normalized
    ValRat discriminant_vK{0};   // of the top field over the bottom, bottom-normalized

    const CDVF& top() const;     // presentation of the top field (needs a rebased last level)
    bool single_step() const { return levels.size() == 1; }
};

// Builds a tower from polynomials given over successive presentations:
// polys[0] over base, polys[i] over the rebase target of level i-1. The
// working precision bounds the rebase data, not the exact invariants.
Tower make_tower(const CDVF& base, const std::vector<KPoly>& polys, long prec);

// Recomputes cumulative data for an existing run of levels. Used when a
// tower loses its bottom level during fierce elimination.
Tower tower_from_levels(const CDVF& base, std::vector<TowerLevel> levels);

// Computes the missing re-presentation of the last level, so that top() is
// available on towers built without one.
void ensure_top_rebase(Tower& tw, long prec);

enum class ExtClass { Etale, Tame, WildUnfierce, Fierce };
ExtClass classify(const Tower& tw);
const char* ext_class_name(ExtClass c);

// Exact per-step invariants.
ValRat step_different_vL(const StepDesc& st);     // e_step * v(P'(z))
ValRat step_discriminant_vK(const StepDesc& st);  // v(Res(P, P'))

// One round of fierce elimination and the full terminating trace. The
// radicial hints are residue constants in the base field; when a hint (or
// the automatic detection) matches the pure-radicial shape of the lowest
// fierce step, the separable lift is that step's own polynomial and the
// step collapses into the new base.
struct FierceRound {
    std::string lift;                   // the separable lift, printed
    std::pair<ValRat, long> before;     // (v_K(discriminant), s) before the round
    std::pair<ValRat, long> after;
};

struct FierceTrace {
    std::vector<FierceRound> rounds;
    Tower final_ext;  // s = 0
};

FierceTrace eliminate_fierce(const Tower& tw, const std::vector<TSeries>& hints, long prec);

}  // namespace cdvf
