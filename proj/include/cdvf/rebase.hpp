#pragma once
// Construction of the fresh-presentation maps declared in extension.hpp.
//
// Three cases are supported, one per step shape:
//   Eisenstein          k((t)) -> k((z)) with t expanded as a series in the
//                       root z by Newton iteration,
//   unit separable      k((t)) -> k'((t)) coefficientwise, where k' realizes
//                       the residue extension (see rebase.cpp for the exact
//                       residue shapes handled),
//   unit fierce         k(u)((t)) -> k(u1)((t)) where the root itself is the
//                       new transcendental and u is solved from P(u1) = 0.
// Shapes outside these raise UnsupportedTower or UndecidableResidue.

#include "cdvf/extension.hpp"

namespace cdvf {

// level_tag distinguishes symbols introduced by nested rebases ("z", "z2", ...).
Rebase rebase_step(const CDVF& base, const StepDesc& st, long prec, long level_tag = 0);

// Image of an element of the step's monogenic order under the rebase map,
// as a series over the new presentation.
TSeries rebase_olelt(const Rebase& r, const OLElt& a);

// Series root of P above the given simple residue root, by Newton iteration
// to absolute precision prec. Returns an exact series when the iteration
// lands on an exact zero of P.
TSeries hensel_root(const KPoly& P, const ResidueElt& r0, long prec);

}  // namespace cdvf
