#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdvf/extension.hpp"

namespace cdvf {

// Input grammar
// -------------
// Base descriptors:   laurent(p=<prime>[, k=<residue>])
//   where <residue> is Fp, Fp(u), Fq:<monic in w>, or Fq(u):<monic in w>.
// Polynomials: expressions in X whose coefficients are Laurent polynomials
//   in t over the residue field. Atoms are integers, t, u, w and X;
//   operators are + - * / ^ with the usual precedence, plus parentheses.
//   Division and negative exponents are restricted to invertible monomials
//   (a residue scalar times a power of t), which keeps every parsed value
//   exact. Whitespace is ignored everywhere.
//
// Parse failures raise errc::syntax_error with a "line L, col C" prefix.
// The printers emit a canonical spelling that parses back to the same value
// over the same base. Rebased presentations print and parse their display
// symbols (s, z, u1, ...); the literals t and u are always accepted as
// aliases for the current uniformizer and transcendental.

CDVF parse_base(const std::string& text);

KPoly parse_poly(const CDVF& base, const std::string& text, const std::string& var = "X");

// Scalar variant of parse_poly for elements of the base field itself
// (radicial hints, for example).
TSeries parse_series(const CDVF& base, const std::string& text);

// Combined form "base; P1; ...; Pn". Each polynomial is parsed over the
// presentation reached by validating and rebasing the previous ones, so the
// result feeds make_tower directly.
std::pair<CDVF, std::vector<KPoly>> parse_input(const std::string& text);

std::string print_base(const CDVF& base);
std::string print_poly(const CDVF& base, const KPoly& P, const std::string& var = "X");
std::string print_series(const CDVF& base, const TSeries& a);
std::string print_residue(const CDVF& base, const ResidueElt& r);

}  // namespace cdvf
