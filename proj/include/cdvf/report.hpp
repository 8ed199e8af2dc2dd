#pragma once
// Assembly of the JSON reports and CSV profile samples emitted by the
// command-line tool. Every builder takes the parsed base and polynomial
// sequence plus a precision cap and runs the underlying computation inside
// with_precision, so callers never manage working precision themselves.
//
// All rationals are serialized as "num/den" strings (or "inf") and every
// object is an ordered_json, which keeps reports byte-stable across runs.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdvf/components.hpp"
#include "cdvf/extension.hpp"
#include "cdvf/ramification.hpp"

namespace cdvf {

using ReportJSON = nlohmann::ordered_json;

std::string rat(const ValRat& v);

// Canonical "base; P1; ...; Pn" spelling of a built tower, printing each
// polynomial over the presentation it was validated against.
std::string input_echo(const Tower& tw);

// Full report. Single-step towers carry the ramification, newton and
// components blocks; longer towers report the accumulated invariants only.
ReportJSON build_report(const CDVF& base, const std::vector<KPoly>& polys, long cap);

ReportJSON conductor_json(const CDVF& base, const std::vector<KPoly>& polys, long cap);
ReportJSON herbrand_json(const CDVF& base, const std::vector<KPoly>& polys, long cap);

ComponentProfile components_profile(const CDVF& base, const std::vector<KPoly>& polys, long cap);
ReportJSON components_json(const CDVF& base, const std::vector<KPoly>& polys, long cap);
// Step-function samples with header "r,count"; each jump contributes two
// rows so the discontinuity plots as a vertical segment.
std::string components_csv(const ComponentProfile& pr);

// Polygon law check: the first n-1 polynomials build the intermediate field,
// the last one is the degree-p step under test.
ReportJSON np_json(const CDVF& base, const std::vector<KPoly>& polys, long cap);

ReportJSON tower_json(const CDVF& base, const std::vector<KPoly>& polys, long cap);

ReportJSON basechange_json(const CDVF& base, const KPoly& P, long m, long cap);
ReportJSON basechange_json(const CDVF& base, const KPoly& P, const KPoly& residue_step,
                           long cap);

ReportJSON defierce_json(const CDVF& base, const std::vector<KPoly>& polys,
                         const std::vector<TSeries>& hints, long cap);

ReportJSON json_error(const error& e);
int exit_code_for(errc c);

// Indented key/value rendering of a report for terminal use.
void human_render(const ReportJSON& j, std::ostream& os);

}  // namespace cdvf
