#include "cdvf/ramification.hpp"

#include <memory>
#include <numeric>
#include <sstream>
#include <utility>

#include "cdvf/parse.hpp"
#include "cdvf/rebase.hpp"
#include "cdvf/residue.hpp"

namespace cdvf {
namespace {

const StepDesc& only_step(const Tower& tw) {
    check(tw.levels.size() == 1, errc::unsupported_tower,
          "this invariant is defined for a single monogenic step");
    return tw.levels[0].step;
}

long to_long(const ValRat& v) {
    check(v.is_integer(), errc::internal_error, "expected an integral valuation");
    return v.floor().convert_to<long>();
}

std::shared_ptr<const KPoly> host_of(const StepDesc& st) {
    return std::make_shared<const KPoly>(st.P);
}

ValRat sum_plus_sup(const std::vector<ValRat>& dist) {
    ValRat c(0);
    for (const ValRat& d : dist) c = c + d;
    if (!dist.empty()) c = c + dist.back();
    return c;
}

// Slope segments of the lower hull as (start index, end index, slope).
struct Segment {
    long i0, i1;
    ValRat v0;
    ValRat slope;
};

std::vector<Segment> hull_segments(const NewtonPolygon& np) {
    std::vector<Segment> out;
    for (size_t s = 1; s < np.vertices.size(); ++s) {
        long i0 = np.vertices[s - 1].first;
        long i1 = np.vertices[s].first;
        ValRat v0 = np.vertices[s - 1].second;
        out.push_back({i0, i1, v0, (np.vertices[s].second - v0) / ValRat(i1 - i0)});
    }
    return out;
}

// Attempts to certify that P2 over b2 splits into d distinct linear factors
// and reports them through splits_after_base_change. Any obstruction lands
// on the fallback error instead. Root valuations are read off the polygon;
// each residual root is lifted by Newton iteration at its own slope.
[[noreturn]] void split_or_fail(const CDVF& b2, const KPoly& P2, long prec, errc fallback,
                                const std::string& fallback_msg) {
    const long d = P2.degree();
    std::vector<ValRat> vals;
    for (long j = 0; j <= d; ++j) vals.push_back(P2.coeff(j).val());
    NewtonPolygon np = np_from_vals(vals);  // standard orientation, ascending j
    check(np.last_finite == d && !vals[0].is_inf(), errc::internal_error,
          "split candidate must have nonzero extreme coefficients");
    std::vector<KPoly> factors;
    for (const Segment& seg : hull_segments(np)) {
        ValRat mu = ValRat(0) - seg.slope;  // root valuation on this segment
        if (!mu.is_integer() || mu < ValRat(0))
            throw error(fallback, fallback_msg).with_detail("polygon=" + np.to_string());
        long muz = to_long(mu);
        // residual polynomial in ascending j, so its roots are the residues
        // of root/t^mu directly
        std::vector<ResidueElt> rc;
        for (long j = seg.i0; j <= seg.i1; ++j) {
            ValRat line = seg.v0 + ValRat(j - seg.i0) * seg.slope;
            rc.push_back(P2.coeff(j).coeff_at(to_long(line)));
        }
        RPoly rho = RPoly::from_coeffs(b2.k, std::move(rc));
        long width = seg.i1 - seg.i0;
        RootSearch rs = rpoly_roots(rho);
        if (static_cast<long>(rs.roots.size()) != width)
            throw error(fallback, fallback_msg)
                .with_detail("residual=" + rho.to_string("W") + ";roots=" +
                             std::to_string(rs.roots.size()));
        // slope-normalized polynomial Q(W) = t^(-cmu) P2(t^mu W): integral by
        // hull minimality, and its reduction has each residual root simple
        ValRat cmu = seg.v0 + ValRat(seg.i0) * mu;
        std::vector<TSeries> qc;
        for (long j = 0; j <= d; ++j)
            qc.push_back(P2.coeff(j).scale_t(to_long(ValRat(j) * mu - cmu)));
        KPoly Q = KPoly::from_coeffs(b2.k, std::move(qc));
        for (const ResidueElt& r0 : rs.roots) {
            TSeries w = hensel_root(Q, r0, prec);
            TSeries root = w.scale_t(muz);
            factors.push_back(
                KPoly::from_coeffs(b2.k, {TSeries::zero(b2.k) - root, TSeries::from_int(b2.k, 1)}));
        }
    }
    if (static_cast<long>(factors.size()) != d)
        throw error(fallback, fallback_msg).with_detail("polygon=" + np.to_string());
    std::ostringstream fs, cs;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) {
            fs << ",";
            cs << ",";
        }
        fs << print_poly(b2, factors[i]);
        cs << ValRat(0).to_fraction_string();
    }
    throw error(errc::splits_after_base_change,
                "the extension splits completely over the new base")
        .with_detail("factors=" + fs.str() + ";conductors=" + cs.str());
}

}  // namespace

NewtonPolygon shifted_polygon(const Tower& tw) {
    const StepDesc& st = only_step(tw);
    NewtonPolygon np = np_of_shifted(shifted_by_root(host_of(st)));
    check(np.d - np.last_finite == 1, errc::internal_error,
          "a separable generator must be a simple root of its shift");
    return np;
}

std::vector<ValRat> root_distances(const Tower& tw) {
    NewtonPolygon np = shifted_polygon(tw);
    std::vector<ValRat> out;
    for (const auto& [slope, width] : np.slopes()) {
        if (slope.is_inf()) continue;
        for (long k = 0; k < width; ++k) out.push_back(slope);
    }
    return out;
}

ValRat conductor_value(const Tower& tw) { return sum_plus_sup(root_distances(tw)); }

LogConductor log_conductor(const Tower& tw) {
    const StepDesc& st = only_step(tw);
    ValRat c = sum_plus_sup(root_distances(tw));
    LogConductor out;
    out.lo = vr_max(c - ValRat(1), ValRat(0));
    out.hi = c;
    out.exact = true;
    if (st.kind == StepKind::Eisenstein) {
        out.value = out.lo;
        out.provenance = "eisenstein-uniformizer";
    } else {
        out.value = c;
        out.provenance = "unit-generator-decoupling";
    }
    return out;
}

long HerbrandProfile::r_at(const ValRat& u) const {
    long n = 1;
    for (const ValRat& i : i_values)
        if (i >= u + ValRat(1)) ++n;
    return n;
}

ValRat HerbrandProfile::phi(const ValRat& u) const {
    if (u <= ValRat(0)) return u;
    ValRat acc(0), pos(0);
    auto add_piece = [&](const ValRat& upto) {
        ValRat mid = (pos + upto) / ValRat(2);
        acc = acc + ValRat(r_at(mid)) * (upto - pos) / ValRat(r0);
        pos = upto;
    };
    for (const ValRat& b : lower_breaks) {
        if (!(b > ValRat(0)) || !(b < u)) continue;
        add_piece(b);
    }
    add_piece(u);
    return acc;
}

ValRat HerbrandProfile::psi(const ValRat& v) const {
    if (v <= ValRat(0)) return v;
    ValRat pos(0), img(0);
    for (const ValRat& b : lower_breaks) {
        if (!(b > ValRat(0))) continue;
        ValRat mid = (pos + b) / ValRat(2);
        ValRat slope = ValRat(r_at(mid)) / ValRat(r0);
        ValRat img_next = img + (b - pos) * slope;
        if (v <= img_next) return pos + (v - img) / slope;
        pos = b;
        img = img_next;
    }
    // past the last break the group is trivial and phi has slope 1/r0
    return pos + (v - img) * ValRat(r0);
}

ValRat HerbrandProfile::classical_conductor() const {
    if (upper_breaks.empty()) return ValRat(0);
    return upper_breaks.back() + ValRat(1);
}

void require_galois_presented(const Tower& tw, long prec) {
    const StepDesc& st = only_step(tw);
    const long d = st.degree;
    if (d <= 2) return;  // the lone conjugate z' = -a_{d-1} - z is rational in z
    Tower t2 = tw;
    ensure_top_rebase(t2, prec);
    const Rebase& rb = *t2.levels[0].reb;
    auto asc = shifted_by_root(host_of(st));
    // Point i reads the coefficient of X^(d-i) of P(X+z), expressed in the
    // step's own presentation; the vanishing constant coefficient is
    // dropped, leaving the polygon of the nonzero conjugate differences
    // with slopes in the normalized valuation of L.
    std::vector<TSeries> bs;
    std::vector<ValRat> vals;
    for (long i = 0; i <= d - 1; ++i) {
        bs.push_back(rebase_olelt(rb, asc[static_cast<size_t>(d - i)]));
        vals.push_back(bs.back().val());
    }
    NewtonPolygon np = np_from_vals(vals);
    check(np.last_finite == d - 1, errc::internal_error,
          "conjugate-difference polygon must stay finite");
    for (const Segment& seg : hull_segments(np)) {
        if (!seg.slope.is_integer())
            fail(errc::undecidable_galois,
                 "a conjugate difference has non-integral valuation in the presented field");
        std::vector<ResidueElt> rc;
        for (long i = seg.i0; i <= seg.i1; ++i) {
            ValRat line = seg.v0 + ValRat(i - seg.i0) * seg.slope;
            rc.push_back(bs[static_cast<size_t>(i)].coeff_at(to_long(line)));
        }
        RPoly rho = RPoly::from_coeffs(t2.top().k, std::move(rc));
        RootSearch rs = rpoly_roots(rho);
        if (static_cast<long>(rs.roots.size()) != seg.i1 - seg.i0)
            fail(errc::undecidable_galois,
                 "conjugates do not split over the presented field (residual " +
                     rho.to_string("W") + ")");
    }
}

HerbrandProfile herbrand_profile(const Tower& tw, long prec) {
    const StepDesc& st = only_step(tw);
    check(st.s == 0, errc::fierce_input,
          "lower numbering needs a residue-separable step");
    require_galois_presented(tw, prec);
    HerbrandProfile hp;
    hp.e = st.e;
    for (const ValRat& d : root_distances(tw)) hp.i_values.push_back(ValRat(st.e) * d);
    for (const ValRat& i : hp.i_values) {
        ValRat b = i - ValRat(1);
        if (hp.lower_breaks.empty() || !(hp.lower_breaks.back() == b))
            hp.lower_breaks.push_back(b);
    }
    hp.r0 = hp.r_at(ValRat(0));
    for (const ValRat& b : hp.lower_breaks) hp.upper_breaks.push_back(hp.phi(b));
    return hp;
}

bool conductor_matches_classical(const Tower& tw, long prec) {
    HerbrandProfile hp = herbrand_profile(tw, prec);
    return conductor_value(tw) == hp.classical_conductor();
}

bool dif_ram_bound_holds(const Tower& tw) {
    only_step(tw);
    check(classify(tw) != ExtClass::Etale, errc::etale_input,
          "the different bound concerns non-etale steps");
    return tw.different_vL < ValRat(tw.e) * conductor_value(tw);
}

TowerNPReport np_tower_check(const CDVF& L, const KPoly& PM) {
    StepDesc st = validate_step(L, PM);
    const long p = L.p();
    check(st.degree == p, errc::wrong_degree,
          "the polygon law concerns steps of degree p");
    Tower tw = tower_from_levels(L, {TowerLevel{L, st, std::nullopt}});
    ValRat c = conductor_value(tw);
    check(!(c == ValRat(0)), errc::etale_input, "the polygon law needs a ramified step");
    check(c > ValRat(1), errc::tame_input, "the polygon law needs a wildly ramified step");
    NewtonPolygon np = shifted_polygon(tw);
    TowerNPReport out;
    out.p = p;
    out.point_vals = np.vals;
    out.type_breaks = {0, p - 1, p};
    check(np_type_matches(np, out.type_breaks), errc::law_violation,
          "shifted polygon is not of type [0, p-1, p]");
    out.low_slope = np.slope_between(0, p - 1);
    out.b = c;
    check(out.low_slope == c / ValRat(p), errc::law_violation,
          "low polygon slope does not equal c/p");
    return out;
}

BaseChangeResult tame_base_change(const CDVF& base, const KPoly& P, long m, long prec) {
    check(m >= 1, errc::not_coprime, "stretch exponent must be positive");
    check(std::gcd(m, base.p()) == 1, errc::not_coprime,
          "stretch exponent must be coprime to the residue characteristic");
    StepDesc st = validate_step(base, P);
    CDVF b2{base.k, "s", base.usym};
    const long d = st.degree;
    if (st.kind == StepKind::UnitMonogenic) {
        // the reduction is untouched by t -> s^m, so the step revalidates
        KPoly P2 = P.map(b2.k, [&](const TSeries& a) { return a.stretch(m); });
        return {b2, P2, make_tower(b2, {P2}, prec), m};
    }
    // Eisenstein: rescale the variable by s^kexp so the root valuation m/d
    // drops back into (0, 1]
    long kexp = (m + d - 1) / d - 1;
    std::vector<TSeries> c2;
    for (long j = 0; j <= d; ++j)
        c2.push_back(P.coeff(j).stretch(m).scale_t(kexp * (j - d)));
    KPoly P2 = KPoly::from_coeffs(b2.k, std::move(c2));
    try {
        return {b2, P2, make_tower(b2, {P2}, prec), m};
    } catch (const error& e) {
        if (e.code() != errc::not_eisenstein) throw;
    }
    split_or_fail(b2, P2, prec, errc::not_normalizable,
                  "the stretched step is neither Eisenstein nor completely split");
}

BaseChangeResult unramified_base_change(const CDVF& base, const KPoly& P,
                                        const KPoly& residue_step, long prec) {
    StepDesc rstep = validate_step(base, residue_step);
    check(rstep.kind == StepKind::UnitMonogenic && rstep.s == 0, errc::not_unit_monogenic,
          "the auxiliary polynomial must define an unramified extension");
    Rebase rb = rebase_step(base, rstep, prec, 0);
    CDVF b2 = rb.to;
    KPoly P2 = P.map(b2.k, rb.map);
    try {
        return {b2, P2, make_tower(b2, {P2}, prec), 1};
    } catch (const error& e) {
        if (e.code() != errc::reducible_residue) throw;
    }
    split_or_fail(b2, P2, prec, errc::undecidable_residue,
                  "the step becomes reducible but does not split into distinct linear factors");
}

}  // namespace cdvf
