#include "cdvf/report.hpp"

#include <ostream>
#include <sstream>

#include "cdvf/parse.hpp"

namespace cdvf {
namespace {

ReportJSON rat_array(const std::vector<ValRat>& vs) {
    ReportJSON a = ReportJSON::array();
    for (const ValRat& v : vs) a.push_back(rat(v));
    return a;
}

// base / extension / invariants, shared by every tower-shaped report
ReportJSON common_blocks(const Tower& tw) {
    ReportJSON out;
    ReportJSON bj;
    bj["p"] = tw.base.p();
    bj["residue"] = tw.base.k->to_string();
    out["base"] = bj;

    ReportJSON steps = ReportJSON::array();
    for (const TowerLevel& lv : tw.levels) {
        ReportJSON sj;
        sj["kind"] = lv.step.kind == StepKind::Eisenstein ? "Eisenstein" : "UnitMonogenic";
        sj["poly"] = print_poly(lv.base, lv.step.P);
        sj["degree"] = lv.step.degree;
        sj["e"] = lv.step.e;
        sj["f"] = lv.step.f;
        sj["s"] = lv.step.s;
        steps.push_back(std::move(sj));
    }
    ReportJSON ej;
    ej["steps"] = std::move(steps);
    ej["degree"] = tw.degree;
    ej["e"] = tw.e;
    ej["f_res"] = tw.f;
    ej["s_L"] = tw.s;
    out["extension"] = std::move(ej);

    ReportJSON ij;
    ij["different_vL"] = rat(tw.different_vL);
    ij["discriminant_vK"] = rat(tw.discriminant_vK);
    ij["class"] = ext_class_name(classify(tw));
    out["invariants"] = std::move(ij);
    return out;
}

ReportJSON log_conductor_block(const LogConductor& lc) {
    ReportJSON lj;
    lj["kind"] = lc.exact ? "exact" : "bounds";
    if (lc.exact) lj["value"] = rat(lc.value);
    lj["lo"] = rat(lc.lo);
    lj["hi"] = rat(lc.hi);
    lj["provenance"] = lc.provenance;
    return lj;
}

ReportJSON herbrand_block(const HerbrandProfile& hp) {
    ReportJSON hj;
    hj["i_values"] = rat_array(hp.i_values);
    ReportJSON pb = ReportJSON::array();
    for (size_t k = 0; k < hp.lower_breaks.size(); ++k)
        pb.push_back(ReportJSON::array({rat(hp.lower_breaks[k]), rat(hp.upper_breaks[k])}));
    hj["phi_breakpoints"] = std::move(pb);
    hj["lower_breaks"] = rat_array(hp.lower_breaks);
    hj["upper_breaks"] = rat_array(hp.upper_breaks);
    return hj;
}

ReportJSON newton_block(const Tower& tw) {
    NewtonPolygon np = shifted_polygon(tw);
    ReportJSON nj;
    nj["points"] = rat_array(np.vals);
    ReportJSON verts = ReportJSON::array();
    for (const auto& [i, v] : np.vertices) verts.push_back(ReportJSON::array({i, rat(v)}));
    nj["vertices"] = std::move(verts);
    ReportJSON sl = ReportJSON::array();
    for (const auto& [slope, width] : np.slopes())
        sl.push_back(ReportJSON::array({rat(slope), width}));
    nj["slopes"] = std::move(sl);
    return nj;
}

ReportJSON components_block(const ComponentProfile& pr) {
    ReportJSON cj;
    cj["jumps"] = rat_array(pr.jumps);
    cj["counts"] = pr.counts;
    cj["homogeneous_assumed"] = pr.homogeneous_assumed;
    return cj;
}

ReportJSON ramification_block(const Tower& tw, long prec) {
    ReportJSON rj;
    rj["conductor"] = rat(conductor_value(tw));
    rj["log_conductor"] = log_conductor_block(log_conductor(tw));
    bool have_hp = false;
    HerbrandProfile hp;
    try {
        hp = herbrand_profile(tw, prec);
        have_hp = true;
    } catch (const error& e) {
        // fierce steps have no lower numbering, and without a Galois
        // presentation the breaks are not certified; precision trouble
        // must propagate to the retry loop instead
        if (e.code() != errc::fierce_input && e.code() != errc::undecidable_galois) throw;
    }
    if (have_hp) rj["herbrand"] = herbrand_block(hp);
    ReportJSON checks;
    if (have_hp) checks["classical_match"] = conductor_value(tw) == hp.classical_conductor();
    if (classify(tw) != ExtClass::Etale) checks["dif_ram_bound"] = dif_ram_bound_holds(tw);
    rj["checks"] = std::move(checks);
    return rj;
}

// every block the full report carries for a given tower
ReportJSON full_blocks(const Tower& tw, long prec) {
    ReportJSON out = common_blocks(tw);
    if (tw.single_step()) {
        out["ramification"] = ramification_block(tw, prec);
        out["newton"] = newton_block(tw);
        out["components"] = components_block(components_for(tw, prec));
    }
    return out;
}

ReportJSON with_header(const std::string& echo, ReportJSON blocks) {
    ReportJSON out;
    out["schema_version"] = 1;
    out["input"] = echo;
    for (auto& [k, v] : blocks.items()) out[k] = v;
    return out;
}

void render_inline(const ReportJSON& j, std::ostream& os) {
    if (j.is_string()) {
        os << j.get<std::string>();
    } else if (j.is_array()) {
        os << "[";
        for (size_t i = 0; i < j.size(); ++i) {
            if (i) os << ", ";
            render_inline(j[i], os);
        }
        os << "]";
    } else {
        os << j.dump();
    }
}

void render(const ReportJSON& j, std::ostream& os, int indent) {
    std::string pad(static_cast<size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            os << pad << k << ":\n";
            render(v, os, indent + 2);
        } else if (v.is_array() && !v.empty() && v[0].is_object()) {
            os << pad << k << ":\n";
            for (const auto& el : v) {
                os << pad << "  -\n";
                render(el, os, indent + 4);
            }
        } else {
            os << pad << k << ": ";
            render_inline(v, os);
            os << "\n";
        }
    }
}

}  // namespace

std::string rat(const ValRat& v) { return v.to_fraction_string(); }

std::string input_echo(const Tower& tw) {
    std::string out = print_base(tw.base);
    for (const TowerLevel& lv : tw.levels) out += "; " + print_poly(lv.base, lv.step.P);
    return out;
}

ReportJSON build_report(const CDVF& base, const std::vector<KPoly>& polys, long cap) {
    return with_precision(cap, [&](long prec) {
        Tower tw = make_tower(base, polys, prec);
        return with_header(input_echo(tw), full_blocks(tw, prec));
    });
}

ReportJSON conductor_json(const CDVF& base, const std::vector<KPoly>& polys, long cap) {
    return with_precision(cap, [&](long prec) {
        Tower tw = make_tower(base, polys, prec);
        ReportJSON body;
        body["conductor"] = rat(conductor_value(tw));
        body["log_conductor"] = log_conductor_block(log_conductor(tw));
        return with_header(input_echo(tw), std::move(body));
    });
}

ReportJSON herbrand_json(const CDVF& base, const std::vector<KPoly>& polys, long cap) {
    return with_precision(cap, [&](long prec) {
        Tower tw = make_tower(base, polys, prec);
        HerbrandProfile hp = herbrand_profile(tw, prec);
        ReportJSON body;
        body["e"] = hp.e;
        body["r0"] = hp.r0;
        ReportJSON hb = herbrand_block(hp);
        for (auto& [k, v] : hb.items()) body[k] = v;
        body["classical_conductor"] = rat(hp.classical_conductor());
        body["classical_match"] = conductor_value(tw) == hp.classical_conductor();
        return with_header(input_echo(tw), std::move(body));
    });
}

ComponentProfile components_profile(const CDVF& base, const std::vector<KPoly>& polys,
                                    long cap) {
    return with_precision(cap, [&](long prec) {
        Tower tw = make_tower(base, polys, prec);
        return components_for(tw, prec);
    });
}

ReportJSON components_json(const CDVF& base, const std::vector<KPoly>& polys, long cap) {
    return with_precision(cap, [&](long prec) {
        Tower tw = make_tower(base, polys, prec);
        ComponentProfile pr = components_for(tw, prec);
        ReportJSON body = components_block(pr);
        body["conductor"] = rat(conductor_from_profile(pr, tw.degree));
        return with_header(input_echo(tw), std::move(body));
    });
}

std::string components_csv(const ComponentProfile& pr) {
    std::ostringstream os;
    os << "r,count\n";
    os << rat(ValRat(0)) << "," << pr.counts[0] << "\n";
    for (size_t k = 0; k < pr.jumps.size(); ++k) {
        os << rat(pr.jumps[k]) << "," << pr.counts[k] << "\n";
        os << rat(pr.jumps[k]) << "," << pr.counts[k + 1] << "\n";
    }
    return os.str();
}

ReportJSON np_json(const CDVF& base, const std::vector<KPoly>& polys, long cap) {
    check(!polys.empty(), errc::syntax_error, "the polygon check needs a polynomial");
    return with_precision(cap, [&](long prec) {
        CDVF L = base;
        std::string echo = print_base(base);
        std::vector<KPoly> below(polys.begin(), polys.end() - 1);
        if (!below.empty()) {
            Tower tw = make_tower(base, below, prec);
            ensure_top_rebase(tw, prec);
            echo = input_echo(tw);
            L = tw.top();
        }
        const KPoly& PM = polys.back();
        echo += "; " + print_poly(L, PM);
        TowerNPReport rep = np_tower_check(L, PM);
        ReportJSON body;
        body["p"] = rep.p;
        body["points"] = rat_array(rep.point_vals);
        body["type"] = rep.type_breaks;
        body["low_slope"] = rat(rep.low_slope);
        body["b"] = rat(rep.b);
        return with_header(echo, std::move(body));
    });
}

ReportJSON tower_json(const CDVF& base, const std::vector<KPoly>& polys, long cap) {
    return with_precision(cap, [&](long prec) {
        Tower tw = make_tower(base, polys, prec);
        return with_header(input_echo(tw), common_blocks(tw));
    });
}

namespace {

ReportJSON basechange_report(const CDVF& base, const KPoly& P, const BaseChangeResult& bc,
                             ReportJSON info, long prec) {
    info["from"] = print_base(base) + "; " + print_poly(base, P);
    ReportJSON out;
    out["schema_version"] = 1;
    out["input"] = input_echo(bc.tw);
    out["basechange"] = std::move(info);
    ReportJSON fb = full_blocks(bc.tw, prec);
    for (auto& [k, v] : fb.items()) out[k] = v;
    return out;
}

}  // namespace

ReportJSON basechange_json(const CDVF& base, const KPoly& P, long m, long cap) {
    return with_precision(cap, [&](long prec) {
        BaseChangeResult bc = tame_base_change(base, P, m, prec);
        ReportJSON info;
        info["m"] = m;
        return basechange_report(base, P, bc, std::move(info), prec);
    });
}

ReportJSON basechange_json(const CDVF& base, const KPoly& P, const KPoly& residue_step,
                           long cap) {
    return with_precision(cap, [&](long prec) {
        BaseChangeResult bc = unramified_base_change(base, P, residue_step, prec);
        ReportJSON info;
        info["residue_step"] = print_poly(base, residue_step);
        return basechange_report(base, P, bc, std::move(info), prec);
    });
}

ReportJSON defierce_json(const CDVF& base, const std::vector<KPoly>& polys,
                         const std::vector<TSeries>& hints, long cap) {
    return with_precision(cap, [&](long prec) {
        Tower tw = make_tower(base, polys, prec);
        std::string echo = input_echo(tw);
        FierceTrace tr = eliminate_fierce(tw, hints, prec);
        ReportJSON rounds = ReportJSON::array();
        for (const FierceRound& r : tr.rounds) {
            ReportJSON rj;
            rj["lift"] = r.lift;
            ReportJSON bj;
            bj["discriminant_vK"] = rat(r.before.first);
            bj["s"] = r.before.second;
            rj["before"] = std::move(bj);
            ReportJSON aj;
            aj["discriminant_vK"] = rat(r.after.first);
            aj["s"] = r.after.second;
            rj["after"] = std::move(aj);
            rounds.push_back(std::move(rj));
        }
        ReportJSON body;
        body["rounds"] = std::move(rounds);
        ReportJSON fin;
        fin["input"] = input_echo(tr.final_ext);
        ReportJSON cb = common_blocks(tr.final_ext);
        for (auto& [k, v] : cb.items()) fin[k] = v;
        body["final"] = std::move(fin);
        return with_header(echo, std::move(body));
    });
}

ReportJSON json_error(const error& e) {
    std::string msg = e.what();
    std::string prefix = std::string(errc_name(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    ReportJSON ej;
    ej["code"] = errc_name(e.code());
    ej["message"] = msg;
    if (!e.detail().empty()) ej["detail"] = e.detail();
    ej["exit"] = exit_code_for(e.code());
    ReportJSON out;
    out["error"] = std::move(ej);
    return out;
}

int exit_code_for(errc c) {
    switch (c) {
        case errc::syntax_error:
        case errc::field_mismatch:
        case errc::division_by_zero:
        case errc::not_eisenstein:
        case errc::not_unit_monogenic:
        case errc::inseparable:
        case errc::reducible_residue:
        case errc::wrong_degree:
        case errc::not_coprime:
        case errc::etale_input:
        case errc::tame_input:
        case errc::fierce_input:
        case errc::not_fierce:
        case errc::not_ultrametric:
        case errc::incomplete_splitting:
        case errc::not_representable:
            return 2;
        case errc::precision_exhausted:
        case errc::precision_cap_exceeded:
            return 3;
        case errc::undecidable_residue:
        case errc::undecidable_galois:
        case errc::hint_required:
        case errc::unsupported_tower:
        case errc::composite_unresolvable:
        case errc::splits_after_base_change:
        case errc::not_normalizable:
        case errc::hensel_fails:
            return 4;
        case errc::law_violation:
        case errc::internal_error:
            return 5;
    }
    return 5;
}

void human_render(const ReportJSON& j, std::ostream& os) { render(j, os, 0); }

}  // namespace cdvf
