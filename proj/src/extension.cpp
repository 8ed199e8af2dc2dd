#include "cdvf/extension.hpp"

#include <numeric>
#include <utility>

#include "cdvf/rebase.hpp"

namespace cdvf {

namespace {

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long pval(long n, long p) {
    long s = 0;
    while (n > 0 && n % p == 0) {
        n /= p;
        ++s;
    }
    return s;
}

}  // namespace

StepDesc validate_step(const CDVF& base, const KPoly& P) {
    require_same_field(P.field(), base.k);
    const long d = P.degree();
    check(d >= 1, errc::not_unit_monogenic, "defining polynomial must have positive degree");
    check(P.is_exact(), errc::internal_error, "step validation needs exact coefficients");
    check(P.is_monic(), errc::not_unit_monogenic, "defining polynomial is not monic");
    const long p = base.p();

    for (long j = 0; j < d; ++j) {
        TSeries cj = P.coeff(j);
        if (cj.known_nonzero() && cj.offset() < 0)
            fail(errc::not_unit_monogenic,
                 "coefficient of X^" + std::to_string(j) + " is not integral");
    }

    // Nonzero derivative: some exponent with a nonzero coefficient must be
    // prime to p, otherwise the step generates an inseparable extension.
    bool sep = false;
    for (long j = 1; j <= d; ++j)
        if (j % p != 0 && P.coeff(j).known_nonzero()) {
            sep = true;
            break;
        }
    check(sep, errc::inseparable, "defining polynomial has zero derivative");

    TSeries c0 = P.coeff(0);
    check(c0.known_nonzero(), errc::reducible_residue,
          "constant term vanishes, so X divides the polynomial");

    if (c0.val() >= ValRat(1)) {
        for (long j = 1; j < d; ++j) {
            TSeries cj = P.coeff(j);
            if (cj.known_nonzero() && cj.val() < ValRat(1))
                fail(errc::not_eisenstein,
                     "coefficient of X^" + std::to_string(j) + " is a unit");
        }
        check(c0.val() == ValRat(1), errc::not_eisenstein,
              "constant term has valuation " + c0.val().to_fraction_string() +
                  ", need exactly 1");
        StepDesc st;
        st.kind = StepKind::Eisenstein;
        st.P = P;
        st.degree = d;
        st.e = d;
        st.f = 1;
        st.s = 0;
        return st;
    }

    // Unit constant term: the reduction decides everything. Extract the
    // largest Frobenius depth s with pbar = q(X^{p^s}) and require q to be
    // irreducible; q is automatically separable because the extraction is
    // maximal.
    std::vector<ResidueElt> red;
    red.reserve(d + 1);
    for (long j = 0; j <= d; ++j) red.push_back(P.coeff(j).coeff_at(0));
    long g = 0;
    for (long j = 1; j <= d; ++j)
        if (!red[j].is_zero()) g = std::gcd(g, j);
    const long s = pval(g, p);
    const long m = ipow(p, s);
    std::vector<ResidueElt> qc;
    for (long i = 0; i * m <= d; ++i) qc.push_back(red[i * m]);
    RPoly qbar = RPoly::from_coeffs(base.k, qc);
    RPoly pbar = RPoly::from_coeffs(base.k, red);
    if (!rpoly_irreducible(qbar))
        fail(errc::reducible_residue,
             "reduction of the defining polynomial factors over the residue field");
    if (s >= 1) {
        bool all_pth = true;
        for (const auto& c : qbar.c)
            if (!c.is_pth_power()) {
                all_pth = false;
                break;
            }
        if (all_pth) fail(errc::reducible_residue, "reduction is a p-th power");
    }
    StepDesc st;
    st.kind = StepKind::UnitMonogenic;
    st.P = P;
    st.degree = d;
    st.e = 1;
    st.f = d;
    st.s = s;
    st.pbar = std::move(pbar);
    st.qbar = std::move(qbar);
    return st;
}

ValRat step_different_vL(const StepDesc& st) {
    auto host = std::make_shared<const KPoly>(st.P);
    KPoly Pd = st.P.derivative();
    check(!Pd.is_zero(), errc::inseparable, "zero derivative");
    OLElt dz = OLElt::from_coeffs(host, Pd.coeffs());
    return ValRat(st.e) * dz.val();
}

ValRat step_discriminant_vK(const StepDesc& st) {
    return resultant(st.P, st.P.derivative()).val();
}

namespace {

void accumulate(Tower& tw) {
    tw.degree = tw.e = tw.f = 1;
    tw.s = 0;
    tw.different_vL = ValRat(0);
    tw.discriminant_vK = ValRat(0);
    long f_below = 1;
    for (const auto& lvl : tw.levels) {
        const StepDesc& st = lvl.step;
        // The step invariants are relative to the level's own base; the
        // usual transitivity laws push them down the tower.
        tw.different_vL = step_different_vL(st) + ValRat(st.e) * tw.different_vL;
        tw.discriminant_vK =
            ValRat(st.degree) * tw.discriminant_vK + ValRat(f_below) * step_discriminant_vK(st);
        tw.degree *= st.degree;
        tw.e *= st.e;
        tw.f *= st.f;
        tw.s += st.s;
        f_below *= st.f;
    }
}

}  // namespace

const CDVF& Tower::top() const {
    if (levels.empty()) return base;
    check(levels.back().reb.has_value(), errc::internal_error,
          "top field of the tower has not been re-presented");
    return levels.back().reb->to;
}

Tower make_tower(const CDVF& base, const std::vector<KPoly>& polys, long prec) {
    check(!polys.empty(), errc::internal_error, "tower needs at least one step");
    Tower tw;
    tw.base = base;
    CDVF cur = base;
    for (size_t i = 0; i < polys.size(); ++i) {
        StepDesc st = validate_step(cur, polys[i]);
        TowerLevel lvl{cur, std::move(st), std::nullopt};
        if (i + 1 < polys.size()) {
            lvl.reb = rebase_step(cur, lvl.step, prec, static_cast<long>(i));
            cur = lvl.reb->to;
        }
        tw.levels.push_back(std::move(lvl));
    }
    accumulate(tw);
    return tw;
}

Tower tower_from_levels(const CDVF& base, std::vector<TowerLevel> levels) {
    Tower tw;
    tw.base = base;
    tw.levels = std::move(levels);
    accumulate(tw);
    return tw;
}

void ensure_top_rebase(Tower& tw, long prec) {
    if (tw.levels.empty() || tw.levels.back().reb.has_value()) return;
    TowerLevel& lvl = tw.levels.back();
    lvl.reb = rebase_step(lvl.base, lvl.step, prec, static_cast<long>(tw.levels.size()) - 1);
}

ExtClass classify(const Tower& tw) {
    if (tw.s >= 1) return ExtClass::Fierce;
    if (tw.different_vL == ValRat(0)) return ExtClass::Etale;
    if (tw.different_vL == ValRat(tw.e - 1)) return ExtClass::Tame;
    return ExtClass::WildUnfierce;
}

const char* ext_class_name(ExtClass c) {
    switch (c) {
        case ExtClass::Etale: return "etale";
        case ExtClass::Tame: return "tame";
        case ExtClass::WildUnfierce: return "wild-unfierce";
        case ExtClass::Fierce: return "fierce";
    }
    return "?";
}

FierceTrace eliminate_fierce(const Tower& tw, const std::vector<TSeries>& hints, long prec) {
    check(tw.s >= 1, errc::not_fierce, "extension is already unfierce");
    FierceTrace trace;
    Tower cur = tw;
    size_t hint_i = 0;
    while (cur.s >= 1) {
        size_t idx = 0;
        while (idx < cur.levels.size() && cur.levels[idx].step.s == 0) ++idx;
        check(idx < cur.levels.size(), errc::internal_error,
              "positive inseparable depth without a fierce level");
        if (idx != 0)
            fail(errc::composite_unresolvable,
                 "fierce level sits above unfierce levels; the compositum is out of reach");
        TowerLevel lvl = cur.levels.front();
        const StepDesc& st = lvl.step;
        const bool pure_radicial = st.qbar.degree() == 1;
        if (hint_i < hints.size()) {
            const TSeries& hint = hints[hint_i++];
            check(hint.is_exact() && (!hint.known_nonzero() || hint.offset() >= 0),
                  errc::hint_required, "radicial hint must be an integral element of the base");
            ResidueElt hres = hint.coeff_at(0);
            bool matched = false;
            if (pure_radicial) {
                ResidueElt cstep = -st.qbar.c[0];
                matched = (hres == cstep) || (hres == -cstep);
            }
            if (!matched)
                fail(errc::composite_unresolvable,
                     "the hinted lift produces a compositum this fragment cannot resolve");
        } else if (!pure_radicial) {
            fail(errc::hint_required,
                 "no automatic radicial element for a fierce step with nontrivial separable part");
        }
        // The separable lift is the step polynomial itself. Adjoining one of
        // its roots to the base reproduces the step's top field, so the new
        // base swallows the fierce level and the rest of the tower carries
        // over verbatim.
        if (!lvl.reb) lvl.reb = rebase_step(lvl.base, st, prec, 0);
        std::pair<ValRat, long> before{cur.discriminant_vK, cur.s};
        Tower next = tower_from_levels(
            lvl.reb->to, std::vector<TowerLevel>(cur.levels.begin() + 1, cur.levels.end()));
        std::pair<ValRat, long> after{next.discriminant_vK, next.s};
        const bool drop = after.first < before.first ||
                          (after.first == before.first && after.second < before.second);
        check(drop, errc::law_violation,
              "fierce elimination did not decrease the (discriminant, depth) witness");
        trace.rounds.push_back(FierceRound{st.P.to_string("X"), before, after});
        cur = std::move(next);
    }
    trace.final_ext = std::move(cur);
    return trace;
}

}  // namespace cdvf
