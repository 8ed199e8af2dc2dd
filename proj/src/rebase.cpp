#include "cdvf/rebase.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cdvf {

namespace {

constexpr int kNewtonMax = 200;

std::string num_suffix(long tag) { return tag <= 0 ? "" : std::to_string(tag + 1); }

// True when the reduced denominator of a residue element is 1.
bool den_trivial(const RFPtr& f, const ResidueElt& r) {
    return r.den().size() == 1 && r.den()[0] == f->sc_one();
}

// Evaluates a scalar-coefficient polynomial at a residue element of the
// target field. The scalar entries carry over verbatim because the source
// and target share p and the w-defining polynomial.
ResidueElt upoly_eval_res(const RFPtr& to, const UPoly& poly, const ResidueElt& at) {
    ResidueElt acc = ResidueElt::zero(to);
    for (size_t i = poly.size(); i-- > 0;)
        acc = acc * at + ResidueElt::from_scalar(to, poly[i]);
    return acc;
}

// Same evaluation with a series argument, truncated to `want`.
TSeries upoly_eval_series(const RFPtr& to, const UPoly& poly, const TSeries& at, long want) {
    TSeries acc = TSeries::zero(to);
    for (size_t i = poly.size(); i-- > 0;) {
        acc = acc * at + TSeries::monomial(to, ResidueElt::from_scalar(to, poly[i]), 0);
        if (want < PREC_INF) acc = acc.truncate(want);
    }
    return acc;
}

// One Newton update that keeps small exact iterates exact; only data
// reaching past the cutoff gets truncated.
TSeries newton_clamp(const TSeries& nx, long prec) {
    if (nx.is_exact() && nx.offset() + static_cast<long>(nx.coeffs().size()) <= prec) return nx;
    return nx.truncate(prec);
}

Rebase eisenstein_rebase(const CDVF& base, const StepDesc& st, long prec, long tag) {
    const RFPtr& k = base.k;
    const long d = st.degree;

    // Transpose the step polynomial into a polynomial in the old uniformizer
    // whose coefficients are z-polynomials, z being the root.
    long tmax = 0;
    for (long j = 0; j <= d; ++j) {
        TSeries cj = st.P.coeff(j);
        if (cj.known_nonzero())
            tmax = std::max(tmax, cj.offset() + static_cast<long>(cj.coeffs().size()) - 1);
    }
    std::vector<std::vector<ResidueElt>> rows(
        tmax + 1, std::vector<ResidueElt>(d + 1, ResidueElt::zero(k)));
    for (long j = 0; j <= d; ++j) {
        TSeries cj = st.P.coeff(j);
        for (size_t a = 0; a < cj.coeffs().size(); ++a)
            rows[cj.offset() + static_cast<long>(a)][j] = cj.coeffs()[a];
    }
    std::vector<TSeries> gc;
    gc.reserve(rows.size());
    for (auto& row : rows) gc.push_back(TSeries::make(k, 0, std::move(row)));
    KPoly G = KPoly::from_coeffs(k, std::move(gc));

    check(G.degree() >= 1, errc::hensel_fails,
          "uniformizer does not appear in the step polynomial");
    TSeries g1 = G.coeff(1);
    check(g1.known_nonzero() && g1.val() == ValRat(0), errc::hensel_fails,
          "derivative along the uniformizer is not a unit");

    KPoly Gd = G.derivative();
    TSeries x = TSeries::zero(k);
    bool exact = false;
    for (int it = 0;; ++it) {
        check(it < kNewtonMax, errc::internal_error,
              "expansion of the uniformizer did not stabilize");
        TSeries gx = G.eval(x);
        if (gx.is_exact_zero()) {
            exact = true;
            break;
        }
        TSeries delta = ts_div(gx, Gd.eval(x), prec);
        if (!delta.known_nonzero()) {
            x = (x - delta).truncate(prec);
            break;
        }
        x = newton_clamp(x - delta, prec);
        if (delta.val() >= ValRat(prec)) break;
    }
    check(x.known_nonzero() && x.val() == ValRat(d), errc::internal_error,
          "uniformizer image has the wrong valuation");

    const TSeries tau = x;
    auto resid = [](const ResidueElt& r) { return r; };
    Rebase rb;
    rb.to = CDVF{k, "z" + num_suffix(tag), base.usym};
    rb.prec = prec;
    rb.exact = exact;
    rb.res_map = resid;
    const bool tau_mono = tau.is_monomial();
    rb.map = [tau, resid, exact, tau_mono, prec](const TSeries& a) {
        long want = exact ? PREC_INF : prec;
        // A Laurent tail under a non-monomial image needs a finite cut for
        // the geometric inverse.
        if (want >= PREC_INF && !tau_mono && a.known_nonzero() && a.offset() < 0) want = prec;
        return ts_subst(a, tau, resid, want);
    };
    rb.gen_image = TSeries::monomial(k, ResidueElt::one(k), 1);
    return rb;
}

// Realization of the residue extension cut out by an irreducible q over the
// base residue field: the new field, the embedding, and a root of q.
struct ResShape {
    RFPtr knew;
    std::function<ResidueElt(const ResidueElt&)> emb;
    ResidueElt root;
    std::string usym;
};

ResShape residue_realization(const CDVF& base, const RPoly& q, long tag) {
    const RFPtr& k = base.k;
    if (q.degree() == 1) {
        return ResShape{k, [](const ResidueElt& a) { return a; }, -q.c[0], base.usym};
    }
    bool all_scalar = true;
    for (const auto& c : q.c)
        if (!c.is_scalar()) {
            all_scalar = false;
            break;
        }
    if (all_scalar) {
        if (k->has_w())
            fail(errc::undecidable_residue,
                 "residue growth over an algebraic extension is outside this fragment");
        std::vector<long> wm;
        wm.reserve(q.c.size());
        for (const auto& c : q.c) {
            FqElt s = c.scalar_value();
            wm.push_back(s.empty() ? 0 : s[0]);
        }
        RFPtr knew =
            k->has_u() ? ResidueField::make_fqu(k->p, wm) : ResidueField::make_fq(k->p, wm);
        auto emb = [knew](const ResidueElt& a) { return ResidueElt(knew, a.num(), a.den()); };
        return ResShape{knew, emb, ResidueElt::gen_w(knew), base.usym};
    }
    if (k->has_u()) {
        bool ulin = true;
        for (const auto& c : q.c)
            if (!den_trivial(k, c) || c.num().size() > 2) {
                ulin = false;
                break;
            }
        if (ulin) {
            // q(Y) = A(Y) + u*B(Y) with scalar A, B and B != 0. The root
            // becomes a fresh transcendental u1, and u maps to -A(u1)/B(u1);
            // the image field has the right degree because q is monic, so
            // max(deg A, deg B) = deg q.
            RFPtr knew = k->has_w() ? ResidueField::make_fqu(k->p, k->wmod)
                                    : ResidueField::make_fpu(k->p);
            UPoly A, B;
            for (const auto& c : q.c) {
                const UPoly& n = c.num();
                A.push_back(n.empty() ? k->sc_zero() : n[0]);
                B.push_back(n.size() >= 2 ? n[1] : k->sc_zero());
            }
            while (!A.empty() && k->sc_is_zero(A.back())) A.pop_back();
            while (!B.empty() && k->sc_is_zero(B.back())) B.pop_back();
            ResidueElt u1 = ResidueElt::gen_u(knew);
            ResidueElt U = -(upoly_eval_res(knew, A, u1) / upoly_eval_res(knew, B, u1));
            auto emb = [knew, U](const ResidueElt& a) {
                return upoly_eval_res(knew, a.num(), U) / upoly_eval_res(knew, a.den(), U);
            };
            return ResShape{knew, emb, u1, "u" + std::to_string(tag + 1)};
        }
    }
    fail(errc::undecidable_residue, "residue coefficients outside the supported shapes");
}

Rebase unit_rebase(const CDVF& base, const StepDesc& st, long prec, long tag) {
    ResShape sh = residue_realization(base, st.qbar, tag);
    RFPtr knew = sh.knew;
    auto emb = sh.emb;
    auto smap = [knew, emb](const TSeries& a) { return a.map_coeffs(knew, emb); };
    KPoly Pm = st.P.map(knew, smap);
    Rebase rb;
    rb.to = CDVF{knew, base.uni, sh.usym};
    rb.prec = prec;
    rb.exact = true;
    rb.map = smap;
    rb.res_map = emb;
    rb.gen_image = hensel_root(Pm, sh.root, prec);
    return rb;
}

Rebase fierce_rebase(const CDVF& base, const StepDesc& st, long prec, long tag) {
    const RFPtr& k = base.k;
    check(k->has_u(), errc::internal_error, "fierce step over a perfect residue field");
    check(st.qbar.degree() == 1, errc::unsupported_tower,
          "fierce step with nontrivial separable part cannot be re-presented");
    const long d = st.degree;
    for (long j = 1; j < d; ++j) {
        TSeries cj = st.P.coeff(j);
        for (const auto& r : cj.coeffs())
            check(r.is_scalar(), errc::unsupported_tower,
                  "coefficient of X^" + std::to_string(j) + " involves the transcendental");
    }

    // Split the constant coefficient as alpha(t)*u + beta(t) with scalar
    // series alpha, beta and alpha a unit. Solving the step equation for u
    // then expresses u through the root, which becomes the fresh
    // transcendental of the new presentation.
    TSeries c0 = st.P.coeff(0);
    RFPtr knew =
        k->has_w() ? ResidueField::make_fqu(k->p, k->wmod) : ResidueField::make_fpu(k->p);
    std::vector<ResidueElt> ac, bc;
    for (const auto& r : c0.coeffs()) {
        check(den_trivial(k, r) && r.num().size() <= 2, errc::unsupported_tower,
              "constant coefficient is not affine in the transcendental");
        const UPoly& n = r.num();
        bc.push_back(ResidueElt::from_scalar(knew, n.empty() ? k->sc_zero() : n[0]));
        ac.push_back(ResidueElt::from_scalar(knew, n.size() >= 2 ? n[1] : k->sc_zero()));
    }
    TSeries alpha = TSeries::make(knew, c0.offset(), std::move(ac));
    TSeries beta = TSeries::make(knew, c0.offset(), std::move(bc));
    check(alpha.known_nonzero() && alpha.val() == ValRat(0), errc::unsupported_tower,
          "transcendental part of the constant coefficient is not a unit");

    auto scalar_emb = [knew](const ResidueElt& a) { return ResidueElt(knew, a.num(), a.den()); };
    ResidueElt u1 = ResidueElt::gen_u(knew);
    TSeries num = TSeries::monomial(knew, u1.pow(d), 0);
    for (long j = 1; j < d; ++j) {
        TSeries cj = st.P.coeff(j).map_coeffs(knew, scalar_emb);
        num = num + cj * TSeries::monomial(knew, u1.pow(j), 0);
    }
    num = num + beta;
    TSeries R = ts_div(-num, alpha, prec);
    const bool exact = R.is_exact();
    ResidueElt Rbar = R.coeff_at(0);

    auto emb = [knew, Rbar](const ResidueElt& a) {
        return upoly_eval_res(knew, a.num(), Rbar) / upoly_eval_res(knew, a.den(), Rbar);
    };
    auto smap = [knew, R, prec, exact](const TSeries& a) {
        bool fully_exact = exact && a.is_exact();
        if (fully_exact)
            for (const auto& r : a.coeffs())
                if (!den_trivial(a.field(), r)) {
                    fully_exact = false;
                    break;
                }
        const long cap = fully_exact ? PREC_INF : prec_min(prec, a.prec());
        TSeries acc = TSeries::zero(knew);
        for (size_t i = 0; i < a.coeffs().size(); ++i) {
            const ResidueElt& r = a.coeffs()[i];
            const long te = a.offset() + static_cast<long>(i);
            const long want = cap >= PREC_INF ? PREC_INF : cap - te;
            TSeries n = upoly_eval_series(knew, r.num(), R, want);
            TSeries piece = den_trivial(a.field(), r)
                                ? n
                                : ts_div(n, upoly_eval_series(knew, r.den(), R, want), want);
            acc = acc + piece.scale_t(te);
        }
        if (!a.is_exact()) acc = acc + TSeries::unknown_zero(knew, a.prec());
        return cap >= PREC_INF ? acc : acc.truncate(cap);
    };

    Rebase rb;
    rb.to = CDVF{knew, base.uni, "u" + std::to_string(tag + 1)};
    rb.prec = prec;
    rb.exact = exact;
    rb.map = smap;
    rb.res_map = emb;
    rb.gen_image = TSeries::monomial(knew, u1, 0);
    return rb;
}

}  // namespace

TSeries hensel_root(const KPoly& P, const ResidueElt& r0, long prec) {
    const RFPtr& k = P.field();
    KPoly Pd = P.derivative();
    TSeries x = TSeries::monomial(k, r0, 0);
    for (int it = 0;; ++it) {
        check(it < kNewtonMax, errc::internal_error, "root lifting did not stabilize");
        TSeries fx = P.eval(x);
        if (fx.is_exact_zero()) return x;
        if (fx.known_nonzero())
            check(fx.val() >= ValRat(1), errc::hensel_fails, "not a residue root");
        TSeries fpx = Pd.eval(x);
        check(fpx.known_nonzero() && fpx.val() == ValRat(0), errc::hensel_fails,
              "residue root is not simple");
        TSeries delta = ts_div(fx, fpx, prec);
        if (!delta.known_nonzero()) return (x - delta).truncate(prec);
        x = newton_clamp(x - delta, prec);
        if (delta.val() >= ValRat(prec)) return x;
    }
}

TSeries rebase_olelt(const Rebase& r, const OLElt& a) {
    TSeries acc = TSeries::zero(r.to.k);
    const auto& cs = a.coeffs();
    for (size_t i = cs.size(); i-- > 0;) acc = acc * r.gen_image + r.map(cs[i]);
    return acc;
}

Rebase rebase_step(const CDVF& base, const StepDesc& st, long prec, long tag) {
    if (st.kind == StepKind::Eisenstein) return eisenstein_rebase(base, st, prec, tag);
    if (st.s == 0) return unit_rebase(base, st, prec, tag);
    return fierce_rebase(base, st, prec, tag);
}

}  // namespace cdvf
