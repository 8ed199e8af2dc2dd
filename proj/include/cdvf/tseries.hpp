#pragma once

#include <functional>
#include <limits>

#include "cdvf/residue.hpp"
#include "cdvf/valrat.hpp"

namespace cdvf {

// Sentinel for "known to all orders". Kept far from LONG_MAX so that the
// bookkeeping sums prec+offset cannot overflow.
constexpr long PREC_INF = std::numeric_limits<long>::max() / 4;

inline long prec_add(long a, long b) { return (a >= PREC_INF || b >= PREC_INF) ? PREC_INF : a + b; }
inline long prec_min(long a, long b) { return a < b ? a : b; }

// Truncated Laurent series over a residue field: finitely many known
// coefficients starting at `offset`, plus the statement "nothing else is
// known below t^prec". A series with prec = PREC_INF is exact (a Laurent
// polynomial). A series with no known coefficients and finite prec is the
// honest "0 + O(t^prec)": its valuation is undetermined and asking for it
// raises precision_exhausted.
class TSeries {
  public:
    TSeries() = default;

    static TSeries zero(const RFPtr& f);
    static TSeries unknown_zero(const RFPtr& f, long prec);
    static TSeries monomial(const RFPtr& f, const ResidueElt& c, long exp);
    static TSeries from_int(const RFPtr& f, long n) {
        return monomial(f, ResidueElt::from_int(f, n), 0);
    }
    static TSeries make(const RFPtr& f, long offset, std::vector<ResidueElt> coeffs,
                        long prec = PREC_INF);

    const RFPtr& field() const { return f_; }
    long prec() const { return prec_; }
    bool is_exact() const { return prec_ >= PREC_INF; }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }
    // Valuation is certified: either a known leading term or exact zero.
    bool val_known() const { return !c_.empty() || is_exact(); }
    bool known_nonzero() const { return !c_.empty(); }
    bool is_monomial() const { return c_.size() == 1 && is_exact(); }

    // Valuation; precision_exhausted when only "0 + O(t^N)" is known.
    ValRat val() const;
    // Leading coefficient (requires known_nonzero).
    const ResidueElt& leading() const;
    long offset() const { return off_; }
    const std::vector<ResidueElt>& coeffs() const { return c_; }
    // Coefficient of t^exp; zero when inside the known window, error beyond it.
    ResidueElt coeff_at(long exp) const;

    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator-() const;
    TSeries operator*(const TSeries& o) const;
    // Geometric-series inverse. For an exact non-monomial input the result
    // must be cut somewhere; `want_abs_prec` gives that cut. Finite-precision
    // inputs ignore it and follow the N - 2*offset rule.
    TSeries inv(long want_abs_prec) const;
    TSeries scale_t(long k) const;   // multiply by t^k
    TSeries stretch(long m) const;   // substitute t -> t^m, m >= 1
    TSeries truncate(long prec) const;
    TSeries map_coeffs(const RFPtr& target,
                       const std::function<ResidueElt(const ResidueElt&)>& fn) const;

    bool same_exact(const TSeries& o) const;  // exact on both sides and equal

    std::string to_string() const;

  private:
    RFPtr f_;
    long off_ = 0;
    std::vector<ResidueElt> c_;
    long prec_ = PREC_INF;
    void normalize();
    // Offset for the precision bookkeeping: the certified lower bound on the
    // valuation (prec itself for an all-unknown series).
    long eff_off() const { return c_.empty() ? prec_ : off_; }
    friend TSeries ts_div_exact(const TSeries& a, const TSeries& b);
};

// Exact Laurent-polynomial division; the quotient must again be a Laurent
// polynomial (raises internal_error otherwise, the callers guarantee it).
TSeries ts_div_exact(const TSeries& a, const TSeries& b);

// General division with precision tracking.
TSeries ts_div(const TSeries& a, const TSeries& b, long want_abs_prec);

// Substitute t -> g (with v(g) >= 1) while mapping coefficients through
// `res_map`; the workhorse of every field rebasing. Result truncated to
// `want_prec`.
TSeries ts_subst(const TSeries& a, const TSeries& g,
                 const std::function<ResidueElt(const ResidueElt&)>& res_map, long want_prec);

}  // namespace cdvf
