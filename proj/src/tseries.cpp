#include "cdvf/tseries.hpp"

#include <sstream>

namespace cdvf {

void TSeries::normalize() {
    // leading zeros: advance the offset
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        off_ += static_cast<long>(lead);
    }
    // coefficients at or beyond the precision are meaningless
    if (prec_ < PREC_INF && !c_.empty()) {
        long keep = prec_ - off_;
        if (keep < 0) keep = 0;
        if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<size_t>(keep));
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) off_ = 0;
}

TSeries TSeries::zero(const RFPtr& f) {
    TSeries s;
    s.f_ = f;
    return s;
}

TSeries TSeries::unknown_zero(const RFPtr& f, long prec) {
    TSeries s;
    s.f_ = f;
    s.prec_ = prec;
    return s;
}

TSeries TSeries::monomial(const RFPtr& f, const ResidueElt& c, long exp) {
    TSeries s;
    s.f_ = f;
    s.off_ = exp;
    s.c_ = {c};
    s.normalize();
    return s;
}

TSeries TSeries::make(const RFPtr& f, long offset, std::vector<ResidueElt> coeffs, long prec) {
    TSeries s;
    s.f_ = f;
    s.off_ = offset;
    s.c_ = std::move(coeffs);
    s.prec_ = prec;
    s.normalize();
    return s;
}

ValRat TSeries::val() const {
    if (!c_.empty()) return ValRat(off_);
    if (is_exact()) return ValRat::infinity();
    fail(errc::precision_exhausted,
         "valuation undetermined: series is 0 + O(t^" + std::to_string(prec_) + ")");
}

const ResidueElt& TSeries::leading() const {
    check(!c_.empty(), errc::internal_error, "leading coefficient of a zero series");
    return c_[0];
}

ResidueElt TSeries::coeff_at(long exp) const {
    check(exp < prec_, errc::precision_exhausted,
          "coefficient at t^" + std::to_string(exp) + " beyond known precision");
    if (exp < off_ || exp >= off_ + static_cast<long>(c_.size())) return ResidueElt::zero(f_);
    return c_[static_cast<size_t>(exp - off_)];
}

TSeries TSeries::operator+(const TSeries& o) const {
    require_same_field(f_, o.f_);
    long prec = prec_min(prec_, o.prec_);
    if (c_.empty() && o.c_.empty())
        return prec >= PREC_INF ? zero(f_) : unknown_zero(f_, prec);
    long lo = c_.empty() ? o.off_ : (o.c_.empty() ? off_ : std::min(off_, o.off_));
    long hi_a = off_ + static_cast<long>(c_.size());
    long hi_b = o.off_ + static_cast<long>(o.c_.size());
    long hi = std::max(c_.empty() ? lo : hi_a, o.c_.empty() ? lo : hi_b);
    std::vector<ResidueElt> cs(static_cast<size_t>(hi - lo), ResidueElt::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i) cs[static_cast<size_t>(off_ - lo) + i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) {
        size_t k = static_cast<size_t>(o.off_ - lo) + i;
        cs[k] = cs[k] + o.c_[i];
    }
    return make(f_, lo, std::move(cs), prec);
}

TSeries TSeries::operator-() const {
    TSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

TSeries TSeries::operator-(const TSeries& o) const { return *this + (-o); }

TSeries TSeries::operator*(const TSeries& o) const {
    require_same_field(f_, o.f_);
    if (is_exact_zero() || o.is_exact_zero()) return zero(f_);
    long prec = prec_min(prec_add(prec_, o.eff_off()), prec_add(o.prec_, eff_off()));
    if (c_.empty() || o.c_.empty())
        return prec >= PREC_INF ? zero(f_) : unknown_zero(f_, prec);
    std::vector<ResidueElt> cs(c_.size() + o.c_.size() - 1, ResidueElt::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            cs[i + j] = cs[i + j] + c_[i] * o.c_[j];
    return make(f_, off_ + o.off_, std::move(cs), prec);
}

TSeries TSeries::inv(long want_abs_prec) const {
    check(val_known(), errc::precision_exhausted, "inverse of a series with undetermined valuation");
    check(!c_.empty(), errc::division_by_zero, "inverse of the zero series");
    if (is_monomial()) return monomial(f_, c_[0].inv(), -off_);
    long out_prec;  // absolute precision of the result
    if (is_exact()) {
        out_prec = want_abs_prec;
        check(out_prec < PREC_INF, errc::internal_error,
              "exact inverse of a non-monomial needs a finite target precision");
    } else {
        out_prec = prec_ - 2 * off_;
    }
    long nterms = out_prec - (-off_);  // relative number of coefficients
    if (nterms <= 0) return unknown_zero(f_, out_prec);
    ResidueElt u0i = c_[0].inv();
    std::vector<ResidueElt> v(static_cast<size_t>(nterms), ResidueElt::zero(f_));
    v[0] = u0i;
    for (long k = 1; k < nterms; ++k) {
        ResidueElt acc = ResidueElt::zero(f_);
        for (long i = 1; i <= k; ++i) {
            if (i >= static_cast<long>(c_.size())) break;
            acc = acc + c_[static_cast<size_t>(i)] * v[static_cast<size_t>(k - i)];
        }
        v[static_cast<size_t>(k)] = -(u0i * acc);
    }
    return make(f_, -off_, std::move(v), out_prec);
}

TSeries TSeries::scale_t(long k) const {
    TSeries s = *this;
    if (s.is_exact_zero()) return s;
    s.off_ += k;
    if (s.prec_ < PREC_INF) s.prec_ += k;
    return s;
}

TSeries TSeries::stretch(long m) const {
    check(m >= 1, errc::internal_error, "stretch exponent must be >= 1");
    if (m == 1 || c_.empty()) {
        TSeries s = *this;
        if (s.prec_ < PREC_INF) s.prec_ *= m;
        return s;
    }
    std::vector<ResidueElt> cs(static_cast<size_t>((c_.size() - 1) * m + 1),
                               ResidueElt::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i) cs[i * m] = c_[i];
    long prec = prec_ < PREC_INF ? prec_ * m : PREC_INF;
    return make(f_, off_ * m, std::move(cs), prec);
}

TSeries TSeries::truncate(long prec) const {
    TSeries s = *this;
    s.prec_ = prec_min(s.prec_, prec);
    s.normalize();
    return s;
}

TSeries TSeries::map_coeffs(const RFPtr& target,
                            const std::function<ResidueElt(const ResidueElt&)>& fn) const {
    TSeries s;
    s.f_ = target;
    s.off_ = off_;
    s.prec_ = prec_;
    for (const auto& x : c_) s.c_.push_back(fn(x));
    s.normalize();
    return s;
}

bool TSeries::same_exact(const TSeries& o) const {
    if (!is_exact() || !o.is_exact()) return false;
    if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
    if (off_ != o.off_ || c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string TSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long e = off_ + static_cast<long>(i);
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].to_string();
        bool needs_parens = cs.find_first_of("+*") != std::string::npos && cs[0] != '(';
        if (e == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    if (prec_ < PREC_INF) {
        if (!first) os << " + ";
        os << "O(t^" << prec_ << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

TSeries ts_div_exact(const TSeries& a, const TSeries& b) {
    require_same_field(a.field(), b.field());
    check(a.is_exact() && b.is_exact(), errc::internal_error,
          "exact division requires exact operands");
    check(!b.is_exact_zero(), errc::division_by_zero, "division by the zero series");
    if (a.is_exact_zero()) return TSeries::zero(a.field());
    TSeries r = a;
    TSeries q = TSeries::zero(a.field());
    long guard = static_cast<long>(a.coeffs().size() + b.coeffs().size()) + 4;
    while (!r.is_exact_zero()) {
        check(guard-- > 0, errc::internal_error, "division is not exact in the series ring");
        long k = r.offset() - b.offset();
        ResidueElt c = r.leading() / b.leading();
        TSeries term = TSeries::monomial(a.field(), c, k);
        q = q + term;
        r = r - term * b;
    }
    return q;
}

TSeries ts_div(const TSeries& a, const TSeries& b, long want_abs_prec) {
    if (b.is_monomial()) return a * b.inv(0);
    if (a.is_exact() && b.is_exact() && want_abs_prec >= PREC_INF) return ts_div_exact(a, b);
    check(b.known_nonzero(), errc::precision_exhausted, "division by a series of unknown valuation");
    long lim = prec_min(want_abs_prec, prec_add(a.prec(), -b.offset()));
    check(lim < PREC_INF, errc::internal_error, "unbounded inexact division");
    return (a * b.inv(lim)).truncate(lim);
}

TSeries ts_subst(const TSeries& a, const TSeries& g,
                 const std::function<ResidueElt(const ResidueElt&)>& res_map, long want_prec) {
    const RFPtr& target = g.field();
    check(g.val_known() && (g.is_exact_zero() || g.offset() >= 1), errc::internal_error,
          "substitution image must have valuation >= 1");
    TSeries acc = TSeries::zero(target);
    if (a.known_nonzero()) {
        long vg = g.offset();
        long e0 = a.offset();
        TSeries cur = TSeries::monomial(target, ResidueElt::one(target), 0);
        if (e0 >= 0) {
            for (long i = 0; i < e0; ++i) cur = (cur * g).truncate(want_prec);
        } else {
            TSeries gi = g.inv(want_prec < PREC_INF ? want_prec + (-e0) * (vg + 1) : PREC_INF);
            for (long i = 0; i < -e0; ++i) cur = (cur * gi).truncate(want_prec);
        }
        for (size_t i = 0; i < a.coeffs().size(); ++i) {
            const ResidueElt& ci = a.coeffs()[i];
            if (!ci.is_zero())
                acc = acc + TSeries::monomial(target, res_map(ci), 0) * cur;
            if (i + 1 < a.coeffs().size()) cur = (cur * g).truncate(want_prec);
        }
    }
    if (a.prec() < PREC_INF) {
        long vg = g.known_nonzero() ? g.offset() : 1;
        long tail = a.prec() >= 0 ? a.prec() * vg : a.prec();
        acc = acc + TSeries::unknown_zero(target, tail);
    }
    return acc.truncate(want_prec);
}

}  // namespace cdvf
