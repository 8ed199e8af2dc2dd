#include "cdvf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cdvf/errors.hpp"

namespace cdvf {

namespace {

TSeries ts_one(const RFPtr& f) { return TSeries::from_int(f, 1); }

bool ts_is_one(const TSeries& s) {
    return s.is_monomial() && s.offset() == 0 && s.coeffs()[0].is_one();
}

TSeries ts_pow(const TSeries& base, long e) {
    TSeries r = ts_one(base.field());
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// KPoly

void KPoly::normalize() {
    while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
}

KPoly KPoly::zero(const RFPtr& f) {
    KPoly r;
    r.f_ = f;
    return r;
}

KPoly KPoly::from_coeffs(const RFPtr& f, std::vector<TSeries> asc) {
    KPoly r;
    r.f_ = f;
    for (const TSeries& s : asc) require_same_field(f, s.field());
    r.c_ = std::move(asc);
    r.normalize();
    return r;
}

KPoly KPoly::x_power(const RFPtr& f, long j) {
    check(j >= 0, errc::internal_error, "negative monomial exponent");
    std::vector<TSeries> c(static_cast<size_t>(j), TSeries::zero(f));
    c.push_back(ts_one(f));
    return from_coeffs(f, std::move(c));
}

const TSeries& KPoly::leading() const {
    check(!c_.empty(), errc::internal_error, "leading coefficient of the zero polynomial");
    return c_.back();
}

TSeries KPoly::coeff(long j) const {
    if (j < 0 || j > degree()) return TSeries::zero(f_);
    return c_[static_cast<size_t>(j)];
}

bool KPoly::is_monic() const { return !c_.empty() && ts_is_one(c_.back()); }

bool KPoly::is_exact() const {
    return std::all_of(c_.begin(), c_.end(), [](const TSeries& s) { return s.is_exact(); });
}

KPoly KPoly::operator+(const KPoly& o) const {
    require_same_field(f_, o.f_);
    std::vector<TSeries> c(std::max(c_.size(), o.c_.size()), TSeries::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return from_coeffs(f_, std::move(c));
}

KPoly KPoly::operator-() const {
    std::vector<TSeries> c;
    c.reserve(c_.size());
    for (const TSeries& s : c_) c.push_back(-s);
    return from_coeffs(f_, std::move(c));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
    require_same_field(f_, o.f_);
    if (is_zero() || o.is_zero()) return zero(f_);
    std::vector<TSeries> c(c_.size() + o.c_.size() - 1, TSeries::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return from_coeffs(f_, std::move(c));
}

KPoly KPoly::scaled(const TSeries& s) const {
    std::vector<TSeries> c;
    c.reserve(c_.size());
    for (const TSeries& a : c_) c.push_back(a * s);
    return from_coeffs(f_, std::move(c));
}

KPoly KPoly::derivative() const {
    std::vector<TSeries> c;
    for (size_t j = 1; j < c_.size(); ++j)
        c.push_back(c_[j] * TSeries::from_int(f_, static_cast<long>(j)));
    return from_coeffs(f_, std::move(c));
}

TSeries KPoly::eval(const TSeries& x) const {
    if (is_zero()) return TSeries::zero(f_);
    TSeries r = c_.back();
    for (size_t j = c_.size() - 1; j-- > 0;) r = r * x + c_[j];
    return r;
}

KPoly KPoly::deflated_at(const TSeries& root) const {
    check(degree() >= 1, errc::internal_error, "deflation needs positive degree");
    std::vector<TSeries> q(c_.size() - 1, TSeries::zero(f_));
    TSeries carry = c_.back();
    for (size_t j = c_.size() - 1; j-- > 0;) {
        q[j] = carry;
        carry = c_[j] + root * carry;
    }
    check(!carry.known_nonzero(), errc::internal_error, "deflation at a non-root");
    return from_coeffs(f_, std::move(q));
}

KPoly KPoly::map(const RFPtr& target, const std::function<TSeries(const TSeries&)>& fn) const {
    std::vector<TSeries> c;
    c.reserve(c_.size());
    for (const TSeries& s : c_) c.push_back(fn(s));
    return from_coeffs(target, std::move(c));
}

bool KPoly::same_exact(const KPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].same_exact(o.c_[i])) return false;
    return true;
}

std::string KPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = c_.size(); j-- > 0;) {
        const TSeries& s = c_[j];
        if (s.is_exact_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << "(" << s.to_string() << ")";
            continue;
        }
        if (!ts_is_one(s)) os << "(" << s.to_string() << ")*";
        os << var;
        if (j > 1) os << "^" << j;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Resultant

namespace {

using Matrix = std::vector<std::vector<TSeries>>;

// Fraction-free elimination for exact entries. Every division is exact by
// the usual minor identities, so the result is an exact series.
TSeries det_bareiss(Matrix a, const RFPtr& k) {
    const size_t n = a.size();
    int sign = 1;
    TSeries prev = ts_one(k);
    for (size_t c = 0; c + 1 < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (a[r][c].known_nonzero()) {
                piv = r;
                break;
            }
        if (piv == n) return TSeries::zero(k);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i)
            for (size_t j = c + 1; j < n; ++j)
                a[i][j] = ts_div_exact(a[i][j] * a[c][c] - a[i][c] * a[c][j], prev);
        prev = a[c][c];
    }
    TSeries det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Ordinary elimination for truncated entries. Pivots on the entry of least
// valuation in each column to limit precision loss. A column whose entries
// are all hidden below their precision cutoffs stops the computation, and
// the caller is expected to retry with more precision.
TSeries det_gauss(Matrix a, const RFPtr& k) {
    const size_t n = a.size();
    int sign = 1;
    TSeries det = ts_one(k);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        bool all_exact_zero = true;
        for (size_t r = c; r < n; ++r) {
            if (!a[r][c].is_exact_zero()) all_exact_zero = false;
            if (a[r][c].known_nonzero() &&
                (piv == n || a[r][c].offset() < a[piv][c].offset()))
                piv = r;
        }
        if (piv == n) {
            if (all_exact_zero) return TSeries::zero(k);
            fail(errc::precision_exhausted, "pivot valuation undetermined");
        }
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_exact_zero()) continue;
            TSeries factor = ts_div(a[i][c], a[c][c], PREC_INF);
            for (size_t j = c + 1; j < n; ++j) a[i][j] = a[i][j] - factor * a[c][j];
        }
        det = det * a[c][c];
    }
    return sign < 0 ? -det : det;
}

}  // namespace

TSeries resultant(const KPoly& f, const KPoly& g) {
    require_same_field(f.field(), g.field());
    const RFPtr& k = f.field();
    if (f.is_zero() || g.is_zero()) return TSeries::zero(k);
    const long m = f.degree();
    const long n = g.degree();
    if (m == 0 && n == 0) return ts_one(k);
    if (n == 0) return ts_pow(g.coeff(0), m);
    if (m == 0) return ts_pow(f.coeff(0), n);
    const size_t N = static_cast<size_t>(m + n);
    Matrix a(N, std::vector<TSeries>(N, TSeries::zero(k)));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j) a[r][r + j] = f.coeff(m - j);
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff(n - j);
    bool exact = f.is_exact() && g.is_exact();
    return exact ? det_bareiss(std::move(a), k) : det_gauss(std::move(a), k);
}

// ---------------------------------------------------------------------------
// Newton polygon

namespace {

// cross((b - a), (c - a)) <= 0, all ordinates finite
bool turns_nonleft(const std::pair<long, ValRat>& a, const std::pair<long, ValRat>& b,
                   const std::pair<long, ValRat>& c) {
    ValRat cross = ValRat(b.first - a.first) * (c.second - a.second) -
                   (b.second - a.second) * ValRat(c.first - a.first);
    return cross <= ValRat(0);
}

}  // namespace

NewtonPolygon np_from_vals(std::vector<ValRat> vals) {
    check(vals.size() >= 2, errc::internal_error, "polygon needs degree at least 1");
    check(!vals.front().is_inf(), errc::internal_error, "polygon leading coefficient vanishes");
    NewtonPolygon np;
    np.d = static_cast<long>(vals.size()) - 1;
    np.vals = std::move(vals);
    np.last_finite = 0;
    for (long i = 0; i <= np.d; ++i)
        if (!np.vals[static_cast<size_t>(i)].is_inf()) np.last_finite = i;
    for (long i = 0; i <= np.last_finite; ++i) {
        const ValRat& v = np.vals[static_cast<size_t>(i)];
        if (v.is_inf()) continue;
        std::pair<long, ValRat> pt{i, v};
        auto& h = np.vertices;
        while (h.size() >= 2 && turns_nonleft(h[h.size() - 2], h[h.size() - 1], pt)) h.pop_back();
        h.push_back(pt);
    }
    return np;
}

NewtonPolygon np_of_poly(const KPoly& P) {
    check(P.degree() >= 1, errc::internal_error, "polygon of a constant");
    const long d = P.degree();
    std::vector<ValRat> vals;
    vals.reserve(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) vals.push_back(P.coeff(d - i).val());
    return np_from_vals(std::move(vals));
}

std::vector<std::pair<ValRat, long>> NewtonPolygon::slopes() const {
    std::vector<std::pair<ValRat, long>> out;
    for (size_t i = 1; i < vertices.size(); ++i) {
        long run = vertices[i].first - vertices[i - 1].first;
        ValRat rise = vertices[i].second - vertices[i - 1].second;
        out.emplace_back(rise / ValRat(run), run);
    }
    if (last_finite < d) out.emplace_back(ValRat::infinity(), d - last_finite);
    return out;
}

std::vector<long> NewtonPolygon::breakpoints() const {
    std::vector<long> out;
    for (size_t i = 1; i + 1 < vertices.size(); ++i) out.push_back(vertices[i].first);
    if (last_finite > 0 && last_finite < d) out.push_back(last_finite);
    return out;
}

ValRat NewtonPolygon::value_at(long i) const {
    check(i >= 0 && i <= d, errc::internal_error, "polygon index out of range");
    if (i > last_finite) return ValRat::infinity();
    for (size_t s = 1; s < vertices.size(); ++s) {
        if (i > vertices[s].first) continue;
        const auto& lo = vertices[s - 1];
        const auto& hi = vertices[s];
        ValRat slope = (hi.second - lo.second) / ValRat(hi.first - lo.first);
        return lo.second + slope * ValRat(i - lo.first);
    }
    return vertices.front().second;  // single-vertex hull, i == 0
}

bool NewtonPolygon::is_affine_between(long a, long b) const {
    check(0 <= a && a < b && b <= d, errc::internal_error, "bad polygon interval");
    for (long bp : breakpoints())
        if (a < bp && bp < b) return false;
    return true;
}

ValRat NewtonPolygon::slope_between(long a, long b) const {
    check(is_affine_between(a, b), errc::internal_error, "slope across a polygon break");
    if (a >= last_finite) return ValRat::infinity();
    return (value_at(b) - value_at(a)) / ValRat(b - a);
}

std::string NewtonPolygon::to_string() const {
    std::ostringstream os;
    for (long i = 0; i <= d; ++i) {
        if (i) os << " ";
        os << "(" << i << "," << vals[static_cast<size_t>(i)].to_string() << ")";
    }
    return os.str();
}

bool np_type_matches(const NewtonPolygon& np, const std::vector<long>& type) {
    check(type.size() >= 2 && type.front() == 0 && type.back() == np.d, errc::internal_error,
          "malformed polygon type");
    for (size_t i = 1; i < type.size(); ++i)
        check(type[i - 1] < type[i], errc::internal_error, "polygon type not increasing");
    for (long bp : np.breakpoints())
        if (std::find(type.begin(), type.end(), bp) == type.end()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Quotient ring arithmetic

void OLElt::reduce() {
    const KPoly& P = *P_;
    check(P.is_monic(), errc::internal_error, "quotient host must be monic");
    const size_t d = static_cast<size_t>(P.degree());
    check(d >= 1, errc::internal_error, "quotient host must have positive degree");
    while (c_.size() > d) {
        TSeries top = c_.back();
        c_.pop_back();
        if (top.is_exact_zero()) continue;
        const size_t base = c_.size() - d;
        for (size_t j = 0; j < d; ++j) c_[base + j] = c_[base + j] - top * P.coeff(static_cast<long>(j));
    }
    while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
}

OLElt OLElt::zero(const std::shared_ptr<const KPoly>& host) {
    OLElt r;
    r.P_ = host;
    return r;
}

OLElt OLElt::one(const std::shared_ptr<const KPoly>& host) {
    return from_series(host, ts_one(host->field()));
}

OLElt OLElt::gen(const std::shared_ptr<const KPoly>& host) {
    OLElt r;
    r.P_ = host;
    r.c_ = {TSeries::zero(host->field()), ts_one(host->field())};
    r.reduce();
    return r;
}

OLElt OLElt::from_series(const std::shared_ptr<const KPoly>& host, const TSeries& s) {
    OLElt r;
    r.P_ = host;
    r.c_ = {s};
    r.reduce();
    return r;
}

OLElt OLElt::from_coeffs(const std::shared_ptr<const KPoly>& host, std::vector<TSeries> asc) {
    OLElt r;
    r.P_ = host;
    r.c_ = std::move(asc);
    r.reduce();
    return r;
}

bool OLElt::is_exact_zero() const { return c_.empty(); }

OLElt OLElt::operator+(const OLElt& o) const {
    check(P_ == o.P_ || P_->same_exact(*o.P_), errc::internal_error, "mixed quotient hosts");
    std::vector<TSeries> c(std::max(c_.size(), o.c_.size()), TSeries::zero(P_->field()));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return from_coeffs(P_, std::move(c));
}

OLElt OLElt::operator-() const {
    std::vector<TSeries> c;
    c.reserve(c_.size());
    for (const TSeries& s : c_) c.push_back(-s);
    return from_coeffs(P_, std::move(c));
}

OLElt OLElt::operator-(const OLElt& o) const { return *this + (-o); }

OLElt OLElt::operator*(const OLElt& o) const {
    check(P_ == o.P_ || P_->same_exact(*o.P_), errc::internal_error, "mixed quotient hosts");
    if (c_.empty() || o.c_.empty()) return zero(P_);
    std::vector<TSeries> c(c_.size() + o.c_.size() - 1, TSeries::zero(P_->field()));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return from_coeffs(P_, std::move(c));
}

OLElt OLElt::scaled(const TSeries& s) const {
    std::vector<TSeries> c;
    c.reserve(c_.size());
    for (const TSeries& a : c_) c.push_back(a * s);
    return from_coeffs(P_, std::move(c));
}

OLElt OLElt::pow(long e) const {
    check(e >= 0, errc::internal_error, "negative power in the quotient ring");
    OLElt r = one(P_);
    OLElt b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

KPoly OLElt::as_poly() const { return KPoly::from_coeffs(P_->field(), c_); }

ValRat OLElt::val() const {
    if (c_.empty()) return ValRat::infinity();
    if (c_.size() == 1) return c_[0].val();
    TSeries res = resultant(*P_, as_poly());
    ValRat v = res.val();
    if (v.is_inf()) return v;
    return v / ValRat(P_->degree());
}

std::string OLElt::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    return as_poly().to_string(var);
}

// ---------------------------------------------------------------------------
// Root shift

std::vector<OLElt> shifted_by_root(const std::shared_ptr<const KPoly>& host) {
    const KPoly& P = *host;
    check(P.is_monic(), errc::internal_error, "shift needs a monic host");
    const long d = P.degree();
    check(d >= 1, errc::internal_error, "shift needs positive degree");
    const long p = P.field()->p;
    std::vector<std::vector<long>> binom(static_cast<size_t>(d) + 1,
                                         std::vector<long>(static_cast<size_t>(d) + 1, 0));
    for (long i = 0; i <= d; ++i) {
        binom[i][0] = 1;
        for (long j = 1; j <= i; ++j)
            binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % p;
    }
    std::vector<OLElt> gpow(static_cast<size_t>(d) + 1, OLElt::one(host));
    for (long k = 1; k <= d; ++k) gpow[k] = gpow[k - 1] * OLElt::gen(host);
    std::vector<OLElt> out;
    out.reserve(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) {
        OLElt acc = OLElt::zero(host);
        for (long j = i; j <= d; ++j) {
            if (binom[j][i] == 0) continue;
            TSeries s = P.coeff(j) * TSeries::from_int(P.field(), binom[j][i]);
            acc = acc + gpow[j - i].scaled(s);
        }
        out.push_back(acc);
    }
    for (const TSeries& s : out[0].coeffs())
        check(!s.known_nonzero(), errc::internal_error, "shift constant term did not vanish");
    out[0] = OLElt::zero(host);
    return out;
}

NewtonPolygon np_of_shifted(const std::vector<OLElt>& asc) {
    check(asc.size() >= 2, errc::internal_error, "shifted polygon needs degree at least 1");
    const long d = static_cast<long>(asc.size()) - 1;
    std::vector<ValRat> vals;
    vals.reserve(asc.size());
    for (long i = 0; i <= d; ++i) vals.push_back(asc[static_cast<size_t>(d - i)].val());
    return np_from_vals(std::move(vals));
}

}  // namespace cdvf
