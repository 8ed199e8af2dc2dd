#include "cdvf/residue.hpp"

#include <algorithm>
#include <sstream>

namespace cdvf {

namespace {

long norm_mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// Extended gcd on longs for prime-field inversion.
long fp_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = norm_mod(a, p);
    check(nr != 0, errc::division_by_zero, "inverse of 0 in F_p");
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return norm_mod(t, p);
}

void trim_long(std::vector<long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

// ---------------------------------------------------------------------------
// scalar layer: F_p[w]/(wmod)

bool ResidueField::same(const ResidueField& o) const {
    return kind == o.kind && p == o.p && wmod == o.wmod;
}

void require_same_field(const RFPtr& a, const RFPtr& b) {
    check(a && b && a->same(*b), errc::field_mismatch,
          "operands live in different residue fields");
}

FqElt ResidueField::sc_from_int(long n) const {
    long r = norm_mod(n, p);
    return r == 0 ? FqElt{} : FqElt{r};
}

FqElt ResidueField::sc_add(const FqElt& a, const FqElt& b) const {
    FqElt r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = norm_mod(r[i] + b[i], p);
    trim_long(r);
    return r;
}

FqElt ResidueField::sc_neg(const FqElt& a) const {
    FqElt r = a;
    for (long& x : r) x = norm_mod(-x, p);
    return r;
}

FqElt ResidueField::sc_sub(const FqElt& a, const FqElt& b) const { return sc_add(a, sc_neg(b)); }

FqElt ResidueField::sc_mul(const FqElt& a, const FqElt& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = norm_mod(r[i + j] + a[i] * b[j], p);
    // reduce mod wmod (monic)
    if (!wmod.empty()) {
        int n = static_cast<int>(wmod.size()) - 1;
        for (int i = static_cast<int>(r.size()) - 1; i >= n; --i) {
            long c = r[i];
            if (c == 0) continue;
            r[i] = 0;
            for (int j = 0; j < n; ++j)
                r[i - n + j] = norm_mod(r[i - n + j] - c * wmod[j], p);
        }
        r.resize(n);
    }
    trim_long(r);
    return r;
}

FqElt ResidueField::sc_inv(const FqElt& a) const {
    check(!a.empty(), errc::division_by_zero, "inverse of 0 scalar");
    if (wmod.empty()) return {fp_inv(a[0], p)};
    // extended Euclid in F_p[w] against the defining polynomial
    auto divmod = [&](std::vector<long> x, const std::vector<long>& y, std::vector<long>& q) {
        q.clear();
        long lcinv = fp_inv(y.back(), p);
        while (x.size() >= y.size() && !x.empty()) {
            size_t shift = x.size() - y.size();
            long c = norm_mod(x.back() * lcinv, p);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (size_t i = 0; i < y.size(); ++i)
                x[i + shift] = norm_mod(x[i + shift] - c * y[i], p);
            trim_long(x);
        }
        trim_long(q);
        return x;
    };
    auto mul = [&](const std::vector<long>& x, const std::vector<long>& y) {
        if (x.empty() || y.empty()) return std::vector<long>{};
        std::vector<long> r(x.size() + y.size() - 1, 0);
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j)
                r[i + j] = norm_mod(r[i + j] + x[i] * y[j], p);
        trim_long(r);
        return r;
    };
    auto sub = [&](std::vector<long> x, const std::vector<long>& y) {
        if (x.size() < y.size()) x.resize(y.size(), 0);
        for (size_t i = 0; i < y.size(); ++i) x[i] = norm_mod(x[i] - y[i], p);
        trim_long(x);
        return x;
    };
    std::vector<long> r0 = wmod, r1 = a;
    std::vector<long> s0 = {}, s1 = {1};
    while (!r1.empty()) {
        std::vector<long> q;
        std::vector<long> rem = divmod(r0, r1, q);
        r0 = r1;
        r1 = rem;
        std::vector<long> s2 = sub(s0, mul(q, s1));
        s0 = s1;
        s1 = s2;
    }
    check(r0.size() == 1, errc::internal_error, "non-trivial gcd against defining polynomial");
    long c = fp_inv(r0[0], p);
    for (long& x : s0) x = norm_mod(x * c, p);
    trim_long(s0);
    return sc_mul(s0, sc_one());  // reduce mod wmod in case s0 grew
}

FqElt ResidueField::sc_pow(FqElt a, unsigned long e) const {
    FqElt r = sc_one();
    while (e) {
        if (e & 1) r = sc_mul(r, a);
        a = sc_mul(a, a);
        e >>= 1;
    }
    return r;
}

FqElt ResidueField::sc_pth_root(const FqElt& a) const {
    if (wmod.empty()) return a;  // F_p is fixed by Frobenius
    unsigned long q = sc_count();
    return sc_pow(a, q / static_cast<unsigned long>(p));  // a^(p^(n-1))
}

unsigned long ResidueField::sc_count() const {
    unsigned long q = 1;
    for (int i = 0; i < wdeg(); ++i) {
        check(q <= (1ul << 62) / static_cast<unsigned long>(p), errc::undecidable_residue,
              "scalar field too large to enumerate");
        q *= static_cast<unsigned long>(p);
    }
    return q;
}

FqElt ResidueField::sc_from_index(unsigned long i) const {
    FqElt r;
    while (i) {
        r.push_back(static_cast<long>(i % static_cast<unsigned long>(p)));
        i /= static_cast<unsigned long>(p);
    }
    return r;
}

std::string ResidueField::sc_to_string(const FqElt& a) const {
    if (a.empty()) return "0";
    if (a.size() == 1) return std::to_string(a[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << a[i];
        } else {
            if (a[i] != 1) os << a[i] << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string ResidueField::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Fp: os << "F" << p; break;
        case Kind::FpU: os << "F" << p << "(u)"; break;
        case Kind::Fq: {
            unsigned long q = sc_count();
            os << "F" << q;
            break;
        }
        case Kind::FqU: {
            unsigned long q = sc_count();
            os << "F" << q << "(u)";
            break;
        }
    }
    return os.str();
}

namespace {
RFPtr make_field(ResidueField::Kind k, long p, std::vector<long> wmod) {
    check(p >= 2, errc::syntax_error, "characteristic must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        check(p % d != 0, errc::syntax_error, "characteristic must be prime");
    auto f = std::make_shared<ResidueField>();
    f->kind = k;
    f->p = p;
    f->wmod = std::move(wmod);
    if (!f->wmod.empty()) {
        for (long& c : f->wmod) c = norm_mod(c, p);
        check(f->wmod.size() >= 3 && f->wmod.back() == 1, errc::syntax_error,
              "scalar defining polynomial must be monic of degree >= 2");
        check(fp_poly_irreducible(p, f->wmod), errc::reducible_residue,
              "scalar defining polynomial is reducible over F_p");
    }
    return f;
}
}  // namespace

RFPtr ResidueField::make_fp(long p) { return make_field(Kind::Fp, p, {}); }
RFPtr ResidueField::make_fq(long p, const std::vector<long>& wmod) {
    return make_field(Kind::Fq, p, wmod);
}
RFPtr ResidueField::make_fpu(long p) { return make_field(Kind::FpU, p, {}); }
RFPtr ResidueField::make_fqu(long p, const std::vector<long>& wmod) {
    return make_field(Kind::FqU, p, wmod);
}

// ---------------------------------------------------------------------------
// u-polynomial layer

namespace {

void up_trim(const ResidueField& f, UPoly& a) {
    while (!a.empty() && f.sc_is_zero(a.back())) a.pop_back();
}

UPoly up_one(const ResidueField& f) { return {f.sc_one()}; }

bool up_is_one(const ResidueField& f, const UPoly& a) {
    return a.size() == 1 && a[0] == f.sc_one();
}

UPoly up_add(const ResidueField& f, const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        FqElt x = i < a.size() ? a[i] : f.sc_zero();
        FqElt y = i < b.size() ? b[i] : f.sc_zero();
        r[i] = f.sc_add(x, y);
    }
    up_trim(f, r);
    return r;
}

UPoly up_neg(const ResidueField& f, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r) x = f.sc_neg(x);
    return r;
}

UPoly up_mul(const ResidueField& f, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, f.sc_zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.sc_add(r[i + j], f.sc_mul(a[i], b[j]));
    up_trim(f, r);
    return r;
}

UPoly up_scale(const ResidueField& f, const UPoly& a, const FqElt& c) {
    UPoly r = a;
    for (auto& x : r) x = f.sc_mul(x, c);
    up_trim(f, r);
    return r;
}

// division with remainder; divisor need not be monic
void up_divmod(const ResidueField& f, UPoly a, const UPoly& b, UPoly& q, UPoly& rem) {
    check(!b.empty(), errc::division_by_zero, "polynomial division by zero");
    FqElt lcinv = f.sc_inv(b.back());
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, f.sc_zero());
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        FqElt c = f.sc_mul(a.back(), lcinv);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = f.sc_sub(a[i + shift], f.sc_mul(c, b[i]));
        up_trim(f, a);
    }
    up_trim(f, q);
    rem = a;
}

UPoly up_gcd(const ResidueField& f, UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly q, r;
        up_divmod(f, a, b, q, r);
        a = b;
        b = r;
    }
    if (!a.empty()) a = up_scale(f, a, f.sc_inv(a.back()));  // monic gcd
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// ResidueElt

ResidueElt::ResidueElt(RFPtr f, UPoly num, UPoly den)
    : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void ResidueElt::normalize() {
    const ResidueField& f = *f_;
    up_trim(f, num_);
    up_trim(f, den_);
    check(!den_.empty(), errc::division_by_zero, "residue element with zero denominator");
    if (num_.empty()) {
        den_ = up_one(f);
        return;
    }
    UPoly g = up_gcd(f, num_, den_);
    if (g.size() > 1) {
        UPoly q, r;
        up_divmod(f, num_, g, q, r);
        num_ = q;
        up_divmod(f, den_, g, q, r);
        den_ = q;
    }
    FqElt c = f.sc_inv(den_.back());
    num_ = up_scale(f, num_, c);
    den_ = up_scale(f, den_, c);
    if (!f.has_u()) {
        check(num_.size() <= 1 && up_is_one(f, den_), errc::field_mismatch,
              "u-content in a residue field without u");
    }
}

ResidueElt ResidueElt::zero(const RFPtr& f) { return ResidueElt(f, {}, up_one(*f)); }
ResidueElt ResidueElt::one(const RFPtr& f) { return ResidueElt(f, up_one(*f), up_one(*f)); }

ResidueElt ResidueElt::from_int(const RFPtr& f, long n) {
    FqElt s = f->sc_from_int(n);
    UPoly num = s.empty() ? UPoly{} : UPoly{s};
    return ResidueElt(f, num, up_one(*f));
}

ResidueElt ResidueElt::from_scalar(const RFPtr& f, const FqElt& s) {
    UPoly num = s.empty() ? UPoly{} : UPoly{s};
    return ResidueElt(f, num, up_one(*f));
}

ResidueElt ResidueElt::gen_u(const RFPtr& f) {
    check(f->has_u(), errc::syntax_error, "u is not a generator of this residue field");
    return ResidueElt(f, UPoly{f->sc_zero(), f->sc_one()}, up_one(*f));
}

ResidueElt ResidueElt::gen_w(const RFPtr& f) {
    check(f->has_w(), errc::syntax_error, "w is not a generator of this residue field");
    return ResidueElt(f, UPoly{FqElt{0, 1}}, up_one(*f));
}

bool ResidueElt::is_one() const {
    return num_.size() == 1 && num_[0] == f_->sc_one() && up_is_one(*f_, den_);
}

bool ResidueElt::is_scalar() const { return num_.size() <= 1 && up_is_one(*f_, den_); }

FqElt ResidueElt::scalar_value() const {
    check(is_scalar(), errc::internal_error, "scalar_value of a non-scalar element");
    return num_.empty() ? f_->sc_zero() : num_[0];
}

ResidueElt ResidueElt::operator+(const ResidueElt& o) const {
    require_same_field(f_, o.f_);
    const ResidueField& f = *f_;
    UPoly n = up_add(f, up_mul(f, num_, o.den_), up_mul(f, o.num_, den_));
    return ResidueElt(f_, n, up_mul(f, den_, o.den_));
}

ResidueElt ResidueElt::operator-() const {
    return ResidueElt(f_, up_neg(*f_, num_), den_);
}

ResidueElt ResidueElt::operator-(const ResidueElt& o) const { return *this + (-o); }

ResidueElt ResidueElt::operator*(const ResidueElt& o) const {
    require_same_field(f_, o.f_);
    const ResidueField& f = *f_;
    return ResidueElt(f_, up_mul(f, num_, o.num_), up_mul(f, den_, o.den_));
}

ResidueElt ResidueElt::inv() const {
    check(!is_zero(), errc::division_by_zero, "inverse of 0 residue element");
    return ResidueElt(f_, den_, num_);
}

ResidueElt ResidueElt::operator/(const ResidueElt& o) const { return *this * o.inv(); }

ResidueElt ResidueElt::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    ResidueElt r = one(f_), b = *this;
    unsigned long ue = static_cast<unsigned long>(e);
    while (ue) {
        if (ue & 1) r = r * b;
        b = b * b;
        ue >>= 1;
    }
    return r;
}

bool ResidueElt::operator==(const ResidueElt& o) const {
    require_same_field(f_, o.f_);
    return num_ == o.num_ && den_ == o.den_;
}

bool ResidueElt::is_pth_power() const {
    long p = f_->p;
    for (size_t i = 0; i < num_.size(); ++i)
        if (!f_->sc_is_zero(num_[i]) && static_cast<long>(i) % p != 0) return false;
    for (size_t i = 0; i < den_.size(); ++i)
        if (!f_->sc_is_zero(den_[i]) && static_cast<long>(i) % p != 0) return false;
    return true;
}

namespace {
std::string up_to_string(const ResidueField& f, const UPoly& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (f.sc_is_zero(a[i])) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = f.sc_to_string(a[i]);
        bool one = cs == "1";
        if (i == 0) {
            os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs);
            continue;
        }
        if (!one) {
            if (cs.find('+') != std::string::npos)
                os << "(" << cs << ")*";
            else
                os << cs << "*";
        }
        os << "u";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}
}  // namespace

std::string ResidueElt::to_string() const {
    std::string n = up_to_string(*f_, num_);
    if (up_is_one(*f_, den_)) return n;
    return "(" + n + ")/(" + up_to_string(*f_, den_) + ")";
}

// ---------------------------------------------------------------------------
// RPoly

RPoly RPoly::from_coeffs(const RFPtr& f, std::vector<ResidueElt> cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    return RPoly{f, std::move(cs)};
}

const ResidueElt& RPoly::lc() const {
    check(!c.empty(), errc::internal_error, "leading coefficient of zero polynomial");
    return c.back();
}

bool RPoly::is_monic() const { return !c.empty() && c.back().is_one(); }

ResidueElt RPoly::eval(const ResidueElt& x) const {
    ResidueElt r = ResidueElt::zero(f);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * x + c[i];
    return r;
}

RPoly RPoly::derivative() const {
    std::vector<ResidueElt> d;
    for (size_t i = 1; i < c.size(); ++i)
        d.push_back(c[i] * ResidueElt::from_int(f, static_cast<long>(i)));
    return from_coeffs(f, std::move(d));
}

RPoly RPoly::mul(const RPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(f);
    std::vector<ResidueElt> r(c.size() + o.c.size() - 1, ResidueElt::zero(f));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j)
            r[i + j] = r[i + j] + c[i] * o.c[j];
    return from_coeffs(f, std::move(r));
}

RPoly RPoly::add(const RPoly& o) const {
    std::vector<ResidueElt> r;
    size_t n = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) {
        ResidueElt x = i < c.size() ? c[i] : ResidueElt::zero(f);
        ResidueElt y = i < o.c.size() ? o.c[i] : ResidueElt::zero(f);
        r.push_back(x + y);
    }
    return from_coeffs(f, std::move(r));
}

std::string RPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c[i].to_string();
        if (i == 0) {
            os << (cs.find_first_of("+-") != std::string::npos && cs[0] != '(' ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") {
            if (cs.find_first_of("+*") != std::string::npos && cs[0] != '(')
                os << "(" << cs << ")*";
            else
                os << cs << "*";
        }
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// irreducibility and root search

namespace {

// Polynomial arithmetic over the scalar field (vector<FqElt>, ascending),
// used for the Frobenius-based irreducibility test.
using SPoly = std::vector<FqElt>;

void sp_trim(const ResidueField& f, SPoly& a) {
    while (!a.empty() && f.sc_is_zero(a.back())) a.pop_back();
}

SPoly sp_mulmod(const ResidueField& f, const SPoly& a, const SPoly& b, const SPoly& mod) {
    if (a.empty() || b.empty()) return {};
    SPoly r(a.size() + b.size() - 1, f.sc_zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.sc_add(r[i + j], f.sc_mul(a[i], b[j]));
    // reduce mod `mod` (monic)
    size_t n = mod.size() - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(n); --i) {
        FqElt c = r[i];
        if (f.sc_is_zero(c)) continue;
        r[i] = f.sc_zero();
        for (size_t j = 0; j < n; ++j)
            r[i - n + j] = f.sc_sub(r[i - n + j], f.sc_mul(c, mod[j]));
    }
    r.resize(n);
    sp_trim(f, r);
    return r;
}

SPoly sp_powmod(const ResidueField& f, SPoly base, unsigned long e, const SPoly& mod) {
    SPoly r = {f.sc_one()};
    while (e) {
        if (e & 1) r = sp_mulmod(f, r, base, mod);
        base = sp_mulmod(f, base, base, mod);
        e >>= 1;
    }
    return r;
}

SPoly sp_gcd(const ResidueField& f, SPoly a, SPoly b) {
    auto divstep = [&](SPoly& x, const SPoly& y) {
        FqElt lcinv = f.sc_inv(y.back());
        while (x.size() >= y.size() && !x.empty()) {
            size_t shift = x.size() - y.size();
            FqElt c = f.sc_mul(x.back(), lcinv);
            for (size_t i = 0; i < y.size(); ++i)
                x[i + shift] = f.sc_sub(x[i + shift], f.sc_mul(c, y[i]));
            sp_trim(f, x);
        }
    };
    while (!b.empty()) {
        divstep(a, b);
        std::swap(a, b);
    }
    return a;
}

// Irreducibility of a monic polynomial over the scalar field F_q by the
// Frobenius fixed-point criterion: X^(q^d) = X mod f, and X^(q^(d/r)) - X
// coprime to f for every prime r | d.
bool sp_irreducible(const ResidueField& f, const SPoly& poly) {
    int d = static_cast<int>(poly.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    unsigned long q = f.sc_count();
    auto qpow = [&](int k) {
        unsigned long e = 1;
        for (int i = 0; i < k; ++i) {
            check(e <= (1ul << 62) / q, errc::undecidable_residue,
                  "field too large for the irreducibility test");
            e *= q;
        }
        return e;
    };
    SPoly x = {f.sc_zero(), f.sc_one()};
    // X^(q^d) == X ?
    SPoly xq = sp_powmod(f, x, qpow(d), poly);
    SPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, f.sc_zero());
    diff[1] = f.sc_sub(diff[1], f.sc_one());
    sp_trim(f, diff);
    if (!diff.empty()) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool prime = true;
        for (int t = 2; t * t <= r; ++t)
            if (r % t == 0) prime = false;
        if (!prime) continue;
        SPoly xe = sp_powmod(f, x, qpow(d / r), poly);
        SPoly g = xe;
        if (g.size() < 2) g.resize(2, f.sc_zero());
        g[1] = f.sc_sub(g[1], f.sc_one());
        sp_trim(f, g);
        SPoly gc = sp_gcd(f, poly, g);
        if (gc.size() != 1) return false;
    }
    return true;
}

// Lower an RPoly over a finite kind to an SPoly; requires scalar coefficients.
SPoly rpoly_to_spoly(const RPoly& q) {
    SPoly r;
    for (const auto& c : q.c) r.push_back(c.scalar_value());
    return r;
}

constexpr unsigned long kEnumCap = 1u << 16;
constexpr unsigned long kPairCap = 4000000;

}  // namespace

bool fp_poly_irreducible(long p, const std::vector<long>& poly) {
    // run the scalar-field test with a plain F_p context
    ResidueField f;
    f.kind = ResidueField::Kind::Fp;
    f.p = p;
    SPoly sp;
    for (long c : poly) {
        long r = norm_mod(c, p);
        sp.push_back(r == 0 ? FqElt{} : FqElt{r});
    }
    sp_trim(f, sp);
    check(!sp.empty() && sp.back() == FqElt{1}, errc::internal_error,
          "irreducibility test expects a monic polynomial");
    return sp_irreducible(f, sp);
}

RootSearch rpoly_roots(const RPoly& q) {
    const RFPtr& f = q.f;
    RootSearch out{{}, true};
    if (q.degree() <= 0) return out;
    if (f->is_finite()) {
        unsigned long n = f->sc_count();
        check(n <= kEnumCap, errc::undecidable_residue,
              "residue field too large for exhaustive root search");
        for (unsigned long i = 0; i < n; ++i) {
            ResidueElt x = ResidueElt::from_scalar(f, f->sc_from_index(i));
            if (q.eval(x).is_zero()) out.roots.push_back(x);
        }
        return out;
    }
    // Rational function field. After clearing the common denominator D, any
    // root r has D*r integral over the polynomial ring, which bounds the
    // numerator degree of r by (max numerator degree) + d*deg(D) and the
    // denominator degree by deg(D). Every root therefore lies in the box
    // enumerated below, so the search is complete whenever it fits the cap.
    unsigned long qs = f->sc_count();
    const int d = q.degree();
    int nmax = 0, degd = 0;
    for (const ResidueElt& c : q.c) {
        if (c.is_zero()) continue;
        nmax = std::max(nmax, static_cast<int>(c.num().size()) - 1);
        degd += static_cast<int>(c.den().size()) - 1;
    }
    const int numbound = nmax + d * degd;
    const int denbound = degd;
    unsigned long nnum = 1, nden = 1;
    for (int i = 0; i <= numbound && nnum <= kPairCap; ++i) nnum *= qs;
    for (int i = 0; i < denbound && nden <= kPairCap; ++i) nden *= qs;
    check(nnum <= kPairCap && nden <= kPairCap && nnum * nden <= kPairCap,
          errc::undecidable_residue, "root search space exceeds the desk-scale cap");
    for (int ddeg = 0; ddeg <= denbound; ++ddeg) {
        unsigned long dencount = 1;
        for (int i = 0; i < ddeg; ++i) dencount *= qs;
        for (unsigned long di = 0; di < dencount; ++di) {
            UPoly den(ddeg + 1, f->sc_zero());
            unsigned long rest = di;
            for (int i = 0; i < ddeg; ++i) {
                den[i] = f->sc_from_index(rest % qs);
                rest /= qs;
            }
            den[ddeg] = f->sc_one();
            for (unsigned long ni = 0; ni < nnum; ++ni) {
                UPoly num;
                unsigned long nr = ni;
                while (nr) {
                    num.push_back(f->sc_from_index(nr % qs));
                    nr /= qs;
                }
                if (num.empty() && ddeg > 0) continue;  // 0 handled once at ddeg 0
                ResidueElt x(f, num, den);
                if (q.eval(x).is_zero()) {
                    bool dup = false;
                    for (const auto& r : out.roots)
                        if (r == x) dup = true;
                    if (!dup) out.roots.push_back(x);
                }
            }
        }
    }
    return out;
}

bool rpoly_irreducible(const RPoly& q) {
    check(q.degree() >= 1, errc::internal_error, "irreducibility of a constant");
    if (q.f->is_finite()) {
        // make monic, then run the scalar test
        RPoly m = q;
        ResidueElt li = q.lc().inv();
        for (auto& c : m.c) c = c * li;
        return sp_irreducible(*q.f, rpoly_to_spoly(m));
    }
    if (q.degree() <= 1) return true;
    if (q.degree() <= 3) {
        RootSearch rs = rpoly_roots(q);
        return rs.roots.empty();
    }
    fail(errc::undecidable_residue,
         "irreducibility over a rational function field is only decided up to degree 3");
}

}  // namespace cdvf
