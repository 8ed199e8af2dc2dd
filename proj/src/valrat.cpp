#include "cdvf/valrat.hpp"

namespace cdvf {

using boost::multiprecision::gcd;

ValRat::ValRat(const bigint& n, const bigint& d) : inf_(false), num_(n), den_(d) {
    check(den_ != 0, errc::division_by_zero, "rational with zero denominator");
    reduce();
}

void ValRat::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    bigint g = gcd(num_ < 0 ? bigint(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

ValRat ValRat::operator+(const ValRat& o) const {
    if (inf_ || o.inf_) return infinity();
    return ValRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ValRat ValRat::operator-(const ValRat& o) const {
    check(!inf_ && !o.inf_, errc::internal_error, "subtraction with infinite valuation");
    return ValRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ValRat ValRat::operator-() const {
    check(!inf_, errc::internal_error, "negation of infinite valuation");
    return ValRat(-num_, den_);
}

ValRat ValRat::operator*(const ValRat& o) const {
    if (inf_ || o.inf_) {
        // Only positive * inf arises in valuation arithmetic; keep it strict.
        const ValRat& fin = inf_ ? o : *this;
        check(fin.inf_ || fin.num_ > 0, errc::internal_error, "inf * nonpositive");
        return infinity();
    }
    return ValRat(num_ * o.num_, den_ * o.den_);
}

ValRat ValRat::operator/(const ValRat& o) const {
    check(!inf_ && !o.inf_, errc::internal_error, "division with infinite valuation");
    check(o.num_ != 0, errc::division_by_zero, "division by zero rational");
    return ValRat(num_ * o.den_, den_ * o.num_);
}

bool ValRat::operator==(const ValRat& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return num_ == o.num_ && den_ == o.den_;
}

bool ValRat::operator<(const ValRat& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return num_ * o.den_ < o.num_ * den_;
}

bigint ValRat::floor() const {
    check(!inf_, errc::internal_error, "floor of infinite valuation");
    bigint q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
}

bigint ValRat::ceil() const {
    check(!inf_, errc::internal_error, "ceil of infinite valuation");
    bigint q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) q += 1;
    return q;
}

std::string ValRat::to_fraction_string() const {
    if (inf_) return "inf";
    return num_.str() + "/" + den_.str();
}

std::string ValRat::to_string() const {
    if (inf_) return "inf";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace cdvf
