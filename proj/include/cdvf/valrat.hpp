#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cdvf/errors.hpp"

namespace cdvf {

using bigint = boost::multiprecision::cpp_int;

// Exact rational valuation value, extended by +infinity (the valuation of 0).
// Always stored reduced with a positive denominator.
class ValRat {
  public:
    ValRat() : inf_(false), num_(0), den_(1) {}
    ValRat(long n) : inf_(false), num_(n), den_(1) {}
    ValRat(const bigint& n, const bigint& d);

    static ValRat infinity() {
        ValRat v;
        v.inf_ = true;
        return v;
    }

    bool is_inf() const { return inf_; }
    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }
    bool is_integer() const { return !inf_ && den_ == 1; }
    bool is_zero() const { return !inf_ && num_ == 0; }

    ValRat operator+(const ValRat& o) const;
    ValRat operator-(const ValRat& o) const;  // finite operands only
    ValRat operator-() const;                 // finite only
    ValRat operator*(const ValRat& o) const;
    ValRat operator/(const ValRat& o) const;  // finite / finite nonzero

    bool operator==(const ValRat& o) const;
    bool operator!=(const ValRat& o) const { return !(*this == o); }
    bool operator<(const ValRat& o) const;
    bool operator<=(const ValRat& o) const { return *this < o || *this == o; }
    bool operator>(const ValRat& o) const { return o < *this; }
    bool operator>=(const ValRat& o) const { return o <= *this; }

    // Largest integer <= value / smallest integer >= value (finite only).
    bigint floor() const;
    bigint ceil() const;

    // Canonical "num/den" form, or "inf". Denominator always printed, so
    // integers render as "2/1"; this is the JSON serialization.
    std::string to_fraction_string() const;
    // Human form: "2", "3/2", "inf".
    std::string to_string() const;

  private:
    bool inf_;
    bigint num_, den_;
    void reduce();
};

inline ValRat vr_min(const ValRat& a, const ValRat& b) { return a < b ? a : b; }
inline ValRat vr_max(const ValRat& a, const ValRat& b) { return a < b ? b : a; }

}  // namespace cdvf
