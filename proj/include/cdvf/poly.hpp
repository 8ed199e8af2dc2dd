#pragma once
// Polynomials over a Laurent series field, their Newton polygons, and
// arithmetic in the monogenic quotient ring K[z]/(P).

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cdvf/tseries.hpp"
#include "cdvf/valrat.hpp"

namespace cdvf {

// Univariate polynomial with truncated-series coefficients, stored in
// ascending order of the exponent. Leading coefficients that are exactly
// zero get trimmed; an unknown-zero leading coefficient is kept, so
// degree() reports the apparent degree of the stored representative.
class KPoly {
public:
    KPoly() = default;

    static KPoly zero(const RFPtr& f);
    static KPoly from_coeffs(const RFPtr& f, std::vector<TSeries> asc);
    static KPoly x_power(const RFPtr& f, long j);

    const RFPtr& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const TSeries& leading() const;
    TSeries coeff(long j) const;  // coefficient of X^j, zero beyond the degree
    const std::vector<TSeries>& coeffs() const { return c_; }
    bool is_monic() const;
    bool is_exact() const;

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator-() const;
    KPoly operator*(const KPoly& o) const;
    KPoly scaled(const TSeries& s) const;
    KPoly derivative() const;
    TSeries eval(const TSeries& x) const;

    // Synthetic division by (X - root). The remainder must not be known
    // nonzero, so the caller is responsible for passing a genuine root.
    KPoly deflated_at(const TSeries& root) const;

    // Applies fn to every coefficient, producing a polynomial over the
    // target coefficient field. Used for coefficient substitutions and
    // for moving a polynomial along an isomorphism of base fields.
    KPoly map(const RFPtr& target, const std::function<TSeries(const TSeries&)>& fn) const;

    bool same_exact(const KPoly& o) const;
    std::string to_string(const std::string& var = "X") const;

private:
    RFPtr f_;
    std::vector<TSeries> c_;
    void normalize();
};

// Resultant of f and g with respect to their common variable, computed as
// the determinant of the Sylvester matrix. Exact inputs stay exact through
// fraction-free elimination; otherwise ordinary elimination runs on the
// truncated entries and the result carries the surviving precision.
TSeries resultant(const KPoly& f, const KPoly& g);

// Lower boundary of the set of points (i, v(a_i)) where a_0 is the leading
// coefficient. Slopes read off the valuations of the roots, listed in
// ascending order. Trailing zero coefficients contribute a final slope of
// infinity whose width counts the roots equal to zero.
struct NewtonPolygon {
    long d = 0;                                     // index of the last point
    std::vector<ValRat> vals;                       // vals[i] = v(a_i)
    std::vector<std::pair<long, ValRat>> vertices;  // hull of the finite points
    long last_finite = 0;                           // largest i with finite vals[i]

    bool has_inf_tail() const { return last_finite < d; }
    std::vector<std::pair<ValRat, long>> slopes() const;  // (slope, width) pairs
    std::vector<long> breakpoints() const;  // interior indices where the slope changes
    ValRat value_at(long i) const;          // height of the boundary at index i
    bool is_affine_between(long a, long b) const;
    ValRat slope_between(long a, long b) const;  // requires is_affine_between(a, b)
    std::string to_string() const;
};

NewtonPolygon np_from_vals(std::vector<ValRat> vals);
NewtonPolygon np_of_poly(const KPoly& P);  // point i reads the coefficient of X^(d-i)

// True when every slope change of the polygon happens at an index listed in
// type. The list must start at 0, end at the degree, and increase strictly.
bool np_type_matches(const NewtonPolygon& np, const std::vector<long>& type);

// Residue class arithmetic in K[z]/(P) for a monic P. Representatives keep
// z-degree below deg P; reduction never divides because P is monic.
class OLElt {
public:
    OLElt() = default;

    static OLElt zero(const std::shared_ptr<const KPoly>& host);
    static OLElt one(const std::shared_ptr<const KPoly>& host);
    static OLElt gen(const std::shared_ptr<const KPoly>& host);
    static OLElt from_series(const std::shared_ptr<const KPoly>& host, const TSeries& s);
    static OLElt from_coeffs(const std::shared_ptr<const KPoly>& host, std::vector<TSeries> asc);

    const std::shared_ptr<const KPoly>& host() const { return P_; }
    const std::vector<TSeries>& coeffs() const { return c_; }
    bool is_exact_zero() const;

    OLElt operator+(const OLElt& o) const;
    OLElt operator-(const OLElt& o) const;
    OLElt operator-() const;
    OLElt operator*(const OLElt& o) const;
    OLElt scaled(const TSeries& s) const;
    OLElt pow(long e) const;

    KPoly as_poly() const;

    // Valuation normalized against the base field, so the generator of an
    // Eisenstein quotient has val 1/deg. Computed from the resultant of the
    // host with the representative.
    ValRat val() const;

    std::string to_string(const std::string& var = "z") const;

private:
    std::shared_ptr<const KPoly> P_;
    std::vector<TSeries> c_;
    void reduce();
};

// Coefficients of P(X + z) in ascending powers of X, computed in K[z]/(P).
// The constant coefficient is P(z), which vanishes in the quotient; it is
// pinned to the exact zero element so valuation queries see a true root.
std::vector<OLElt> shifted_by_root(const std::shared_ptr<const KPoly>& host);

// Polygon of a polynomial with quotient-ring coefficients, ascending order.
NewtonPolygon np_of_shifted(const std::vector<OLElt>& asc);

}  // namespace cdvf
