#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cdvf/errors.hpp"

namespace cdvf {

// Residue fields of the base family: F_p, F_q = F_p[w]/(m), F_p(u), F_q(u).
//
// Every element is stored uniformly as a reduced fraction num/den of
// polynomials in u whose coefficients are polynomials in w mod m(w).
// For kinds without u the denominator is 1 and num has degree 0 in u; for
// kinds without w the scalar polynomials have degree 0. This costs a few
// nested vectors but gives one arithmetic implementation for all four kinds.

struct ResidueField;
using RFPtr = std::shared_ptr<const ResidueField>;

// Scalar: polynomial in w over F_p, ascending coefficients, reduced mod the
// field's defining monic, trailing zeros trimmed (zero = empty vector).
using FqElt = std::vector<long>;
// Polynomial in u over the scalars, ascending, trimmed.
using UPoly = std::vector<FqElt>;

struct ResidueField {
    enum class Kind { Fp, Fq, FpU, FqU };

    Kind kind;
    long p;
    // Monic defining polynomial of w over F_p, ascending coefficients;
    // empty for the prime-scalar kinds Fp and FpU.
    std::vector<long> wmod;

    int wdeg() const { return wmod.empty() ? 1 : static_cast<int>(wmod.size()) - 1; }
    bool has_u() const { return kind == Kind::FpU || kind == Kind::FqU; }
    bool has_w() const { return kind == Kind::Fq || kind == Kind::FqU; }
    bool is_finite() const { return !has_u(); }
    bool same(const ResidueField& o) const;
    std::string to_string() const;

    static RFPtr make_fp(long p);
    static RFPtr make_fq(long p, const std::vector<long>& wmod);
    static RFPtr make_fpu(long p);
    static RFPtr make_fqu(long p, const std::vector<long>& wmod);

    // --- scalar layer (F_p[w]/(m)) ---
    FqElt sc_zero() const { return {}; }
    FqElt sc_one() const { return {1}; }
    FqElt sc_from_int(long n) const;
    bool sc_is_zero(const FqElt& a) const { return a.empty(); }
    FqElt sc_add(const FqElt& a, const FqElt& b) const;
    FqElt sc_neg(const FqElt& a) const;
    FqElt sc_sub(const FqElt& a, const FqElt& b) const;
    FqElt sc_mul(const FqElt& a, const FqElt& b) const;
    FqElt sc_inv(const FqElt& a) const;
    FqElt sc_pow(FqElt a, unsigned long e) const;
    // p-th root via Frobenius; the scalar field is perfect.
    FqElt sc_pth_root(const FqElt& a) const;
    unsigned long sc_count() const;  // q = p^wdeg, primality of the kind aside
    FqElt sc_from_index(unsigned long i) const;
    std::string sc_to_string(const FqElt& a) const;
};

void require_same_field(const RFPtr& a, const RFPtr& b);

class ResidueElt {
  public:
    ResidueElt() = default;
    ResidueElt(RFPtr f, UPoly num, UPoly den);

    static ResidueElt zero(const RFPtr& f);
    static ResidueElt one(const RFPtr& f);
    static ResidueElt from_int(const RFPtr& f, long n);
    static ResidueElt from_scalar(const RFPtr& f, const FqElt& s);
    static ResidueElt gen_u(const RFPtr& f);  // the transcendental u
    static ResidueElt gen_w(const RFPtr& f);  // the algebraic scalar generator w

    const RFPtr& field() const { return f_; }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    // True when the element lies in the scalar subfield (no u anywhere).
    bool is_scalar() const;
    FqElt scalar_value() const;  // requires is_scalar()

    ResidueElt operator+(const ResidueElt& o) const;
    ResidueElt operator-(const ResidueElt& o) const;
    ResidueElt operator-() const;
    ResidueElt operator*(const ResidueElt& o) const;
    ResidueElt operator/(const ResidueElt& o) const;
    ResidueElt inv() const;
    ResidueElt pow(long e) const;
    bool operator==(const ResidueElt& o) const;
    bool operator!=(const ResidueElt& o) const { return !(*this == o); }

    // The element is a p-th power. Exact for all four kinds: scalar fields
    // are perfect, and a reduced fraction of u-polynomials is a p-th power
    // iff every u-exponent with a nonzero coefficient is divisible by p.
    bool is_pth_power() const;

    std::string to_string() const;

  private:
    RFPtr f_;
    UPoly num_, den_;
    void normalize();
};

// Polynomial over a residue field, ascending coefficients.
struct RPoly {
    RFPtr f;
    std::vector<ResidueElt> c;

    static RPoly zero(const RFPtr& f) { return RPoly{f, {}}; }
    static RPoly from_coeffs(const RFPtr& f, std::vector<ResidueElt> cs);

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    const ResidueElt& lc() const;
    bool is_monic() const;
    ResidueElt eval(const ResidueElt& x) const;
    RPoly derivative() const;
    RPoly mul(const RPoly& o) const;
    RPoly add(const RPoly& o) const;
    std::string to_string(const std::string& var) const;
};

// Exhaustive or bounded root search. `complete` reports whether the search
// space provably contained every possible root. Both branches enumerate a
// box that is complete by construction, so the flag only turns false if a
// future strategy gives up early; oversized spaces raise an error instead.
struct RootSearch {
    std::vector<ResidueElt> roots;
    bool complete;
};
RootSearch rpoly_roots(const RPoly& q);

// Decides irreducibility where the desk-scale fragment allows: finite
// residue fields by the standard gcd/Frobenius criterion, rational function
// fields of degree <= 3 by complete root search. Anything else raises
// undecidable_residue.
bool rpoly_irreducible(const RPoly& q);

// Monic irreducibility over F_p of a w-defining polynomial (ascending).
bool fp_poly_irreducible(long p, const std::vector<long>& poly);

}  // namespace cdvf
