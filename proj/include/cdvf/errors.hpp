#pragma once

#include <stdexcept>
#include <string>

namespace cdvf {

// Stable error codes. Every failure mode a caller can provoke has one of
// these; the CLI maps them onto exit codes (see tools/ramcalc.cpp).
enum class errc {
    // input-level problems (bad literals, malformed objects)
    syntax_error,
    field_mismatch,
    division_by_zero,
    not_eisenstein,
    not_unit_monogenic,
    inseparable,
    reducible_residue,
    wrong_degree,
    not_coprime,
    etale_input,
    tame_input,
    fierce_input,
    not_fierce,
    not_ultrametric,
    incomplete_splitting,
    // precision budget exhausted even after retries
    precision_exhausted,
    precision_cap_exceeded,
    // constructions outside the supported desk-scale fragment
    undecidable_residue,
    undecidable_galois,  // reported as NotGaloisPresented
    hint_required,
    unsupported_tower,
    composite_unresolvable,
    splits_after_base_change,
    not_normalizable,
    hensel_fails,
    not_representable,
    // broken internal invariant; always a bug
    law_violation,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::syntax_error: return "SyntaxError";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_eisenstein: return "NotEisenstein";
        case errc::not_unit_monogenic: return "NotUnitMonogenic";
        case errc::inseparable: return "Inseparable";
        case errc::reducible_residue: return "ReducibleResidue";
        case errc::wrong_degree: return "WrongDegree";
        case errc::not_coprime: return "NotCoprime";
        case errc::etale_input: return "EtaleInput";
        case errc::tame_input: return "TameInput";
        case errc::fierce_input: return "FierceInput";
        case errc::not_fierce: return "NotFierce";
        case errc::not_ultrametric: return "NotUltrametric";
        case errc::incomplete_splitting: return "IncompleteSplitting";
        case errc::law_violation: return "LawViolation";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::precision_cap_exceeded: return "PrecisionCapExceeded";
        case errc::undecidable_residue: return "UndecidableResidue";
        case errc::undecidable_galois: return "NotGaloisPresented";
        case errc::hint_required: return "HintRequired";
        case errc::unsupported_tower: return "UnsupportedTower";
        case errc::composite_unresolvable: return "CompositeUnresolvable";
        case errc::splits_after_base_change: return "SplitsAfterBaseChange";
        case errc::not_normalizable: return "NotNormalizable";
        case errc::hensel_fails: return "HenselFails";
        case errc::not_representable: return "NotRepresentable";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

    // Optional machine-readable payload (JSON text), e.g. the factor list
    // attached to splits_after_base_change.
    const std::string& detail() const { return detail_; }
    error& with_detail(std::string d) {
        detail_ = std::move(d);
        return *this;
    }

  private:
    errc code_;
    std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void check(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace cdvf
