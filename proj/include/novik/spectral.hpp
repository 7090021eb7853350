#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novik/filtered_complex.hpp"

namespace novik {

/// dS = T, both tagged with their levels.  degree is the degree of S.
struct SVDPair {
    Chain S;
    Chain T;
    Exponent ell_S;
    Exponent ell_T;
    int degree = 0;
    [[nodiscard]] Exponent length() const { return ell_S - ell_T; }
};

struct SVDCycle {
    Chain Z;
    Exponent ell;
    int degree = 0;
};

/// Orthogonal basis {Z} u {S} u {T} of the whole complex.
struct SVDBasis {
    std::vector<SVDCycle> cycles;
    std::vector<SVDPair> pairs;
    Exponent window;
    /// Some bar is at least as long as the window, so the digits it depends
    /// on are not certified.  offending indexes into pairs.
    bool window_limited = false;
    std::optional<std::size_t> offending;
};

/// Valuation-greedy fraction-free elimination.  Degrees are processed from
/// the top.  For d: C_k -> C_{k-1} the entry (g, h) has weight
/// l(source_h) - level(g) + val(M_gh); the lightest entry is pivoted (ties:
/// higher source level, then column label, then row label) and every other
/// column is updated by Bareiss' rule, so no inverse is ever formed and all
/// scalars stay finite polynomials.  Requires a valid complex and
/// window > max level - min level.
SVDBasis svd(const FilteredComplex& complex, const Exponent& window);

/// Window used when the caller does not care about certification.
Exponent default_window(const FilteredComplex& complex);

struct Bar {
    Exponent birth;
    std::optional<Exponent> death;  // nullopt for infinite bars
    int degree = 0;                 // degree of the cycle that is born
};

struct Barcode {
    std::vector<Bar> finite;
    std::vector<Bar> infinite;
};

Barcode barcode(const SVDBasis& basis);

/// inf over beta of l(v + d beta); v must be homogeneous.  Works for
/// non-cycles.  -inf when v is a boundary.
ExtendedRational distance_to_boundaries(const FilteredComplex& complex, const Chain& v);

/// Spectral invariant of a cycle: l of its homology component, -inf when exact.
/// Throws PreconditionError for a non-cycle.
ExtendedRational spectral_invariant(const FilteredComplex& complex, const Chain& zeta);

/// Largest finite bar length; 0 without bars.
Exponent boundary_depth(const FilteredComplex& complex);

// Detection bound -------------------------------------------------------------

/// Functional on monomials t^a g of level < threshold: 1 on the listed
/// support, 0 elsewhere.
struct DetectionFunctional {
    Exponent threshold;
    std::vector<std::pair<std::string, Exponent>> support;  // (label, exponent a)
};

/// Number of support monomials present in `chain`, mod 2.
bool evaluate(const DetectionFunctional& e, const Chain& chain);

struct DetectionReport {
    enum class Outcome { bound, not_applicable, detection_failure };
    Outcome outcome = Outcome::not_applicable;
    std::optional<Exponent> bound;
    std::string failed_hypothesis;  // set for not_applicable
    std::string witness;            // set for not_applicable and detection_failure
    std::vector<std::string> hypotheses;  // checked hypotheses, in order
    std::size_t representatives_checked = 0;
    Exponent boundary_depth;
};

std::string to_string(DetectionReport::Outcome o);

/// Replays the algebraic half of the detection argument: under the checked
/// hypotheses every representative zeta + d mu with l < Eplus + margin is
/// detected by e.  The bound is the least level of a support monomial that
/// occurs in some such representative.
DetectionReport detection_bound(const FilteredComplex& complex, const Chain& zeta, const DetectionFunctional& e,
                                const Exponent& Eplus, const Exponent& margin);

// Extension of coefficients ----------------------------------------------------

struct ExtensionCheck {
    ExtendedRational left;    // capped (Z/2) side
    ExtendedRational right;   // Lambda side
    bool left_below_floor = false;
    bool right_below_floor = false;
    Exponent floor;
    std::size_t variables = 0;
    bool agree = false;
    std::string agreement;  // "exact" or "below window"
};

/// Compares inf over capped eta in degree k+1 of l(zeta + d eta) with the
/// Lambda distance of iota(zeta).  zeta must lie in degree k.  Variables are
/// the capped orbits whose level lies in (l(iota zeta) - window,
/// l(iota zeta) + bar bound].
ExtensionCheck extension_distance_check(const CappedComplex& complex, int k, const CappedChain& zeta,
                                        const Exponent& window);

// Stability --------------------------------------------------------------------

struct StabilityVerdict {
    bool pass = true;
    std::optional<std::string> parameter;  // first parameter that differs from the first sample
    std::vector<Exponent> only_in_reference;
    std::vector<Exponent> only_in_sample;
};

StabilityVerdict stability_check(const std::vector<std::pair<std::string, std::vector<Exponent>>>& spectra);

}  // namespace novik
