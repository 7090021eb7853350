#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novik/filtered_complex.hpp"

namespace novik {

/// Breakpoint of a piecewise-linear function.
struct PLPoint {
    Exponent x;
    Exponent y;
};

/// Value of the piecewise-linear interpolant at x (x inside the breakpoint range).
Exponent pl_value(const std::vector<PLPoint>& points, const Exponent& x);

// Torus-stabilized deformation ----------------------------------------------------

/// Base orbits stabilized by the torus R/Z x R/2aZ with
/// G = (1 - t + t rho(y)) H + k cos(pi y / a).
struct TorusDeformation {
    std::vector<CappedGenerator> orbits;
    Exponent a;
    std::vector<PLPoint> rho;  // on [0, 2a]
    Exponent h_sup;            // bound on |H|
    Exponent k;
    long m_min = 0;            // capping classes used for orbits with a positive period
    long m_max = 0;
};

/// Throws PreconditionError naming the broken invariant.
void validate(const TorusDeformation& td);

/// Certified k* such that for every k > k* the equation
/// t rho'(y) H - (pi/a) k sin(pi y / a) = 0 only holds at y in {0, a}.
/// Uses |sin(pi y/a)| >= (2/a) dist(y, {0, a, 2a}) and 1/pi < 106/333.
Exponent k_threshold(const TorusDeformation& td);

/// Actions at y = 0 (cos = 1) and y = a (cos = -1), sorted.  Throws when
/// k <= k_threshold, quoting k*.
std::vector<Exponent> deformed_spectrum(const TorusDeformation& td, const Exponent& t_def);

// Contact-type bump profiles ---------------------------------------------------------

/// Piecewise-linear bump f(r) supported in [r_minus, r_plus].  periods lists
/// every Reeb period up to cutoff; every slope must satisfy |slope| <= cutoff.
struct ContactProfile {
    std::vector<PLPoint> breakpoints;  // (r, f), first at (r_minus, 0), last at (r_plus, 0)
    Exponent A;
    Exponent delta;
    Exponent r_minus;
    Exponent r_plus;
    std::vector<Exponent> periods;
    Exponent cutoff;
};

/// Throws PreconditionError naming the broken invariant.
void validate(const ContactProfile& p);

struct SpectrumElement {
    Exponent lo;
    Exponent hi;               // equal to lo for points
    std::string source;        // "piece i", "kink i" or "outside"
    std::optional<Exponent> period;  // signed slope +-T producing the orbits; nullopt for constant orbits
    [[nodiscard]] bool is_point() const { return lo == hi; }
    [[nodiscard]] bool constant_orbit() const { return !period.has_value(); }
};

/// Actions f(r) - r f'(r) of 1-periodic orbits.  Pieces of period slope give
/// intervals, flat pieces and the outside give constant-orbit points, and a
/// kink contributes f(r_i) - r_i T for every T in +-P strictly between its
/// two slopes (the orbits a smoothing of the corner would create).
std::vector<SpectrumElement> contact_spectrum(const ContactProfile& p);

/// min(A, r_minus T_min, A - delta + r_minus T_min).
Exponent three_way_bound(const ContactProfile& p);

struct GapVerdict {
    bool pass = false;
    /// Infimum of the positive part of the spectrum (nullopt when empty).
    std::optional<Exponent> gap;
    std::optional<SpectrumElement> witness;
};

GapVerdict spectrum_gap(const ContactProfile& p);

struct ProfileDesign {
    std::optional<ContactProfile> profile;
    std::string infeasibility;
};

/// Steep ramps with a non-period slope, optionally with short period-slope
/// pieces in the bottom and top delta-bands.  Infeasible when
/// A > delta + r_plus T_min: the descending side must cross slope -T_min
/// where f <= delta, producing an action below A.
ProfileDesign design_bump_profile(const Exponent& A, const Exponent& delta, const Exponent& r_minus,
                                  const Exponent& r_plus, const std::vector<Exponent>& periods,
                                  const Exponent& cutoff, bool period_pieces);

// Toric fibers ---------------------------------------------------------------------

/// min of the coordinates of a.
Exponent fiber_hbar_lower(const std::vector<Exponent>& a);

/// max over points of the minimal coordinate.
Exponent toric_bound(const std::vector<std::vector<Exponent>>& points);

}  // namespace novik
