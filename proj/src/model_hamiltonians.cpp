#include "novik/model_hamiltonians.hpp"

#include <algorithm>

namespace novik {

Exponent pl_value(const std::vector<PLPoint>& points, const Exponent& x) {
    if (points.empty()) throw PreconditionError("empty piecewise-linear function");
    if (x < points.front().x || x > points.back().x) throw PreconditionError("point " + x.str() + " outside the domain");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const auto& p = points[i];
        const auto& q = points[i + 1];
        if (x >= p.x && x <= q.x) return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
    }
    return points.back().y;
}

namespace {

Exponent slope(const PLPoint& p, const PLPoint& q) { return (q.y - p.y) / (q.x - p.x); }

void require_increasing(const std::vector<PLPoint>& points, const std::string& what) {
    if (points.size() < 2) throw PreconditionError(what + " needs at least two breakpoints");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i].x < points[i + 1].x)) throw PreconditionError(what + " breakpoints must increase strictly");
    }
}

}  // namespace

// Torus deformation -------------------------------------------------------------------

void validate(const TorusDeformation& td) {
    if (td.a.sign() <= 0) throw PreconditionError("torus half-period a must be positive");
    if (td.h_sup.sign() < 0) throw PreconditionError("h_sup must be nonnegative");
    if (td.m_min > td.m_max) throw PreconditionError("empty capping range");
    require_increasing(td.rho, "rho");
    const Exponent two_a = Exponent(2) * td.a;
    if (td.rho.front().x != Exponent(0) || td.rho.back().x != two_a) {
        throw PreconditionError("rho must be given on [0, 2a]");
    }
    if (td.rho.front().y != td.rho.back().y) throw PreconditionError("rho is not periodic: rho(0) != rho(2a)");
    // rho = 1 on a neighborhood of 0, a and 2a: the pieces touching those points are flat at 1.
    for (const Exponent& c : {Exponent(0), td.a, two_a}) {
        for (std::size_t i = 0; i + 1 < td.rho.size(); ++i) {
            const auto& p = td.rho[i];
            const auto& q = td.rho[i + 1];
            if (c < p.x || c > q.x) continue;
            if (p.y != Exponent(1) || q.y != Exponent(1)) {
                throw PreconditionError("rho must equal 1 on a neighborhood of y = " + c.str() + " (piece [" +
                                        p.x.str() + ", " + q.x.str() + "])");
            }
        }
    }
}

Exponent k_threshold(const TorusDeformation& td) {
    validate(td);
    const Exponent two_a = Exponent(2) * td.a;
    auto dist = [&](const Exponent& y) { return min(min(abs(y), abs(y - td.a)), abs(y - two_a)); };
    Exponent k_star(0);
    for (std::size_t i = 0; i + 1 < td.rho.size(); ++i) {
        const auto& p = td.rho[i];
        const auto& q = td.rho[i + 1];
        const Exponent s = slope(p, q);
        if (s.is_zero()) continue;
        // dist is concave on [0, a] and on [a, 2a]; a piece not containing 0, a, 2a
        // lies in one of them, so the minimum sits at an endpoint.
        const Exponent m = min(dist(p.x), dist(q.x));
        if (m.is_zero() || (p.x < td.a && td.a < q.x)) {
            throw PreconditionError("sloped piece [" + p.x.str() + ", " + q.x.str() + "] of rho touches {0, a, 2a}");
        }
        const Exponent bound = abs(s) * td.h_sup * td.a * td.a * Exponent(106) / (Exponent(2 * 333) * m);
        k_star = max(k_star, bound);
    }
    return k_star;
}

std::vector<Exponent> deformed_spectrum(const TorusDeformation& td, const Exponent& t_def) {
    if (t_def.sign() < 0 || t_def > Exponent(1)) throw PreconditionError("t_def must lie in [0, 1]");
    const Exponent k_star = k_threshold(td);
    if (!(td.k > k_star)) {
        throw PreconditionError("k = " + td.k.str() + " is not above the certified threshold k* = " + k_star.str());
    }
    const Exponent rho0 = pl_value(td.rho, Exponent(0));
    const Exponent rhoa = pl_value(td.rho, td.a);
    std::vector<Exponent> out;
    for (const auto& g : td.orbits) {
        const long lo = g.period.is_zero() ? 0 : td.m_min;
        const long hi = g.period.is_zero() ? 0 : td.m_max;
        for (long m = lo; m <= hi; ++m) {
            const Exponent area = g.area(m);
            out.push_back((Exponent(1) - t_def + t_def * rho0) * g.h_integral - area + td.k);
            out.push_back((Exponent(1) - t_def + t_def * rhoa) * g.h_integral - area - td.k);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Contact profiles ----------------------------------------------------------------------

namespace {

// Signed periods -P u P, ascending.
std::vector<Exponent> signed_periods(const ContactProfile& p) {
    std::vector<Exponent> out;
    for (auto it = p.periods.rbegin(); it != p.periods.rend(); ++it) out.push_back(-*it);
    for (const auto& t : p.periods) out.push_back(t);
    return out;
}

bool is_period_slope(const ContactProfile& p, const Exponent& s) {
    return std::binary_search(p.periods.begin(), p.periods.end(), abs(s)) && !s.is_zero();
}

// Slopes of the pieces including the flat outside on both ends.
std::vector<Exponent> extended_slopes(const ContactProfile& p) {
    std::vector<Exponent> out{Exponent(0)};
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) out.push_back(slope(p.breakpoints[i], p.breakpoints[i + 1]));
    out.emplace_back(0);
    return out;
}

}  // namespace

void validate(const ContactProfile& p) {
    if (p.A.sign() <= 0) throw PreconditionError("A must be positive");
    if (p.delta.sign() <= 0) throw PreconditionError("delta must be positive");
    if (!(p.r_minus.sign() > 0 && p.r_minus < Exponent(1) && Exponent(1) < p.r_plus)) {
        throw PreconditionError("support radii must satisfy 0 < r_minus < 1 < r_plus");
    }
    if (p.periods.empty()) throw PreconditionError("at least one period is needed");
    for (std::size_t i = 0; i < p.periods.size(); ++i) {
        if (p.periods[i].sign() <= 0) throw PreconditionError("periods must be positive");
        if (i > 0 && !(p.periods[i - 1] < p.periods[i])) throw PreconditionError("periods must increase strictly");
    }
    if (p.cutoff < p.periods.back()) throw PreconditionError("period cutoff is below the largest listed period");
    require_increasing(p.breakpoints, "profile");
    const auto& bp = p.breakpoints;
    if (bp.front().x != p.r_minus || !bp.front().y.is_zero() || bp.back().x != p.r_plus || !bp.back().y.is_zero()) {
        throw PreconditionError("profile must start at (r_minus, 0) and end at (r_plus, 0)");
    }
    Exponent top(0);
    for (const auto& q : bp) {
        if (q.y.sign() < 0) throw PreconditionError("profile is negative at r = " + q.x.str());
        top = max(top, q.y);
    }
    if (top != p.A) throw PreconditionError("max of the profile is " + top.str() + ", not A = " + p.A.str());
    const Exponent low = p.delta;
    const Exponent high = p.A - p.delta;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const Exponent s = slope(bp[i], bp[i + 1]);
        if (abs(s) > p.cutoff) {
            throw PreconditionError("piece " + std::to_string(i) + " has slope " + s.str() + " beyond the period cutoff " +
                                    p.cutoff.str());
        }
        if (!is_period_slope(p, s)) continue;
        const Exponent fmin = min(bp[i].y, bp[i + 1].y);
        const Exponent fmax = max(bp[i].y, bp[i + 1].y);
        if (!(fmax <= low || fmin >= high)) {
            throw PreconditionError("slope condition fails on piece " + std::to_string(i) + ": slope " + s.str() +
                                    " is a period but f ranges over [" + fmin.str() + ", " + fmax.str() + "]");
        }
    }
    const auto slopes = extended_slopes(p);
    const auto sp = signed_periods(p);
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const Exponent s0 = min(slopes[i], slopes[i + 1]);
        const Exponent s1 = max(slopes[i], slopes[i + 1]);
        const bool crosses = std::any_of(sp.begin(), sp.end(), [&](const Exponent& t) { return s0 < t && t < s1; });
        if (crosses && !(bp[i].y <= low || bp[i].y >= high)) {
            throw PreconditionError("slope condition fails at kink " + std::to_string(i) + " (r = " + bp[i].x.str() +
                                    ", f = " + bp[i].y.str() + ")");
        }
    }
}

std::vector<SpectrumElement> contact_spectrum(const ContactProfile& p) {
    validate(p);
    std::vector<SpectrumElement> out;
    out.push_back({Exponent(0), Exponent(0), "outside", std::nullopt});
    const auto& bp = p.breakpoints;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const Exponent s = slope(bp[i], bp[i + 1]);
        const std::string src = "piece " + std::to_string(i);
        if (s.is_zero()) {
            out.push_back({bp[i].y, bp[i].y, src, std::nullopt});
        } else if (is_period_slope(p, s)) {
            const Exponent a0 = bp[i].y - bp[i].x * s;
            const Exponent a1 = bp[i + 1].y - bp[i + 1].x * s;
            out.push_back({min(a0, a1), max(a0, a1), src, s});
        }
    }
    const auto slopes = extended_slopes(p);
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const Exponent s0 = min(slopes[i], slopes[i + 1]);
        const Exponent s1 = max(slopes[i], slopes[i + 1]);
        for (const auto& t : signed_periods(p)) {
            if (!(s0 < t && t < s1)) continue;
            const Exponent a = bp[i].y - bp[i].x * t;
            out.push_back({a, a, "kink " + std::to_string(i), t});
        }
    }
    return out;
}

Exponent three_way_bound(const ContactProfile& p) {
    const Exponent r_t = p.r_minus * p.periods.front();
    return min(min(p.A, r_t), p.A - p.delta + r_t);
}

GapVerdict spectrum_gap(const ContactProfile& p) {
    const auto spectrum = contact_spectrum(p);
    GapVerdict v;
    for (const auto& e : spectrum) {
        if (!(e.hi.sign() > 0)) continue;
        // Positive part of [lo, hi]; its infimum is 0 when the interval straddles 0.
        const Exponent inf = e.lo.sign() > 0 ? e.lo : Exponent(0);
        if (!v.gap || inf < *v.gap) {
            v.gap = inf;
            v.witness = e;
        }
    }
    v.pass = !v.gap || *v.gap >= p.A;
    if (v.pass) v.witness.reset();
    return v;
}

ProfileDesign design_bump_profile(const Exponent& A, const Exponent& delta, const Exponent& r_minus,
                                  const Exponent& r_plus, const std::vector<Exponent>& periods,
                                  const Exponent& cutoff, bool period_pieces) {
    ProfileDesign out;
    if (periods.empty()) {
        out.infeasibility = "no periods given";
        return out;
    }
    const Exponent t_min = periods.front();
    if (A > delta + r_plus * t_min) {
        out.infeasibility = "slope condition cannot be met: A = " + A.str() + " exceeds delta + r_plus T_min = " +
                            (delta + r_plus * t_min).str() +
                            ", and the descending side must cross slope -T_min where f <= delta";
        return out;
    }
    // Steepest admissible slope that is not a period.
    Exponent s = cutoff;
    if (std::binary_search(periods.begin(), periods.end(), s)) {
        const Exponent prev = periods.size() > 1 ? periods[periods.size() - 2] : Exponent(0);
        s = (prev + periods.back()) / Exponent(2);
    }
    if (!(s > t_min)) {
        out.infeasibility = "cutoff leaves no non-period slope above T_min";
        return out;
    }
    const Exponent half = delta / Exponent(2);
    std::vector<PLPoint> pts;
    Exponent r = r_minus;
    pts.push_back({r, Exponent(0)});
    Exponent steep_rise = A;
    if (period_pieces) {
        r += half / t_min;
        pts.push_back({r, half});
        steep_rise = A - delta;
    }
    r += steep_rise / s;
    pts.push_back({r, period_pieces ? A - half : A});
    if (period_pieces) {
        r += half / t_min;
        pts.push_back({r, A});
    }
    const Exponent top_end = r;
    // Mirror image for the descent, ending at r_plus.
    std::vector<PLPoint> down;
    Exponent rr = r_plus;
    down.push_back({rr, Exponent(0)});
    if (period_pieces) {
        rr -= half / t_min;
        down.push_back({rr, half});
    }
    rr -= steep_rise / s;
    down.push_back({rr, period_pieces ? A - half : A});
    if (period_pieces) {
        rr -= half / t_min;
        down.push_back({rr, A});
    }
    if (!(top_end < rr)) {
        out.infeasibility = "support [" + r_minus.str() + ", " + r_plus.str() + "] is too narrow for slopes <= " +
                            cutoff.str();
        return out;
    }
    for (auto it = down.rbegin(); it != down.rend(); ++it) pts.push_back(*it);
    ContactProfile prof{pts, A, delta, r_minus, r_plus, periods, cutoff};
    try {
        validate(prof);
    } catch (const PreconditionError& err) {
        out.infeasibility = err.what();
        return out;
    }
    out.profile = std::move(prof);
    return out;
}

// Toric ---------------------------------------------------------------------------------

Exponent fiber_hbar_lower(const std::vector<Exponent>& a) {
    if (a.empty()) throw PreconditionError("empty moment vector");
    Exponent m = a.front();
    for (const auto& x : a) {
        if (x.sign() <= 0) throw PreconditionError("moment coordinates must be positive");
        m = min(m, x);
    }
    return m;
}

Exponent toric_bound(const std::vector<std::vector<Exponent>>& points) {
    if (points.empty()) throw PreconditionError("empty point set");
    std::optional<Exponent> best;
    for (const auto& p : points) {
        const Exponent m = fiber_hbar_lower(p);
        best = best ? max(*best, m) : m;
    }
    return *best;
}

}  // namespace novik
