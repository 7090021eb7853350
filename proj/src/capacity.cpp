#include "novik/capacity.hpp"

#include <map>

namespace novik {

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        case BoundKind::exact: return "exact";
    }
    return "unknown";
}

BoundKind parse_bound_kind(const std::string& s) {
    if (s == "lower") return BoundKind::lower;
    if (s == "upper") return BoundKind::upper;
    if (s == "exact") return BoundKind::exact;
    throw ParseError("unknown bound kind '" + s + "'");
}

Conclusion lemma3_bound(const Rational& beta, const Rational& Eplus, const Rational& Eminus, const Rational& hbar) {
    if (beta.sign() < 0) throw PreconditionError("boundary depth must be nonnegative");
    if (hbar.sign() <= 0) throw PreconditionError("hbar must be positive");
    const Rational lhs = beta + Eplus - Eminus;
    const std::string hyp = "beta + Eplus - Eminus = " + lhs.str() + " < hbar = " + hbar.str();
    if (!(lhs < hbar)) return NotApplicable{"strict inequality fails: " + lhs.str() + " >= " + hbar.str(), {hyp}};
    return Certificate{"c", BoundKind::lower, Eminus, {hyp}, "lemma3"};
}

Certificate two_lagrangian_bound(const Rational& h1, const Rational& h2) {
    if (h1.sign() <= 0 || h2.sign() <= 0) throw PreconditionError("hbar values must be positive");
    return {"gamma", BoundKind::lower, Rational(2) * min(h1, h2),
            {"non-interfering pair with hbar " + h1.str() + " and " + h2.str()}, "two-lagrangian"};
}

ObstructionVerdict ball_embedding_obstruction(const Rational& h_product, const BallConstant& ball) {
    if (h_product.sign() <= 0) throw PreconditionError("hbar must be positive");
    ObstructionVerdict v;
    v.h_product = h_product;
    v.threshold = ball.gamma_ball / Rational(2);
    // Two disjoint copies would force gamma(B) >= 2 hbar.
    v.obstructed = !(Rational(2) * h_product < ball.gamma_ball);
    v.verdict = v.obstructed ? "obstructed" : "unobstructed-by-this-test";
    v.certificate = {"hbar(L1 x L2)", BoundKind::upper, v.threshold,
                     {"L1 x L2 embeds in the unit ball", ball.tag + " = " + ball.gamma_ball.str()},
                     "ball-embedding"};
    return v;
}

Rational product_hbar_lower(const Rational& h1, const Rational& h2) {
    if (h1.sign() <= 0 || h2.sign() <= 0) throw PreconditionError("hbar values must be positive");
    return min(h1, h2);
}

Conclusion depth_dominates_hbar(bool c_is_finite, const Rational& hbar) {
    if (hbar.sign() <= 0) throw PreconditionError("hbar must be positive");
    if (!c_is_finite) return NoConclusion{"c is not known to be finite"};
    return Certificate{"beta", BoundKind::lower, hbar, {"c finite", "hbar = " + hbar.str()}, "depth-dominates-hbar"};
}

SpectralNorm spectral_norm(const Rational& c_forward, const Rational& c_backward) {
    SpectralNorm s;
    s.gamma = c_forward + c_backward;
    s.nonnegative = s.gamma.sign() >= 0;
    s.certificate = {"gamma", BoundKind::exact, s.gamma,
                     {"c(H) = " + c_forward.str(), "c(inverse of H) = " + c_backward.str()}, "spectral-norm"};
    return s;
}

Measurement homogenized_measurement(const MeasurementSeries& s) {
    if (s.samples.size() < 2) throw PreconditionError("measurement needs at least two samples");
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        if (s.samples[i].first <= 0) throw PreconditionError("sample indices k must be positive");
        if (i > 0 && s.samples[i - 1].first >= s.samples[i].first) {
            throw PreconditionError("sample indices k must increase strictly");
        }
    }
    Measurement out;
    Rational limit;
    if (s.bound) {
        for (const auto& [k, c] : s.samples) {
            if (abs(c - Rational(k) * s.drift) > *s.bound) {
                throw PreconditionError("inconsistent series: |c_" + std::to_string(k) + " - k drift| = " +
                                        abs(c - Rational(k) * s.drift).str() + " exceeds the declared bound " +
                                        s.bound->str());
            }
        }
        limit = s.drift;
        out.method = "bounded";
    } else {
        const auto& [k0, c0] = s.samples[s.samples.size() - 2];
        const auto& [k1, c1] = s.samples.back();
        limit = (c1 - c0) / Rational(k1 - k0);
        const Rational spread = abs(c1 / Rational(k1) - c0 / Rational(k0));
        if (spread > s.tolerance) {
            throw PreconditionError("inconsistent series: c_k/k moves by " + spread.str() +
                                    " over the last two samples, above the tolerance " + s.tolerance.str());
        }
        out.method = "slope";
    }
    out.m = s.mean_integral - limit;
    out.certificate = {"m", BoundKind::exact, out.m,
                       {out.method == "bounded" ? "c_k - k drift bounded by " + s.bound->str()
                                                : "c_k/k Cauchy within " + s.tolerance.str()},
                       "measurement"};
    if (s.hofer_length) {
        out.m1_checked = true;
        for (const auto& [k, c] : s.samples) {
            // -(c_k - k mean) <= k * Hofer
            if (-(c - Rational(k) * s.mean_integral) > Rational(k) * *s.hofer_length) {
                out.m1_holds = false;
                out.m1_witness = "sample k = " + std::to_string(k);
                break;
            }
        }
        if (out.m1_holds && out.m > *s.hofer_length) {
            out.m1_holds = false;
            out.m1_witness = "m = " + out.m.str() + " > Hofer length " + s.hofer_length->str();
        }
    }
    return out;
}

Certificate energy_capacity_chain(const Rational& sde_bound, const Rational& epsilon) {
    if (sde_bound.sign() < 0) throw PreconditionError("sde bound must be nonnegative");
    if (epsilon.sign() <= 0) throw PreconditionError("epsilon must be positive");
    return {"c", BoundKind::upper, sde_bound + epsilon,
            {"sde <= " + sde_bound.str(), "epsilon = " + epsilon.str(), "stabilization of the spectral capacity"},
            "energy-capacity"};
}

Certificate energy_capacity_limit(const Rational& sde_bound) {
    if (sde_bound.sign() < 0) throw PreconditionError("sde bound must be nonnegative");
    if (sde_bound.is_zero()) {
        return {"c", BoundKind::exact, Rational(0), {"sde = 0", "c >= 0", "c <= epsilon for every epsilon > 0"},
                "energy-capacity"};
    }
    return {"c", BoundKind::upper, sde_bound, {"sde <= " + sde_bound.str(), "infimum over epsilon"},
            "energy-capacity"};
}

void CapacityLedger::add(Certificate c) {
    const bool pins_value = c.kind == BoundKind::exact || c.kind == BoundKind::upper;
    if (c.quantity == "beta" && pins_value && c.value.sign() < 0) {
        throw PreconditionError("boundary depth cannot be negative");
    }
    if (c.quantity == "gamma" && pins_value && c.value.sign() < 0) {
        throw PreconditionError("spectral norm cannot be negative");
    }
    if (c.quantity == "hbar" && pins_value && c.value.sign() <= 0) throw PreconditionError("hbar must be positive");
    entries_.push_back(std::move(c));
}

void CapacityLedger::add(const Conclusion& c) {
    if (const auto* cert = std::get_if<Certificate>(&c)) {
        add(*cert);
    } else if (const auto* na = std::get_if<NotApplicable>(&c)) {
        skipped_.push_back("not applicable: " + na->reason);
    } else {
        skipped_.push_back("no conclusion: " + std::get<NoConclusion>(c).reason);
    }
}

std::vector<Contradiction> CapacityLedger::contradictions() const {
    std::map<std::string, const Certificate*> best_lower;
    std::map<std::string, const Certificate*> best_upper;
    for (const auto& c : entries_) {
        if (c.kind != BoundKind::upper) {
            auto& slot = best_lower[c.quantity];
            if (slot == nullptr || c.value > slot->value) slot = &c;
        }
        if (c.kind != BoundKind::lower) {
            auto& slot = best_upper[c.quantity];
            if (slot == nullptr || c.value < slot->value) slot = &c;
        }
    }
    std::vector<Contradiction> out;
    for (const auto& [q, lo] : best_lower) {
        auto it = best_upper.find(q);
        if (it == best_upper.end()) continue;
        if (lo->value > it->second->value) out.push_back({q, *lo, *it->second});
    }
    return out;
}

}  // namespace novik
