#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "novik/rational.hpp"

namespace novik {

enum class BoundKind { lower, upper, exact };
std::string to_string(BoundKind k);
BoundKind parse_bound_kind(const std::string& s);

/// An inequality "quantity (>=|<=|=) value" together with what it rests on.
struct Certificate {
    std::string quantity;
    BoundKind kind = BoundKind::lower;
    Rational value;
    std::vector<std::string> hypotheses;
    std::string tag;  // which result produced it
};

struct NotApplicable {
    std::string reason;
    std::vector<std::string> hypotheses;
};

struct NoConclusion {
    std::string reason;
};

using Conclusion = std::variant<Certificate, NotApplicable, NoConclusion>;

/// c >= Eminus when beta + Eplus - Eminus < hbar (strict).
/// Throws PreconditionError for beta < 0 or hbar <= 0.
Conclusion lemma3_bound(const Rational& beta, const Rational& Eplus, const Rational& Eminus, const Rational& hbar);

/// gamma >= 2 min(h1, h2) for a set containing a non-interfering pair.
Certificate two_lagrangian_bound(const Rational& h1, const Rational& h2);

/// Imported constant: spectral norm of the unit ball.
struct BallConstant {
    Rational gamma_ball{1};
    std::string tag = "spectral norm of B(1), imported";
};

struct ObstructionVerdict {
    bool obstructed = false;
    Rational h_product;
    Rational threshold;  // gamma_ball / 2
    std::string verdict;  // "obstructed" or "unobstructed-by-this-test"
    Certificate certificate;
};

/// Obstructed iff 2 h >= gamma_ball.
ObstructionVerdict ball_embedding_obstruction(const Rational& h_product, const BallConstant& ball = {});

/// hbar of a product of Lagrangians is at least the smaller factor's.
Rational product_hbar_lower(const Rational& h1, const Rational& h2);

/// beta >= hbar when c is finite.
Conclusion depth_dominates_hbar(bool c_is_finite, const Rational& hbar);

struct SpectralNorm {
    Rational gamma;
    bool nonnegative = true;
    Certificate certificate;
};

SpectralNorm spectral_norm(const Rational& c_forward, const Rational& c_backward);

struct MeasurementSeries {
    std::vector<std::pair<long, Rational>> samples;  // (k, c_k), k strictly increasing
    Rational mean_integral;
    std::optional<Rational> hofer_length;
    /// Declared |c_k - k drift| <= bound for every k: the limit of c_k / k is drift.
    std::optional<Rational> bound;
    Rational drift{0};
    /// Allowed spread of c_k / k over the last two samples when no bound is declared.
    Rational tolerance{0};
};

struct Measurement {
    Rational m;
    std::string method;  // "bounded" or "slope"
    bool m1_checked = false;
    bool m1_holds = true;
    std::string m1_witness;
    Certificate certificate;
};

/// m = mean_integral - lim_{k -> inf} c_k / k.  Throws PreconditionError for
/// an inconsistent series.
Measurement homogenized_measurement(const MeasurementSeries& s);

/// c <= sde + epsilon.
Certificate energy_capacity_chain(const Rational& sde_bound, const Rational& epsilon);

/// The infimum over epsilon: c <= sde; with c >= 0 and sde = 0 this is c = 0.
Certificate energy_capacity_limit(const Rational& sde_bound);

struct Contradiction {
    std::string quantity;
    Certificate lower;
    Certificate upper;
};

/// Named quantities and the bounds known for them.
class CapacityLedger {
public:
    /// Validates the invariants (beta >= 0, gamma >= 0, hbar > 0 for exact or
    /// lower-bound-style entries that pin them) and records the certificate.
    void add(Certificate c);
    void add(const Conclusion& c);

    [[nodiscard]] const std::vector<Certificate>& entries() const { return entries_; }
    [[nodiscard]] const std::vector<std::string>& skipped() const { return skipped_; }
    [[nodiscard]] std::vector<Contradiction> contradictions() const;

private:
    std::vector<Certificate> entries_;
    std::vector<std::string> skipped_;
};

}  // namespace novik
