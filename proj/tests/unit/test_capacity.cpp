#include <doctest.h>

#include "novik/capacity.hpp"
#include "support.hpp"

using namespace novik;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

bool is_bound(const Conclusion& c) { return std::holds_alternative<Certificate>(c); }

}  // namespace

TEST_CASE("lemma3 bound and its strict hypothesis") {
    const Conclusion c = lemma3_bound(Q(0), Q(2), Q(2), Q(1, 3));
    REQUIRE(is_bound(c));
    CHECK(std::get<Certificate>(c).value == Q(2));
    CHECK(std::get<Certificate>(c).kind == BoundKind::lower);
    CHECK_FALSE(std::get<Certificate>(c).hypotheses.empty());
    // Equality is not enough.
    CHECK(std::holds_alternative<NotApplicable>(lemma3_bound(Q(1), Q(2), Q(2), Q(1))));
    CHECK_THROWS_AS(lemma3_bound(Q(-1), Q(0), Q(0), Q(1)), PreconditionError);
    CHECK_THROWS_AS(lemma3_bound(Q(0), Q(0), Q(0), Q(0)), PreconditionError);
}

TEST_CASE("lemma3 with the boundary depth bounded by Eplus - Emin") {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational emin = testing::grid(rng, -8, 0);
        const Rational eplus = testing::grid(rng, 0, 8);
        const Rational eminus = testing::grid(rng, -8, 8);
        const Rational hbar = testing::grid(rng, 1, 16);
        const Rational beta = eplus - emin;
        const bool applies = Q(2) * eplus - emin - eminus < hbar;
        CHECK(is_bound(lemma3_bound(beta, eplus, eminus, hbar)) == applies);
    }
}

TEST_CASE("negating a hypothesis never yields a silent bound") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational beta = testing::grid(rng, 0, 8);
        const Rational eplus = testing::grid(rng, -8, 8);
        const Rational eminus = testing::grid(rng, -8, 8);
        const Rational lhs = beta + eplus - eminus;
        if (lhs.sign() <= 0) continue;
        // hbar exactly at or below the left side negates the hypothesis.
        const Rational hbar = lhs - testing::grid(rng, 0, 3);
        if (hbar.sign() <= 0) continue;
        CHECK(std::holds_alternative<NotApplicable>(lemma3_bound(beta, eplus, eminus, hbar)));
    }
    CHECK(std::holds_alternative<NoConclusion>(depth_dominates_hbar(false, Q(1, 3))));
    const auto d = depth_dominates_hbar(true, Q(1, 3));
    REQUIRE(is_bound(d));
    CHECK(std::get<Certificate>(d).quantity == "beta");
    CHECK(std::get<Certificate>(d).value == Q(1, 3));
}

TEST_CASE("two-Lagrangian bound, ball obstruction and their composition") {
    CHECK(two_lagrangian_bound(Q(1, 3), Q(1, 3)).value == Q(2, 3));
    CHECK(two_lagrangian_bound(Q(1, 5), Q(1, 2)).value == two_lagrangian_bound(Q(1, 2), Q(1, 5)).value);
    CHECK_THROWS_AS(two_lagrangian_bound(Q(0), Q(1)), PreconditionError);
    CHECK(ball_embedding_obstruction(Q(1, 2)).obstructed);
    CHECK(ball_embedding_obstruction(Q(1, 2)).verdict == "obstructed");
    CHECK_FALSE(ball_embedding_obstruction(Q(1, 4)).obstructed);
    CHECK(ball_embedding_obstruction(Q(1, 4)).verdict == "unobstructed-by-this-test");
    // Product torus with radii areas a1, a2: hbar >= min(a1, a2).
    CHECK(ball_embedding_obstruction(product_hbar_lower(Q(1, 2), Q(3, 5))).obstructed);
    CHECK_FALSE(ball_embedding_obstruction(product_hbar_lower(Q(49, 100), Q(3))).obstructed);
    // A different imported constant moves the threshold.
    BallConstant big{Q(2), "test constant"};
    CHECK_FALSE(ball_embedding_obstruction(Q(1, 2), big).obstructed);
}

TEST_CASE("spectral norm") {
    CHECK(spectral_norm(Q(2), Q(3)).gamma == Q(5));
    CHECK(spectral_norm(Q(7, 2), Q(0)).gamma == Q(7, 2));
    CHECK_FALSE(spectral_norm(Q(1), Q(-2)).nonnegative);
}

TEST_CASE("homogenized measurement") {
    MeasurementSeries bounded{{{1, Q(1)}, {2, Q(1)}, {4, Q(1)}}, Q(2), std::nullopt, Q(1), Q(0), Q(0)};
    CHECK(homogenized_measurement(bounded).m == Q(2));
    CHECK(homogenized_measurement(bounded).method == "bounded");

    MeasurementSeries linear{{{1, Q(3, 2)}, {2, Q(3)}, {3, Q(9, 2)}}, Q(0), Q(2), std::nullopt, Q(0), Q(0)};
    const Measurement m = homogenized_measurement(linear);
    CHECK(m.m == Q(-3, 2));
    CHECK(m.m1_checked);
    CHECK(m.m1_holds);

    // c_k/k not settled within the tolerance.
    MeasurementSeries drifting{{{1, Q(0)}, {2, Q(1)}}, Q(0), std::nullopt, std::nullopt, Q(0), Q(1, 10)};
    CHECK_THROWS_AS(homogenized_measurement(drifting), PreconditionError);
    // Declared bound violated by a sample.
    MeasurementSeries liar{{{1, Q(0)}, {2, Q(5)}}, Q(0), std::nullopt, Q(1), Q(0), Q(0)};
    CHECK_THROWS_AS(homogenized_measurement(liar), PreconditionError);
    MeasurementSeries one{{{1, Q(0)}}, Q(0), std::nullopt, std::nullopt, Q(0), Q(0)};
    CHECK_THROWS_AS(homogenized_measurement(one), PreconditionError);

    // M1 violated: m above the Hofer length.
    MeasurementSeries m1{{{1, Q(-3)}, {2, Q(-6)}}, Q(0), Q(1), std::nullopt, Q(0), Q(0)};
    const Measurement bad = homogenized_measurement(m1);
    CHECK_FALSE(bad.m1_holds);
    CHECK_FALSE(bad.m1_witness.empty());
}

TEST_CASE("shift identity leaves m unchanged") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        MeasurementSeries s;
        s.mean_integral = testing::grid(rng, -8, 8);
        s.drift = testing::grid(rng, -8, 8);
        s.bound = testing::grid(rng, 0, 8);
        for (long k = 1; k <= 5; ++k) {
            const Rational wiggle = testing::grid(rng, -100, 100) / Rational(100) * *s.bound;
            s.samples.emplace_back(k * k, Rational(k * k) * s.drift + wiggle);
        }
        const Rational shift = testing::grid(rng, -12, 12);
        MeasurementSeries t = s;
        t.mean_integral -= shift;
        t.drift -= shift;
        for (auto& [k, c] : t.samples) c -= Rational(k) * shift;
        CHECK(homogenized_measurement(t).m == homogenized_measurement(s).m);
    }
}

TEST_CASE("energy-capacity chain") {
    CHECK(energy_capacity_chain(Q(1), Q(1, 10)).value == Q(11, 10));
    const Certificate zero = energy_capacity_limit(Q(0));
    CHECK(zero.kind == BoundKind::exact);
    CHECK(zero.value == Q(0));
    CHECK_THROWS_AS(energy_capacity_chain(Q(-1), Q(1)), PreconditionError);
    CHECK_THROWS_AS(energy_capacity_chain(Q(1), Q(0)), PreconditionError);
}

TEST_CASE("ledger records bounds and reports contradictions") {
    CapacityLedger ledger;
    ledger.add(lemma3_bound(Q(0), Q(1), Q(1), Q(1)));
    ledger.add(energy_capacity_chain(Q(2), Q(1, 10)));
    ledger.add(depth_dominates_hbar(false, Q(1)));
    CHECK(ledger.entries().size() == 2);
    CHECK(ledger.skipped().size() == 1);
    CHECK(ledger.contradictions().empty());
    // Eminus <= c <= sde + epsilon fails when Eminus is too large.
    ledger.add(lemma3_bound(Q(0), Q(3), Q(3), Q(1)));
    const auto contra = ledger.contradictions();
    REQUIRE(contra.size() == 1);
    CHECK(contra[0].quantity == "c");
    CHECK(contra[0].lower.value == Q(3));
    CHECK(contra[0].upper.value == Q(21, 10));
    CHECK_THROWS_AS(ledger.add(Certificate{"beta", BoundKind::exact, Q(-1), {}, "test"}), PreconditionError);
    CHECK_THROWS_AS(ledger.add(Certificate{"hbar", BoundKind::exact, Q(0), {}, "test"}), PreconditionError);
    CHECK_THROWS_AS(ledger.add(Certificate{"gamma", BoundKind::upper, Q(-1), {}, "test"}), PreconditionError);
    CHECK(to_string(parse_bound_kind("upper")) == "upper");
    CHECK_THROWS_AS(parse_bound_kind("sideways"), ParseError);
}
