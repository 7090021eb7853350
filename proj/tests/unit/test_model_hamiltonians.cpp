#include <doctest.h>

#include <algorithm>

#include "novik/model_hamiltonians.hpp"
#include "support.hpp"

using namespace novik;

namespace {

Exponent Q(long p, long q = 1) { return Exponent(p, q); }

CappedGenerator orbit(const std::string& label, const Exponent& h, const Exponent& area, const Exponent& period) {
    return {label, h, 0, 0, 0, area, period, 1};
}

// rho = 1 near 0, a, 2a with a dip in between on each half.
TorusDeformation sample_torus() {
    TorusDeformation td;
    td.a = Q(1);
    td.rho = {{Q(0), Q(1)}, {Q(1, 4), Q(1)}, {Q(1, 2), Q(1, 2)}, {Q(3, 4), Q(1)}, {Q(5, 4), Q(1)},
              {Q(3, 2), Q(3, 2)}, {Q(7, 4), Q(1)}, {Q(2), Q(1)}};
    td.h_sup = Q(3);
    td.orbits = {orbit("g", Q(2), Q(0), Q(0)), orbit("h", Q(-1), Q(1, 2), Q(1))};
    td.m_min = -1;
    td.m_max = 1;
    return td;
}

ContactProfile scaled(const ContactProfile& p, const Exponent& c) {
    ContactProfile q = p;
    for (auto& b : q.breakpoints) b.y *= c;
    q.A *= c;
    q.delta *= c;
    for (auto& t : q.periods) t *= c;
    q.cutoff *= c;
    return q;
}

}  // namespace

TEST_CASE("piecewise-linear evaluation") {
    const std::vector<PLPoint> f{{Q(0), Q(0)}, {Q(1), Q(2)}, {Q(3), Q(0)}};
    CHECK(pl_value(f, Q(1, 2)) == Q(1));
    CHECK(pl_value(f, Q(2)) == Q(1));
    CHECK(pl_value(f, Q(3)) == Q(0));
    CHECK_THROWS_AS(pl_value(f, Q(4)), PreconditionError);
}

TEST_CASE("k threshold: flat rho, linearity in h_sup, explicit value") {
    TorusDeformation flat = sample_torus();
    flat.rho = {{Q(0), Q(1)}, {Q(2), Q(1)}};
    CHECK(k_threshold(flat) == Q(0));

    TorusDeformation td = sample_torus();
    const Exponent k1 = k_threshold(td);
    // Steepest piece has |slope| 2, nearest distance to {0, a, 2a} is 1/4:
    // 2 * 3 * 1 * 106 / (666 * 1/4).
    CHECK(k1 == Q(2) * Q(3) * Q(106) / (Q(666) * Q(1, 4)));
    td.h_sup = Q(6);
    CHECK(k_threshold(td) == Q(2) * k1);
}

TEST_CASE("torus validation") {
    TorusDeformation td = sample_torus();
    td.rho[1].y = Q(2);  // rho no longer 1 near 0
    CHECK_THROWS_AS(validate(td), PreconditionError);
    td = sample_torus();
    td.rho.back().y = Q(2);
    CHECK_THROWS_AS(validate(td), PreconditionError);
}

TEST_CASE("deformed spectrum: cosine offsets, shifts, t_def independence") {
    TorusDeformation single;
    single.a = Q(1);
    single.rho = {{Q(0), Q(1)}, {Q(2), Q(1)}};
    single.h_sup = Q(0);
    single.k = Q(5);
    single.orbits = {orbit("g", Q(0), Q(0), Q(0))};
    CHECK(deformed_spectrum(single, Q(1, 2)) == std::vector<Exponent>{Q(-5), Q(5)});

    TorusDeformation td = sample_torus();
    td.k = k_threshold(td) + Q(1);
    const auto base = deformed_spectrum(td, Q(0));
    for (int i = 0; i <= 10; ++i) CHECK(deformed_spectrum(td, Q(i, 10)) == base);

    TorusDeformation moved = td;
    for (auto& o : moved.orbits) o.h_integral += Q(7, 3);
    auto expect = base;
    for (auto& v : expect) v += Q(7, 3);
    CHECK(deformed_spectrum(moved, Q(1, 3)) == expect);

    td.k = k_threshold(td);
    try {
        (void)deformed_spectrum(td, Q(0));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find(k_threshold(td).str()) != std::string::npos);
    }
}

TEST_CASE("contact spectrum of a designed bump") {
    const auto design = design_bump_profile(Q(9, 10), Q(1, 100), Q(99, 100), Q(101, 100), {Q(1)}, Q(100), false);
    REQUIRE(design.profile.has_value());
    const ContactProfile& p = *design.profile;
    const auto spectrum = contact_spectrum(p);
    // outside -> 0 and the flat top -> A
    bool zero = false;
    bool top = false;
    for (const auto& e : spectrum) {
        if (e.constant_orbit() && e.lo == Q(0)) zero = true;
        if (e.constant_orbit() && e.lo == p.A) top = true;
    }
    CHECK(zero);
    CHECK(top);
    const GapVerdict g = spectrum_gap(p);
    CHECK(g.pass);
    CHECK(g.gap == p.A);
    const Exponent bound = three_way_bound(p);
    CHECK(bound == Q(9, 10));
    for (const auto& e : spectrum) {
        if (e.hi.sign() > 0) CHECK(e.lo >= bound);
    }
}

TEST_CASE("contact spectrum scales with the profile") {
    const auto design = design_bump_profile(Q(9, 10), Q(1, 100), Q(99, 100), Q(11, 10), {Q(1)}, Q(100), true);
    REQUIRE(design.profile.has_value());
    for (const Exponent c : {Q(2), Q(1, 3), Q(7, 5)}) {
        const auto a = contact_spectrum(*design.profile);
        const auto b = contact_spectrum(scaled(*design.profile, c));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(b[i].lo == c * a[i].lo);
            CHECK(b[i].hi == c * a[i].hi);
            CHECK(b[i].source == a[i].source);
        }
    }
}

TEST_CASE("period-slope pieces give intervals tagged with their period") {
    const auto design = design_bump_profile(Q(9, 10), Q(1, 100), Q(99, 100), Q(11, 10), {Q(1)}, Q(100), true);
    REQUIRE(design.profile.has_value());
    int intervals = 0;
    for (const auto& e : contact_spectrum(*design.profile)) {
        if (e.period && e.source.rfind("piece", 0) == 0) {
            ++intervals;
            CHECK(abs(*e.period) == Q(1));
            CHECK(e.lo <= e.hi);
        }
    }
    CHECK(intervals == 4);
}

TEST_CASE("contact profile validation and infeasibility") {
    // A period slope at mid-height violates the slope condition.
    ContactProfile bad{{{Q(1, 2), Q(0)}, {Q(1), Q(1, 2)}, {Q(3, 2), Q(0)}}, Q(1, 2), Q(1, 100), Q(1, 2), Q(3, 2),
                       {Q(1)}, Q(2)};
    CHECK_THROWS_AS(validate(bad), PreconditionError);
    CHECK_THROWS_AS(contact_spectrum(bad), PreconditionError);
    // A above delta + r_plus T_min: no valid profile.
    const auto none = design_bump_profile(Q(3), Q(1, 100), Q(99, 100), Q(101, 100), {Q(1)}, Q(100), false);
    CHECK_FALSE(none.profile.has_value());
    CHECK(none.infeasibility.find("slope condition") != std::string::npos);
    // Slopes beyond the cutoff are rejected.
    ContactProfile steep{{{Q(99, 100), Q(0)}, {Q(1), Q(1, 2)}, {Q(101, 100), Q(0)}}, Q(1, 2), Q(1, 100),
                         Q(99, 100), Q(101, 100), {Q(1)}, Q(2)};
    CHECK_THROWS_AS(validate(steep), PreconditionError);
}

TEST_CASE("toric bounds") {
    CHECK(fiber_hbar_lower({Q(1, 3), Q(1, 2)}) == Q(1, 3));
    CHECK(toric_bound({{Q(1, 3), Q(1, 2)}, {Q(2, 5), Q(2, 5)}}) == Q(2, 5));
    CHECK_THROWS_AS(fiber_hbar_lower({Q(0), Q(1)}), PreconditionError);
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<Exponent>> pts;
        const long n = testing::uniform(rng, 1, 5);
        for (long i = 0; i < n; ++i) pts.push_back({testing::grid(rng, 1, 20), testing::grid(rng, 1, 20), testing::grid(rng, 1, 20)});
        const Exponent b = toric_bound(pts);
        auto permuted = pts;
        for (auto& p : permuted) std::rotate(p.begin(), p.begin() + 1, p.end());
        CHECK(toric_bound(permuted) == b);
        auto more = pts;
        more.push_back({testing::grid(rng, 1, 20), testing::grid(rng, 1, 20), testing::grid(rng, 1, 20)});
        CHECK(toric_bound(more) >= b);
    }
}
