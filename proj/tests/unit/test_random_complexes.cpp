#include <doctest.h>

#include <set>

#include "novik/random_complexes.hpp"
#include "novik/spectral.hpp"
#include "support.hpp"

using namespace novik;

TEST_CASE("random complexes are valid and their cycles are cycles") {
    Rng rng(31);
    std::set<std::string> families;
    for (int trial = 0; trial < 300; ++trial) {
        const auto inst = random_complex(rng);
        families.insert(inst.family);
        CHECK(validate(inst.complex).ok());
        CHECK(inst.complex.size() <= 6);
        for (const auto& z : inst.cycles) {
            CHECK_FALSE(z.is_zero());
            CHECK(inst.complex.apply_d(z).is_zero());
            CHECK(chain_degree(inst.complex, z).has_value());
        }
        const Chain r = random_cycle(rng, inst);
        CHECK(inst.complex.apply_d(r).is_zero());
    }
    CHECK(families == std::set<std::string>{"conjugated", "sparse"});
}

TEST_CASE("the same seed gives the same complex") {
    Rng a(77);
    Rng b(77);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_complex(a).complex;
        const auto y = random_complex(b).complex;
        CHECK(x.generators().size() == y.generators().size());
        CHECK(x.entries().size() == y.entries().size());
        for (const auto& g : x.generators()) CHECK(x.d(g.label) == y.d(g.label));
    }
}

TEST_CASE("random capped complexes respect the lattice and chern_step 0") {
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const Exponent period(trial % 2);
        const CappedComplex cc = random_capped_complex(rng, 4, period);
        CHECK_FALSE(cc.lattice_violation().has_value());
        CHECK(cc.generators().size() <= 4);
        for (const auto& g : cc.generators()) {
            CHECK(g.chern_step == 0);
            CHECK(g.period == period);
        }
        CHECK(validate(cc.lambda_view()).ok());
        for (int k = 0; k <= 2; ++k) {
            for (const auto& [key, on] : random_capped_chain(rng, cc, k)) {
                const auto& [label, m] = key;
                CHECK(on);
                CHECK(degree(cc.generator(label), m) == k);
                if (period.sign() == 0) CHECK(m == 0);
            }
        }
    }
}

TEST_CASE("planted detection instances give a bound, broken ones do not") {
    Rng rng(33);
    std::set<std::string> broken;
    for (int trial = 0; trial < 60; ++trial) {
        const auto planted = random_detection_instance(rng, false);
        CHECK(planted.variant == "planted");
        CHECK(validate(planted.complex).ok());
        CHECK(planted.complex.apply_d(planted.zeta).is_zero());
        const auto ok = detection_bound(planted.complex, planted.zeta, planted.functional, planted.Eplus, planted.margin);
        CHECK(ok.outcome == DetectionReport::Outcome::bound);

        const auto bad = random_detection_instance(rng, true);
        CHECK(bad.variant != "planted");
        broken.insert(bad.variant);
        if (!validate(bad.complex).ok()) continue;
        const auto no = detection_bound(bad.complex, bad.zeta, bad.functional, bad.Eplus, bad.margin);
        CHECK(no.outcome != DetectionReport::Outcome::bound);
    }
    CHECK(broken.size() >= 4);
}
