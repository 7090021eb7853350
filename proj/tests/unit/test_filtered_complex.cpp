#include <doctest.h>

#include <map>
#include <set>

#include "novik/filtered_complex.hpp"
#include "novik/random_complexes.hpp"
#include "support.hpp"

using namespace novik;

namespace {

NovikovScalar S(const char* text) { return NovikovScalar::parse(text); }

FilteredComplex two_step() {
    // x -> y -> nothing, z free; levels decrease along d.
    return FilteredComplex({{"x", Exponent(3), 1}, {"y", Exponent(1), 0}, {"z", Exponent(2), 1}},
                           {{"x", "y", S("0+1")}});
}

std::set<Violation::Kind> kinds_at(const ValidationReport& r, const std::string& from, const std::string& to) {
    std::set<Violation::Kind> out;
    for (const auto& v : r.violations) {
        if (v.from == from && v.to == to) out.insert(v.kind);
    }
    return out;
}

// d^2 computed from the entry list alone, with an independent mod-2 count.
bool d_squared_zero(const std::vector<Generator>& gens, const std::vector<DifferentialEntry>& entries) {
    std::map<std::string, std::map<std::string, std::map<Exponent, int>>> d;
    for (const auto& e : entries) {
        for (const auto& t : e.coefficient.terms()) d[e.from][e.to][t] ^= 1;
    }
    for (const auto& g : gens) {
        std::map<std::string, std::map<Exponent, int>> dd;
        for (const auto& [mid, c1] : d[g.label]) {
            for (const auto& [to, c2] : d[mid]) {
                for (const auto& [a, p] : c1) {
                    for (const auto& [b, q] : c2) {
                        if ((p & q) != 0) dd[to][a + b] ^= 1;
                    }
                }
            }
        }
        for (const auto& [to, m] : dd) {
            for (const auto& [e, c] : m) {
                if (c != 0) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("construction rejects duplicate and unknown labels") {
    CHECK_THROWS_AS(FilteredComplex({{"x", Exponent(0), 0}, {"x", Exponent(1), 0}}, {}), ParseError);
    CHECK_THROWS_AS(FilteredComplex({{"x", Exponent(0), 1}}, {{"x", "y", S("1")}}), ParseError);
}

TEST_CASE("levels of chains") {
    const auto c = two_step();
    CHECK(validate(c).ok());
    CHECK(ell(c, Chain{}).is_neg_inf());
    Chain v;
    v.add_term("x", S("t^{1}+t^{2}"));
    v.add_term("z", S("t^{1/2}"));
    CHECK(ell(c, v) == ExtendedRational(Rational(2)));
    CHECK(chain_degree(c, v) == 1);
    Chain mixed = v;
    mixed.add_term("y", S("1"));
    CHECK_THROWS_AS(chain_degree(c, mixed), PreconditionError);
    CHECK(c.apply_d(v) == Chain{{"y", S("t^{1}+t^{2}")}});
}

TEST_CASE("validate names the broken axiom") {
    SUBCASE("grading") {
        FilteredComplex c({{"x", Exponent(3), 1}, {"y", Exponent(1), 1}}, {{"x", "y", S("1")}});
        CHECK(kinds_at(validate(c), "x", "y").count(Violation::Kind::grading) == 1);
    }
    SUBCASE("filtration") {
        FilteredComplex c({{"x", Exponent(1), 1}, {"y", Exponent(1), 0}}, {{"x", "y", S("1")}});
        CHECK(kinds_at(validate(c), "x", "y").count(Violation::Kind::filtration) == 1);
    }
    SUBCASE("d squared") {
        FilteredComplex c({{"x", Exponent(3), 2}, {"y", Exponent(2), 1}, {"z", Exponent(1), 0}},
                          {{"x", "y", S("1")}, {"y", "z", S("1")}});
        CHECK(kinds_at(validate(c), "x", "z").count(Violation::Kind::d_squared) == 1);
    }
    SUBCASE("windowed entry") {
        FilteredComplex c({{"x", Exponent(3), 1}, {"y", Exponent(1), 0}}, {{"x", "y", S("1+O(t^{2})")}});
        CHECK(kinds_at(validate(c), "x", "y").count(Violation::Kind::windowed_entry) == 1);
    }
}

TEST_CASE("every single-entry corruption of a valid complex is rejected for that axiom") {
    Rng rng(31);
    const Exponent step(1, 4);
    int rejected = 0;
    int accepted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto inst = random_complex(rng);
        const auto& c = inst.complex;
        REQUIRE(validate(c).ok());
        const auto& gens = c.generators();
        const auto& g = gens[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
        const auto& h = gens[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
        auto entries = c.entries();
        const Exponent floor_e = h.level - g.level + step;  // smallest exponent respecting the filtration
        const Exponent existing_min = c.d(g.label).coefficient(h.label).is_zero()
                                          ? floor_e + Exponent(10)
                                          : c.d(g.label).coefficient(h.label).terms().front();
        const long kind = testing::uniform(rng, 0, 3);
        if (kind == 0) {
            if (h.degree == g.degree - 1) continue;
            entries.push_back({g.label, h.label, NovikovScalar::monomial(max(floor_e, Exponent(0)))});
            const FilteredComplex bad(gens, entries);
            CHECK(kinds_at(validate(bad), g.label, h.label).count(Violation::Kind::grading) == 1);
            ++rejected;
        } else if (kind == 1) {
            if (h.degree != g.degree - 1) continue;
            // At or above the level of g, and below every existing exponent so it cannot cancel.
            const Exponent e = min(floor_e - step * Exponent(testing::uniform(rng, 1, 4)), existing_min - step);
            entries.push_back({g.label, h.label, NovikovScalar::monomial(e)});
            const FilteredComplex bad(gens, entries);
            CHECK(kinds_at(validate(bad), g.label, h.label).count(Violation::Kind::filtration) == 1);
            ++rejected;
        } else if (kind == 2) {
            if (h.degree != g.degree - 1) continue;
            const Exponent e = max(floor_e, Exponent(0)) + step * Exponent(testing::uniform(rng, 0, 8));
            entries.push_back({g.label, h.label, NovikovScalar::monomial(e)});
            const FilteredComplex changed(gens, entries);
            const bool zero = d_squared_zero(gens, entries);
            const auto report = validate(changed);
            CHECK(report.ok() == zero);
            if (zero) {
                ++accepted;
            } else {
                bool names_d2 = false;
                for (const auto& v : report.violations) names_d2 = names_d2 || v.kind == Violation::Kind::d_squared;
                CHECK(names_d2);
                ++rejected;
            }
        } else {
            if (entries.empty()) continue;
            auto& e = entries[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(entries.size()) - 1))];
            e.coefficient = NovikovScalar(e.coefficient.terms(), e.coefficient.max_exponent() + Exponent(1));
            const FilteredComplex bad(gens, entries);
            CHECK(kinds_at(validate(bad), e.from, e.to).count(Violation::Kind::windowed_entry) == 1);
            ++rejected;
        }
    }
    CHECK(rejected > 100);
    CHECK(accepted > 0);
}

TEST_CASE("capped orbits: degree, area and the iota embedding") {
    CappedGenerator g;
    g.label = "x";
    g.h_integral = Exponent(2);
    g.cz = 1;
    g.kappa0 = 1;
    g.chern_step = 1;
    g.area_base = Exponent(1, 2);
    g.period = Exponent(3);
    g.half_dim = 4;
    CHECK(degree(g, 0) == 4 - 1 - 2);
    CHECK(degree(g, 2) == 4 - 1 - 2 * 3);
    CHECK(g.area(-1) == Exponent(-5, 2));
    CHECK(capped_action(g, 1) == Exponent(2) - Exponent(7, 2));
    CHECK(capping_index(g, Exponent(13, 2)) == 2);
    CHECK_FALSE(capping_index(g, Exponent(1)).has_value());

    CappedGenerator u = g;
    u.period = Exponent(0);
    CHECK_THROWS_AS((void)u.area(1), PreconditionError);
    CHECK_THROWS_AS(degree(u, -1), PreconditionError);

    const CappedComplex cc({g}, {});
    CHECK_THROWS_AS((void)cc.lambda_view(), PreconditionError);
}

TEST_CASE("iota is injective on canonical capped chains") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const Exponent period(trial % 2);
        const auto cc = random_capped_complex(rng, 4, period);
        const int k = static_cast<int>(testing::uniform(rng, 0, 2));
        const auto chain = random_capped_chain(rng, cc, k);
        const Chain image = iota(cc, chain);
        // Invert term by term through the capping lattice.
        CappedChain back;
        for (const auto& [label, x] : image.terms()) {
            for (const auto& a : x.terms()) {
                auto m = capping_index(cc.generator(label), a);
                REQUIRE(m.has_value());
                toggle(back, label, *m);
            }
        }
        CHECK(back == chain);
        // Levels agree with the capped actions.
        ExtendedRational top = ExtendedRational::neg_inf();
        for (const auto& [key, present] : chain) top = max(top, capped_action(cc.generator(key.first), key.second));
        CHECK(ell(cc.lambda_view(), image) == top);
    }
}

TEST_CASE("random capped complexes respect the capping lattice") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto cc = random_capped_complex(rng, 4, Exponent(trial % 2));
        CHECK_FALSE(cc.lattice_violation().has_value());
        CHECK(validate(cc.lambda_view()).ok());
    }
    CappedGenerator a{"a", Exponent(2), 0, 0, 0, Exponent(0), Exponent(1), 2};
    CappedGenerator b{"b", Exponent(1), 1, 0, 0, Exponent(1, 2), Exponent(1), 2};
    CHECK(CappedComplex({a, b}, {{"a", "b", S("t^{1/2}")}}).lattice_violation() == std::nullopt);
    CHECK(CappedComplex({a, b}, {{"a", "b", S("t^{1/4}")}}).lattice_violation().has_value());
}
