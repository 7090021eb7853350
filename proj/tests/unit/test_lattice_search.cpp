#include <doctest.h>

#include <set>

#include "novik/gf2.hpp"
#include "novik/lattice_search.hpp"
#include "novik/random_complexes.hpp"
#include "support.hpp"

using namespace novik;

namespace {

NovikovScalar S(const char* text) { return NovikovScalar::parse(text); }

gf2::Row random_row(Rng& rng, std::size_t n) {
    gf2::Row r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (testing::uniform(rng, 0, 2) == 0) r.set(i);
    }
    return r;
}

}  // namespace

TEST_CASE("gf2 echelon rank and consistency match enumeration") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
        const std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 1, 7));
        std::vector<gf2::Row> rows;
        std::vector<bool> rhs;
        for (std::size_t i = 0; i < m; ++i) {
            rows.push_back(random_row(rng, n));
            rhs.push_back(testing::uniform(rng, 0, 1) == 1);
        }
        gf2::Echelon homogeneous(n);
        gf2::Echelon affine(n);
        bool consistent = true;
        for (std::size_t i = 0; i < m; ++i) {
            homogeneous.insert(rows[i]);
            if (affine.insert(rows[i], rhs[i]) == gf2::Echelon::Outcome::inconsistent) consistent = false;
        }
        // Rank: log2 of the number of distinct row combinations; consistency: some x solves all rows.
        std::set<std::vector<bool>> spans;
        bool solvable = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<bool> acc(n, false);
            for (std::size_t i = 0; i < m; ++i) {
                if (((mask >> i) & 1U) == 0) continue;
                for (std::size_t c = 0; c < n; ++c) acc[c] = acc[c] != rows[i].test(c);
            }
            spans.insert(acc);
        }
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                bool v = false;
                for (std::size_t c = 0; c < n; ++c) v = v != (rows[i].test(c) && ((x >> c) & 1U) != 0);
                ok = v == rhs[i];
            }
            solvable = solvable || ok;
        }
        CHECK((std::size_t{1} << homogeneous.rank()) == spans.size());
        CHECK(consistent == solvable);
        if (solvable) {
            const gf2::Row x = affine.solution();
            for (std::size_t i = 0; i < m; ++i) {
                bool v = false;
                for (std::size_t c = 0; c < n; ++c) v = v != (rows[i].test(c) && x.test(c));
                CHECK(v == rhs[i]);
            }
        }
    }
}

TEST_CASE("lattice monomials cover exactly the requested level band") {
    const FilteredComplex c({{"x", Exponent(1), 1}, {"y", Exponent(0), 1}}, {});
    const auto vars = lattice_monomials(c, {0, 1}, Exponent(1, 2), Exponent(-1), Exponent(0));
    // levels in (-1, 0]: x at exponents 1, 3/2; y at exponents 0, 1/2.
    CHECK(vars.size() == 4);
    for (const auto& v : vars) {
        const Exponent level = c.generators()[v.gen].level - v.exponent;
        CHECK(level > Exponent(-1));
        CHECK(level <= Exponent(0));
    }
    CHECK(lattice_step(c, {Chain{{"x", S("t^{1/6}")}}}) == Exponent(1, 6));
}

TEST_CASE("lattice distance equals literal enumeration over all subsets") {
    Rng rng(12);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 120; ++trial) {
        const auto inst = random_complex(rng);
        const auto& c = inst.complex;
        const Chain zeta = random_cycle(rng, inst);
        if (zeta.is_zero()) continue;
        const int k = *chain_degree(c, zeta);
        const auto gens = generators_of_degree(c, k + 1);
        const Exponent top = ell(c, zeta).value();
        const auto vars = lattice_monomials(c, gens, Exponent(1, 4), top - Exponent(1), top + Exponent(1, 2));
        if (vars.size() > 12 || vars.empty()) continue;
        ++checked;
        const DistanceSearch s = lattice_distance(c, zeta, vars, std::nullopt);
        ExtendedRational best = ExtendedRational::pos_inf();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
            Chain beta;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                if (((mask >> v) & 1U) != 0) {
                    beta.add_term(c.generators()[vars[v].gen].label, NovikovScalar::monomial(vars[v].exponent));
                }
            }
            best = min(best, ell(c, zeta + c.apply_d(beta)));
        }
        CHECK(s.value == best);
        if (s.value.is_finite()) CHECK(ell(c, zeta + c.apply_d(s.minimizer)) == s.value);
    }
    CHECK(checked >= 40);
}

TEST_CASE("oracle boundary depth of elementary pairs") {
    // dS = t^b T gives a single bar of length level(S) - level(T) + b.
    const FilteredComplex c({{"s", Exponent(3), 1}, {"t", Exponent(2), 0}}, {{"s", "t", S("t^{1/2}")}});
    CHECK(bar_length_bound(c, 1) >= Exponent(3, 2));
    CHECK(oracle_boundary_depth(c) == Exponent(3, 2));
    const FilteredComplex two({{"x", Exponent(3), 1}, {"y", Exponent(1), 0}}, {{"x", "y", S("1")}});
    CHECK(oracle_boundary_depth(two) == Exponent(2));
    const FilteredComplex flat({{"x", Exponent(3), 1}, {"y", Exponent(1), 0}}, {});
    CHECK(oracle_boundary_depth(flat) == Exponent(0));
}

TEST_CASE("oracle distance of a cycle away from the boundaries") {
    // z is a free cycle: nothing can lower it.
    const FilteredComplex c({{"s", Exponent(3), 1}, {"t", Exponent(2), 0}, {"z", Exponent(1), 0}},
                            {{"s", "t", S("1")}});
    const DistanceSearch free = oracle_distance(c, Chain{{"z", S("1")}, {"t", S("t^{1}")}});
    CHECK(free.value == ExtendedRational(Rational(1)));
    const DistanceSearch exact = oracle_distance(c, Chain{{"t", S("t^{1}")}});
    CHECK(exact.reached_floor);
}
