#pragma once

#include <map>
#include <optional>
#include <vector>

#include "novik/filtered_complex.hpp"
#include "novik/gf2.hpp"

namespace novik {

/// Exhaustive searches over truncated exponent lattices, done as Z/2 linear
/// algebra.  A chain base + d(sum_v x_v t^{e_v} h_v) with x in (Z/2)^n is an
/// affine function of x, so questions such as "can every term above level L
/// be cancelled" become consistency questions for linear systems.  This is
/// independent of the Lambda elimination in spectral.hpp and serves as its
/// oracle.

/// The monomial t^exponent * generators()[gen].
struct LatticeMonomial {
    std::size_t gen;
    Exponent exponent;
};

/// Monomials t^e g for g in `gens` with e in step*Z and level(g) - e in (lo, hi].
std::vector<LatticeMonomial> lattice_monomials(const FilteredComplex& complex, const std::vector<std::size_t>& gens,
                                               const Exponent& step, const Exponent& lo, const Exponent& hi);

/// All generators of a given degree, in generator order.
std::vector<std::size_t> generators_of_degree(const FilteredComplex& complex, int degree);

/// Smallest step 1/q such that every level and every differential exponent of
/// `complex` (and of the extra chains) lies in step*Z.
Exponent lattice_step(const FilteredComplex& complex, const std::vector<Chain>& extra = {});

/// Upper bound for every finite bar length of d restricted to degree-k
/// sources, independent of any elimination: after normalising entries by the
/// generator levels each nonzero minor is a polynomial, so its valuation is at
/// most the sum over columns of the largest normalised exponent.
Exponent bar_length_bound(const FilteredComplex& complex, int k);

/// The affine map x -> base + d(sum x_v var_v), tabulated by position.
class LatticeImage {
public:
    struct Position {
        std::size_t gen;
        Exponent exponent;
        Exponent level;
        gf2::Row row;     // dependence on x
        bool constant;    // coefficient contributed by base
    };

    LatticeImage(const FilteredComplex& complex, const Chain& base, std::vector<LatticeMonomial> vars);

    [[nodiscard]] const std::vector<LatticeMonomial>& variables() const { return vars_; }
    /// Sorted by level, highest first; ties by generator then exponent.
    [[nodiscard]] const std::vector<Position>& positions() const { return positions_; }
    [[nodiscard]] std::optional<std::size_t> find(std::size_t gen, const Exponent& exponent) const;
    /// base + d(sum x_v var_v) as a chain.
    [[nodiscard]] Chain evaluate(const gf2::Row& x) const;

private:
    const FilteredComplex* complex_;
    Chain base_;
    std::vector<LatticeMonomial> vars_;
    std::vector<Position> positions_;
    std::map<std::pair<std::size_t, Exponent>, std::size_t> lookup_;
};

struct DistanceSearch {
    /// Minimum of l(base + d beta) over the lattice; -inf when every position
    /// can be cleared (only possible without a floor).
    ExtendedRational value = ExtendedRational::neg_inf();
    /// All positions above the floor could be cleared: the minimum lies at or
    /// below the floor and is not resolved.
    bool reached_floor = false;
    std::optional<Exponent> floor;
    std::size_t variables = 0;
    std::size_t positions = 0;
    /// A minimising beta (as lattice coefficients) when value is finite.
    Chain minimizer;
};

/// min over beta in span_{Z/2}(vars) of l(base + d beta).  Positions at or
/// below `floor` are ignored.
DistanceSearch lattice_distance(const FilteredComplex& complex, const Chain& base,
                                const std::vector<LatticeMonomial>& vars, const std::optional<Exponent>& floor);

/// Oracle for l-distance from `zeta` to the boundaries: variables are all
/// lattice monomials in degree k+1 with level in (floor, l(zeta) + bound].
/// The floor defaults to l(zeta) - bound - spread(zeta) - step.
DistanceSearch oracle_distance(const FilteredComplex& complex, const Chain& zeta,
                               const std::optional<Exponent>& floor = std::nullopt);

struct DepthSearch {
    Exponent depth;        // boundary depth restricted to exact chains in the given degree
    Exponent ymax;         // variables had level <= ymax
    std::size_t variables = 0;
    std::size_t window_dimension = 0;  // dimension of the space of leading parts
};

/// Boundary depth of exact chains of degree k: the least B such that every
/// exact x with l(x) <= 0 has a primitive of level <= B, computed from the
/// leading (level 0) parts of boundaries with primitives in (0, ymax].
/// Exact whenever ymax is at least the true depth.
DepthSearch lattice_boundary_depth_in_degree(const FilteredComplex& complex, int k, const Exponent& ymax);

/// Max over degrees, with ymax = bar_length_bound for each degree.
Exponent oracle_boundary_depth(const FilteredComplex& complex);

}  // namespace novik
