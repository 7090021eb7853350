#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "novik/filtered_complex.hpp"
#include "novik/spectral.hpp"

namespace novik {

using Rng = std::mt19937_64;

struct RandomComplexOptions {
    std::size_t max_generators = 6;
    int min_degree = 0;
    int max_degree = 3;
    Exponent step{1, 4};
    Exponent max_exponent{4};  // differential exponents lie in step*Z within [0, max_exponent]
    Exponent max_level{4};     // levels lie in step*Z within [0, max_level]
};

struct RandomInstance {
    FilteredComplex complex;
    /// Cycles known by construction (images of elementary cycles and
    /// boundaries); random cycles are drawn from their span.
    std::vector<Chain> cycles;
    std::string family;  // "sparse" or "conjugated"
};

/// Either a rejection-sampled sparse complex or an elementary complex
/// (dS = t^b T plus free cycles) conjugated by a unitriangular,
/// filtration-preserving monomial change of basis.
RandomInstance random_complex(Rng& rng, const RandomComplexOptions& opts = {});
RandomInstance random_sparse_complex(Rng& rng, const RandomComplexOptions& opts = {});
RandomInstance random_conjugated_complex(Rng& rng, const RandomComplexOptions& opts = {});

/// Random combination of instance cycles of one degree, coefficients monomials
/// t^a with a in step*Z within [0, 2].  May be zero.
Chain random_cycle(Rng& rng, const RandomInstance& inst, const Exponent& step = Exponent(1, 4));

/// Random capped complex with at most `max_orbits` orbits, a common period
/// in {0, 1}, chern_step 0 and exponents respecting the capping lattice.
CappedComplex random_capped_complex(Rng& rng, std::size_t max_orbits, const Exponent& period);

/// Random capped chain of degree k (terms with capping index in [-1, 1]).
CappedChain random_capped_chain(Rng& rng, const CappedComplex& complex, int k);

struct DetectionInstance {
    FilteredComplex complex;
    Chain zeta;
    DetectionFunctional functional;
    Exponent Eplus;
    Exponent margin;
    std::string variant;  // "planted" or the hypothesis that was broken on purpose
};

/// Elementary complex with a cycle z, conjugated by A; the functional is
/// (coefficient of t^0 z) composed with A, and zeta = A^-1(z + boundaries).
/// With `break_hypothesis` one hypothesis is violated on purpose.
DetectionInstance random_detection_instance(Rng& rng, bool break_hypothesis);

}  // namespace novik
