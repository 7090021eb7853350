#pragma once

// Hand-rolled generators shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "novik/novikov_scalar.hpp"
#include "novik/random_complexes.hpp"

namespace testing {

using novik::Exponent;
using novik::NovikovScalar;
using novik::Rng;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// n * step with n uniform in [lo, hi].
inline Exponent grid(Rng& rng, long lo, long hi, const Exponent& step = Exponent(1, 4)) {
    return Exponent(uniform(rng, lo, hi)) * step;
}

/// Exact scalar with up to `max_terms` terms, exponents in (1/4)Z within [lo/4, hi/4].
inline NovikovScalar random_scalar(Rng& rng, std::size_t max_terms = 4, long lo = -8, long hi = 16) {
    std::vector<Exponent> terms;
    const long n = uniform(rng, 0, static_cast<long>(max_terms));
    for (long i = 0; i < n; ++i) terms.push_back(grid(rng, lo, hi));
    return NovikovScalar(terms);
}

inline NovikovScalar random_nonzero_scalar(Rng& rng, std::size_t max_terms = 4, long lo = -8, long hi = 16) {
    for (;;) {
        NovikovScalar x = random_scalar(rng, max_terms, lo, hi);
        if (!x.is_zero()) return x;
    }
}

}  // namespace testing
