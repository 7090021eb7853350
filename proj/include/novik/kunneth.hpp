#pragma once

#include <string>
#include <vector>

#include "novik/filtered_complex.hpp"
#include "novik/spectral.hpp"

namespace novik {

/// "(l1|l2)".
std::string pair_label(const std::string& l1, const std::string& l2);

/// Generators (g, h) with added levels and degrees; d = d x 1 + 1 x d
/// (no signs in characteristic 2).
FilteredComplex tensor(const FilteredComplex& c1, const FilteredComplex& c2);

/// zeta1 x zeta2 inside tensor(c1, c2).
Chain tensor_chain(const Chain& zeta1, const Chain& zeta2);

/// Labels "1:x" and "2:x".
FilteredComplex direct_sum(const FilteredComplex& c1, const FilteredComplex& c2);

/// Relabels a chain of c1 (which = 1) or c2 (which = 2) into the direct sum.
Chain summand_chain(const Chain& zeta, int which);

struct ProductFormulaReport {
    ExtendedRational c1;
    ExtendedRational c2;
    ExtendedRational c_product;
    bool holds = false;
};

/// c(zeta1 x zeta2) = c(zeta1) + c(zeta2), with -inf absorbing.
ProductFormulaReport verify_product_formula(const FilteredComplex& c1, const Chain& zeta1, const FilteredComplex& c2,
                                            const Chain& zeta2);

struct MaxFormulaReport {
    Exponent beta1;
    Exponent beta2;
    Exponent beta_sum;
    bool holds = false;           // beta_sum = max(beta1, beta2)
    bool barcode_union = false;   // finite bar lengths of the sum = disjoint union
};

MaxFormulaReport verify_max_formula(const FilteredComplex& c1, const FilteredComplex& c2);

}  // namespace novik
