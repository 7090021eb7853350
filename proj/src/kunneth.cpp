#include "novik/kunneth.hpp"

#include <algorithm>

namespace novik {

std::string pair_label(const std::string& l1, const std::string& l2) { return "(" + l1 + "|" + l2 + ")"; }

FilteredComplex tensor(const FilteredComplex& c1, const FilteredComplex& c2) {
    std::vector<Generator> gens;
    std::vector<DifferentialEntry> diff;
    for (const auto& g : c1.generators()) {
        for (const auto& h : c2.generators()) {
            gens.push_back({pair_label(g.label, h.label), g.level + h.level, g.degree + h.degree});
            const std::string from = pair_label(g.label, h.label);
            for (const auto& [to, x] : c1.d(g.label).terms()) diff.push_back({from, pair_label(to, h.label), x});
            for (const auto& [to, x] : c2.d(h.label).terms()) diff.push_back({from, pair_label(g.label, to), x});
        }
    }
    return FilteredComplex(std::move(gens), diff);
}

Chain tensor_chain(const Chain& zeta1, const Chain& zeta2) {
    Chain out;
    for (const auto& [l1, x1] : zeta1.terms()) {
        for (const auto& [l2, x2] : zeta2.terms()) out.add_term(pair_label(l1, l2), x1 * x2);
    }
    return out;
}

FilteredComplex direct_sum(const FilteredComplex& c1, const FilteredComplex& c2) {
    std::vector<Generator> gens;
    std::vector<DifferentialEntry> diff;
    auto absorb = [&](const FilteredComplex& c, const std::string& prefix) {
        for (const auto& g : c.generators()) gens.push_back({prefix + g.label, g.level, g.degree});
        for (const auto& e : c.entries()) diff.push_back({prefix + e.from, prefix + e.to, e.coefficient});
    };
    absorb(c1, "1:");
    absorb(c2, "2:");
    return FilteredComplex(std::move(gens), diff);
}

Chain summand_chain(const Chain& zeta, int which) {
    const std::string prefix = std::to_string(which) + ":";
    Chain out;
    for (const auto& [label, x] : zeta.terms()) out.add_term(prefix + label, x);
    return out;
}

ProductFormulaReport verify_product_formula(const FilteredComplex& c1, const Chain& zeta1, const FilteredComplex& c2,
                                            const Chain& zeta2) {
    ProductFormulaReport r;
    r.c1 = spectral_invariant(c1, zeta1);
    r.c2 = spectral_invariant(c2, zeta2);
    r.c_product = spectral_invariant(tensor(c1, c2), tensor_chain(zeta1, zeta2));
    const ExtendedRational expected =
        (r.c1.is_neg_inf() || r.c2.is_neg_inf()) ? ExtendedRational::neg_inf() : r.c1 + r.c2;
    r.holds = r.c_product == expected;
    return r;
}

MaxFormulaReport verify_max_formula(const FilteredComplex& c1, const FilteredComplex& c2) {
    MaxFormulaReport r;
    const auto lengths = [](const FilteredComplex& c) {
        std::vector<Exponent> out;
        for (const auto& p : svd(c, default_window(c)).pairs) out.push_back(p.length());
        std::sort(out.begin(), out.end());
        return out;
    };
    const FilteredComplex sum = direct_sum(c1, c2);
    const auto l1 = lengths(c1);
    const auto l2 = lengths(c2);
    const auto ls = lengths(sum);
    r.beta1 = l1.empty() ? Exponent(0) : l1.back();
    r.beta2 = l2.empty() ? Exponent(0) : l2.back();
    r.beta_sum = ls.empty() ? Exponent(0) : ls.back();
    r.holds = r.beta_sum == max(r.beta1, r.beta2);
    std::vector<Exponent> both = l1;
    both.insert(both.end(), l2.begin(), l2.end());
    std::sort(both.begin(), both.end());
    r.barcode_union = both == ls;
    return r;
}

}  // namespace novik
