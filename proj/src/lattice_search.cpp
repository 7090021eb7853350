#include "novik/lattice_search.hpp"

#include <algorithm>

namespace novik {

std::vector<std::size_t> generators_of_degree(const FilteredComplex& complex, int degree) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < complex.size(); ++i) {
        if (complex.generators()[i].degree == degree) out.push_back(i);
    }
    return out;
}

std::vector<LatticeMonomial> lattice_monomials(const FilteredComplex& complex, const std::vector<std::size_t>& gens,
                                               const Exponent& step, const Exponent& lo, const Exponent& hi) {
    if (step.sign() <= 0) throw PreconditionError("lattice step must be positive");
    std::vector<LatticeMonomial> out;
    for (std::size_t g : gens) {
        const Exponent& level = complex.generators()[g].level;
        // level - e in (lo, hi]  <=>  e in [level - hi, level - lo)
        const mpz_class first = ((level - hi) / step).ceil();
        const mpz_class last_excl = ((level - lo) / step).ceil();
        for (mpz_class n = first; n < last_excl; ++n) {
            out.push_back({g, Rational(mpq_class(n)) * step});
        }
    }
    return out;
}

Exponent lattice_step(const FilteredComplex& complex, const std::vector<Chain>& extra) {
    mpz_class q = 1;
    auto absorb = [&](const Rational& r) {
        mpz_class den = r.denominator();
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
    };
    auto absorb_chain = [&](const Chain& c) {
        for (const auto& [label, x] : c.terms()) {
            for (const auto& e : x.terms()) absorb(e);
        }
    };
    for (std::size_t i = 0; i < complex.size(); ++i) {
        absorb(complex.generators()[i].level);
        absorb_chain(complex.d(i));
    }
    for (const auto& c : extra) absorb_chain(c);
    return Rational(mpq_class(mpz_class(1), q));
}

Exponent bar_length_bound(const FilteredComplex& complex, int k) {
    Exponent total(0);
    for (std::size_t h : generators_of_degree(complex, k)) {
        std::optional<Exponent> column_max;
        for (const auto& [to, x] : complex.d(h).terms()) {
            if (x.is_zero()) continue;
            const Exponent e = complex.generators()[h].level - complex.generator(to).level + x.max_exponent();
            column_max = column_max ? max(*column_max, e) : e;
        }
        if (column_max) total += *column_max;
    }
    return total;
}

LatticeImage::LatticeImage(const FilteredComplex& complex, const Chain& base, std::vector<LatticeMonomial> vars)
    : complex_(&complex), base_(base), vars_(std::move(vars)) {
    std::map<std::pair<std::size_t, Exponent>, std::pair<std::vector<std::size_t>, bool>> table;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        const auto& var = vars_[v];
        for (const auto& [to, x] : complex.d(var.gen).terms()) {
            const std::size_t g = complex.index_of(to);
            for (const auto& t : x.terms()) table[{g, var.exponent + t}].first.push_back(v);
        }
    }
    for (const auto& [label, x] : base.terms()) {
        const std::size_t g = complex.index_of(label);
        for (const auto& e : x.terms()) {
            auto& slot = table[{g, e}];
            slot.second = !slot.second;
        }
    }
    positions_.reserve(table.size());
    for (auto& [key, entry] : table) {
        Position p{key.first, key.second, complex.generators()[key.first].level - key.second, gf2::Row(vars_.size()),
                   entry.second};
        for (std::size_t v : entry.first) p.row.flip(v);
        if (!p.row.any() && !p.constant) continue;
        positions_.push_back(std::move(p));
    }
    std::stable_sort(positions_.begin(), positions_.end(),
                     [](const Position& a, const Position& b) { return a.level > b.level; });
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        lookup_.emplace(std::make_pair(positions_[i].gen, positions_[i].exponent), i);
    }
}

std::optional<std::size_t> LatticeImage::find(std::size_t gen, const Exponent& exponent) const {
    auto it = lookup_.find({gen, exponent});
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Chain LatticeImage::evaluate(const gf2::Row& x) const {
    Chain out = base_;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        if (!x.test(v)) continue;
        const auto& var = vars_[v];
        out += complex_->d(var.gen).shifted(var.exponent);
    }
    return out;
}

DistanceSearch lattice_distance(const FilteredComplex& complex, const Chain& base,
                                const std::vector<LatticeMonomial>& vars, const std::optional<Exponent>& floor) {
    const LatticeImage image(complex, base, vars);
    DistanceSearch result;
    result.floor = floor;
    result.variables = vars.size();
    result.positions = image.positions().size();
    gf2::Echelon system(vars.size());
    const auto& pos = image.positions();
    for (std::size_t i = 0; i < pos.size();) {
        const Exponent level = pos[i].level;
        if (floor && !(level > *floor)) break;
        // Require every position of this level to vanish; the group fails as a whole.
        gf2::Echelon trial = system;
        bool consistent = true;
        std::size_t j = i;
        for (; j < pos.size() && pos[j].level == level; ++j) {
            if (trial.insert(pos[j].row, pos[j].constant) == gf2::Echelon::Outcome::inconsistent) consistent = false;
        }
        if (!consistent) {
            result.value = level;
            gf2::Row x = system.solution();
            Chain beta;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                if (x.test(v)) beta.add_term(complex.generators()[vars[v].gen].label,
                                             NovikovScalar::monomial(vars[v].exponent));
            }
            result.minimizer = std::move(beta);
            return result;
        }
        system = std::move(trial);
        i = j;
    }
    result.value = ExtendedRational::neg_inf();
    result.reached_floor = floor.has_value();
    return result;
}

DistanceSearch oracle_distance(const FilteredComplex& complex, const Chain& zeta, const std::optional<Exponent>& floor) {
    const auto deg = chain_degree(complex, zeta);
    if (!deg) {
        DistanceSearch r;
        r.floor = floor;
        return r;
    }
    const Exponent step = lattice_step(complex, {zeta});
    const Exponent top = ell(complex, zeta).value();
    Exponent lowest_term = top;
    for (const auto& [label, x] : zeta.terms()) {
        lowest_term = min(lowest_term, complex.generator(label).level - x.max_exponent());
    }
    const Exponent bound = bar_length_bound(complex, *deg + 1);
    const Exponent fl = floor ? *floor : lowest_term - bound - step;
    const auto vars = lattice_monomials(complex, generators_of_degree(complex, *deg + 1), step, fl, top + bound);
    return lattice_distance(complex, zeta, vars, fl);
}

DepthSearch lattice_boundary_depth_in_degree(const FilteredComplex& complex, int k, const Exponent& ymax) {
    const Exponent step = lattice_step(complex);
    DepthSearch out{Exponent(0), ymax, 0, 0};
    auto vars = lattice_monomials(complex, generators_of_degree(complex, k + 1), step, Exponent(0), ymax);
    // Columns ordered by level ascending so that "level <= B" is a prefix.
    std::stable_sort(vars.begin(), vars.end(), [&](const LatticeMonomial& a, const LatticeMonomial& b) {
        return complex.generators()[a.gen].level - a.exponent < complex.generators()[b.gen].level - b.exponent;
    });
    out.variables = vars.size();
    if (vars.empty()) return out;
    const LatticeImage image(complex, Chain{}, vars);
    gf2::Echelon constraints(vars.size());
    gf2::Echelon stacked(vars.size());
    for (const auto& p : image.positions()) {
        if (p.level > Exponent(0)) {
            constraints.insert(p.row);
            stacked.insert(p.row);
        }
    }
    for (const auto& p : image.positions()) {
        if (p.level == Exponent(0)) stacked.insert(p.row);
    }
    // dim V(B) = rank of stacked rows on the prefix minus rank of constraints on the prefix.
    const std::size_t full = stacked.rank() - constraints.rank();
    out.window_dimension = full;
    if (full == 0) return out;
    std::size_t rank_c = 0;
    std::size_t rank_s = 0;
    for (std::size_t c = 0; c < vars.size(); ++c) {
        rank_c += constraints.is_pivot(c) ? 1 : 0;
        rank_s += stacked.is_pivot(c) ? 1 : 0;
        const Exponent level = complex.generators()[vars[c].gen].level - vars[c].exponent;
        const bool end_of_level = c + 1 == vars.size() ||
                                  complex.generators()[vars[c + 1].gen].level - vars[c + 1].exponent != level;
        if (end_of_level && rank_s - rank_c == full) {
            out.depth = level;
            return out;
        }
    }
    out.depth = ymax;
    return out;
}

Exponent oracle_boundary_depth(const FilteredComplex& complex) {
    Exponent best(0);
    for (int k : complex.degrees()) {
        if (generators_of_degree(complex, k + 1).empty()) continue;
        const Exponent ymax = bar_length_bound(complex, k + 1);
        best = max(best, lattice_boundary_depth_in_degree(complex, k, ymax).depth);
    }
    return best;
}

}  // namespace novik
