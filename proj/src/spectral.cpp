#include "novik/spectral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "novik/lattice_search.hpp"

namespace novik {

namespace {

NovikovScalar divide_exact(const NovikovScalar& a, const NovikovScalar& b) {
    if (b == NovikovScalar::one()) return a;
    auto q = exact_divide(a, b);
    // Bareiss quotients are minors of the original matrix; a remainder means a bug.
    if (!q) throw std::logic_error("fraction-free elimination produced a non-exact quotient");
    return *q;
}

struct Column {
    std::size_t gen = 0;                 // original generator the column started from
    std::vector<NovikovScalar> image;    // over targets
    std::vector<NovikovScalar> source;   // over sources
    Exponent ell_source;
    bool active = true;
};

struct Extra {
    int degree = 0;
    Chain chain;
};

struct Elimination {
    SVDBasis basis;
    std::optional<ExtendedRational> extra_distance;
};

Exponent ell_dense(const FilteredComplex& complex, const std::vector<std::size_t>& gens,
                   const std::vector<NovikovScalar>& coords) {
    std::optional<Exponent> best;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        Exponent l = complex.generators()[gens[i]].level - coords[i].terms().front();
        best = best ? max(*best, l) : l;
    }
    if (!best) throw std::logic_error("level of a zero vector requested");
    return *best;
}

Chain to_chain(const FilteredComplex& complex, const std::vector<std::size_t>& gens,
               const std::vector<NovikovScalar>& coords) {
    Chain c;
    for (std::size_t i = 0; i < coords.size(); ++i) c.add_term(complex.generators()[gens[i]].label, coords[i]);
    return c;
}

Elimination eliminate(const FilteredComplex& complex, const std::optional<Extra>& extra) {
    Elimination out;
    const std::vector<int> degs = complex.degrees();
    std::set<std::size_t> retired;  // generators replaced by some T
    bool extra_done = false;

    for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
        const int k = *it;
        std::vector<std::size_t> sources;
        for (std::size_t g : generators_of_degree(complex, k)) {
            if (retired.count(g) == 0) sources.push_back(g);
        }
        const std::vector<std::size_t> targets = generators_of_degree(complex, k - 1);
        std::vector<std::size_t> row_of(complex.size(), SIZE_MAX);
        for (std::size_t r = 0; r < targets.size(); ++r) row_of[targets[r]] = r;

        std::vector<Column> cols;
        cols.reserve(sources.size());
        for (std::size_t s = 0; s < sources.size(); ++s) {
            Column c;
            c.gen = sources[s];
            c.image.assign(targets.size(), NovikovScalar{});
            c.source.assign(sources.size(), NovikovScalar{});
            c.source[s] = NovikovScalar::one();
            c.ell_source = complex.generators()[sources[s]].level;
            for (const auto& [to, x] : complex.d(sources[s]).terms()) c.image[row_of[complex.index_of(to)]] = x;
            cols.push_back(std::move(c));
        }
        const bool with_extra = extra && extra->degree == k - 1;
        std::vector<NovikovScalar> extra_col;
        if (with_extra) {
            extra_col.assign(targets.size(), NovikovScalar{});
            for (const auto& [label, x] : extra->chain.terms()) extra_col[row_of[complex.index_of(label)]] = x;
        }

        std::vector<bool> row_active(targets.size(), true);
        NovikovScalar p_prev = NovikovScalar::one();
        while (true) {
            // Lightest active entry.
            std::optional<std::tuple<Exponent, Exponent, std::size_t, std::size_t>> best;  // (w, ell_src, col, row)
            auto better = [&](const Exponent& w, const Exponent& ls, std::size_t h, std::size_t r) {
                if (!best) return true;
                const auto& [bw, bls, bh, br] = *best;
                if (w != bw) return w < bw;
                if (ls != bls) return ls > bls;
                const auto& lh = complex.generators()[cols[h].gen].label;
                const auto& lbh = complex.generators()[cols[bh].gen].label;
                if (lh != lbh) return lh < lbh;
                return complex.generators()[targets[r]].label < complex.generators()[targets[br]].label;
            };
            for (std::size_t h = 0; h < cols.size(); ++h) {
                if (!cols[h].active) continue;
                for (std::size_t r = 0; r < targets.size(); ++r) {
                    if (!row_active[r] || cols[h].image[r].is_zero()) continue;
                    Exponent w = cols[h].ell_source - complex.generators()[targets[r]].level +
                                 cols[h].image[r].terms().front();
                    if (better(w, cols[h].ell_source, h, r)) best = std::make_tuple(w, cols[h].ell_source, h, r);
                }
            }
            if (!best) break;
            const auto [w, ls, hs, rs] = *best;
            Column& piv = cols[hs];
            const NovikovScalar p = piv.image[rs];

            SVDPair pair;
            pair.S = to_chain(complex, sources, piv.source);
            pair.T = to_chain(complex, targets, piv.image);
            pair.ell_S = piv.ell_source;
            pair.ell_T = ell(complex, pair.T).value();
            pair.degree = k;
            if (pair.length() != w) throw std::logic_error("pivot weight differs from the bar length");
            out.basis.pairs.push_back(std::move(pair));

            for (std::size_t h = 0; h < cols.size(); ++h) {
                if (h == hs || !cols[h].active) continue;
                Column& c = cols[h];
                const NovikovScalar factor = c.image[rs];
                for (std::size_t r = 0; r < targets.size(); ++r) {
                    c.image[r] = divide_exact(p * c.image[r] + factor * piv.image[r], p_prev);
                }
                for (std::size_t s = 0; s < sources.size(); ++s) {
                    c.source[s] = divide_exact(p * c.source[s] + factor * piv.source[s], p_prev);
                }
                c.ell_source = ell_dense(complex, sources, c.source);
            }
            if (with_extra) {
                const NovikovScalar factor = extra_col[rs];
                for (std::size_t r = 0; r < targets.size(); ++r) {
                    extra_col[r] = divide_exact(p * extra_col[r] + factor * piv.image[r], p_prev);
                }
            }
            piv.active = false;
            row_active[rs] = false;
            retired.insert(targets[rs]);
            p_prev = p;
        }
        for (const auto& c : cols) {
            if (!c.active) continue;
            out.basis.cycles.push_back({to_chain(complex, sources, c.source), c.ell_source, k});
        }
        if (with_extra) {
            // extra_col = alpha * (component of the input off the image), alpha the last pivot.
            const Chain residual = to_chain(complex, targets, extra_col);
            const ExtendedRational l = ell(complex, residual);
            out.extra_distance = l.is_neg_inf() ? l : l + ExtendedRational(p_prev.terms().front());
            extra_done = true;
        }
    }
    if (extra && !extra_done) out.extra_distance = ell(complex, extra->chain);
    return out;
}

void require_valid(const FilteredComplex& complex) {
    const auto report = validate(complex);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw PreconditionError("complex does not validate: " + to_string(v.kind) + " at " + v.from + "->" + v.to +
                                " (" + v.detail + ")");
    }
}

}  // namespace

Exponent default_window(const FilteredComplex& complex) {
    return complex.max_level() - complex.min_level() + Exponent(1);
}

SVDBasis svd(const FilteredComplex& complex, const Exponent& window) {
    require_valid(complex);
    if (!(window > complex.max_level() - complex.min_level())) {
        throw PreconditionError("window " + window.str() + " does not exceed the level spread " +
                                (complex.max_level() - complex.min_level()).str());
    }
    SVDBasis basis = eliminate(complex, std::nullopt).basis;
    basis.window = window;
    for (std::size_t i = 0; i < basis.pairs.size(); ++i) {
        if (!(basis.pairs[i].length() < window)) {
            basis.window_limited = true;
            if (!basis.offending || basis.pairs[i].length() > basis.pairs[*basis.offending].length()) {
                basis.offending = i;
            }
        }
    }
    return basis;
}

Barcode barcode(const SVDBasis& basis) {
    Barcode bc;
    for (const auto& p : basis.pairs) bc.finite.push_back({p.ell_T, p.ell_S, p.degree - 1});
    for (const auto& z : basis.cycles) bc.infinite.push_back({z.ell, std::nullopt, z.degree});
    auto order = [](const Bar& a, const Bar& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death && b.death) return *a.death < *b.death;
        return false;
    };
    std::stable_sort(bc.finite.begin(), bc.finite.end(), order);
    std::stable_sort(bc.infinite.begin(), bc.infinite.end(), order);
    return bc;
}

ExtendedRational distance_to_boundaries(const FilteredComplex& complex, const Chain& v) {
    require_valid(complex);
    const auto deg = chain_degree(complex, v);
    if (!deg) return ExtendedRational::neg_inf();
    return *eliminate(complex, Extra{*deg, v}).extra_distance;
}

ExtendedRational spectral_invariant(const FilteredComplex& complex, const Chain& zeta) {
    if (!complex.apply_d(zeta).is_zero()) throw PreconditionError("spectral invariant needs a cycle (d(zeta) != 0)");
    return distance_to_boundaries(complex, zeta);
}

Exponent boundary_depth(const FilteredComplex& complex) {
    require_valid(complex);
    Exponent best(0);
    for (const auto& p : eliminate(complex, std::nullopt).basis.pairs) best = max(best, p.length());
    return best;
}

// Detection -------------------------------------------------------------------------

bool evaluate(const DetectionFunctional& e, const Chain& chain) {
    bool v = false;
    for (const auto& [label, a] : e.support) {
        if (chain.coefficient(label).contains(a)) v = !v;
    }
    return v;
}

std::string to_string(DetectionReport::Outcome o) {
    switch (o) {
        case DetectionReport::Outcome::bound: return "bound";
        case DetectionReport::Outcome::not_applicable: return "not_applicable";
        case DetectionReport::Outcome::detection_failure: return "detection_failure";
    }
    return "unknown";
}

DetectionReport detection_bound(const FilteredComplex& complex, const Chain& zeta, const DetectionFunctional& e,
                                const Exponent& Eplus, const Exponent& margin) {
    DetectionReport rep;
    auto fail = [&](const std::string& hyp, const std::string& witness) {
        rep.outcome = DetectionReport::Outcome::not_applicable;
        rep.failed_hypothesis = hyp;
        rep.witness = witness;
        return rep;
    };
    auto check = [&](const std::string& hyp) { rep.hypotheses.push_back(hyp); };

    check("margin > 0");
    if (margin.sign() <= 0) return fail("margin > 0", "margin = " + margin.str());

    check("zeta is homogeneous with known labels");
    std::optional<int> deg;
    try {
        deg = chain_degree(complex, zeta);
    } catch (const PreconditionError& err) {
        return fail("zeta is homogeneous with known labels", err.what());
    }

    check("support lies in the degree of zeta, below the threshold");
    for (const auto& [label, a] : e.support) {
        if (!complex.has(label)) return fail("support lies in the degree of zeta, below the threshold", "unknown label " + label);
        const auto& g = complex.generator(label);
        if (deg && g.degree != *deg) {
            return fail("support lies in the degree of zeta, below the threshold",
                        "t^{" + a.str() + "}" + label + " has degree " + std::to_string(g.degree));
        }
        if (!(g.level - a < e.threshold)) {
            return fail("support lies in the degree of zeta, below the threshold",
                        "t^{" + a.str() + "}" + label + " has level " + (g.level - a).str());
        }
    }

    check("e(zeta) = 1");
    if (!evaluate(e, zeta)) return fail("e(zeta) = 1", "e(zeta) = 0");

    check("d(zeta) = 0");
    const Chain dz = complex.apply_d(zeta);
    if (!dz.is_zero()) return fail("d(zeta) = 0", "d(zeta) has a term on " + dz.terms().begin()->first);

    check("l(zeta) < Eplus + margin");
    const ExtendedRational lz = ell(complex, zeta);
    if (!(lz < ExtendedRational(Eplus + margin))) return fail("l(zeta) < Eplus + margin", "l(zeta) = " + lz.str());

    check("threshold >= boundary depth + Eplus + 2 margin");
    SVDBasis basis;
    try {
        basis = svd(complex, default_window(complex));
    } catch (const PreconditionError& err) {
        return fail("threshold >= boundary depth + Eplus + 2 margin", err.what());
    }
    Exponent depth(0);
    for (const auto& p : basis.pairs) depth = max(depth, p.length());
    rep.boundary_depth = depth;
    if (e.threshold < depth + Eplus + Exponent(2) * margin) {
        return fail("threshold >= boundary depth + Eplus + 2 margin",
                    "threshold " + e.threshold.str() + " < " + (depth + Eplus + Exponent(2) * margin).str());
    }

    check("e vanishes on d of every monomial below the threshold");
    for (std::size_t h : generators_of_degree(complex, *deg + 1)) {
        const Chain& dh = complex.d(h);
        std::set<Exponent> shifts;
        for (const auto& [label, a] : e.support) {
            for (const auto& t : dh.coefficient(label).terms()) shifts.insert(a - t);
        }
        for (const auto& a2 : shifts) {
            if (!(complex.generators()[h].level - a2 < e.threshold)) continue;
            if (evaluate(e, dh.shifted(a2))) {
                return fail("e vanishes on d of every monomial below the threshold",
                            "e(d(t^{" + a2.str() + "}" + complex.generators()[h].label + ")) = 1");
            }
        }
    }

    // Replay: every representative of level < Eplus + margin is zeta plus
    // monomial multiples t^a T_i of level < Eplus + margin.
    const Exponent ceiling = Eplus + margin;
    std::vector<bool> reachable(e.support.size(), false);
    for (std::size_t s = 0; s < e.support.size(); ++s) {
        if (zeta.coefficient(e.support[s].first).contains(e.support[s].second)) reachable[s] = true;
    }
    for (std::size_t i = 0; i < basis.pairs.size(); ++i) {
        const SVDPair& pair = basis.pairs[i];
        if (pair.degree != *deg + 1) continue;
        std::set<Exponent> shifts;
        for (const auto& [label, a] : e.support) {
            for (const auto& t : pair.T.coefficient(label).terms()) shifts.insert(a - t);
        }
        for (const auto& a2 : shifts) {
            if (!(pair.ell_T - a2 < ceiling)) continue;
            ++rep.representatives_checked;
            const Chain shifted_T = pair.T.shifted(a2);
            if (evaluate(e, shifted_T)) {
                rep.outcome = DetectionReport::Outcome::detection_failure;
                rep.witness = "e(t^{" + a2.str() + "} T_" + std::to_string(i) + ") = 1";
                return rep;
            }
            if (!(pair.ell_S - a2 < e.threshold)) {
                rep.outcome = DetectionReport::Outcome::detection_failure;
                rep.witness = "primitive t^{" + a2.str() + "} S_" + std::to_string(i) + " has level " +
                              (pair.ell_S - a2).str() + " >= threshold";
                return rep;
            }
            for (std::size_t s = 0; s < e.support.size(); ++s) {
                if (shifted_T.coefficient(e.support[s].first).contains(e.support[s].second)) reachable[s] = true;
            }
        }
    }
    std::optional<Exponent> bound;
    for (std::size_t s = 0; s < e.support.size(); ++s) {
        if (!reachable[s]) continue;
        const Exponent l = complex.generator(e.support[s].first).level - e.support[s].second;
        bound = bound ? min(*bound, l) : l;
    }
    rep.outcome = DetectionReport::Outcome::bound;
    rep.bound = bound;
    return rep;
}

// Extension ------------------------------------------------------------------------

ExtensionCheck extension_distance_check(const CappedComplex& complex, int k, const CappedChain& zeta,
                                        const Exponent& window) {
    if (window.sign() <= 0) throw PreconditionError("window must be positive");
    for (const auto& [key, present] : zeta) {
        if (!present) continue;
        const int dg = degree(complex.generator(key.first), key.second);
        if (dg != k) {
            throw PreconditionError("zeta term (" + key.first + ", " + std::to_string(key.second) + ") has degree " +
                                    std::to_string(dg) + ", not " + std::to_string(k));
        }
    }
    if (auto bad = complex.lattice_violation()) throw PreconditionError(*bad);
    const FilteredComplex lambda = complex.lambda_view();
    const Chain v = iota(complex, zeta);

    ExtensionCheck out;
    if (v.is_zero()) {
        out.left = out.right = ExtendedRational::neg_inf();
        out.agree = true;
        out.agreement = "exact";
        return out;
    }
    const Exponent top = ell(lambda, v).value();
    const Exponent floor = top - window;
    const Exponent ceiling = top + bar_length_bound(lambda, k + 1);
    out.floor = floor;

    std::vector<LatticeMonomial> vars;
    for (const auto& g : complex.generators()) {
        if (degree(g, 0) != k + 1) continue;
        const std::size_t gi = lambda.index_of(g.label);
        auto in_range = [&](long m) {
            const Exponent l = capped_action(g, m);
            return l > floor && !(l > ceiling);
        };
        if (g.period.is_zero()) {
            if (in_range(0)) vars.push_back({gi, g.area(0)});
            continue;
        }
        // level = h - base - m s in (floor, ceiling]
        const long lo = ((g.h_integral - g.area_base - ceiling) / g.period).ceil().get_si();
        const long hi = ((g.h_integral - g.area_base - floor) / g.period).ceil().get_si();
        for (long m = lo; m < hi; ++m) {
            if (in_range(m)) vars.push_back({gi, g.area(m)});
        }
    }
    out.variables = vars.size();
    const DistanceSearch left = lattice_distance(lambda, v, vars, floor);
    out.left = left.value;
    out.left_below_floor = left.reached_floor;
    out.right = distance_to_boundaries(lambda, v);
    out.right_below_floor = !(out.right > ExtendedRational(floor));
    if (out.left_below_floor && out.right_below_floor) {
        out.agree = true;
        out.agreement = "below window";
    } else if (!out.left_below_floor && !out.right_below_floor && out.left == out.right) {
        out.agree = true;
        out.agreement = "exact";
    } else {
        out.agree = false;
        out.agreement = "mismatch";
    }
    return out;
}

// Stability -------------------------------------------------------------------------

StabilityVerdict stability_check(const std::vector<std::pair<std::string, std::vector<Exponent>>>& spectra) {
    if (spectra.size() < 2) throw PreconditionError("stability check needs at least two samples");
    StabilityVerdict v;
    std::vector<Exponent> ref = spectra.front().second;
    std::sort(ref.begin(), ref.end());
    for (std::size_t i = 1; i < spectra.size(); ++i) {
        std::vector<Exponent> cur = spectra[i].second;
        std::sort(cur.begin(), cur.end());
        if (cur == ref) continue;
        v.pass = false;
        v.parameter = spectra[i].first;
        std::set_difference(ref.begin(), ref.end(), cur.begin(), cur.end(), std::back_inserter(v.only_in_reference));
        std::set_difference(cur.begin(), cur.end(), ref.begin(), ref.end(), std::back_inserter(v.only_in_sample));
        return v;
    }
    return v;
}

}  // namespace novik
