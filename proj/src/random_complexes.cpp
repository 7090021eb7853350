#include "novik/random_complexes.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "novik/lattice_search.hpp"

namespace novik {

namespace {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Uniform element of step*Z in [lo, hi]; nullopt when empty.
std::optional<Exponent> lattice_point(Rng& rng, const Exponent& lo, const Exponent& hi, const Exponent& step) {
    const mpz_class a = (lo / step).ceil();
    const mpz_class b = (hi / step).floor();
    if (a > b) return std::nullopt;
    const long n = uniform_int(rng, a.get_si(), b.get_si());
    return Exponent(n) * step;
}

std::vector<std::string> shuffled_labels(Rng& rng, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

using LinearMap = std::map<std::string, Chain>;

Chain apply_map(const LinearMap& m, const Chain& c) {
    Chain out;
    for (const auto& [label, x] : c.terms()) out += x * m.at(label);
    return out;
}

struct Elementary {
    std::vector<Generator> gens;
    std::vector<DifferentialEntry> d;
    std::vector<std::pair<std::string, std::string>> pairs;  // (S, T)
    std::vector<std::string> free_cycles;
};

// Strictly triangular in a random order, same degree, strictly lowering level.
std::pair<LinearMap, LinearMap> random_unitriangular(Rng& rng, const std::vector<Generator>& gens,
                                                     const RandomComplexOptions& opts) {
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    LinearMap N;
    for (const auto& g : gens) N[g.label] = Chain{};
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const Generator& gi = gens[order[a]];
            const Generator& gj = gens[order[b]];
            if (gi.degree != gj.degree || !coin(rng, 0.4)) continue;
            // A(gj) gains t^e gi with level(gi) - e < level(gj).
            auto e = lattice_point(rng, max(Exponent(0), gi.level - gj.level + opts.step), opts.max_exponent, opts.step);
            if (e) N[gj.label].add_term(gi.label, NovikovScalar::monomial(*e));
        }
    }
    LinearMap A;
    LinearMap Ainv;
    for (const auto& g : gens) {
        const Chain unit = Chain::generator(g.label);
        A[g.label] = unit + N[g.label];
        // (1 + N)^-1 = sum N^k in characteristic 2; N is nilpotent.
        Chain sum = unit;
        Chain power = unit;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            power = apply_map(N, power);
            if (power.is_zero()) break;
            sum += power;
        }
        Ainv[g.label] = sum;
    }
    return {A, Ainv};
}

std::optional<FilteredComplex> conjugate(const Elementary& el, const LinearMap& A, const LinearMap& Ainv,
                                         const RandomComplexOptions& opts) {
    const FilteredComplex base(el.gens, el.d);
    std::vector<DifferentialEntry> entries;
    for (const auto& g : el.gens) {
        const Chain image = apply_map(Ainv, base.apply_d(A.at(g.label)));
        for (const auto& [to, x] : image.terms()) {
            for (const auto& e : x.terms()) {
                if (e.sign() < 0 || e > opts.max_exponent) return std::nullopt;
            }
            entries.push_back({g.label, to, x});
        }
    }
    FilteredComplex c(el.gens, entries);
    if (!validate(c).ok()) return std::nullopt;
    return c;
}

std::optional<Elementary> random_elementary(Rng& rng, const RandomComplexOptions& opts) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(opts.max_generators)));
    const std::size_t p = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n / 2)));
    const auto labels = shuffled_labels(rng, n);
    Elementary el;
    std::size_t next = 0;
    for (std::size_t i = 0; i < p; ++i) {
        if (opts.max_degree <= opts.min_degree) break;
        const int dt = static_cast<int>(uniform_int(rng, opts.min_degree, opts.max_degree - 1));
        const Exponent ls = *lattice_point(rng, Exponent(0), opts.max_level, opts.step);
        const Exponent lt = *lattice_point(rng, Exponent(0), opts.max_level, opts.step);
        auto b = lattice_point(rng, max(Exponent(0), lt - ls + opts.step), opts.max_exponent, opts.step);
        if (!b) return std::nullopt;
        const std::string s = labels[next++];
        const std::string t = labels[next++];
        el.gens.push_back({s, ls, dt + 1});
        el.gens.push_back({t, lt, dt});
        el.d.push_back({s, t, NovikovScalar::monomial(*b)});
        el.pairs.emplace_back(s, t);
    }
    while (next < n) {
        const std::string z = labels[next++];
        el.gens.push_back({z, *lattice_point(rng, Exponent(0), opts.max_level, opts.step),
                           static_cast<int>(uniform_int(rng, opts.min_degree, opts.max_degree))});
        el.free_cycles.push_back(z);
    }
    std::sort(el.gens.begin(), el.gens.end(), [](const Generator& a, const Generator& b) { return a.label < b.label; });
    return el;
}

}  // namespace

RandomInstance random_conjugated_complex(Rng& rng, const RandomComplexOptions& opts) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto el = random_elementary(rng, opts);
        if (!el) continue;
        auto [A, Ainv] = random_unitriangular(rng, el->gens, opts);
        auto c = conjugate(*el, A, Ainv, opts);
        if (!c) continue;
        RandomInstance inst{*c, {}, "conjugated"};
        for (const auto& z : el->free_cycles) inst.cycles.push_back(apply_map(Ainv, Chain::generator(z)));
        for (const auto& st : el->pairs) inst.cycles.push_back(apply_map(Ainv, Chain::generator(st.second)));
        return inst;
    }
    throw std::runtime_error("could not sample a conjugated complex");
}

RandomInstance random_sparse_complex(Rng& rng, const RandomComplexOptions& opts) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(opts.max_generators)));
        const auto labels = shuffled_labels(rng, n);
        std::vector<Generator> gens;
        for (std::size_t i = 0; i < n; ++i) {
            gens.push_back({labels[i], *lattice_point(rng, Exponent(0), opts.max_level, opts.step),
                            static_cast<int>(uniform_int(rng, opts.min_degree, opts.max_degree))});
        }
        std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) { return a.label < b.label; });
        std::vector<DifferentialEntry> d;
        for (const auto& g : gens) {
            for (const auto& h : gens) {
                if (h.degree != g.degree - 1 || !coin(rng, 0.5)) continue;
                std::vector<Exponent> terms;
                const long count = uniform_int(rng, 1, 2);
                for (long t = 0; t < count; ++t) {
                    auto e = lattice_point(rng, max(Exponent(0), h.level - g.level + opts.step), opts.max_exponent,
                                           opts.step);
                    if (e) terms.push_back(*e);
                }
                NovikovScalar x(terms);
                if (!x.is_zero()) d.push_back({g.label, h.label, x});
            }
        }
        FilteredComplex c(gens, d);
        if (!validate(c).ok()) continue;
        RandomInstance inst{c, {}, "sparse"};
        for (const auto& g : c.generators()) {
            const Chain& dg = c.d(g.label);
            inst.cycles.push_back(dg.is_zero() ? Chain::generator(g.label) : dg);
        }
        return inst;
    }
    throw std::runtime_error("could not sample a sparse complex");
}

RandomInstance random_complex(Rng& rng, const RandomComplexOptions& opts) {
    return coin(rng, 0.5) ? random_conjugated_complex(rng, opts) : random_sparse_complex(rng, opts);
}

Chain random_cycle(Rng& rng, const RandomInstance& inst, const Exponent& step) {
    std::map<int, std::vector<const Chain*>> by_degree;
    for (const auto& c : inst.cycles) {
        if (auto d = chain_degree(inst.complex, c)) by_degree[*d].push_back(&c);
    }
    if (by_degree.empty()) return {};
    auto it = by_degree.begin();
    std::advance(it, uniform_int(rng, 0, static_cast<long>(by_degree.size()) - 1));
    Chain out;
    bool any = false;
    for (const Chain* c : it->second) {
        if (!coin(rng, 0.5)) continue;
        any = true;
        out += c->shifted(*lattice_point(rng, Exponent(0), Exponent(2), step));
    }
    if (!any) out = it->second[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(it->second.size()) - 1))]
                        ->shifted(*lattice_point(rng, Exponent(0), Exponent(2), step));
    return out;
}

CappedComplex random_capped_complex(Rng& rng, std::size_t max_orbits, const Exponent& period) {
    const Exponent step(1, 4);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_orbits)));
        const auto labels = shuffled_labels(rng, n);
        std::vector<CappedGenerator> gens;
        for (std::size_t i = 0; i < n; ++i) {
            CappedGenerator g;
            g.label = labels[i];
            g.half_dim = 2;
            const int deg = static_cast<int>(uniform_int(rng, 0, 2));
            g.cz = g.half_dim - deg;
            g.kappa0 = 0;
            g.chern_step = 0;
            g.h_integral = *lattice_point(rng, Exponent(0), Exponent(4), step);
            g.period = period;
            g.area_base = period.is_zero() ? *lattice_point(rng, Exponent(0), Exponent(2), step)
                                           : *lattice_point(rng, Exponent(0), period - step, step);
            gens.push_back(g);
        }
        std::sort(gens.begin(), gens.end(),
                  [](const CappedGenerator& a, const CappedGenerator& b) { return a.label < b.label; });
        std::vector<DifferentialEntry> d;
        for (const auto& g : gens) {
            for (const auto& h : gens) {
                if (degree(h, 0) != degree(g, 0) - 1 || !coin(rng, 0.6)) continue;
                const Exponent shift = h.area_base - g.area_base;
                // Strict filtration: h.level - b < g.level.
                const Exponent need = h.h_integral - g.h_integral;
                std::vector<Exponent> terms;
                if (period.is_zero()) {
                    if (shift > need) terms.push_back(shift);
                } else {
                    // Smallest b = shift + j period with b > need.
                    const mpz_class j0 = ((need - shift) / period).floor() + 1;
                    const Exponent b0 = shift + Exponent(mpq_class(j0)) * period;
                    const long count = uniform_int(rng, 1, 2);
                    for (long t = 0; t < count; ++t) terms.push_back(b0 + Exponent(uniform_int(rng, 0, 2)) * period);
                }
                NovikovScalar x(terms);
                if (!x.is_zero()) d.push_back({g.label, h.label, x});
            }
        }
        CappedComplex cc(gens, d);
        if (cc.lattice_violation()) continue;
        if (!validate(cc.lambda_view()).ok()) continue;
        return cc;
    }
    throw std::runtime_error("could not sample a capped complex");
}

CappedChain random_capped_chain(Rng& rng, const CappedComplex& complex, int k) {
    CappedChain out;
    for (const auto& g : complex.generators()) {
        if (degree(g, 0) != k) continue;
        const long lo = g.period.is_zero() ? 0 : -1;
        const long hi = g.period.is_zero() ? 0 : 1;
        for (long m = lo; m <= hi; ++m) {
            if (coin(rng, 0.5)) toggle(out, g.label, m);
        }
    }
    return out;
}

DetectionInstance random_detection_instance(Rng& rng, bool break_hypothesis) {
    RandomComplexOptions opts;
    const Exponent step = opts.step;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // z and w are free cycles of degree 1; (s1, t1), (s2, t2) pair degree 2 with 1; (s3, t3) pairs 1 with 0.
        Elementary el;
        auto level = [&] { return *lattice_point(rng, Exponent(0), opts.max_level, step); };
        el.gens.push_back({"z", level(), 1});
        el.gens.push_back({"w", level(), 1});
        el.free_cycles = {"z", "w"};
        const int npairs = static_cast<int>(uniform_int(rng, 1, 2));
        bool ok = true;
        auto add_pair = [&](const std::string& s, const std::string& t, int ds) {
            const Exponent ls = level();
            const Exponent lt = level();
            auto b = lattice_point(rng, max(Exponent(0), lt - ls + step), opts.max_exponent, step);
            if (!b) {
                ok = false;
                return;
            }
            el.gens.push_back({s, ls, ds});
            el.gens.push_back({t, lt, ds - 1});
            el.d.push_back({s, t, NovikovScalar::monomial(*b)});
            el.pairs.emplace_back(s, t);
        };
        for (int i = 1; i <= npairs; ++i) add_pair("s" + std::to_string(i), "t" + std::to_string(i), 2);
        add_pair("s3", "t3", 1);
        if (!ok) continue;
        auto [A, Ainv] = random_unitriangular(rng, el.gens, opts);
        auto c = conjugate(el, A, Ainv, opts);
        if (!c) continue;

        // zeta = A^-1 (z + sum t^c t_i) with the added boundaries below l(z).
        Chain base = Chain::generator("z");
        const Exponent lz = c->generator("z").level;
        for (int i = 1; i <= npairs; ++i) {
            if (!coin(rng, 0.6)) continue;
            const std::string t = "t" + std::to_string(i);
            auto sh = lattice_point(rng, max(Exponent(0), c->generator(t).level - lz + step), Exponent(3), step);
            if (sh) base.add_term(t, NovikovScalar::monomial(*sh));
        }
        Chain zeta = apply_map(Ainv, base);

        // e = (coefficient of t^0 z) o A: t^a g is in the support iff A(g) has t^-a z.
        DetectionFunctional e;
        for (const auto& g : el.gens) {
            for (const auto& ex : A.at(g.label).coefficient("z").terms()) e.support.emplace_back(g.label, -ex);
        }
        const Exponent margin = coin(rng, 0.5) ? Exponent(1, 4) : Exponent(1, 2);
        const Exponent Eplus = ell(*c, zeta).value();
        const Exponent depth = boundary_depth(*c);
        e.threshold = depth + Eplus + Exponent(2) * margin + *lattice_point(rng, Exponent(0), Exponent(1), step);

        DetectionInstance inst{*c, zeta, e, Eplus, margin, "planted"};
        if (break_hypothesis) {
            switch (uniform_int(rng, 0, 5)) {
                case 0:
                    inst.variant = "threshold";
                    inst.functional.threshold = depth + Eplus + Exponent(2) * margin - step;
                    break;
                case 1:
                    inst.variant = "e(zeta)";
                    inst.zeta = apply_map(Ainv, Chain::generator("w"));
                    inst.Eplus = ell(*c, inst.zeta).value();
                    break;
                case 2:
                    inst.variant = "margin";
                    inst.margin = Exponent(0);
                    break;
                case 3:
                    inst.variant = "cycle";
                    inst.zeta = zeta + apply_map(Ainv, Chain::generator("s3"));
                    inst.Eplus = ell(*c, inst.zeta).value();
                    break;
                case 4:
                    inst.variant = "level";
                    inst.Eplus = Eplus - margin;
                    break;
                default: {
                    inst.variant = "chain functional";
                    // A support monomial hit by d of a degree-2 generator.
                    for (std::size_t h : generators_of_degree(*c, 2)) {
                        const Chain& dh = c->d(h);
                        if (dh.is_zero()) continue;
                        const auto& [label, x] = *dh.terms().begin();
                        inst.functional.support.emplace_back(label, x.terms().front());
                        break;
                    }
                    break;
                }
            }
        }
        // Keep only support monomials below the threshold.
        auto& sup = inst.functional.support;
        sup.erase(std::remove_if(sup.begin(), sup.end(),
                                 [&](const auto& t) {
                                     return !(c->generator(t.first).level - t.second < inst.functional.threshold);
                                 }),
                  sup.end());
        std::sort(sup.begin(), sup.end());
        // Duplicate monomials cancel mod 2.
        std::vector<std::pair<std::string, Exponent>> reduced;
        for (std::size_t i = 0; i < sup.size();) {
            std::size_t j = i;
            while (j < sup.size() && sup[j] == sup[i]) ++j;
            if (((j - i) & 1U) != 0) reduced.push_back(sup[i]);
            i = j;
        }
        sup = std::move(reduced);
        return inst;
    }
    throw std::runtime_error("could not sample a detection instance");
}

}  // namespace novik
