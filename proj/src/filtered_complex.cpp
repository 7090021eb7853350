#include "novik/filtered_complex.hpp"

#include <algorithm>

namespace novik {

// Chain -----------------------------------------------------------------------

Chain::Chain(std::initializer_list<std::pair<const std::string, NovikovScalar>> init) {
    for (const auto& [label, x] : init) add_term(label, x);
}

Chain Chain::generator(const std::string& label, const Exponent& a) {
    Chain c;
    c.add_term(label, NovikovScalar::monomial(a));
    return c;
}

const NovikovScalar& Chain::coefficient(const std::string& label) const {
    static const NovikovScalar zero;
    auto it = terms_.find(label);
    return it == terms_.end() ? zero : it->second;
}

void Chain::add_term(const std::string& label, const NovikovScalar& x) {
    if (x.is_zero() && x.is_exact()) return;
    auto [it, inserted] = terms_.try_emplace(label, x);
    if (!inserted) it->second += x;
    if (it->second.is_zero()) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& o) {
    for (const auto& [label, x] : o.terms_) add_term(label, x);
    return *this;
}

Chain operator*(const NovikovScalar& s, const Chain& c) {
    Chain r;
    for (const auto& [label, x] : c.terms_) r.add_term(label, s * x);
    return r;
}

Chain Chain::shifted(const Exponent& a) const {
    Chain r;
    for (const auto& [label, x] : terms_) r.terms_.emplace(label, x.shifted(a));
    return r;
}

// FilteredComplex ---------------------------------------------------------------

FilteredComplex::FilteredComplex(std::vector<Generator> generators,
                                 const std::vector<DifferentialEntry>& differential)
    : generators_(std::move(generators)), differential_(generators_.size()) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!index_.emplace(generators_[i].label, i).second) {
            throw ParseError("duplicate generator label '" + generators_[i].label + "'");
        }
    }
    for (const auto& e : differential) {
        if (!has(e.from)) throw ParseError("differential refers to unknown generator '" + e.from + "'");
        if (!has(e.to)) throw ParseError("differential refers to unknown generator '" + e.to + "'");
        differential_[index_of(e.from)].add_term(e.to, e.coefficient);
    }
}

std::size_t FilteredComplex::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw PreconditionError("unknown generator '" + label + "'");
    return it->second;
}

const Generator& FilteredComplex::generator(const std::string& label) const {
    return generators_[index_of(label)];
}

const Chain& FilteredComplex::d(const std::string& label) const { return differential_[index_of(label)]; }

Chain FilteredComplex::apply_d(const Chain& c) const {
    Chain r;
    for (const auto& [label, x] : c.terms()) r += x * d(label);
    return r;
}

std::vector<DifferentialEntry> FilteredComplex::entries() const {
    std::vector<DifferentialEntry> out;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (const auto& [to, x] : differential_[i].terms()) out.push_back({generators_[i].label, to, x});
    }
    return out;
}

std::vector<int> FilteredComplex::degrees() const {
    std::vector<int> ds;
    for (const auto& g : generators_) ds.push_back(g.degree);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

Exponent FilteredComplex::min_level() const {
    if (generators_.empty()) return Exponent(0);
    Exponent m = generators_.front().level;
    for (const auto& g : generators_) m = min(m, g.level);
    return m;
}

Exponent FilteredComplex::max_level() const {
    if (generators_.empty()) return Exponent(0);
    Exponent m = generators_.front().level;
    for (const auto& g : generators_) m = max(m, g.level);
    return m;
}

std::string to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::grading: return "grading";
        case Violation::Kind::filtration: return "filtration";
        case Violation::Kind::d_squared: return "d_squared";
        case Violation::Kind::windowed_entry: return "windowed_entry";
    }
    return "unknown";
}

ValidationReport validate(const FilteredComplex& complex) {
    ValidationReport report;
    for (const auto& g : complex.generators()) {
        for (const auto& [to, x] : complex.d(g.label).terms()) {
            const Generator& h = complex.generator(to);
            if (!x.is_exact()) {
                report.violations.push_back({Violation::Kind::windowed_entry, g.label, to,
                                             "differential coefficient " + x.str() + " is not exact"});
            }
            if (h.degree != g.degree - 1) {
                report.violations.push_back({Violation::Kind::grading, g.label, to,
                                             "degree " + std::to_string(h.degree) + " != " +
                                                 std::to_string(g.degree) + " - 1"});
            }
            if (!x.is_zero()) {
                const Exponent top = h.level - x.terms().front();
                if (!(top < g.level)) {
                    report.violations.push_back({Violation::Kind::filtration, g.label, to,
                                                 "term t^{" + x.terms().front().str() + "}" + to + " has level " +
                                                     top.str() + " >= " + g.level.str()});
                }
            }
        }
        const Chain dd = complex.apply_d(complex.d(g.label));
        for (const auto& [to, x] : dd.terms()) {
            report.violations.push_back({Violation::Kind::d_squared, g.label, to,
                                         "d(d(" + g.label + ")) has coefficient " + x.str() + " on " + to});
        }
    }
    return report;
}

ExtendedRational ell(const FilteredComplex& complex, const Chain& chain) {
    ExtendedRational best = ExtendedRational::neg_inf();
    for (const auto& [label, x] : chain.terms()) {
        if (x.is_zero()) continue;
        best = max(best, ExtendedRational(complex.generator(label).level - x.terms().front()));
    }
    return best;
}

std::optional<int> chain_degree(const FilteredComplex& complex, const Chain& chain) {
    std::optional<int> deg;
    for (const auto& [label, x] : chain.terms()) {
        const int d = complex.generator(label).degree;
        if (deg && *deg != d) throw PreconditionError("chain is not homogeneous in degree");
        deg = d;
    }
    return deg;
}

// Capped model -------------------------------------------------------------------

Exponent CappedGenerator::area(long m) const {
    if (period.is_zero() && m != 0) {
        throw PreconditionError("invalid recapping of '" + label + "': capping class is unique (period 0)");
    }
    return area_base + Exponent(m) * period;
}

int degree(const CappedGenerator& g, long m) {
    if (g.period.is_zero() && m != 0) {
        throw PreconditionError("invalid recapping of '" + g.label + "': capping class is unique (period 0)");
    }
    return static_cast<int>(g.half_dim - g.cz - 2 * (g.kappa0 + m * g.chern_step));
}

void toggle(CappedChain& c, const std::string& label, long m) {
    auto key = std::make_pair(label, m);
    auto it = c.find(key);
    if (it == c.end()) {
        c.emplace(key, true);
    } else {
        c.erase(it);
    }
}

Exponent capped_action(const CappedGenerator& g, long m) { return g.h_integral - g.area(m); }

std::optional<long> capping_index(const CappedGenerator& g, const Exponent& a) {
    if (g.period.is_zero()) {
        if (a == g.area_base) return 0L;
        return std::nullopt;
    }
    const Rational q = (a - g.area_base) / g.period;
    if (!q.is_integer()) return std::nullopt;
    return q.numerator().get_si();
}

CappedComplex::CappedComplex(std::vector<CappedGenerator> generators,
                             const std::vector<DifferentialEntry>& differential)
    : generators_(std::move(generators)), differential_(differential) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (!index_.emplace(g.label, i).second) throw ParseError("duplicate generator label '" + g.label + "'");
        if (g.period.sign() < 0) throw ParseError("negative period for '" + g.label + "'");
    }
    for (const auto& e : differential_) {
        if (index_.count(e.from) == 0) throw ParseError("differential refers to unknown generator '" + e.from + "'");
        if (index_.count(e.to) == 0) throw ParseError("differential refers to unknown generator '" + e.to + "'");
    }
}

const CappedGenerator& CappedComplex::generator(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw PreconditionError("unknown generator '" + label + "'");
    return generators_[it->second];
}

FilteredComplex CappedComplex::lambda_view() const {
    std::vector<Generator> gens;
    for (const auto& g : generators_) {
        if (g.chern_step != 0) {
            throw PreconditionError("Lambda view needs chern_step = 0 (grading of '" + g.label +
                                    "' depends on the capping)");
        }
        gens.push_back({g.label, g.h_integral, degree(g, 0)});
    }
    return FilteredComplex(std::move(gens), differential_);
}

std::optional<std::string> CappedComplex::lattice_violation() const {
    for (const auto& e : differential_) {
        const auto& src = generator(e.from);
        const auto& dst = generator(e.to);
        for (const auto& b : e.coefficient.terms()) {
            // t^{area_src(m)} src maps to t^{area_src(m) + b} dst, which must be a capping of dst
            // for every m.
            if (!capping_index(dst, src.area_base + b)) {
                return "exponent " + b.str() + " on " + e.from + "->" + e.to + " leaves the capping lattice";
            }
            if (src.period != dst.period && !src.period.is_zero()) {
                return "periods of " + e.from + " and " + e.to + " differ";
            }
        }
    }
    return std::nullopt;
}

Chain iota(const CappedComplex& complex, const CappedChain& chain) {
    Chain out;
    for (const auto& [key, present] : chain) {
        if (!present) continue;
        const auto& g = complex.generator(key.first);
        out.add_term(key.first, NovikovScalar::monomial(g.area(key.second)));
    }
    return out;
}

bool pi_k_member(const CappedComplex& complex, const std::string& label, const Exponent& a, int k) {
    const auto& g = complex.generator(label);
    auto m = capping_index(g, a);
    if (!m) return true;
    return degree(g, *m) != k;
}

}  // namespace novik
