#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "novik/novikov_scalar.hpp"

namespace novik {

/// Finite Lambda-linear combination of generators, keyed by label.
/// Zero coefficients are never stored.
class Chain {
public:
    using Map = std::map<std::string, NovikovScalar>;

    Chain() = default;
    Chain(std::initializer_list<std::pair<const std::string, NovikovScalar>> init);

    static Chain generator(const std::string& label, const Exponent& a = Exponent(0));

    [[nodiscard]] const Map& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const NovikovScalar& coefficient(const std::string& label) const;

    /// Adds `x` to the coefficient of `label` (mod 2).
    void add_term(const std::string& label, const NovikovScalar& x);

    Chain& operator+=(const Chain& o);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    /// Scalar multiple.
    friend Chain operator*(const NovikovScalar& s, const Chain& c);
    [[nodiscard]] Chain shifted(const Exponent& a) const;

    friend bool operator==(const Chain& a, const Chain& b) = default;

private:
    Map terms_;
};

struct Generator {
    std::string label;
    Exponent level;  // action of the orbit
    int degree = 0;
};

/// Differential entry: d(from) contains coefficient * to.
struct DifferentialEntry {
    std::string from;
    std::string to;
    NovikovScalar coefficient;
};

/// Finite filtered Z-graded complex over Lambda with an orthogonal generator
/// basis.  Construction only checks structural well-formedness (unique labels,
/// known labels in d); the chain-complex axioms are checked by validate().
class FilteredComplex {
public:
    FilteredComplex() = default;
    FilteredComplex(std::vector<Generator> generators, const std::vector<DifferentialEntry>& differential);

    [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
    [[nodiscard]] std::size_t size() const { return generators_.size(); }
    [[nodiscard]] bool has(const std::string& label) const { return index_.count(label) != 0; }
    [[nodiscard]] std::size_t index_of(const std::string& label) const;
    [[nodiscard]] const Generator& generator(const std::string& label) const;

    /// d(generator) as a chain.
    [[nodiscard]] const Chain& d(const std::string& label) const;
    [[nodiscard]] const Chain& d(std::size_t index) const { return differential_[index]; }
    /// d applied to an arbitrary chain.
    [[nodiscard]] Chain apply_d(const Chain& c) const;

    /// Entries of d in generator order, then target-label order.
    [[nodiscard]] std::vector<DifferentialEntry> entries() const;

    [[nodiscard]] std::vector<int> degrees() const;
    [[nodiscard]] Exponent min_level() const;
    [[nodiscard]] Exponent max_level() const;

private:
    std::vector<Generator> generators_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Chain> differential_;
};

struct Violation {
    enum class Kind { grading, filtration, d_squared, windowed_entry };
    Kind kind;
    std::string from;  // generator whose differential is at fault
    std::string to;    // witness generator
    std::string detail;
};

std::string to_string(Violation::Kind k);

struct ValidationReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FilteredComplex& complex);

/// l(chain) = max over terms of level(g) - exponent, -inf for the zero chain.
ExtendedRational ell(const FilteredComplex& complex, const Chain& chain);

/// Degree shared by every term of `chain`; nullopt for the zero chain.
/// Throws PreconditionError when the chain is not homogeneous.
std::optional<int> chain_degree(const FilteredComplex& complex, const Chain& chain);

// Capped-orbit model ---------------------------------------------------------

struct CappedGenerator {
    std::string label;
    Exponent h_integral;   // integral of H over the orbit
    int cz = 0;            // Conley-Zehnder index
    int kappa0 = 0;        // Chern pairing of the base capping
    int chern_step = 0;    // change of the Chern pairing per recapping
    Exponent area_base;    // area of the base capping
    Exponent period;       // generator of the area lattice; 0 means a unique capping
    int half_dim = 0;

    /// Area of capping class m.  Throws for m != 0 when period = 0.
    [[nodiscard]] Exponent area(long m) const;
};

/// n - CZ - 2 (kappa0 + m * chern_step).
int degree(const CappedGenerator& g, long m);

/// Capped chain over Z/2: a set of (label, capping index) pairs.
using CappedChain = std::map<std::pair<std::string, long>, bool>;

/// Adds (label, m) to a capped chain mod 2.
void toggle(CappedChain& c, const std::string& label, long m);

/// Capped complex: the differential is stored in its Lambda form,
/// d(t^0 g) = sum t^b g', and must map capped orbits to capped orbits.
class CappedComplex {
public:
    CappedComplex() = default;
    CappedComplex(std::vector<CappedGenerator> generators, const std::vector<DifferentialEntry>& differential);

    [[nodiscard]] const std::vector<CappedGenerator>& generators() const { return generators_; }
    [[nodiscard]] const CappedGenerator& generator(const std::string& label) const;
    [[nodiscard]] const std::vector<DifferentialEntry>& differential() const { return differential_; }

    /// The Lambda complex seen through iota: level(g) = h_integral, degree
    /// = degree(g, 0).  Needs chern_step = 0 everywhere so that the grading
    /// does not depend on the capping.
    [[nodiscard]] FilteredComplex lambda_view() const;

    /// Checks that every differential exponent sends a capping of the source
    /// to a capping of the target.  Returns a description of the first
    /// offending entry.
    [[nodiscard]] std::optional<std::string> lattice_violation() const;

private:
    std::vector<CappedGenerator> generators_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<DifferentialEntry> differential_;
};

/// iota: (g, m) -> t^{area(m)} g.
Chain iota(const CappedComplex& complex, const CappedChain& chain);

/// Action of a capped orbit in the iota convention: h_integral - area(m).
Exponent capped_action(const CappedGenerator& g, long m);

/// True iff t^a g is not iota of a degree-k capped orbit.
bool pi_k_member(const CappedComplex& complex, const std::string& label, const Exponent& a, int k);

/// The capping index m with area(m) = a, if any.
std::optional<long> capping_index(const CappedGenerator& g, const Exponent& a);

}  // namespace novik
