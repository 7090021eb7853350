#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "novik/capacity.hpp"
#include "novik/filtered_complex.hpp"
#include "novik/model_hamiltonians.hpp"
#include "novik/spectral.hpp"

namespace novik::io {

using Json = nlohmann::ordered_json;

/// Parses text as JSON; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

// Every reader throws ParseError("<json pointer>: <problem>") on schema errors.

Exponent exponent_from_json(const Json& j, const std::string& path);
Json to_json(const ExtendedRational& x);

FilteredComplex complex_from_json(const Json& j, const std::string& path = "");
Json to_json(const FilteredComplex& c);

/// A capped document is a complex document whose generators carry
/// h_integral, cz, kappa0, chern_step, area_base, period and half_dim.
bool is_capped_document(const Json& j);
CappedComplex capped_complex_from_json(const Json& j, const std::string& path = "");
Json to_json(const CappedComplex& c);

/// {"label": "scalar", ...}, e.g. {"x": "1+t^{1/2}"}.
Chain chain_from_json(const Json& j, const std::string& path = "");
Json to_json(const Chain& c);

/// [{"label": "x", "m": 0}, ...]
CappedChain capped_chain_from_json(const Json& j, const std::string& path = "");
Json to_json(const CappedChain& c);

CappedGenerator capped_generator_from_json(const Json& j, const std::string& path);
Json to_json(const CappedGenerator& g);

struct DetectionDocument {
    FilteredComplex complex;
    Chain zeta;
    DetectionFunctional functional;
    Exponent Eplus;
    Exponent margin;
};
/// {"complex": {...}, "zeta": {...}, "functional": {"threshold", "support": [{"label", "exponent"}]},
///  "Eplus", "margin"}
DetectionDocument detection_from_json(const Json& j);

struct TorusDocument {
    TorusDeformation deformation;
    std::vector<Exponent> t_grid;  // defaults to 11 equally spaced points in [0, 1]
};
/// {"a", "h_sup", "k", "rho": [{"x","y"}], "orbits": [capped generators], "m_min", "m_max", "t_grid"}
TorusDocument torus_from_json(const Json& j);

/// {"breakpoints": [{"r","f"}], "A", "delta", "r_minus", "r_plus", "periods", "cutoff"}
ContactProfile contact_profile_from_json(const Json& j);
Json to_json(const ContactProfile& p);
Json to_json(const SpectrumElement& e);

/// {"points": [["1/3", "1/2"], ...]}
std::vector<std::vector<Exponent>> toric_points_from_json(const Json& j);

/// {"entries": [{"quantity", "kind", "value", "hypotheses", "tag"}]}
std::vector<Certificate> ledger_from_json(const Json& j);
Json to_json(const Certificate& c);

Json to_json(const SVDBasis& b, const FilteredComplex& c);
Json to_json(const Barcode& b);
Json to_json(const DetectionReport& r);

}  // namespace novik::io
