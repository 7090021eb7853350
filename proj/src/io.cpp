#include "novik/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace novik::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(child(path, key), "missing field");
    return *it;
}

const Json& array_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& a = field(j, key, path);
    if (!a.is_array()) fail(child(path, key), "expected an array");
    return a;
}

std::string string_of(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

long integer_of(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

Exponent exponent_field(const Json& j, const std::string& key, const std::string& path) {
    return exponent_from_json(field(j, key, path), child(path, key));
}

int int_field(const Json& j, const std::string& key, const std::string& path) {
    return static_cast<int>(integer_of(field(j, key, path), child(path, key)));
}

std::string string_field(const Json& j, const std::string& key, const std::string& path) {
    return string_of(field(j, key, path), child(path, key));
}

std::vector<Exponent> exponent_list(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(exponent_from_json(j[i], child(path, i)));
    return out;
}

std::vector<DifferentialEntry> differential_from_json(const Json& j, const std::string& path,
                                                     const std::set<std::string>& labels) {
    std::vector<DifferentialEntry> out;
    if (!j.contains("differential")) return out;
    const Json& d = array_field(j, "differential", path);
    const std::string dp = child(path, "differential");
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::string p = child(dp, i);
        const Json& e = d[i];
        auto exps = exponent_list(field(e, "exponents", p), child(p, "exponents"));
        std::set<Exponent> seen;
        for (std::size_t t = 0; t < exps.size(); ++t) {
            if (!seen.insert(exps[t]).second) fail(child(child(p, "exponents"), t), "repeated exponent");
        }
        std::string from = string_field(e, "from", p);
        std::string to = string_field(e, "to", p);
        if (labels.count(from) == 0) fail(child(p, "from"), "unknown generator '" + from + "'");
        if (labels.count(to) == 0) fail(child(p, "to"), "unknown generator '" + to + "'");
        out.push_back({std::move(from), std::move(to), NovikovScalar(exps)});
    }
    return out;
}

Json differential_to_json(const std::vector<DifferentialEntry>& entries) {
    Json d = Json::array();
    for (const auto& e : entries) {
        Json exps = Json::array();
        for (const auto& t : e.coefficient.terms()) exps.push_back(t.str());
        d.push_back(Json{{"from", e.from}, {"to", e.to}, {"exponents", exps}});
    }
    return d;
}

// Re-raises library errors thrown while building an object with the path of its document.
template <class F>
auto at_path(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (!what.empty() && what[0] == '/') throw;
        fail(path, what);
    }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Exponent exponent_from_json(const Json& j, const std::string& path) {
    const std::string s = string_of(j, path);
    try {
        return Exponent::parse(s);
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Json to_json(const ExtendedRational& x) { return x.str(); }

FilteredComplex complex_from_json(const Json& j, const std::string& path) {
    const Json& gens = array_field(j, "generators", path);
    std::vector<Generator> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string p = child(child(path, "generators"), i);
        // Fields are read into locals: gcc 11 leaks finished members of a
        // braced aggregate when a later initializer throws.
        std::string label = string_field(gens[i], "label", p);
        Exponent level = exponent_field(gens[i], "level", p);
        const int degree = int_field(gens[i], "degree", p);
        out.push_back({std::move(label), std::move(level), degree});
    }
    std::set<std::string> labels;
    for (const auto& g : out) labels.insert(g.label);
    auto d = differential_from_json(j, path, labels);
    return at_path(path, [&] { return FilteredComplex(out, d); });
}

Json to_json(const FilteredComplex& c) {
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(Json{{"label", g.label}, {"level", g.level.str()}, {"degree", g.degree}});
    return Json{{"generators", gens}, {"differential", differential_to_json(c.entries())}};
}

bool is_capped_document(const Json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) return false;
    const Json& g = j["generators"];
    return !g.empty() && g[0].is_object() && g[0].contains("h_integral");
}

CappedGenerator capped_generator_from_json(const Json& j, const std::string& p) {
    CappedGenerator g;
    g.label = string_field(j, "label", p);
    g.h_integral = exponent_field(j, "h_integral", p);
    g.cz = int_field(j, "cz", p);
    g.kappa0 = int_field(j, "kappa0", p);
    g.chern_step = int_field(j, "chern_step", p);
    g.area_base = exponent_field(j, "area_base", p);
    g.period = exponent_field(j, "period", p);
    g.half_dim = int_field(j, "half_dim", p);
    if (g.period.sign() < 0) fail(child(p, "period"), "period must be nonnegative");
    return g;
}

Json to_json(const CappedGenerator& g) {
    return Json{{"label", g.label},         {"h_integral", g.h_integral.str()}, {"cz", g.cz},
                {"kappa0", g.kappa0},       {"chern_step", g.chern_step},      {"area_base", g.area_base.str()},
                {"period", g.period.str()}, {"half_dim", g.half_dim}};
}

CappedComplex capped_complex_from_json(const Json& j, const std::string& path) {
    const Json& gens = array_field(j, "generators", path);
    std::vector<CappedGenerator> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        out.push_back(capped_generator_from_json(gens[i], child(child(path, "generators"), i)));
    }
    std::set<std::string> labels;
    for (const auto& g : out) labels.insert(g.label);
    auto d = differential_from_json(j, path, labels);
    return at_path(path, [&] { return CappedComplex(out, d); });
}

Json to_json(const CappedComplex& c) {
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(to_json(g));
    return Json{{"generators", gens}, {"differential", differential_to_json(c.differential())}};
}

Chain chain_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object mapping labels to scalars");
    Chain out;
    for (const auto& [label, value] : j.items()) {
        const std::string p = child(path, label);
        const std::string text = string_of(value, p);
        NovikovScalar x;
        try {
            x = NovikovScalar::parse(text);
        } catch (const ParseError& e) {
            fail(p, e.what());
        }
        out.add_term(label, x);
    }
    return out;
}

Json to_json(const Chain& c) {
    Json j = Json::object();
    for (const auto& [label, x] : c.terms()) j[label] = x.str();
    return j;
}

CappedChain capped_chain_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of {label, m}");
    CappedChain out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = child(path, i);
        toggle(out, string_field(j[i], "label", p), integer_of(field(j[i], "m", p), child(p, "m")));
    }
    return out;
}

Json to_json(const CappedChain& c) {
    Json j = Json::array();
    for (const auto& [key, present] : c) {
        if (present) j.push_back(Json{{"label", key.first}, {"m", key.second}});
    }
    return j;
}

DetectionDocument detection_from_json(const Json& j) {
    DetectionDocument d;
    d.complex = complex_from_json(field(j, "complex", ""), "/complex");
    d.zeta = chain_from_json(field(j, "zeta", ""), "/zeta");
    const Json& f = field(j, "functional", "");
    d.functional.threshold = exponent_field(f, "threshold", "/functional");
    const Json& sup = array_field(f, "support", "/functional");
    for (std::size_t i = 0; i < sup.size(); ++i) {
        const std::string p = child("/functional/support", i);
        const std::string label = string_field(sup[i], "label", p);
        if (!d.complex.has(label)) fail(child(p, "label"), "unknown generator '" + label + "'");
        d.functional.support.emplace_back(label, exponent_field(sup[i], "exponent", p));
    }
    for (const auto& [label, x] : d.zeta.terms()) {
        if (!d.complex.has(label)) fail(child("/zeta", label), "unknown generator");
    }
    d.Eplus = exponent_field(j, "Eplus", "");
    d.margin = exponent_field(j, "margin", "");
    return d;
}

TorusDocument torus_from_json(const Json& j) {
    TorusDocument doc;
    TorusDeformation& td = doc.deformation;
    td.a = exponent_field(j, "a", "");
    td.h_sup = exponent_field(j, "h_sup", "");
    td.k = exponent_field(j, "k", "");
    const Json& rho = array_field(j, "rho", "");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const std::string p = child("/rho", i);
        Exponent x = exponent_field(rho[i], "x", p);
        Exponent y = exponent_field(rho[i], "y", p);
        td.rho.push_back({std::move(x), std::move(y)});
    }
    const Json& orbits = array_field(j, "orbits", "");
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        td.orbits.push_back(capped_generator_from_json(orbits[i], child("/orbits", i)));
    }
    if (j.contains("m_min")) td.m_min = integer_of(j["m_min"], "/m_min");
    if (j.contains("m_max")) td.m_max = integer_of(j["m_max"], "/m_max");
    if (j.contains("t_grid")) {
        doc.t_grid = exponent_list(j["t_grid"], "/t_grid");
    } else {
        for (int i = 0; i <= 10; ++i) doc.t_grid.push_back(Exponent(i, 10));
    }
    return doc;
}

ContactProfile contact_profile_from_json(const Json& j) {
    ContactProfile p;
    const Json& bp = array_field(j, "breakpoints", "");
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const std::string path = child("/breakpoints", i);
        Exponent r = exponent_field(bp[i], "r", path);
        Exponent f = exponent_field(bp[i], "f", path);
        p.breakpoints.push_back({std::move(r), std::move(f)});
    }
    p.A = exponent_field(j, "A", "");
    p.delta = exponent_field(j, "delta", "");
    p.r_minus = exponent_field(j, "r_minus", "");
    p.r_plus = exponent_field(j, "r_plus", "");
    p.periods = exponent_list(field(j, "periods", ""), "/periods");
    p.cutoff = exponent_field(j, "cutoff", "");
    return p;
}

Json to_json(const ContactProfile& p) {
    Json bp = Json::array();
    for (const auto& q : p.breakpoints) bp.push_back(Json{{"r", q.x.str()}, {"f", q.y.str()}});
    Json periods = Json::array();
    for (const auto& t : p.periods) periods.push_back(t.str());
    return Json{{"breakpoints", bp},          {"A", p.A.str()},         {"delta", p.delta.str()},
                {"r_minus", p.r_minus.str()}, {"r_plus", p.r_plus.str()}, {"periods", periods},
                {"cutoff", p.cutoff.str()}};
}

Json to_json(const SpectrumElement& e) {
    Json j{{"lo", e.lo.str()}, {"hi", e.hi.str()}, {"source", e.source}};
    j["period"] = e.period ? Json(e.period->str()) : Json(nullptr);
    return j;
}

std::vector<std::vector<Exponent>> toric_points_from_json(const Json& j) {
    const Json& pts = array_field(j, "points", "");
    std::vector<std::vector<Exponent>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string p = child("/points", i);
        auto a = exponent_list(pts[i], p);
        if (a.empty()) fail(p, "a point needs at least one coordinate");
        if (!out.empty() && out.front().size() != a.size()) fail(p, "dimension differs from the first point");
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Certificate> ledger_from_json(const Json& j) {
    const Json& entries = array_field(j, "entries", "");
    std::vector<Certificate> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string p = child("/entries", i);
        const Json& e = entries[i];
        Certificate c;
        c.quantity = string_field(e, "quantity", p);
        c.kind = at_path(child(p, "kind"), [&] { return parse_bound_kind(string_field(e, "kind", p)); });
        c.value = exponent_field(e, "value", p);
        if (e.contains("hypotheses")) {
            const Json& h = array_field(e, "hypotheses", p);
            for (std::size_t t = 0; t < h.size(); ++t) {
                c.hypotheses.push_back(string_of(h[t], child(child(p, "hypotheses"), t)));
            }
        }
        if (e.contains("tag")) c.tag = string_field(e, "tag", p);
        out.push_back(std::move(c));
    }
    return out;
}

Json to_json(const Certificate& c) {
    return Json{{"quantity", c.quantity}, {"kind", to_string(c.kind)}, {"value", c.value.str()},
                {"hypotheses", c.hypotheses}, {"tag", c.tag}};
}

Json to_json(const SVDBasis& b, const FilteredComplex& c) {
    (void)c;
    Json cycles = Json::array();
    for (const auto& z : b.cycles) {
        cycles.push_back(Json{{"degree", z.degree}, {"ell", z.ell.str()}, {"Z", to_json(z.Z)}});
    }
    Json pairs = Json::array();
    for (const auto& p : b.pairs) {
        pairs.push_back(Json{{"degree", p.degree},
                             {"ell_S", p.ell_S.str()},
                             {"ell_T", p.ell_T.str()},
                             {"length", p.length().str()},
                             {"S", to_json(p.S)},
                             {"T", to_json(p.T)}});
    }
    Json j{{"window", b.window.str()}, {"certified", !b.window_limited}, {"cycles", cycles}, {"pairs", pairs}};
    if (b.offending) j["window_limited_pair"] = *b.offending;
    return j;
}

Json to_json(const Barcode& b) {
    Json finite = Json::array();
    for (const auto& bar : b.finite) {
        finite.push_back(Json{{"degree", bar.degree}, {"birth", bar.birth.str()}, {"death", bar.death->str()}});
    }
    Json infinite = Json::array();
    for (const auto& bar : b.infinite) infinite.push_back(Json{{"degree", bar.degree}, {"birth", bar.birth.str()}});
    return Json{{"finite", finite}, {"infinite", infinite}};
}

Json to_json(const DetectionReport& r) {
    Json j{{"outcome", to_string(r.outcome)}};
    j["bound"] = r.bound ? Json(r.bound->str()) : Json(nullptr);
    j["failed_hypothesis"] = r.failed_hypothesis;
    j["witness"] = r.witness;
    j["hypotheses"] = r.hypotheses;
    j["representatives_checked"] = r.representatives_checked;
    j["boundary_depth"] = r.boundary_depth.str();
    return j;
}

}  // namespace novik::io
