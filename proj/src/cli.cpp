#include "novik/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "novik/io.hpp"
#include "novik/kunneth.hpp"
#include "novik/lattice_search.hpp"
#include "novik/random_complexes.hpp"

namespace novik::cli {

namespace {

using io::Json;

struct Report {
    Json json;
    std::string table;
    int code = 0;
};

/// Aligned columns.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            s += r[c];
            if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
        }
        os << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    return os.str();
}

std::string chain_text(const Chain& c) {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [label, x] : c.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + x.str() + ")" + label;
    }
    return s;
}

const std::string& input(const RunConfig& cfg, std::size_t i) {
    if (cfg.inputs.size() <= i) {
        throw ParseError("command '" + cfg.command + "' needs " + std::to_string(i + 1) + " input file(s)");
    }
    return cfg.inputs[i];
}

FilteredComplex load_complex(const RunConfig& cfg, std::size_t i) {
    const Json j = io::read_json_file(input(cfg, i));
    if (io::is_capped_document(j)) return io::capped_complex_from_json(j).lambda_view();
    return io::complex_from_json(j);
}

Chain load_chain(const RunConfig& cfg, const FilteredComplex& c) {
    if (!cfg.chain) throw ParseError("command '" + cfg.command + "' needs --chain");
    Json j = io::read_json_file(*cfg.chain);
    std::string path;
    if (j.is_object() && j.contains("zeta")) {
        j = Json(j["zeta"]);
        path = "/zeta";
    }
    Chain z = io::chain_from_json(j, path);
    for (const auto& [label, x] : z.terms()) {
        if (!c.has(label)) throw ParseError(*cfg.chain + ": " + path + "/" + label + ": unknown generator");
    }
    return z;
}

Report cmd_validate(const RunConfig& cfg) {
    const Json j = io::read_json_file(input(cfg, 0));
    Report r;
    Json violations = Json::array();
    std::vector<std::vector<std::string>> rows;
    auto add = [&](const std::string& kind, const std::string& from, const std::string& to, const std::string& detail) {
        violations.push_back(Json{{"kind", kind}, {"from", from}, {"to", to}, {"detail", detail}});
        rows.push_back({kind, from, to, detail});
    };
    if (io::is_capped_document(j)) {
        const CappedComplex cc = io::capped_complex_from_json(j);
        if (auto v = cc.lattice_violation()) add("capping_lattice", "", "", *v);
        const bool graded = std::all_of(cc.generators().begin(), cc.generators().end(),
                                        [](const CappedGenerator& g) { return g.chern_step == 0; });
        if (graded) {
            for (const auto& v : validate(cc.lambda_view()).violations) add(to_string(v.kind), v.from, v.to, v.detail);
        }
    } else {
        for (const auto& v : validate(io::complex_from_json(j)).violations) {
            add(to_string(v.kind), v.from, v.to, v.detail);
        }
    }
    r.code = violations.empty() ? 0 : 1;
    r.json = Json{{"valid", violations.empty()}, {"violations", violations}};
    r.table = violations.empty() ? "valid\n" : "invalid\n" + render_table({"kind", "from", "to", "detail"}, rows);
    return r;
}

Exponent window_for(const RunConfig& cfg, const FilteredComplex& c) {
    if (!cfg.window) return default_window(c);
    if (cfg.window->sign() <= 0) throw PreconditionError("--window must be positive");
    return *cfg.window;
}

Report cmd_svd(const RunConfig& cfg) {
    const FilteredComplex c = load_complex(cfg, 0);
    const SVDBasis b = svd(c, window_for(cfg, c));
    Report r;
    r.json = io::to_json(b, c);
    std::vector<std::vector<std::string>> rows;
    for (const auto& z : b.cycles) rows.push_back({"Z", std::to_string(z.degree), z.ell.str(), "", chain_text(z.Z), ""});
    for (const auto& p : b.pairs) {
        rows.push_back({"S,T", std::to_string(p.degree), p.ell_S.str(), p.ell_T.str(), chain_text(p.S), chain_text(p.T)});
    }
    r.table = render_table({"kind", "degree", "ell", "ell_T", "vector", "dS"}, rows) +
              "window " + b.window.str() + (b.window_limited ? " (window-limited)\n" : " (certified)\n");
    return r;
}

Report cmd_spectral(const RunConfig& cfg) {
    const FilteredComplex c = load_complex(cfg, 0);
    const Chain z = load_chain(cfg, c);
    const ExtendedRational v = spectral_invariant(c, z);
    Report r;
    r.json = Json{{"spectral_invariant", io::to_json(v)}, {"ell", io::to_json(ell(c, z))}};
    r.table = v.str() + "\n";
    return r;
}

Report cmd_depth(const RunConfig& cfg) {
    const FilteredComplex c = load_complex(cfg, 0);
    const SVDBasis b = svd(c, window_for(cfg, c));
    Exponent beta(0);
    for (const auto& p : b.pairs) beta = max(beta, p.length());
    Report r;
    r.json = Json{{"boundary_depth", beta.str()}, {"certified", !b.window_limited}};
    r.table = beta.str() + "\n";
    return r;
}

Report cmd_barcode(const RunConfig& cfg) {
    const FilteredComplex c = load_complex(cfg, 0);
    const SVDBasis b = svd(c, window_for(cfg, c));
    const Barcode bc = barcode(b);
    Report r;
    r.json = io::to_json(bc);
    r.json["certified"] = !b.window_limited;
    std::vector<std::vector<std::string>> rows;
    for (const auto& bar : bc.finite) {
        rows.push_back({std::to_string(bar.degree), bar.birth.str(), bar.death->str(), (*bar.death - bar.birth).str()});
    }
    for (const auto& bar : bc.infinite) rows.push_back({std::to_string(bar.degree), bar.birth.str(), "inf", "inf"});
    r.table = render_table({"degree", "birth", "death", "length"}, rows);
    return r;
}

Report cmd_binary(const RunConfig& cfg, bool is_tensor) {
    const FilteredComplex a = load_complex(cfg, 0);
    const FilteredComplex b = load_complex(cfg, 1);
    const FilteredComplex c = is_tensor ? tensor(a, b) : direct_sum(a, b);
    Report r;
    r.json = io::to_json(c);
    r.table = io::dump(r.json);
    return r;
}

Report cmd_extension(const RunConfig& cfg) {
    const CappedComplex cc = io::capped_complex_from_json(io::read_json_file(input(cfg, 0)));
    if (!cfg.chain) throw ParseError("command 'extension' needs --chain");
    if (!cfg.degree) throw ParseError("command 'extension' needs --degree");
    const CappedChain zeta = io::capped_chain_from_json(io::read_json_file(*cfg.chain));
    const FilteredComplex view = cc.lambda_view();
    const ExtensionCheck e = extension_distance_check(cc, *cfg.degree, zeta, window_for(cfg, view));
    Report r;
    r.code = e.agree ? 0 : 1;
    r.json = Json{{"capped_side", io::to_json(e.left)},
                  {"lambda_side", io::to_json(e.right)},
                  {"capped_below_floor", e.left_below_floor},
                  {"lambda_below_floor", e.right_below_floor},
                  {"floor", e.floor.str()},
                  {"variables", e.variables},
                  {"agree", e.agree},
                  {"agreement", e.agreement}};
    r.table = kv_table({{"capped side", e.left.str()},
                        {"lambda side", e.right.str()},
                        {"floor", e.floor.str()},
                        {"variables", std::to_string(e.variables)},
                        {"agreement", e.agreement}});
    return r;
}

Report cmd_detect(const RunConfig& cfg) {
    const io::DetectionDocument d = io::detection_from_json(io::read_json_file(input(cfg, 0)));
    const DetectionReport rep = detection_bound(d.complex, d.zeta, d.functional, d.Eplus, d.margin);
    Report r;
    r.code = rep.outcome == DetectionReport::Outcome::bound ? 0 : 1;
    r.json = io::to_json(rep);
    std::vector<std::pair<std::string, std::string>> rows{{"outcome", to_string(rep.outcome)}};
    if (rep.bound) rows.emplace_back("bound", rep.bound->str());
    if (!rep.failed_hypothesis.empty()) rows.emplace_back("failed hypothesis", rep.failed_hypothesis);
    if (!rep.witness.empty()) rows.emplace_back("witness", rep.witness);
    rows.emplace_back("boundary depth", rep.boundary_depth.str());
    rows.emplace_back("representatives checked", std::to_string(rep.representatives_checked));
    r.table = kv_table(rows);
    return r;
}

Report cmd_spectrum_ta(const RunConfig& cfg) {
    const io::TorusDocument doc = io::torus_from_json(io::read_json_file(input(cfg, 0)));
    validate(doc.deformation);
    const Exponent kstar = k_threshold(doc.deformation);
    std::vector<std::pair<std::string, std::vector<Exponent>>> spectra;
    Json grid = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : doc.t_grid) {
        auto s = deformed_spectrum(doc.deformation, t);
        Json values = Json::array();
        std::string text;
        for (const auto& v : s) {
            values.push_back(v.str());
            text += (text.empty() ? "" : " ") + v.str();
        }
        grid.push_back(Json{{"t_def", t.str()}, {"spectrum", values}});
        rows.push_back({t.str(), text});
        spectra.emplace_back("t_def=" + t.str(), std::move(s));
    }
    const StabilityVerdict v = stability_check(spectra);
    Report r;
    r.code = v.pass ? 0 : 1;
    Json witness = Json(nullptr);
    if (!v.pass) {
        Json a = Json::array();
        Json b = Json::array();
        for (const auto& x : v.only_in_reference) a.push_back(x.str());
        for (const auto& x : v.only_in_sample) b.push_back(x.str());
        witness = Json{{"parameter", *v.parameter}, {"only_in_reference", a}, {"only_in_sample", b}};
    }
    r.json = Json{{"k_threshold", kstar.str()}, {"k", doc.deformation.k.str()}, {"stable", v.pass},
                  {"grid", grid},          {"witness", witness}};
    r.table = "k* = " + kstar.str() + ", k = " + doc.deformation.k.str() + "\n" +
              render_table({"t_def", "spectrum"}, rows) + (v.pass ? "stable\n" : "unstable at " + *v.parameter + "\n");
    return r;
}

Report cmd_spectrum_contact(const RunConfig& cfg) {
    const ContactProfile p = io::contact_profile_from_json(io::read_json_file(input(cfg, 0)));
    validate(p);
    const auto spectrum = contact_spectrum(p);
    const GapVerdict g = spectrum_gap(p);
    const Exponent bound = three_way_bound(p);
    Report r;
    r.code = g.pass ? 0 : 1;
    Json elems = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : spectrum) {
        elems.push_back(io::to_json(e));
        rows.push_back({e.lo.str(), e.hi.str(), e.source, e.period ? e.period->str() : "constant"});
    }
    r.json = Json{{"spectrum", elems},
                  {"three_way_bound", bound.str()},
                  {"gap", g.gap ? Json(g.gap->str()) : Json(nullptr)},
                  {"pass", g.pass},
                  {"witness", g.witness ? io::to_json(*g.witness) : Json(nullptr)}};
    r.table = render_table({"lo", "hi", "source", "period"}, rows) + "three-way bound " + bound.str() + ", gap " +
              (g.gap ? g.gap->str() : "none") + (g.pass ? ": pass\n" : ": FAIL at " + g.witness->source + "\n");
    return r;
}

Report cmd_toric(const RunConfig& cfg) {
    const auto pts = io::toric_points_from_json(io::read_json_file(input(cfg, 0)));
    if (pts.empty()) throw PreconditionError("toric bound needs at least one point");
    const Exponent b = toric_bound(pts);
    const ObstructionVerdict ob = ball_embedding_obstruction(b);
    Report r;
    Json per = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& a : pts) {
        std::string text;
        Json coords = Json::array();
        for (const auto& x : a) {
            coords.push_back(x.str());
            text += (text.empty() ? "" : ",") + x.str();
        }
        per.push_back(Json{{"point", coords}, {"hbar_lower", fiber_hbar_lower(a).str()}});
        rows.push_back({"(" + text + ")", fiber_hbar_lower(a).str()});
    }
    r.json = Json{{"toric_bound", b.str()}, {"points", per}, {"ball_embedding", ob.verdict}};
    r.table = render_table({"point", "hbar lower"}, rows) + "toric bound " + b.str() + "\nball embedding " +
              ob.verdict + "\n";
    return r;
}

Report cmd_ledger(const RunConfig& cfg) {
    const auto entries = io::ledger_from_json(io::read_json_file(input(cfg, 0)));
    CapacityLedger ledger;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        try {
            ledger.add(entries[i]);
        } catch (const PreconditionError& e) {
            throw PreconditionError("/entries/" + std::to_string(i) + ": " + e.what());
        }
    }
    const auto contra = ledger.contradictions();
    Report r;
    r.code = contra.empty() ? 0 : 1;
    Json cj = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : contra) {
        cj.push_back(Json{{"quantity", c.quantity}, {"lower", io::to_json(c.lower)}, {"upper", io::to_json(c.upper)}});
        rows.push_back({c.quantity, c.lower.value.str() + " (" + c.lower.tag + ")",
                        c.upper.value.str() + " (" + c.upper.tag + ")"});
    }
    Json ej = Json::array();
    for (const auto& e : ledger.entries()) ej.push_back(io::to_json(e));
    r.json = Json{{"consistent", contra.empty()}, {"entries", ej}, {"contradictions", cj}};
    r.table = contra.empty() ? "consistent (" + std::to_string(entries.size()) + " entries)\n"
                             : render_table({"quantity", "lower", "upper"}, rows);
    return r;
}

Report cmd_oracle(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    Report r;
    Json instances = Json::array();
    std::vector<std::vector<std::string>> rows;
    bool all = true;
    for (std::size_t i = 0; i < cfg.size; ++i) {
        const RandomInstance inst = random_complex(rng);
        const Chain zeta = random_cycle(rng, inst);
        const ExtendedRational c_svd = spectral_invariant(inst.complex, zeta);
        ExtendedRational c_oracle = ExtendedRational::neg_inf();
        std::string c_note;
        if (!zeta.is_zero()) {
            const DistanceSearch s = oracle_distance(inst.complex, zeta);
            c_oracle = s.value;
            if (s.reached_floor) c_note = "<= floor";
        }
        const Exponent b_svd = boundary_depth(inst.complex);
        const Exponent b_oracle = oracle_boundary_depth(inst.complex);
        // A floor hit means the oracle certifies c <= floor, which only an exact class satisfies here.
        const bool c_ok = c_note.empty() ? c_svd == c_oracle : c_svd == ExtendedRational::neg_inf();
        const bool ok = c_ok && b_svd == b_oracle;
        all = all && ok;
        instances.push_back(Json{{"instance", i},
                                 {"family", inst.family},
                                 {"generators", inst.complex.size()},
                                 {"complex", io::to_json(inst.complex)},
                                 {"zeta", io::to_json(zeta)},
                                 {"c_svd", io::to_json(c_svd)},
                                 {"c_oracle", c_note.empty() ? io::to_json(c_oracle) : Json(c_note)},
                                 {"beta_svd", b_svd.str()},
                                 {"beta_oracle", b_oracle.str()},
                                 {"match", ok}});
        rows.push_back({std::to_string(i), inst.family, std::to_string(inst.complex.size()), c_svd.str(),
                        c_note.empty() ? c_oracle.str() : c_note, b_svd.str(), b_oracle.str(), ok ? "ok" : "MISMATCH"});
    }
    r.code = all ? 0 : 1;
    r.json = Json{{"seed", cfg.seed}, {"size", cfg.size}, {"all_match", all}, {"instances", instances}};
    r.table = render_table({"#", "family", "gens", "c_svd", "c_oracle", "beta_svd", "beta_oracle", "verdict"}, rows);
    return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& dispatch() {
    static const std::map<std::string, std::function<Report(const RunConfig&)>> table{
        {"validate", cmd_validate},
        {"svd", cmd_svd},
        {"spectral", cmd_spectral},
        {"depth", cmd_depth},
        {"barcode", cmd_barcode},
        {"tensor", [](const RunConfig& c) { return cmd_binary(c, true); }},
        {"dsum", [](const RunConfig& c) { return cmd_binary(c, false); }},
        {"extension", cmd_extension},
        {"detect", cmd_detect},
        {"spectrum-ta", cmd_spectrum_ta},
        {"spectrum-contact", cmd_spectrum_contact},
        {"toric", cmd_toric},
        {"ledger", cmd_ledger},
        {"oracle", cmd_oracle},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"validate",  "svd",    "spectral",    "depth",
                                                "barcode",   "tensor", "dsum",        "extension",
                                                "detect",    "spectrum-ta", "spectrum-contact", "toric",
                                                "ledger",    "oracle"};
    return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto it = dispatch().find(config.command);
    if (it == dispatch().end()) {
        err << "error: unknown command '" << config.command << "'\n";
        return 2;
    }
    Report r;
    try {
        r = it->second(config);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    }
    const std::string text = config.format == Format::json ? io::dump(r.json) : r.table;
    if (config.out) {
        std::ofstream f(*config.out);
        if (!f) {
            err << "error: cannot write " << *config.out << "\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return r.code;
}

}  // namespace novik::cli
