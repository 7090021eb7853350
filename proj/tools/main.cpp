#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "novik/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Filtered Novikov complexes: spectral invariants, boundary depth and action spectra"};
    app.require_subcommand(1, 1);

    novik::cli::RunConfig cfg;
    std::string window;
    std::string format = "table";
    std::string degree;

    const std::map<std::string, std::string> about{
        {"validate", "check grading, filtration and d^2 = 0 of a complex document"},
        {"svd", "orthogonal basis (Z; S, T) with dS = T"},
        {"spectral", "spectral invariant of the class of --chain"},
        {"depth", "boundary depth (longest finite bar)"},
        {"barcode", "finite and infinite bars"},
        {"tensor", "tensor product of two complexes"},
        {"dsum", "direct sum of two complexes"},
        {"extension", "compare capped and Lambda distances for --chain in --degree"},
        {"detect", "lower bound from a chain-level detection functional"},
        {"spectrum-ta", "deformed torus spectrum over the t_def grid"},
        {"spectrum-contact", "action spectrum of a contact-type bump profile"},
        {"toric", "max-min fiber bound and ball-embedding verdict"},
        {"ledger", "check a capacity ledger for contradictions"},
        {"oracle", "random complexes: elimination against the lattice oracle"},
    };

    for (const auto& name : novik::cli::commands()) {
        CLI::App* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("inputs", cfg.inputs, "input documents");
        sub->add_option("--window", window, "truncation window, an exact rational");
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--size", cfg.size, "number of random instances");
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        sub->add_option("--chain", cfg.chain, "chain document");
        sub->add_option("--degree", degree, "degree of the chain");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? novik::cli::Format::json : novik::cli::Format::table;
    try {
        if (!window.empty()) cfg.window = novik::Exponent::parse(window);
        if (!degree.empty()) cfg.degree = std::stoi(degree);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return novik::cli::run(cfg, std::cout, std::cerr);
}
