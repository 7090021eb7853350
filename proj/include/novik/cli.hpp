#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "novik/rational.hpp"

namespace novik::cli {

enum class Format { json, table };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<Exponent> window;
    Format format = Format::table;
    std::uint64_t seed = 1;
    std::size_t size = 10;
    std::optional<std::string> out;
    std::optional<std::string> chain;
    std::optional<int> degree;
};

const std::vector<std::string>& commands();

/// Runs one command.  Exit codes: 0 success, 1 a checked property is false
/// (the report carries a witness), 2 input or precondition error (message on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace novik::cli
