#pragma once

#include "infcomp/family.hpp"
#include "infcomp/series.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace infcomp::cli {

enum class Command { certify, eval, series, poincare, verify, grid };
enum class Format { json, csv };

struct GridSpec {
    double re_min = -1.0;
    double re_max = 1.0;
    double im_min = -1.0;
    double im_max = 1.0;
    std::size_t steps = 11;
};

struct RunConfig {
    Command command = Command::verify;
    std::optional<FactorFamily> family;
    Complex z;
    /// Multiplier for the poincare command.
    Complex s;
    std::optional<double> base_radius;
    double epsilon = 1e-9;
    std::size_t degree = 16;
    std::size_t max_factors = 1'000'000;
    GridSpec grid;
    std::string output = "-";
    Format format = Format::json;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCertification = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitVerifyFailed = 4;

struct Outcome {
    int exit_code = kExitOk;
    std::string document;
};

/// Builds and validates a config from arguments (program name excluded).
/// Throws ValidationError on bad input.
RunConfig parse_args(const std::vector<std::string> &args);

/// Produces the output document for a validated config. Library errors are
/// mapped to exit statuses and returned, never thrown.
Outcome run(const RunConfig &config, std::ostream &diagnostics);

/// Full pipeline: parse, run, write the document to config.output.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace infcomp::cli
