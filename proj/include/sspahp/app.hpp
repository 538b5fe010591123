#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace sspahp {

enum class Command { Weights, Eval, Benchmarks, Sweep, Corr };
enum class WeightingMethod { Ahp, Entropy, Critic, File };
enum class OutputFormat { Table, Csv, Json };

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitNumericalError = 3,
    kExitInconsistentPairwise = 4,
};

struct ProjectConfig {
    Command command = Command::Eval;

    std::optional<std::filesystem::path> matrix_path;
    std::optional<std::filesystem::path> hierarchy_path;
    std::optional<std::filesystem::path> pairwise_path;  // file, or directory of expert files
    std::optional<std::filesystem::path> weights_path;
    std::optional<std::filesystem::path> bounds_path;
    std::optional<std::filesystem::path> out_path;

    WeightingMethod weighting = WeightingMethod::Entropy;
    // corr only: compare sweep rankings against this second weighting.
    std::optional<WeightingMethod> against;

    double s = 0.0;
    // "all" or a comma-separated list of dimension ids ("none" = empty subset).
    // eval/benchmarks: the dimensions s applies to.
    // sweep/corr --against: "all" = every subset, a list = that one subset.
    std::string groups = "all";
    double step = 0.05;
    double tau = 0.02;
    OutputFormat format = OutputFormat::Table;
    bool strict_cr = false;
    unsigned threads = 0;
};

/// Throws InputError when required paths for the chosen command/weighting are missing.
void validate_config(const ProjectConfig& config);

/// Runs one subcommand, writing results to `out` (or config.out_path) and
/// diagnostics to `err`. Returns an ExitCode; never throws.
int run(const ProjectConfig& config, std::ostream& out, std::ostream& err);

WeightingMethod parse_weighting_method(const std::string& token);
OutputFormat parse_output_format(const std::string& token);

}  // namespace sspahp
