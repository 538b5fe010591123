// sspahp: command-line front end for the SSP-AHP evaluation engine.
//
//   sspahp weights    --weights-method ahp --pairwise judgments.csv [--hierarchy h.json]
//   sspahp eval       --matrix m.csv --hierarchy h.json [--s 0.5 --groups G1,G4]
//   sspahp benchmarks --matrix m.csv --hierarchy h.json [--tau 0.02 --bounds b.csv]
//   sspahp sweep      --matrix m.csv --hierarchy h.json --groups all --step 0.05
//   sspahp corr       --matrix m.csv --hierarchy h.json [--against critic]

#include <iostream>

#include <CLI11.hpp>

#include "sspahp/app.hpp"
#include "sspahp/errors.hpp"

namespace {

struct RawOptions {
    std::string matrix, hierarchy, pairwise, weights_file, bounds, out;
    std::string method = "entropy";
    std::string against;
    std::string format = "table";
};

void add_common(CLI::App* cmd, RawOptions& raw, sspahp::ProjectConfig& config) {
    cmd->add_option("--matrix", raw.matrix, "decision matrix CSV");
    cmd->add_option("--hierarchy", raw.hierarchy, "criteria hierarchy JSON");
    cmd->add_option("--weights-method,--method", raw.method, "ahp|entropy|critic|file")
        ->check(CLI::IsMember({"ahp", "entropy", "critic", "file"}));
    cmd->add_option("--pairwise", raw.pairwise, "pairwise CSV, or a directory of expert CSVs");
    cmd->add_option("--weights-file", raw.weights_file, "two-column CSV (criterion_id, weight)");
    cmd->add_flag("--strict-cr", config.strict_cr, "fail with exit code 4 when CR > 0.1");
    cmd->add_option("--format", raw.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", raw.out, "write results to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SSP-AHP multi-criteria evaluation with compensation reduction"};
    app.require_subcommand(1);

    sspahp::ProjectConfig config;
    RawOptions raw;

    auto* weights = app.add_subcommand("weights", "derive criteria weights");
    auto* eval = app.add_subcommand("eval", "evaluate alternatives with SSP-AHP");
    auto* benchmarks = app.add_subcommand("benchmarks", "SSP-AHP next to TOPSIS, MABAC, CODAS, SPOTIS, PROMETHEE II");
    auto* sweep = app.add_subcommand("sweep", "sweep s over dimension subsets");
    auto* corr = app.add_subcommand("corr", "rank correlations between methods or weightings");

    for (auto* cmd : {weights, eval, benchmarks, sweep, corr}) add_common(cmd, raw, config);

    for (auto* cmd : {eval, benchmarks, corr}) {
        cmd->add_option("--s", config.s, "sustainability coefficient in [0, 1]")
            ->check(CLI::Range(0.0, 1.0));
    }
    for (auto* cmd : {eval, benchmarks, sweep, corr}) {
        cmd->add_option("--groups", config.groups,
                        "dimension ids (comma list), 'none', or 'all'");
    }
    for (auto* cmd : {sweep, corr}) {
        cmd->add_option("--step", config.step, "grid step for s");
        cmd->add_option("--threads", config.threads, "worker threads (0 = all cores)");
    }
    for (auto* cmd : {benchmarks, corr}) {
        cmd->add_option("--tau", config.tau, "CODAS threshold")->check(CLI::Range(0.01, 0.05));
        cmd->add_option("--bounds", raw.bounds, "SPOTIS bounds CSV (criterion_id, lower, upper)");
    }
    corr->add_option("--against", raw.against,
                     "compare full-reduction sweep rankings with this second weighting")
        ->check(CLI::IsMember({"ahp", "entropy", "critic", "file"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return sspahp::kExitInputError;
    }

    if (*weights) config.command = sspahp::Command::Weights;
    if (*eval) config.command = sspahp::Command::Eval;
    if (*benchmarks) config.command = sspahp::Command::Benchmarks;
    if (*sweep) config.command = sspahp::Command::Sweep;
    if (*corr) config.command = sspahp::Command::Corr;

    const auto set_path = [](std::optional<std::filesystem::path>& dst, const std::string& src) {
        if (!src.empty()) dst = src;
    };
    set_path(config.matrix_path, raw.matrix);
    set_path(config.hierarchy_path, raw.hierarchy);
    set_path(config.pairwise_path, raw.pairwise);
    set_path(config.weights_path, raw.weights_file);
    set_path(config.bounds_path, raw.bounds);
    set_path(config.out_path, raw.out);

    try {
        config.weighting = sspahp::parse_weighting_method(raw.method);
        if (!raw.against.empty()) config.against = sspahp::parse_weighting_method(raw.against);
        config.format = sspahp::parse_output_format(raw.format);
    } catch (const sspahp::InputError& e) {
        std::cerr << "error: [cli] " << e.what() << '\n';
        return sspahp::kExitInputError;
    }
    return sspahp::run(config, std::cout, std::cerr);
}
