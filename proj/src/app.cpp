#include "sspahp/app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "sspahp/benchmarks.hpp"
#include "sspahp/correlation.hpp"
#include "sspahp/errors.hpp"
#include "sspahp/evaluator.hpp"
#include "sspahp/io.hpp"
#include "sspahp/sensitivity.hpp"
#include "sspahp/weighting.hpp"

namespace sspahp {

using nlohmann::ordered_json;

WeightingMethod parse_weighting_method(const std::string& token) {
    if (token == "ahp") return WeightingMethod::Ahp;
    if (token == "entropy") return WeightingMethod::Entropy;
    if (token == "critic") return WeightingMethod::Critic;
    if (token == "file") return WeightingMethod::File;
    throw InputError("unknown weighting method '" + token + "' (ahp|entropy|critic|file)");
}

OutputFormat parse_output_format(const std::string& token) {
    if (token == "table") return OutputFormat::Table;
    if (token == "csv") return OutputFormat::Csv;
    if (token == "json") return OutputFormat::Json;
    throw InputError("unknown output format '" + token + "' (table|csv|json)");
}

namespace {

std::string_view weighting_name(WeightingMethod m) {
    switch (m) {
        case WeightingMethod::Ahp: return "ahp";
        case WeightingMethod::Entropy: return "entropy";
        case WeightingMethod::Critic: return "critic";
        case WeightingMethod::File: return "file";
    }
    return "?";
}

void require_weighting_inputs(WeightingMethod method, const ProjectConfig& c) {
    if (method == WeightingMethod::Ahp && !c.pairwise_path) {
        throw InputError("--weights-method ahp requires --pairwise");
    }
    if (method == WeightingMethod::File && !c.weights_path) {
        throw InputError("--weights-method file requires --weights-file");
    }
}

}  // namespace

void validate_config(const ProjectConfig& c) {
    require_weighting_inputs(c.weighting, c);
    if (c.against) require_weighting_inputs(*c.against, c);
    const bool needs_matrix = c.command != Command::Weights || c.weighting == WeightingMethod::Entropy ||
                              c.weighting == WeightingMethod::Critic;
    if (needs_matrix && (!c.matrix_path || !c.hierarchy_path)) {
        throw InputError("this command needs --matrix and --hierarchy");
    }
    if (!(c.s >= 0.0 && c.s <= 1.0)) throw InputError("--s must lie in [0, 1]");
    if (c.against && c.command != Command::Corr) throw InputError("--against only applies to corr");
}

namespace {

// Everything a subcommand needs after loading the inputs.
struct Session {
    const ProjectConfig& config;
    std::ostream& out;
    std::ostream& err;
    std::optional<CriteriaHierarchy> hierarchy;
    std::optional<DecisionMatrix> matrix;  // bound to the hierarchy
};

struct ResolvedWeights {
    WeightVector criteria;
    std::optional<WeightVector> dimensions;  // AHP over dimensions
    std::optional<ConsistencyReport> consistency;
};

struct InconsistentPairwise {
    double cr;
};

// Prefixes errors raised inside `fn` with the module that raised them.
template <typename Fn>
auto in_module(const char* module, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InputError& e) {
        throw InputError(std::string("[") + module + "] " + e.what());
    } catch (const NumericalError& e) {
        throw NumericalError(std::string("[") + module + "] " + e.what());
    }
}

ResolvedWeights resolve_weights_impl(const Session& session, WeightingMethod method) {
    const auto& c = session.config;
    ResolvedWeights out;
    switch (method) {
        case WeightingMethod::Entropy:
            out.criteria = entropy_weights(*session.matrix);
            return out;
        case WeightingMethod::Critic:
            out.criteria = critic_weights(*session.matrix);
            return out;
        case WeightingMethod::File:
            out.criteria = io::load_weights(*c.weights_path);
            if (session.matrix) align_weights(out.criteria, session.matrix->criterion_ids);
            return out;
        case WeightingMethod::Ahp: break;
    }

    std::optional<PairwiseMatrix> pairwise;
    std::vector<std::string> labels;
    if (std::filesystem::is_directory(*c.pairwise_path)) {
        const auto batch = io::load_pairwise_batch(*c.pairwise_path);
        std::vector<PairwiseMatrix> experts;
        for (const auto& e : batch) experts.push_back(e.matrix);
        pairwise = aggregate_pairwise(experts);
        labels = batch.front().labels;
        for (std::size_t k = 0; k < experts.size(); ++k) {
            const auto cr = consistency(experts[k]).cr;
            session.err << "expert " << k + 1 << ": CR = " << io::format_fixed(cr) << '\n';
        }
    } else {
        auto loaded = io::load_pairwise(*c.pairwise_path);
        pairwise = std::move(loaded.matrix);
        labels = std::move(loaded.labels);
    }
    const auto n = pairwise->size();

    std::vector<std::string> ids;
    bool over_dimensions = false;
    if (session.hierarchy && n == session.hierarchy->dimensions.size()) {
        ids = session.hierarchy->dimension_ids();
        over_dimensions = true;
    } else if (session.matrix && n == session.matrix->criteria()) {
        ids = session.matrix->criterion_ids;
    } else if (session.hierarchy || session.matrix) {
        throw InputError("pairwise matrix is " + std::to_string(n) + "x" + std::to_string(n) +
                         ", which matches neither the dimension nor the criterion count");
    } else if (labels.size() == n) {
        ids = labels;
    }

    auto ahp = ahp_weights(*pairwise, ids);
    out.consistency = ahp.consistency;
    if (c.strict_cr && !ahp.consistency.acceptable) throw InconsistentPairwise{ahp.consistency.cr};
    if (over_dimensions) {
        out.dimensions = ahp.weights;
        out.criteria = distribute_weights(ahp.weights, *session.hierarchy);
    } else {
        out.criteria = std::move(ahp.weights);
    }
    return out;
}

ResolvedWeights resolve_weights(const Session& session, WeightingMethod method) {
    return in_module("weighting", [&] { return resolve_weights_impl(session, method); });
}

std::vector<std::string> split_groups(const std::string& text) {
    std::vector<std::string> out;
    if (text == "none" || text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::string> selected_dimensions(const Session& session) {
    if (session.config.groups == "all") return session.hierarchy->dimension_ids();
    return split_groups(session.config.groups);
}

SweepSpec sweep_spec(const Session& session, std::vector<double> grid) {
    SweepSpec spec;
    spec.s_grid = std::move(grid);
    spec.threads = session.config.threads;
    if (session.config.groups != "all") spec.group_subsets = {split_groups(session.config.groups)};
    return spec;
}

// Left-aligned first column, right-aligned rest.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c == 0) {
                out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            } else {
                out << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
            }
        }
        out << std::left << '\n';
    }
}

void print_warnings(const Session& session) {
    if (!session.matrix) return;
    for (const auto& w : normalize_minmax(*session.matrix).warnings) {
        session.err << "warning: " << w << '\n';
    }
}

int cmd_weights(Session& session) {
    const auto& c = session.config;
    const auto resolved = resolve_weights(session, c.weighting);
    auto& out = session.out;

    if (c.format == OutputFormat::Json) {
        ordered_json doc;
        doc["method"] = weighting_name(c.weighting);
        if (resolved.consistency) {
            doc["consistency"] = {{"lambda_max", resolved.consistency->lambda_max},
                                  {"ci", resolved.consistency->ci},
                                  {"cr", resolved.consistency->cr},
                                  {"acceptable", resolved.consistency->acceptable}};
        }
        if (resolved.dimensions) {
            doc["dimension_weights"] = ordered_json::object();
            for (std::size_t k = 0; k < resolved.dimensions->size(); ++k) {
                doc["dimension_weights"][resolved.dimensions->criterion_ids[k]] =
                    resolved.dimensions->weights[k];
            }
        }
        doc["weights"] = ordered_json::object();
        for (std::size_t k = 0; k < resolved.criteria.size(); ++k) {
            doc["weights"][resolved.criteria.criterion_ids[k]] = resolved.criteria.weights[k];
        }
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    if (c.format == OutputFormat::Csv) {
        io::write_weights(out, resolved.criteria);
        return kExitOk;
    }

    out << "method: " << weighting_name(c.weighting) << '\n';
    if (resolved.consistency) {
        const auto& r = *resolved.consistency;
        out << "lambda_max = " << io::format_fixed(r.lambda_max) << '\n'
            << "CI = " << io::format_fixed(r.ci) << '\n'
            << "CR = " << io::format_fixed(r.cr)
            << (r.acceptable ? " (acceptable)" : " (inconsistent, CR > 0.1)") << '\n';
    }
    if (resolved.dimensions) {
        out << '\n';
        std::vector<std::vector<std::string>> rows{{"dimension", "weight"}};
        for (std::size_t k = 0; k < resolved.dimensions->size(); ++k) {
            rows.push_back({resolved.dimensions->criterion_ids[k],
                            io::format_fixed(resolved.dimensions->weights[k])});
        }
        print_table(out, rows);
    }
    out << '\n';
    std::vector<std::vector<std::string>> rows{{"criterion", "weight"}};
    for (std::size_t k = 0; k < resolved.criteria.size(); ++k) {
        rows.push_back(
            {resolved.criteria.criterion_ids[k], io::format_fixed(resolved.criteria.weights[k])});
    }
    print_table(out, rows);
    return kExitOk;
}

EvaluationResult evaluate_configured(const Session& session, const WeightVector& weights) {
    const auto groups = selected_dimensions(session);
    return in_module("sspahp", [&] {
        return evaluate_with_group_s(*session.matrix, weights, *session.hierarchy, groups,
                                     session.config.s);
    });
}

int cmd_eval(Session& session) {
    const auto& c = session.config;
    const auto weights = resolve_weights(session, c.weighting).criteria;
    const auto result = evaluate_configured(session, weights);
    print_warnings(session);
    if (result.has_ties) session.err << "note: tied utilities ranked by input order\n";

    auto& out = session.out;
    switch (c.format) {
        case OutputFormat::Json: {
            ordered_json doc;
            doc["weighting"] = weighting_name(c.weighting);
            doc["s"] = c.s;
            doc["groups"] = selected_dimensions(session);
            doc["has_ties"] = result.has_ties;
            doc["alternatives"] = ordered_json::array();
            for (std::size_t i = 0; i < result.utilities.size(); ++i) {
                doc["alternatives"].push_back({{"id", result.alternative_ids[i]},
                                               {"utility", result.utilities[i]},
                                               {"rank", result.ranking[i]}});
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "alternative,utility,rank\n";
            for (std::size_t i = 0; i < result.utilities.size(); ++i) {
                out << result.alternative_ids[i] << ',' << io::format_number(result.utilities[i])
                    << ',' << result.ranking[i] << '\n';
            }
            break;
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> rows{{"alternative", "utility", "rank"}};
            for (std::size_t i = 0; i < result.utilities.size(); ++i) {
                rows.push_back({result.alternative_ids[i], io::format_fixed(result.utilities[i]),
                                std::to_string(result.ranking[i])});
            }
            print_table(out, rows);
            break;
        }
    }
    return kExitOk;
}

struct MethodColumn {
    std::string name;
    std::vector<double> values;
    std::vector<int> ranking;
    Orientation orientation;
};

std::vector<MethodColumn> all_methods(const Session& session, const WeightVector& weights) {
    const auto& c = session.config;
    const auto base = evaluate_configured(session, weights);
    std::vector<MethodColumn> columns{
        {"SSP-AHP", base.utilities, base.ranking, Orientation::HigherBetter}};

    BenchmarkOptions options;
    options.codas_tau = c.tau;
    auto scores = in_module("benchmarks", [&] {
        if (c.bounds_path) {
            options.spotis_bounds = io::load_bounds(*c.bounds_path, session.matrix->criterion_ids);
        }
        return run_benchmarks(*session.matrix, weights, options);
    });
    for (auto& score : scores) {
        columns.push_back({std::string(method_name(score.method)), std::move(score.values),
                           std::move(score.ranking), score.orientation});
    }
    return columns;
}

int cmd_benchmarks(Session& session) {
    const auto& c = session.config;
    const auto weights = resolve_weights(session, c.weighting).criteria;
    const auto columns = all_methods(session, weights);
    print_warnings(session);
    const auto& ids = session.matrix->alternative_ids;
    auto& out = session.out;

    switch (c.format) {
        case OutputFormat::Json: {
            ordered_json doc;
            doc["weighting"] = weighting_name(c.weighting);
            doc["alternatives"] = ids;
            doc["methods"] = ordered_json::array();
            for (const auto& col : columns) {
                doc["methods"].push_back(
                    {{"method", col.name},
                     {"orientation", col.orientation == Orientation::HigherBetter ? "higher_better"
                                                                                  : "lower_better"},
                     {"values", col.values},
                     {"ranking", col.ranking}});
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "method,alternative,value,rank\n";
            for (const auto& col : columns) {
                for (std::size_t i = 0; i < ids.size(); ++i) {
                    out << col.name << ',' << ids[i] << ',' << io::format_number(col.values[i])
                        << ',' << col.ranking[i] << '\n';
                }
            }
            break;
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> rows(ids.size() + 1);
            rows[0].push_back("alternative");
            for (const auto& col : columns) rows[0].push_back(col.name);
            for (const auto& col : columns) rows[0].push_back("rank " + col.name);
            for (std::size_t i = 0; i < ids.size(); ++i) {
                rows[i + 1].push_back(ids[i]);
                for (const auto& col : columns) rows[i + 1].push_back(io::format_fixed(col.values[i]));
                for (const auto& col : columns) rows[i + 1].push_back(std::to_string(col.ranking[i]));
            }
            print_table(out, rows);
            break;
        }
    }
    return kExitOk;
}

int cmd_sweep(Session& session) {
    const auto& c = session.config;
    const auto weights = resolve_weights(session, c.weighting).criteria;
    const auto result = in_module("sensitivity", [&] {
        return run_sweep(*session.matrix, weights, *session.hierarchy,
                         sweep_spec(session, make_grid(c.step)));
    });
    print_warnings(session);
    auto& out = session.out;

    switch (c.format) {
        case OutputFormat::Csv: io::write_sweep_csv(out, result); break;
        case OutputFormat::Json: io::write_sweep_json(out, result); break;
        case OutputFormat::Table: {
            out << "rankings at s = " << io::format_fixed(result.s_grid.back(), 2) << '\n';
            std::vector<std::vector<std::string>> rows(1);
            rows[0].push_back("groups");
            for (const auto& id : result.alternative_ids) rows[0].push_back(id);
            for (std::size_t k = 0; k < result.subsets.size(); ++k) {
                std::vector<std::string> row{subset_label(result.subsets[k])};
                for (int r : result.final_ranking(k)) row.push_back(std::to_string(r));
                rows.push_back(std::move(row));
            }
            print_table(out, rows);
            out << '\n';
            std::vector<std::vector<std::string>> stab{
                {"alternative", "min rank", "max rank", "span", "trend", "class"}};
            for (const auto& s : stability_report(result)) {
                stab.push_back({s.alternative_id, std::to_string(s.min_rank),
                                std::to_string(s.max_rank), std::to_string(s.span),
                                std::string(trend_name(s.trend)), s.stable ? "stable" : "volatile"});
            }
            print_table(out, stab);
            break;
        }
    }
    return kExitOk;
}

int cmd_corr(Session& session) {
    const auto& c = session.config;
    const auto weights = resolve_weights(session, c.weighting).criteria;
    auto& out = session.out;

    struct Row {
        std::string label;
        double rw;
        double pearson;
    };
    std::vector<Row> rows;
    std::string reference;

    if (c.against) {
        const auto other = resolve_weights(session, *c.against).criteria;
        const auto agreements = in_module("sensitivity", [&] {
            const auto spec = sweep_spec(session, make_grid(c.step));
            const auto a =
                final_rankings(run_sweep(*session.matrix, weights, *session.hierarchy, spec));
            const auto b = final_rankings(run_sweep(*session.matrix, other, *session.hierarchy, spec));
            return compare_rankings(a, b);
        });
        for (const auto& agreement : agreements) {
            rows.push_back({subset_label(agreement.groups), agreement.weighted_spearman,
                            agreement.pearson});
        }
        reference = std::string(weighting_name(c.weighting)) + " vs " +
                    std::string(weighting_name(*c.against)) + " weights, full reduction";
    } else {
        const auto columns = all_methods(session, weights);
        in_module("correlation", [&] {
            const auto base =
                rank_from_scores(columns[0].values, columns[0].orientation, TieRule::Average);
            for (std::size_t k = 1; k < columns.size(); ++k) {
                const auto other =
                    rank_from_scores(columns[k].values, columns[k].orientation, TieRule::Average);
                rows.push_back(
                    {columns[k].name, weighted_spearman(base, other), pearson(base, other)});
            }
        });
        reference = "SSP-AHP vs benchmark methods";
    }
    print_warnings(session);

    switch (c.format) {
        case OutputFormat::Json: {
            ordered_json doc;
            doc["comparison"] = reference;
            doc["rows"] = ordered_json::array();
            for (const auto& r : rows) {
                doc["rows"].push_back(
                    {{"label", r.label}, {"weighted_spearman", r.rw}, {"pearson", r.pearson}});
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "label,weighted_spearman,pearson\n";
            for (const auto& r : rows) {
                out << r.label << ',' << io::format_number(r.rw) << ','
                    << io::format_number(r.pearson) << '\n';
            }
            break;
        case OutputFormat::Table: {
            out << reference << '\n';
            std::vector<std::vector<std::string>> table{{c.against ? "groups" : "method", "r_w", "pearson"}};
            for (const auto& r : rows) {
                table.push_back({r.label, io::format_fixed(r.rw), io::format_fixed(r.pearson)});
            }
            print_table(out, table);
            break;
        }
    }
    return kExitOk;
}

int dispatch(Session& session) {
    switch (session.config.command) {
        case Command::Weights: return cmd_weights(session);
        case Command::Eval: return cmd_eval(session);
        case Command::Benchmarks: return cmd_benchmarks(session);
        case Command::Sweep: return cmd_sweep(session);
        case Command::Corr: return cmd_corr(session);
    }
    return kExitInputError;
}

}  // namespace

int run(const ProjectConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate_config(config);

        // Buffer so a failing run never leaves a half-written output file.
        std::ostringstream buffer;
        Session session{config, buffer, err, std::nullopt, std::nullopt};
        in_module("io", [&] {
            if (config.hierarchy_path) session.hierarchy = io::load_hierarchy(*config.hierarchy_path);
            if (config.matrix_path) {
                if (!session.hierarchy) throw InputError("--matrix requires --hierarchy");
                session.matrix = bind_to_hierarchy(io::load_decision_matrix(*config.matrix_path),
                                                   *session.hierarchy);
            }
        });

        const int code = dispatch(session);
        if (config.out_path) {
            std::ofstream file(*config.out_path, std::ios::binary);
            if (!file) throw InputError("cannot write '" + config.out_path->string() + "'");
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        return code;
    } catch (const InconsistentPairwise& e) {
        err << "error: [weighting] pairwise matrix is inconsistent (CR = "
            << io::format_fixed(e.cr) << " > 0.1) and --strict-cr is set\n";
        return kExitInconsistentPairwise;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumericalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumericalError;
    }
}

}  // namespace sspahp
