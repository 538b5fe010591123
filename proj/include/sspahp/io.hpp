#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sspahp/benchmarks.hpp"
#include "sspahp/core.hpp"
#include "sspahp/sensitivity.hpp"
#include "sspahp/weighting.hpp"

namespace sspahp::io {

using CsvRows = std::vector<std::vector<std::string>>;

/// Comma-separated rows. Handles double-quoted fields, CRLF line endings and
/// a leading UTF-8 byte-order mark. Blank lines are skipped.
CsvRows read_csv(std::istream& in);

/// Strict locale-independent number. Accepts "a/b" fractions when
/// `allow_fraction` is set. Returns false on anything else.
bool parse_number(std::string_view text, double& out, bool allow_fraction = false);

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

/// Fixed-point text with `decimals` places, for human-readable tables.
std::string format_fixed(double value, int decimals = 4);

/// Header `alternative,<criterion ids...>`, one row per alternative.
/// Objectives default to Profit until the matrix is bound to a hierarchy.
/// Errors name the offending file row and column (both 1-based, header = row 1).
DecisionMatrix parse_decision_matrix(std::istream& in, std::string_view source = "<input>");
DecisionMatrix load_decision_matrix(const std::filesystem::path& path);
void write_decision_matrix(std::ostream& out, const DecisionMatrix& matrix);

/// JSON: {"dimensions": [{"id", "name", "sub_dimensions": [{"name",
/// "criteria": [{"id", "objective": "max"|"min"}]}]}]}
CriteriaHierarchy parse_hierarchy(std::istream& in, std::string_view source = "<input>");
CriteriaHierarchy load_hierarchy(const std::filesystem::path& path);

struct LabeledPairwise {
    PairwiseMatrix matrix;
    std::vector<std::string> labels;  // empty when the file has no header
};

/// Square numeric CSV with optional header row and/or label column. Entries
/// may be decimals or a/b fractions. Entries below the diagonal that are
/// within 1% of the reciprocal of their mirror (rounded decimals such as
/// 0.333) are replaced by the exact reciprocal; anything further off is an
/// InputError.
LabeledPairwise parse_pairwise(std::istream& in, std::string_view source = "<input>");
LabeledPairwise load_pairwise(const std::filesystem::path& path);

/// Every *.csv in `dir`, in file-name order.
std::vector<LabeledPairwise> load_pairwise_batch(const std::filesystem::path& dir);

/// Two columns (criterion_id, weight), optional header.
WeightVector parse_weights(std::istream& in, std::string_view source = "<input>");
WeightVector load_weights(const std::filesystem::path& path);
void write_weights(std::ostream& out, const WeightVector& weights);

/// Three columns (criterion_id, lower, upper), optional header, returned in
/// `criterion_ids` order.
std::vector<Bounds> load_bounds(const std::filesystem::path& path,
                                std::span<const std::string> criterion_ids);

/// Long format: subset,s,alternative,utility,rank.
void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_sweep_json(std::ostream& out, const SweepResult& result);

}  // namespace sspahp::io
