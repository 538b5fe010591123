#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sspahp {

/// Absolute tolerance used by invariant checks (weight sums, reciprocity).
inline constexpr double kTolerance = 1e-9;

enum class Objective { Profit, Cost };

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<double> column(std::size_t j) const;

    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Raw performance values: m alternatives (rows) by n criteria (columns).
struct DecisionMatrix {
    std::vector<std::string> alternative_ids;
    std::vector<std::string> criterion_ids;
    Matrix values;
    std::vector<Objective> objectives;

    std::size_t alternatives() const noexcept { return values.rows(); }
    std::size_t criteria() const noexcept { return values.cols(); }
};

struct ValidationIssue {
    enum class Kind {
        Shape,
        TooFewAlternatives,
        NoCriteria,
        NonFiniteCell,
        DuplicateAlternative,
        DuplicateCriterion,
        ObjectiveArity,
    };
    Kind kind;
    std::string message;
};

using ValidationReport = std::vector<ValidationIssue>;

/// Lists every invariant violation; empty iff the matrix is usable.
ValidationReport validate_matrix(const DecisionMatrix& matrix);

/// Throws InputError carrying the whole report when validation fails.
void require_valid(const DecisionMatrix& matrix);

struct NormalizedMatrix {
    std::vector<std::string> alternative_ids;
    std::vector<std::string> criterion_ids;
    Matrix values;  // every cell in [0, 1]
    std::vector<std::string> warnings;
};

/// Min-max normalization with direction flip for cost criteria.
/// A constant column maps to 0.5 in every cell and adds a warning.
NormalizedMatrix normalize_minmax(const DecisionMatrix& matrix);

/// Normalizes one column. Sets *constant when max == min.
std::vector<double> normalize_column(std::span<const double> column, Objective objective,
                                     bool* constant = nullptr);

struct SubDimension {
    std::string name;
    std::vector<std::string> criterion_ids;
};

struct Dimension {
    std::string id;
    std::string name;
    std::vector<SubDimension> sub_dimensions;
};

/// Dimensions -> sub-dimensions -> criteria, with per-criterion objectives.
struct CriteriaHierarchy {
    std::vector<Dimension> dimensions;
    std::map<std::string, Objective> objectives;

    std::vector<std::string> dimension_ids() const;
};

struct FlatCriterion {
    std::string id;
    std::string dimension_id;
    Objective objective;
};

/// Criteria in dimension-major, sub-dimension-major order, each tagged with its
/// dimension. Throws StructuralError on duplicate membership, duplicate
/// dimension ids, or a criterion without an objective.
std::vector<FlatCriterion> flatten_hierarchy(const CriteriaHierarchy& hierarchy);

/// Reorders matrix columns into hierarchy order and takes objectives from the
/// hierarchy. Columns are matched by id; any id missing on either side is an
/// InputError naming it.
DecisionMatrix bind_to_hierarchy(const DecisionMatrix& matrix, const CriteriaHierarchy& hierarchy);

struct WeightVector {
    std::vector<std::string> criterion_ids;
    std::vector<double> weights;

    std::size_t size() const noexcept { return weights.size(); }
};

/// Non-negative, finite, sums to 1 within kTolerance, ids aligned and unique.
/// Throws InputError otherwise.
void require_normalized(const WeightVector& weights);

/// Weights reordered to `ids`. Every id must be present exactly once.
std::vector<double> align_weights(const WeightVector& weights, std::span<const std::string> ids);

}  // namespace sspahp
