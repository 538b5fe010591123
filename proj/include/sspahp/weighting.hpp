#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sspahp/core.hpp"

namespace sspahp {

/// Positive reciprocal judgment matrix (Saaty scale when entered by hand).
class PairwiseMatrix {
public:
    /// Validates: square, positive, unit diagonal, reciprocal within kTolerance.
    PairwiseMatrix(std::size_t n, std::vector<double> row_major);

    /// Builds a matrix from the strict upper triangle of `upper_row_major`
    /// (n*n entries, the rest ignored), filling the lower triangle with exact
    /// reciprocals.
    static PairwiseMatrix from_upper(std::size_t n, std::span<const double> upper_row_major);

    std::size_t size() const noexcept { return values_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
    const Matrix& values() const noexcept { return values_; }

private:
    Matrix values_;
};

/// Saaty's random consistency indices for n = 1..10.
class RandomIndexTable {
public:
    static constexpr std::size_t kMaxSize = 10;

    constexpr RandomIndexTable() = default;
    constexpr explicit RandomIndexTable(std::array<double, kMaxSize> ri) : ri_(ri) {}

    /// Throws InputError for n outside 1..10.
    double at(std::size_t n) const;

private:
    std::array<double, kMaxSize> ri_{0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
};

struct ConsistencyReport {
    double lambda_max = 0.0;
    double ci = 0.0;
    double cr = 0.0;
    bool acceptable = true;  // cr <= 0.1
};

inline constexpr double kAcceptableCr = 0.1;

/// Element-wise geometric mean of several experts' judgments.
PairwiseMatrix aggregate_pairwise(std::span<const PairwiseMatrix> matrices);

struct PowerIterationOptions {
    double tolerance = 1e-10;
    std::size_t max_iterations = 1000;
};

struct PrincipalEigen {
    std::vector<double> vector;  // normalized to sum 1
    double lambda_max = 0.0;
    std::size_t iterations = 0;
};

/// Perron eigenpair of a positive matrix by power iteration from the uniform
/// vector. Throws ConvergenceError carrying the last iterate at the cap.
PrincipalEigen principal_eigen(const Matrix& matrix, PowerIterationOptions options = {});

ConsistencyReport consistency(const PairwiseMatrix& matrix,
                              const RandomIndexTable& ri = RandomIndexTable{});

struct AhpWeights {
    WeightVector weights;
    ConsistencyReport consistency;
};

/// Principal-eigenvector priorities. `ids` labels the result; when empty the
/// labels are "1".."n".
AhpWeights ahp_weights(const PairwiseMatrix& matrix, std::span<const std::string> ids = {},
                       const RandomIndexTable& ri = RandomIndexTable{});

/// Shannon-entropy weights over raw, non-negative values.
WeightVector entropy_weights(const DecisionMatrix& matrix);

enum class Deviation { Sample, Population };

struct CriticOptions {
    Deviation deviation = Deviation::Sample;
};

/// Contrast (standard deviation) times conflict (1 - Pearson) over the
/// direction-aware min-max normalized matrix.
WeightVector critic_weights(const DecisionMatrix& matrix, CriticOptions options = {});

/// Splits each dimension weight equally over its sub-dimensions, then each
/// sub-dimension weight equally over its criteria. `dimension_weights` is
/// matched to hierarchy dimensions by id.
WeightVector distribute_weights(const WeightVector& dimension_weights,
                                const CriteriaHierarchy& hierarchy);

}  // namespace sspahp
