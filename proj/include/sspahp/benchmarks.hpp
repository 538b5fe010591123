#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sspahp/core.hpp"
#include "sspahp/correlation.hpp"

namespace sspahp {

enum class Method { Topsis, Mabac, Codas, Spotis, Promethee2 };

inline constexpr Method kAllMethods[] = {Method::Topsis, Method::Mabac, Method::Codas,
                                         Method::Spotis, Method::Promethee2};

std::string_view method_name(Method method);

struct BenchmarkScore {
    Method method;
    std::vector<double> values;
    std::vector<int> ranking;  // 1 = best, input-order ties
    Orientation orientation;
};

struct Bounds {
    double lower;
    double upper;
};

/// Column minimum and maximum of every criterion.
std::vector<Bounds> data_bounds(const DecisionMatrix& matrix);

/// Vector-normalized TOPSIS; value = relative closeness d- / (d+ + d-).
/// Throws NumericalError for an all-zero column.
BenchmarkScore topsis(const DecisionMatrix& matrix, const WeightVector& weights);

/// MABAC with min-max normalization and geometric-mean border approximation area.
BenchmarkScore mabac(const DecisionMatrix& matrix, const WeightVector& weights);

inline constexpr double kDefaultCodasTau = 0.02;

/// CODAS with linear (max / min ratio) normalization. Alternatives are
/// compared by Euclidean distance from the negative-ideal point; pairs whose
/// Euclidean distances differ by at least tau also add the taxicab difference.
BenchmarkScore codas(const DecisionMatrix& matrix, const WeightVector& weights,
                     double tau = kDefaultCodasTau);

/// SPOTIS preference (lower is better). Without explicit bounds the column
/// extremes are used; a constant column then scores 0.5 for every alternative.
BenchmarkScore spotis(const DecisionMatrix& matrix, const WeightVector& weights,
                      const std::optional<std::vector<Bounds>>& bounds = std::nullopt);

/// PROMETHEE II net flow with the usual (strict) preference function.
BenchmarkScore promethee2(const DecisionMatrix& matrix, const WeightVector& weights);

struct BenchmarkOptions {
    double codas_tau = kDefaultCodasTau;
    std::optional<std::vector<Bounds>> spotis_bounds;
};

/// All five methods in kAllMethods order.
std::vector<BenchmarkScore> run_benchmarks(const DecisionMatrix& matrix, const WeightVector& weights,
                                           const BenchmarkOptions& options = {});

}  // namespace sspahp
