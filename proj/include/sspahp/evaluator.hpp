#pragma once

#include <span>
#include <string>
#include <vector>

#include "sspahp/core.hpp"
#include "sspahp/correlation.hpp"

namespace sspahp {

/// Per-criterion degree of compensation reduction, each in [0, 1].
/// 0 leaves the criterion fully compensatory (classical AHP aggregation);
/// 1 subtracts the whole absolute deviation from the column mean.
class SustainabilityCoefficients {
public:
    /// Throws InputError if any value is outside [0, 1] or non-finite.
    explicit SustainabilityCoefficients(std::vector<double> values);

    static SustainabilityCoefficients uniform(std::size_t n, double s);

    /// s_value for criteria whose dimension is in `groups`, 0 elsewhere.
    /// Criteria are taken in `criterion_ids` order and looked up in the
    /// hierarchy. Unknown group ids are an InputError.
    static SustainabilityCoefficients for_groups(const CriteriaHierarchy& hierarchy,
                                                 std::span<const std::string> criterion_ids,
                                                 std::span<const std::string> groups, double s_value);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

struct EvaluationResult {
    std::vector<std::string> alternative_ids;
    std::vector<double> utilities;
    std::vector<int> ranking;  // 1 = best; ties broken by input order
    bool has_ties = false;
};

/// b_ij = r_ij - |mean_j(r) - r_ij| * s_j, with the mean taken over alternatives.
Matrix mad_transform(const NormalizedMatrix& normalized, const SustainabilityCoefficients& s);

/// Utilities U_i = sum_j b_ij w_j over the min-max normalized, MAD-reduced
/// matrix, ranked in descending order. Weights are aligned by criterion id.
EvaluationResult evaluate(const DecisionMatrix& matrix, const WeightVector& weights,
                          const SustainabilityCoefficients& s);

EvaluationResult evaluate_with_group_s(const DecisionMatrix& matrix, const WeightVector& weights,
                                       const CriteriaHierarchy& hierarchy,
                                       std::span<const std::string> groups, double s_value);

/// Integer ranking (input-order ties) plus whether any exact tie occurred.
std::vector<int> strict_ranking(std::span<const double> values, Orientation orientation,
                                bool* has_ties = nullptr);

}  // namespace sspahp
