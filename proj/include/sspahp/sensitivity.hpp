#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sspahp/core.hpp"
#include "sspahp/evaluator.hpp"

namespace sspahp {

using GroupSubset = std::vector<std::string>;

/// 0, step, 2*step, ..., 1. `step` must divide 1 evenly (within 1e-9).
std::vector<double> make_grid(double step);

/// Every subset of `dimension_ids` in binary-counting order with the last
/// dimension as the least significant bit: {}, {G5}, {G4}, {G4,G5}, {G3}, ...
/// Members are listed in dimension order.
std::vector<GroupSubset> all_subsets(std::span<const std::string> dimension_ids);

/// "G1+G4"; the empty subset is "none".
std::string subset_label(const GroupSubset& subset);

struct SweepSpec {
    std::vector<double> s_grid = make_grid(0.05);
    std::vector<GroupSubset> group_subsets;  // empty means all subsets of the hierarchy
    unsigned threads = 0;                    // 0 picks hardware concurrency
};

struct SweepResult {
    std::vector<std::string> alternative_ids;
    std::vector<double> s_grid;
    std::vector<GroupSubset> subsets;
    std::vector<std::vector<EvaluationResult>> cells;  // [subset][grid point]

    const EvaluationResult& at(std::size_t subset, std::size_t grid) const {
        return cells.at(subset).at(grid);
    }
    /// Ranking at the largest s in the grid (full reduction when the grid ends at 1).
    const std::vector<int>& final_ranking(std::size_t subset) const {
        return cells.at(subset).back().ranking;
    }
    /// Rank of one alternative across the grid for one subset.
    std::vector<int> trajectory(std::size_t subset, std::size_t alternative) const;
};

/// Evaluates every (subset, s) cell. Cells run in parallel; the result order
/// is always subsets x grid as given. Errors name the failing cell.
SweepResult run_sweep(const DecisionMatrix& matrix, const WeightVector& weights,
                      const CriteriaHierarchy& hierarchy, const SweepSpec& spec);

struct SubsetRanking {
    GroupSubset groups;
    std::vector<double> ranks;  // average ranks for ties
};

/// Per-subset rankings at the last grid point, ranked from utilities with
/// average ties (the convention used for correlation).
std::vector<SubsetRanking> final_rankings(const SweepResult& result);

struct RankingAgreement {
    GroupSubset groups;
    double weighted_spearman;
    double pearson;
};

/// Pairs subsets by position; the subset lists must match exactly.
std::vector<RankingAgreement> compare_rankings(std::span<const SubsetRanking> a,
                                               std::span<const SubsetRanking> b);

enum class RankTrend { Constant, Improving, Worsening, Mixed };

std::string_view trend_name(RankTrend trend);

struct RankStability {
    std::string alternative_id;
    int min_rank = 0;
    int max_rank = 0;
    int span = 0;
    RankTrend trend = RankTrend::Constant;
    bool stable = true;  // span <= 1
};

/// Summary of a single rank trajectory. Improving means the rank number never
/// increases along the trajectory and decreases at least once.
RankStability summarize_trajectory(std::span<const int> trajectory);

/// min/max over every cell of the sweep; the trend combines all subset
/// trajectories (Mixed when they disagree).
std::vector<RankStability> stability_report(const SweepResult& result);

}  // namespace sspahp
