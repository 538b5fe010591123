#include "sspahp/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "sspahp/correlation.hpp"
#include "sspahp/errors.hpp"

namespace sspahp {

std::vector<double> make_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw InputError("grid step must lie in (0, 1]");
    const double points = std::round(1.0 / step);
    if (std::abs(points * step - 1.0) > 1e-9) {
        throw InputError("grid step must divide 1 evenly");
    }
    const auto k = static_cast<std::size_t>(points);
    std::vector<double> grid(k + 1);
    // i / k rather than i * step so 0.35 is the same double whichever step produced it.
    for (std::size_t i = 0; i <= k; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(k);
    return grid;
}

std::vector<GroupSubset> all_subsets(std::span<const std::string> dimension_ids) {
    const auto n = dimension_ids.size();
    if (n >= 20) throw InputError("too many dimensions to enumerate every subset");
    std::vector<GroupSubset> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        GroupSubset subset;
        for (std::size_t d = 0; d < n; ++d) {
            if (mask & (std::size_t{1} << (n - 1 - d))) subset.push_back(dimension_ids[d]);
        }
        out.push_back(std::move(subset));
    }
    return out;
}

std::string subset_label(const GroupSubset& subset) {
    if (subset.empty()) return "none";
    std::string label;
    for (const auto& g : subset) {
        if (!label.empty()) label += '+';
        label += g;
    }
    return label;
}

std::vector<int> SweepResult::trajectory(std::size_t subset, std::size_t alternative) const {
    std::vector<int> out;
    out.reserve(s_grid.size());
    for (const auto& cell : cells.at(subset)) out.push_back(cell.ranking.at(alternative));
    return out;
}

namespace {

void validate_spec(const SweepSpec& spec, std::span<const GroupSubset> subsets,
                   const CriteriaHierarchy& hierarchy) {
    if (spec.s_grid.empty()) throw InputError("sweep grid is empty");
    for (std::size_t k = 0; k < spec.s_grid.size(); ++k) {
        const double s = spec.s_grid[k];
        if (!(s >= 0.0 && s <= 1.0)) throw InputError("sweep grid values must lie in [0, 1]");
        if (k > 0 && !(s > spec.s_grid[k - 1])) {
            throw InputError("sweep grid must be strictly increasing");
        }
    }
    const auto dims = hierarchy.dimension_ids();
    const std::set<std::string> known(dims.begin(), dims.end());
    std::set<std::set<std::string>> seen;
    for (const auto& subset : subsets) {
        for (const auto& g : subset) {
            if (!known.contains(g)) throw InputError("unknown dimension id '" + g + "' in sweep");
        }
        if (!seen.insert(std::set<std::string>(subset.begin(), subset.end())).second) {
            throw InputError("duplicate subset '" + subset_label(subset) + "' in sweep");
        }
    }
}

[[noreturn]] void rethrow_with_cell(std::exception_ptr error, const GroupSubset& subset, double s) {
    std::ostringstream where;
    where << "sweep cell (groups " << subset_label(subset) << ", s = " << s << "): ";
    try {
        std::rethrow_exception(error);
    } catch (const InputError& e) {
        throw InputError(where.str() + e.what());
    } catch (const NumericalError& e) {
        throw NumericalError(where.str() + e.what());
    }
}

}  // namespace

SweepResult run_sweep(const DecisionMatrix& matrix, const WeightVector& weights,
                      const CriteriaHierarchy& hierarchy, const SweepSpec& spec) {
    require_valid(matrix);
    align_weights(weights, matrix.criterion_ids);

    SweepResult result;
    result.alternative_ids = matrix.alternative_ids;
    result.s_grid = spec.s_grid;
    if (spec.group_subsets.empty()) {
        const auto dims = hierarchy.dimension_ids();
        result.subsets = all_subsets(dims);
    } else {
        result.subsets = spec.group_subsets;
    }
    validate_spec(spec, result.subsets, hierarchy);

    const auto grid_size = result.s_grid.size();
    const auto cell_count = result.subsets.size() * grid_size;
    result.cells.assign(result.subsets.size(), std::vector<EvaluationResult>(grid_size));
    std::vector<std::exception_ptr> errors(cell_count);

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t cell = next++; cell < cell_count; cell = next++) {
            const auto subset = cell / grid_size;
            const auto point = cell % grid_size;
            try {
                result.cells[subset][point] = evaluate_with_group_s(
                    matrix, weights, hierarchy, result.subsets[subset], result.s_grid[point]);
            } catch (...) {
                errors[cell] = std::current_exception();
            }
        }
    };

    unsigned threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(cell_count, 1)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (std::size_t cell = 0; cell < cell_count; ++cell) {
        if (errors[cell]) {
            rethrow_with_cell(errors[cell], result.subsets[cell / grid_size],
                              result.s_grid[cell % grid_size]);
        }
    }
    return result;
}

std::vector<SubsetRanking> final_rankings(const SweepResult& result) {
    std::vector<SubsetRanking> out;
    out.reserve(result.subsets.size());
    for (std::size_t k = 0; k < result.subsets.size(); ++k) {
        const auto& last = result.cells.at(k).back();
        out.push_back({result.subsets[k],
                       rank_from_scores(last.utilities, Orientation::HigherBetter, TieRule::Average)});
    }
    return out;
}

std::vector<RankingAgreement> compare_rankings(std::span<const SubsetRanking> a,
                                               std::span<const SubsetRanking> b) {
    if (a.size() != b.size()) {
        throw InputError("cannot compare " + std::to_string(a.size()) + " subsets with " +
                         std::to_string(b.size()));
    }
    std::vector<RankingAgreement> out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].groups != b[k].groups) {
            throw InputError("subset mismatch at position " + std::to_string(k) + ": " +
                             subset_label(a[k].groups) + " vs " + subset_label(b[k].groups));
        }
        out.push_back({a[k].groups, weighted_spearman(a[k].ranks, b[k].ranks),
                       pearson(a[k].ranks, b[k].ranks)});
    }
    return out;
}

std::string_view trend_name(RankTrend trend) {
    switch (trend) {
        case RankTrend::Constant: return "constant";
        case RankTrend::Improving: return "improving";
        case RankTrend::Worsening: return "worsening";
        case RankTrend::Mixed: return "mixed";
    }
    return "?";
}

namespace {

RankTrend classify(std::span<const int> trajectory) {
    bool up = false, down = false;
    for (std::size_t k = 1; k < trajectory.size(); ++k) {
        if (trajectory[k] < trajectory[k - 1]) up = true;
        if (trajectory[k] > trajectory[k - 1]) down = true;
    }
    if (up && down) return RankTrend::Mixed;
    if (up) return RankTrend::Improving;
    if (down) return RankTrend::Worsening;
    return RankTrend::Constant;
}

RankTrend combine(RankTrend a, RankTrend b) {
    if (a == RankTrend::Constant) return b;
    if (b == RankTrend::Constant || a == b) return a;
    return RankTrend::Mixed;
}

}  // namespace

RankStability summarize_trajectory(std::span<const int> trajectory) {
    RankStability out;
    if (trajectory.empty()) return out;
    const auto [lo, hi] = std::minmax_element(trajectory.begin(), trajectory.end());
    out.min_rank = *lo;
    out.max_rank = *hi;
    out.span = *hi - *lo;
    out.stable = out.span <= 1;
    out.trend = classify(trajectory);
    return out;
}

std::vector<RankStability> stability_report(const SweepResult& result) {
    std::vector<RankStability> out;
    for (std::size_t a = 0; a < result.alternative_ids.size(); ++a) {
        RankStability total;
        total.alternative_id = result.alternative_ids[a];
        bool first = true;
        for (std::size_t k = 0; k < result.subsets.size(); ++k) {
            const auto summary = summarize_trajectory(result.trajectory(k, a));
            total.min_rank = first ? summary.min_rank : std::min(total.min_rank, summary.min_rank);
            total.max_rank = first ? summary.max_rank : std::max(total.max_rank, summary.max_rank);
            total.trend = first ? summary.trend : combine(total.trend, summary.trend);
            first = false;
        }
        total.span = total.max_rank - total.min_rank;
        total.stable = total.span <= 1;
        out.push_back(std::move(total));
    }
    return out;
}

}  // namespace sspahp
