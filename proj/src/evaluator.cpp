#include "sspahp/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "sspahp/correlation.hpp"
#include "sspahp/errors.hpp"

namespace sspahp {

SustainabilityCoefficients::SustainabilityCoefficients(std::vector<double> values)
    : values_(std::move(values)) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!(values_[j] >= 0.0 && values_[j] <= 1.0)) {
            throw InputError("sustainability coefficient " + std::to_string(j + 1) +
                             " must lie in [0, 1]");
        }
    }
}

SustainabilityCoefficients SustainabilityCoefficients::uniform(std::size_t n, double s) {
    return SustainabilityCoefficients(std::vector<double>(n, s));
}

SustainabilityCoefficients SustainabilityCoefficients::for_groups(
    const CriteriaHierarchy& hierarchy, std::span<const std::string> criterion_ids,
    std::span<const std::string> groups, double s_value) {
    const auto dims = hierarchy.dimension_ids();
    const std::set<std::string> known(dims.begin(), dims.end());
    std::set<std::string> selected;
    for (const auto& g : groups) {
        if (!known.contains(g)) throw InputError("unknown dimension id '" + g + "'");
        selected.insert(g);
    }

    std::unordered_map<std::string, std::string> dimension_of;
    for (const auto& c : flatten_hierarchy(hierarchy)) dimension_of.emplace(c.id, c.dimension_id);

    std::vector<double> s(criterion_ids.size(), 0.0);
    for (std::size_t j = 0; j < criterion_ids.size(); ++j) {
        const auto it = dimension_of.find(criterion_ids[j]);
        if (it == dimension_of.end()) {
            throw InputError("criterion '" + criterion_ids[j] + "' is absent from the hierarchy");
        }
        if (selected.contains(it->second)) s[j] = s_value;
    }
    return SustainabilityCoefficients(std::move(s));
}

Matrix mad_transform(const NormalizedMatrix& normalized, const SustainabilityCoefficients& s) {
    const auto& r = normalized.values;
    const auto m = r.rows();
    const auto n = r.cols();
    if (s.size() != n) {
        throw InputError("got " + std::to_string(s.size()) + " sustainability coefficients for " +
                         std::to_string(n) + " criteria");
    }
    Matrix b(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += r(i, j);
        mean /= static_cast<double>(m);
        const double sj = s.values()[j];
        for (std::size_t i = 0; i < m; ++i) b(i, j) = r(i, j) - std::abs(mean - r(i, j)) * sj;
    }
    return b;
}

std::vector<int> strict_ranking(std::span<const double> values, Orientation orientation,
                                bool* has_ties) {
    const auto ranks = rank_from_scores(values, orientation, TieRule::InputOrder);
    if (has_ties) {
        std::vector<double> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        *has_ties = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    }
    return {ranks.begin(), ranks.end()};
}

EvaluationResult evaluate(const DecisionMatrix& matrix, const WeightVector& weights,
                          const SustainabilityCoefficients& s) {
    require_valid(matrix);
    const auto w = align_weights(weights, matrix.criterion_ids);
    const auto b = mad_transform(normalize_minmax(matrix), s);

    EvaluationResult out;
    out.alternative_ids = matrix.alternative_ids;
    out.utilities.resize(matrix.alternatives());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        double u = 0.0;
        for (std::size_t j = 0; j < b.cols(); ++j) u += b(i, j) * w[j];
        out.utilities[i] = u;
    }
    out.ranking = strict_ranking(out.utilities, Orientation::HigherBetter, &out.has_ties);
    return out;
}

EvaluationResult evaluate_with_group_s(const DecisionMatrix& matrix, const WeightVector& weights,
                                       const CriteriaHierarchy& hierarchy,
                                       std::span<const std::string> groups, double s_value) {
    const auto s =
        SustainabilityCoefficients::for_groups(hierarchy, matrix.criterion_ids, groups, s_value);
    return evaluate(matrix, weights, s);
}

}  // namespace sspahp
