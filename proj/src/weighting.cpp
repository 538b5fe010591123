#include "sspahp/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sspahp/errors.hpp"

namespace sspahp {

PairwiseMatrix::PairwiseMatrix(std::size_t n, std::vector<double> row_major) {
    if (n == 0) throw InputError("pairwise matrix must be at least 1x1");
    if (row_major.size() != n * n) {
        throw InputError("pairwise matrix needs " + std::to_string(n * n) + " entries, got " +
                         std::to_string(row_major.size()));
    }
    Matrix m(n, n, std::move(row_major));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = m(i, j);
            if (!std::isfinite(x) || x <= 0.0) {
                std::ostringstream msg;
                msg << "pairwise entry (" << i + 1 << "," << j + 1 << ") must be positive";
                throw InputError(msg.str());
            }
        }
        if (std::abs(m(i, i) - 1.0) > kTolerance) {
            throw InputError("pairwise diagonal entry " + std::to_string(i + 1) + " must be 1");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) * m(j, i) - 1.0) > kTolerance) {
                std::ostringstream msg;
                msg.precision(10);
                msg << "pairwise entries (" << i + 1 << "," << j + 1 << ")=" << m(i, j) << " and ("
                    << j + 1 << "," << i + 1 << ")=" << m(j, i) << " are not reciprocal";
                throw InputError(msg.str());
            }
        }
    }
    values_ = std::move(m);
}

PairwiseMatrix PairwiseMatrix::from_upper(std::size_t n, std::span<const double> upper) {
    if (upper.size() != n * n) {
        throw InputError("pairwise matrix needs " + std::to_string(n * n) + " entries");
    }
    std::vector<double> full(upper.begin(), upper.end());
    for (std::size_t i = 0; i < n; ++i) {
        full[i * n + i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double x = upper[i * n + j];
            if (!std::isfinite(x) || x <= 0.0) {
                throw InputError("pairwise entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") must be positive");
            }
            full[j * n + i] = 1.0 / x;
        }
    }
    return PairwiseMatrix(n, std::move(full));
}

double RandomIndexTable::at(std::size_t n) const {
    if (n < 1 || n > kMaxSize) {
        throw InputError("random index is tabulated for n = 1..10 only, got n = " +
                         std::to_string(n));
    }
    return ri_[n - 1];
}

PairwiseMatrix aggregate_pairwise(std::span<const PairwiseMatrix> matrices) {
    if (matrices.empty()) throw InputError("no pairwise matrices to aggregate");
    const auto n = matrices.front().size();
    for (const auto& pm : matrices) {
        if (pm.size() != n) {
            throw InputError("pairwise matrices differ in size: " + std::to_string(n) + " vs " +
                             std::to_string(pm.size()));
        }
    }
    // Geometric mean via mean of logs on the upper triangle; the lower triangle
    // is the exact reciprocal so the result stays reciprocal.
    const double k = static_cast<double>(matrices.size());
    std::vector<double> upper(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double log_sum = 0.0;
            for (const auto& pm : matrices) log_sum += std::log(pm(i, j));
            upper[i * n + j] = std::exp(log_sum / k);
        }
    }
    return PairwiseMatrix::from_upper(n, upper);
}

PrincipalEigen principal_eigen(const Matrix& matrix, PowerIterationOptions options) {
    const auto n = matrix.rows();
    if (n == 0 || matrix.cols() != n) throw InputError("eigen solve needs a non-empty square matrix");

    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = matrix.row(i);
            next[i] = std::inner_product(row.begin(), row.end(), w.begin(), 0.0);
            total += next[i];
        }
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= total;
            change = std::max(change, std::abs(next[i] - w[i]));
        }
        w.swap(next);
        if (change < options.tolerance) {
            double lambda = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const auto row = matrix.row(i);
                lambda += std::inner_product(row.begin(), row.end(), w.begin(), 0.0) / w[i];
            }
            return {std::move(w), lambda / static_cast<double>(n), iter};
        }
    }
    throw ConvergenceError("power iteration did not converge in " +
                               std::to_string(options.max_iterations) + " iterations",
                           std::move(w));
}

namespace {

ConsistencyReport consistency_from_lambda(double lambda_max, std::size_t n,
                                          const RandomIndexTable& ri) {
    ConsistencyReport report;
    report.lambda_max = lambda_max;
    if (n > 2) {
        report.ci = (lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
        report.cr = report.ci / ri.at(n);
    }
    report.acceptable = report.cr <= kAcceptableCr;
    return report;
}

}  // namespace

ConsistencyReport consistency(const PairwiseMatrix& matrix, const RandomIndexTable& ri) {
    const auto n = matrix.size();
    ri.at(n);  // rejects n > 10 before doing any work
    return consistency_from_lambda(principal_eigen(matrix.values()).lambda_max, n, ri);
}

AhpWeights ahp_weights(const PairwiseMatrix& matrix, std::span<const std::string> ids,
                       const RandomIndexTable& ri) {
    const auto n = matrix.size();
    ri.at(n);
    if (!ids.empty() && ids.size() != n) {
        throw InputError("pairwise matrix is " + std::to_string(n) + "x" + std::to_string(n) +
                         " but " + std::to_string(ids.size()) + " labels were given");
    }

    AhpWeights out;
    if (ids.empty()) {
        for (std::size_t i = 0; i < n; ++i) out.weights.criterion_ids.push_back(std::to_string(i + 1));
    } else {
        out.weights.criterion_ids.assign(ids.begin(), ids.end());
    }

    if (n == 1) {
        out.weights.weights = {1.0};
        out.consistency = consistency_from_lambda(1.0, 1, ri);
        return out;
    }
    auto eig = principal_eigen(matrix.values());
    out.weights.weights = std::move(eig.vector);
    out.consistency = consistency_from_lambda(eig.lambda_max, n, ri);
    return out;
}

namespace {

WeightVector normalize_scores(const DecisionMatrix& matrix, std::vector<double> scores,
                              const char* method) {
    const double total = std::accumulate(scores.begin(), scores.end(), 0.0);
    if (!(total > 0.0)) {
        throw DegenerateWeightsError(std::string(method) +
                                     ": no criterion carries information, weights are undefined");
    }
    for (auto& s : scores) s /= total;
    return {matrix.criterion_ids, std::move(scores)};
}

}  // namespace

WeightVector entropy_weights(const DecisionMatrix& matrix) {
    require_valid(matrix);
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();
    const double inv_log_m = 1.0 / std::log(static_cast<double>(m));

    std::vector<double> diversity(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = matrix.values.column(j);
        if (std::any_of(col.begin(), col.end(), [](double x) { return x < 0.0; })) {
            throw InputError("entropy weighting: criterion '" + matrix.criterion_ids[j] +
                             "' has negative values; shift the column to be non-negative first");
        }
        const double sum = std::accumulate(col.begin(), col.end(), 0.0);
        if (!(sum > 0.0)) {
            throw InputError("entropy weighting: criterion '" + matrix.criterion_ids[j] +
                             "' sums to zero");
        }
        double h = 0.0;
        for (double x : col) {
            const double p = x / sum;
            if (p > 0.0) h -= p * std::log(p);
        }
        h *= inv_log_m;
        // A uniform column can land a few ulps above 1.
        diversity[j] = std::max(0.0, 1.0 - h);
        if (diversity[j] < 1e-15) diversity[j] = 0.0;
    }
    return normalize_scores(matrix, std::move(diversity), "entropy weighting");
}

WeightVector critic_weights(const DecisionMatrix& matrix, CriticOptions options) {
    require_valid(matrix);
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();
    const auto norm = normalize_minmax(matrix);

    std::vector<std::vector<double>> centered(n, std::vector<double>(m));
    std::vector<double> sum_sq(n, 0.0);
    std::vector<double> sigma(n, 0.0);
    const double divisor =
        static_cast<double>(options.deviation == Deviation::Sample ? m - 1 : m);

    for (std::size_t j = 0; j < n; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += norm.values(i, j);
        mean /= static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) {
            centered[j][i] = norm.values(i, j) - mean;
            sum_sq[j] += centered[j][i] * centered[j][i];
        }
        sigma[j] = std::sqrt(sum_sq[j] / divisor);
    }

    std::vector<double> information(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (sum_sq[j] == 0.0) continue;  // constant column: sigma = 0, no information
        double conflict = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            // Correlation with a constant column is undefined; count it as 0.
            double rho = 0.0;
            if (k == j) {
                rho = 1.0;
            } else if (sum_sq[k] > 0.0) {
                const double cross = std::inner_product(centered[j].begin(), centered[j].end(),
                                                        centered[k].begin(), 0.0);
                rho = cross / std::sqrt(sum_sq[j] * sum_sq[k]);
            }
            conflict += 1.0 - rho;
        }
        information[j] = sigma[j] * conflict;
    }
    return normalize_scores(matrix, std::move(information), "CRITIC weighting");
}

WeightVector distribute_weights(const WeightVector& dimension_weights,
                                const CriteriaHierarchy& hierarchy) {
    const auto dim_ids = hierarchy.dimension_ids();
    const auto per_dimension = align_weights(dimension_weights, dim_ids);
    flatten_hierarchy(hierarchy);

    WeightVector out;
    for (std::size_t d = 0; d < hierarchy.dimensions.size(); ++d) {
        const auto& dim = hierarchy.dimensions[d];
        if (dim.sub_dimensions.empty()) {
            throw StructuralError("dimension '" + dim.id + "' has no sub-dimensions");
        }
        const double per_sub = per_dimension[d] / static_cast<double>(dim.sub_dimensions.size());
        for (const auto& sub : dim.sub_dimensions) {
            if (sub.criterion_ids.empty()) {
                throw StructuralError("sub-dimension '" + dim.id + "/" + sub.name + "' is empty");
            }
            const double per_criterion = per_sub / static_cast<double>(sub.criterion_ids.size());
            for (const auto& id : sub.criterion_ids) {
                out.criterion_ids.push_back(id);
                out.weights.push_back(per_criterion);
            }
        }
    }
    return out;
}

}  // namespace sspahp
