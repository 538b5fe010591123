#include "sspahp/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sspahp/errors.hpp"
#include "sspahp/evaluator.hpp"

namespace sspahp {

std::string_view method_name(Method method) {
    switch (method) {
        case Method::Topsis: return "TOPSIS";
        case Method::Mabac: return "MABAC";
        case Method::Codas: return "CODAS";
        case Method::Spotis: return "SPOTIS";
        case Method::Promethee2: return "PROMETHEE II";
    }
    return "?";
}

namespace {

BenchmarkScore finish(Method method, std::vector<double> values, Orientation orientation) {
    BenchmarkScore score{method, std::move(values), {}, orientation};
    score.ranking = strict_ranking(score.values, orientation);
    return score;
}

bool is_profit(const DecisionMatrix& matrix, std::size_t j) {
    return matrix.objectives[j] == Objective::Profit;
}

}  // namespace

std::vector<Bounds> data_bounds(const DecisionMatrix& matrix) {
    std::vector<Bounds> out;
    out.reserve(matrix.criteria());
    for (std::size_t j = 0; j < matrix.criteria(); ++j) {
        const auto col = matrix.values.column(j);
        const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        out.push_back({*lo, *hi});
    }
    return out;
}

BenchmarkScore topsis(const DecisionMatrix& matrix, const WeightVector& weights) {
    require_valid(matrix);
    const auto w = align_weights(weights, matrix.criterion_ids);
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();

    Matrix v(m, n);
    std::vector<double> ideal(n), anti(n);
    for (std::size_t j = 0; j < n; ++j) {
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) norm += matrix.values(i, j) * matrix.values(i, j);
        norm = std::sqrt(norm);
        if (!(norm > 0.0)) {
            throw NumericalError("TOPSIS: criterion '" + matrix.criterion_ids[j] +
                                 "' has zero norm and cannot be vector-normalized");
        }
        double lo = 0.0, hi = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            v(i, j) = w[j] * matrix.values(i, j) / norm;
            lo = i == 0 ? v(i, j) : std::min(lo, v(i, j));
            hi = i == 0 ? v(i, j) : std::max(hi, v(i, j));
        }
        ideal[j] = is_profit(matrix, j) ? hi : lo;
        anti[j] = is_profit(matrix, j) ? lo : hi;
    }

    std::vector<double> closeness(m);
    for (std::size_t i = 0; i < m; ++i) {
        double d_plus = 0.0, d_minus = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            d_plus += (v(i, j) - ideal[j]) * (v(i, j) - ideal[j]);
            d_minus += (v(i, j) - anti[j]) * (v(i, j) - anti[j]);
        }
        d_plus = std::sqrt(d_plus);
        d_minus = std::sqrt(d_minus);
        // Both distances vanish only when no weighted criterion separates anything.
        closeness[i] = d_plus + d_minus > 0.0 ? d_minus / (d_plus + d_minus) : 0.5;
    }
    return finish(Method::Topsis, std::move(closeness), Orientation::HigherBetter);
}

BenchmarkScore mabac(const DecisionMatrix& matrix, const WeightVector& weights) {
    require_valid(matrix);
    const auto w = align_weights(weights, matrix.criterion_ids);
    const auto r = normalize_minmax(matrix).values;
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();

    std::vector<double> scores(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> v(m);
        double log_sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = w[j] * (r(i, j) + 1.0);
            log_sum += std::log(v[i]);
        }
        // w_j = 0 makes every v zero; the border area is then zero too.
        const double border = w[j] > 0.0 ? std::exp(log_sum / static_cast<double>(m)) : 0.0;
        for (std::size_t i = 0; i < m; ++i) scores[i] += v[i] - border;
    }
    return finish(Method::Mabac, std::move(scores), Orientation::HigherBetter);
}

BenchmarkScore codas(const DecisionMatrix& matrix, const WeightVector& weights, double tau) {
    require_valid(matrix);
    if (!(tau >= 0.01 && tau <= 0.05)) throw InputError("CODAS tau must lie in [0.01, 0.05]");
    const auto w = align_weights(weights, matrix.criterion_ids);
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();

    Matrix r(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = matrix.values.column(j);
        const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        if (is_profit(matrix, j)) {
            if (!(*hi > 0.0)) {
                throw InputError("CODAS: profit criterion '" + matrix.criterion_ids[j] +
                                 "' needs a positive maximum for linear normalization");
            }
            for (std::size_t i = 0; i < m; ++i) r(i, j) = w[j] * col[i] / *hi;
        } else {
            if (!(*lo > 0.0)) {
                throw InputError("CODAS: cost criterion '" + matrix.criterion_ids[j] +
                                 "' needs strictly positive values for linear normalization");
            }
            for (std::size_t i = 0; i < m; ++i) r(i, j) = w[j] * *lo / col[i];
        }
    }

    std::vector<double> negative_ideal(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = r.column(j);
        negative_ideal[j] = *std::min_element(col.begin(), col.end());
    }

    std::vector<double> euclid(m, 0.0), taxicab(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = r(i, j) - negative_ideal[j];
            euclid[i] += d * d;
            taxicab[i] += std::abs(d);
        }
        euclid[i] = std::sqrt(euclid[i]);
    }

    std::vector<double> assessment(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            const double de = euclid[i] - euclid[k];
            const double gate = std::abs(de) >= tau ? 1.0 : 0.0;
            assessment[i] += de + gate * (taxicab[i] - taxicab[k]);
        }
    }
    return finish(Method::Codas, std::move(assessment), Orientation::HigherBetter);
}

BenchmarkScore spotis(const DecisionMatrix& matrix, const WeightVector& weights,
                      const std::optional<std::vector<Bounds>>& bounds) {
    require_valid(matrix);
    const auto w = align_weights(weights, matrix.criterion_ids);
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();

    const bool user_bounds = bounds.has_value();
    const auto b = user_bounds ? *bounds : data_bounds(matrix);
    if (b.size() != n) {
        throw InputError("SPOTIS: got " + std::to_string(b.size()) + " bounds for " +
                         std::to_string(n) + " criteria");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (user_bounds && !(b[j].lower < b[j].upper)) {
            throw InputError("SPOTIS: bounds for '" + matrix.criterion_ids[j] +
                             "' need lower < upper");
        }
        for (std::size_t i = 0; i < m; ++i) {
            const double x = matrix.values(i, j);
            if (x < b[j].lower || x > b[j].upper) {
                std::ostringstream msg;
                msg << "SPOTIS: value " << x << " of '" << matrix.alternative_ids[i] << "' on '"
                    << matrix.criterion_ids[j] << "' lies outside [" << b[j].lower << ", "
                    << b[j].upper << "]";
                throw InputError(msg.str());
            }
        }
    }

    std::vector<double> preference(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double range = b[j].upper - b[j].lower;
        const double star = is_profit(matrix, j) ? b[j].upper : b[j].lower;
        for (std::size_t i = 0; i < m; ++i) {
            const double d = range > 0.0 ? std::abs(matrix.values(i, j) - star) / range : 0.5;
            preference[i] += w[j] * d;
        }
    }
    return finish(Method::Spotis, std::move(preference), Orientation::LowerBetter);
}

BenchmarkScore promethee2(const DecisionMatrix& matrix, const WeightVector& weights) {
    require_valid(matrix);
    const auto w = align_weights(weights, matrix.criterion_ids);
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();

    // pi(a, b) = sum_j w_j [a strictly better than b on j]
    Matrix pi(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            double total = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double diff = matrix.values(a, j) - matrix.values(b, j);
                const bool better = is_profit(matrix, j) ? diff > 0.0 : diff < 0.0;
                if (better) total += w[j];
            }
            pi(a, b) = total;
        }
    }

    const double scale = 1.0 / static_cast<double>(m - 1);
    std::vector<double> net(m);
    for (std::size_t a = 0; a < m; ++a) {
        double leaving = 0.0, entering = 0.0;
        for (std::size_t b = 0; b < m; ++b) {
            leaving += pi(a, b);
            entering += pi(b, a);
        }
        net[a] = (leaving - entering) * scale;
    }
    return finish(Method::Promethee2, std::move(net), Orientation::HigherBetter);
}

std::vector<BenchmarkScore> run_benchmarks(const DecisionMatrix& matrix, const WeightVector& weights,
                                           const BenchmarkOptions& options) {
    return {topsis(matrix, weights), mabac(matrix, weights),
            codas(matrix, weights, options.codas_tau),
            spotis(matrix, weights, options.spotis_bounds), promethee2(matrix, weights)};
}

}  // namespace sspahp
