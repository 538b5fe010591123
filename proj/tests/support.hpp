#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sspahp/core.hpp"

namespace testsupport {

// Small deterministic generators over std::mt19937_64.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
        return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
    }
    bool coin() { return (rng_() & 1u) != 0; }

    std::vector<double> simplex(std::size_t n) {
        std::vector<double> w(n);
        for (auto& x : w) x = 0.05 + unit();
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        for (auto& x : w) x /= total;
        return w;
    }

    std::vector<double> permutation_ranks(std::size_t n) {
        std::vector<double> r(n);
        std::iota(r.begin(), r.end(), 1.0);
        std::shuffle(r.begin(), r.end(), rng_);
        return r;
    }

    // Raw values on a per-column random scale; every column varies.
    sspahp::DecisionMatrix matrix(std::size_t m, std::size_t n) {
        sspahp::DecisionMatrix dm;
        dm.values = sspahp::Matrix(m, n);
        for (std::size_t i = 0; i < m; ++i) dm.alternative_ids.push_back("A" + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j) {
            dm.criterion_ids.push_back("C" + std::to_string(j + 1));
            dm.objectives.push_back(coin() ? sspahp::Objective::Profit : sspahp::Objective::Cost);
            const double lo = uniform(-50.0, 50.0);
            const double width = uniform(0.5, 200.0);
            for (std::size_t i = 0; i < m; ++i) dm.values(i, j) = lo + width * unit();
        }
        return dm;
    }

    sspahp::WeightVector weights(const sspahp::DecisionMatrix& dm) {
        return {dm.criterion_ids, simplex(dm.criteria())};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Min-max normalization written out cell by cell.
inline double normalized_cell(const sspahp::DecisionMatrix& dm, std::size_t i, std::size_t j) {
    double lo = dm.values(0, j);
    double hi = dm.values(0, j);
    for (std::size_t k = 1; k < dm.alternatives(); ++k) {
        lo = std::min(lo, dm.values(k, j));
        hi = std::max(hi, dm.values(k, j));
    }
    if (hi == lo) return 0.5;
    const double x = dm.values(i, j);
    return dm.objectives[j] == sspahp::Objective::Profit ? (x - lo) / (hi - lo) : (hi - x) / (hi - lo);
}

inline std::vector<double> weighted_sum_oracle(const sspahp::DecisionMatrix& dm,
                                               const std::vector<double>& w) {
    std::vector<double> u(dm.alternatives(), 0.0);
    for (std::size_t i = 0; i < dm.alternatives(); ++i) {
        for (std::size_t j = 0; j < dm.criteria(); ++j) u[i] += w[j] * normalized_cell(dm, i, j);
    }
    return u;
}

// SSP-AHP utility with the deviation term spelled out per cell.
inline std::vector<double> ssp_oracle(const sspahp::DecisionMatrix& dm, const std::vector<double>& w,
                                      const std::vector<double>& s) {
    const std::size_t m = dm.alternatives();
    std::vector<double> u(m, 0.0);
    for (std::size_t j = 0; j < dm.criteria(); ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += normalized_cell(dm, i, j);
        mean /= static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double r = normalized_cell(dm, i, j);
            u[i] += w[j] * (r - std::fabs(mean - r) * s[j]);
        }
    }
    return u;
}

inline double spearman_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double num = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        num += d * d * ((n - x[i] + 1.0) + (n - y[i] + 1.0));
    }
    return 1.0 - 6.0 * num / (n * n * n * n + n * n * n - n * n - n);
}

// Mean-centred form, deliberately not the raw-sums form used by the library.
inline double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// Ranks by descending value, ties by index.
inline std::vector<int> ranks_desc(const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] > v[b]; });
    std::vector<int> r(v.size());
    for (std::size_t k = 0; k < order.size(); ++k) r[order[k]] = static_cast<int>(k + 1);
    return r;
}

inline std::vector<int> ranks_asc(const std::vector<double>& v) {
    std::vector<double> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](double x) { return -x; });
    return ranks_desc(neg);
}

// Dominant eigenpair of a positive matrix via repeated squaring of A.
struct EigenOracle {
    std::vector<double> vector;
    double lambda;
};

inline EigenOracle eigen_by_squaring(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    auto p = a;
    for (int round = 0; round < 60; ++round) {
        std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) q[i][j] += p[i][k] * p[k][j];
                scale = std::max(scale, q[i][j]);
            }
        for (auto& row : q)
            for (auto& x : row) x /= scale;
        p = q;
    }
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i] = p[i][0];
    const double total = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& x : v) x /= total;
    double av0 = 0.0;
    for (std::size_t k = 0; k < n; ++k) av0 += a[0][k] * v[k];
    return {v, av0 / v[0]};
}

}  // namespace testsupport
