#include "sspahp/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sspahp/errors.hpp"

namespace sspahp {

std::vector<double> rank_from_scores(std::span<const double> values, Orientation orientation,
                                     TieRule tie_rule) {
    const auto n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto better = [&](std::size_t a, std::size_t b) {
        return orientation == Orientation::HigherBetter ? values[a] > values[b]
                                                        : values[a] < values[b];
    };
    std::stable_sort(order.begin(), order.end(), better);

    std::vector<double> ranks(n);
    for (std::size_t pos = 0; pos < n;) {
        std::size_t end = pos + 1;
        while (end < n && values[order[end]] == values[order[pos]]) ++end;
        for (std::size_t k = pos; k < end; ++k) {
            ranks[order[k]] = tie_rule == TieRule::Average
                                  ? (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0
                                  : static_cast<double>(k + 1);
        }
        pos = end;
    }
    return ranks;
}

namespace {

void require_pair(std::span<const double> x, std::span<const double> y, const char* what) {
    if (x.size() != y.size()) {
        throw InputError(std::string(what) + ": length mismatch (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
    }
    if (x.size() < 2) throw InputError(std::string(what) + ": need at least 2 values");
}

}  // namespace

double weighted_spearman(std::span<const double> x, std::span<const double> y) {
    require_pair(x, y, "weighted Spearman");
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1.0 || x[i] > n || y[i] < 1.0 || y[i] > n) {
            throw InputError("weighted Spearman: ranks must lie in [1, N]");
        }
    }
    double numerator = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        numerator += d * d * ((n - x[i] + 1.0) + (n - y[i] + 1.0));
    }
    const double denominator = n * n * n * n + n * n * n - n * n - n;
    return 1.0 - 6.0 * numerator / denominator;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    require_pair(x, y, "Pearson");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
    }
    const double vx = n * sxx - sx * sx;
    const double vy = n * syy - sy * sy;
    if (!(vx > 0.0) || !(vy > 0.0)) {
        throw NumericalError("Pearson correlation is undefined for a constant vector");
    }
    // Equal spreads (identical or reversed rankings) give an exact +-1.
    const double denominator = vx == vy ? vx : std::sqrt(vx) * std::sqrt(vy);
    return (n * sxy - sx * sy) / denominator;
}

}  // namespace sspahp
