#pragma once

#include <span>
#include <vector>

namespace sspahp {

enum class Orientation { HigherBetter, LowerBetter };

enum class TieRule {
    InputOrder,  // earlier alternative gets the better rank
    Average,     // tied alternatives share the mean of their ranks
};

/// Ranks 1..N (1 = best) from scores.
std::vector<double> rank_from_scores(std::span<const double> values, Orientation orientation,
                                     TieRule tie_rule);

/// Weighted Spearman coefficient, which weighs disagreement near the top of
/// the rankings more heavily:
///
///   r_w = 1 - 6 * sum (x_i - y_i)^2 ((N - x_i + 1) + (N - y_i + 1)) / (N^4 + N^3 - N^2 - N)
///
/// The value is reported as computed; it is not clamped to [-1, 1].
/// Inputs are ranks in [1, N] (average ranks allowed), N >= 2.
double weighted_spearman(std::span<const double> x, std::span<const double> y);

/// Product-moment Pearson correlation. Throws NumericalError when either
/// argument is constant.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace sspahp
