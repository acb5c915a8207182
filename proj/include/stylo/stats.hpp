#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stylo::stats {

/// Sample Pearson correlation, clamped to [-1, 1].
/// Throws UndefinedStatistic for |a| != |b|, n < 2 or a constant input.
double pearson(std::span<const double> a, std::span<const double> b);

/// Sizes (> 1) of the groups of tied values in each variable.
struct TieTerms {
  std::vector<std::int64_t> x_groups;
  std::vector<std::int64_t> y_groups;
};

struct KendallResult {
  double tau = 0.0;           // tau-b
  std::int64_t s = 0;         // concordant - discordant
  std::int64_t n = 0;
  TieTerms ties;
};

/// Kendall tau-b in O(n log n) (merge-sort swap count).
/// Throws UndefinedStatistic when n < 2 or either variable is entirely tied.
KendallResult kendall(std::span<const double> x, std::span<const double> y);
double kendall_tau_b(std::span<const double> x, std::span<const double> y);

/// Two-sided p for tau-b: exact permutation distribution for n < 10,
/// normal approximation with tie-adjusted variance of S otherwise.
double kendall_p(double tau, std::int64_t n, const TieTerms& ties);

/// Two-sided p from the normal approximation only.
double kendall_p_normal(double tau, std::int64_t n, const TieTerms& ties);
/// Two-sided p by enumerating every distinct arrangement of y against x.
double kendall_p_exact(double tau, std::int64_t n, const TieTerms& ties);

struct PearsonResult {
  double r = 0.0;
  double p = 1.0;
};

/// r with a two-sided p from Student's t with n - 2 degrees of freedom.
/// Throws UndefinedStatistic for n < 3 or a constant input.
PearsonResult pearson_with_p(std::span<const double> x, std::span<const double> y);

/// Two-sided p of a Pearson r at sample size n.
double pearson_p(double r, std::int64_t n);

/// Neumaier-compensated sum; the order of addition does not change the result
/// beyond the last ulp.
double compensated_sum(std::span<const double> values);

}  // namespace stylo::stats
