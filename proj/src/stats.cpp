#include "stylo/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numeric>

#include "stylo/error.hpp"

namespace stylo::stats {
namespace {

std::int64_t pairs(std::int64_t t) { return t * (t - 1) / 2; }

// Collects tie-group sizes of a sorted range and returns sum of t(t-1)/2.
template <typename It, typename Eq>
std::int64_t tie_groups(It first, It last, Eq eq, std::vector<std::int64_t>& groups) {
  std::int64_t total = 0;
  while (first != last) {
    auto run_end = std::next(first);
    while (run_end != last && eq(*first, *run_end)) ++run_end;
    auto t = static_cast<std::int64_t>(std::distance(first, run_end));
    if (t > 1) {
      groups.push_back(t);
      total += pairs(t);
    }
    first = run_end;
  }
  return total;
}

// Sorts v and returns the number of inversions (strictly greater before smaller).
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

double tau_from(std::int64_t s, std::int64_t n0, std::int64_t n1, std::int64_t n2) {
  return static_cast<double>(s) / std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
}

std::int64_t tie_pair_sum(const std::vector<std::int64_t>& groups) {
  std::int64_t s = 0;
  for (auto t : groups) s += pairs(t);
  return s;
}

double two_sided_normal(double z) {
  static const boost::math::normal_distribution<double> standard;
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(standard, std::fabs(z))));
}

}  // namespace

double compensated_sum(std::span<const double> values) {
  double sum = 0.0, c = 0.0;
  for (double v : values) {
    double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      c += (sum - t) + v;
    else
      c += (v - t) + sum;
    sum = t;
  }
  return sum + c;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw UndefinedStatistic("pearson: inputs differ in length");
  const std::size_t n = a.size();
  if (n < 2) throw UndefinedStatistic("pearson: need at least two observations");
  const double ma = compensated_sum(a) / static_cast<double>(n);
  const double mb = compensated_sum(b) / static_cast<double>(n);
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw UndefinedStatistic("pearson: constant input");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

KendallResult kendall(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw UndefinedStatistic("kendall: inputs differ in length");
  const auto n = static_cast<std::int64_t>(x.size());
  if (n < 2) throw UndefinedStatistic("kendall: need at least two observations");

  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return x[i] < x[j] || (x[i] == x[j] && y[i] < y[j]);
  });

  KendallResult r;
  r.n = n;
  const std::int64_t n0 = pairs(n);
  const std::int64_t n1 =
      tie_groups(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] == x[j]; }, r.ties.x_groups);
  std::vector<std::int64_t> joint_groups;
  const std::int64_t n3 = tie_groups(order.begin(), order.end(),
                                     [&](std::size_t i, std::size_t j) { return x[i] == x[j] && y[i] == y[j]; },
                                     joint_groups);

  std::vector<double> ys(x.size());
  for (std::size_t k = 0; k < order.size(); ++k) ys[k] = y[order[k]];
  std::vector<double> buf(ys.size());
  const std::int64_t swaps = merge_count(ys, buf, 0, ys.size());
  const std::int64_t n2 = tie_groups(ys.begin(), ys.end(), std::equal_to<>(), r.ties.y_groups);

  if (n1 == n0 || n2 == n0) throw UndefinedStatistic("kendall: a variable is entirely tied");
  r.s = n0 - n1 - n2 + n3 - 2 * swaps;
  r.tau = tau_from(r.s, n0, n1, n2);
  return r;
}

double kendall_tau_b(std::span<const double> x, std::span<const double> y) { return kendall(x, y).tau; }

double kendall_p_normal(double tau, std::int64_t n, const TieTerms& ties) {
  if (n < 2) return 1.0;
  const double nd = static_cast<double>(n);
  const double n0 = nd * (nd - 1) / 2;
  const double n1 = static_cast<double>(tie_pair_sum(ties.x_groups));
  const double n2 = static_cast<double>(tie_pair_sum(ties.y_groups));
  const double s = tau * std::sqrt((n0 - n1) * (n0 - n2));

  double v0 = nd * (nd - 1) * (2 * nd + 5);
  double vt = 0, vu = 0, t2 = 0, u2 = 0, t3 = 0, u3 = 0;
  for (auto g : ties.x_groups) {
    const double t = static_cast<double>(g);
    vt += t * (t - 1) * (2 * t + 5);
    t2 += t * (t - 1);
    t3 += t * (t - 1) * (t - 2);
  }
  for (auto g : ties.y_groups) {
    const double u = static_cast<double>(g);
    vu += u * (u - 1) * (2 * u + 5);
    u2 += u * (u - 1);
    u3 += u * (u - 1) * (u - 2);
  }
  double var = (v0 - vt - vu) / 18.0;
  if (n > 2) var += (t3 * u3) / (9.0 * nd * (nd - 1) * (nd - 2));
  var += (t2 * u2) / (2.0 * nd * (nd - 1));
  if (var <= 0) return 1.0;
  return two_sided_normal(s / std::sqrt(var));
}

double kendall_p_exact(double tau, std::int64_t n, const TieTerms& ties) {
  if (n < 2) return 1.0;
  // Canonical data with the same tie structure: the null distribution of S
  // depends only on n and the tie-group sizes.
  auto build = [n](const std::vector<std::int64_t>& groups) {
    std::vector<double> v;
    double value = 0;
    for (auto g : groups) {
      for (std::int64_t k = 0; k < g; ++k) v.push_back(value);
      value += 1;
    }
    while (static_cast<std::int64_t>(v.size()) < n) v.push_back(value++);
    return v;
  };
  const auto x = build(ties.x_groups);
  auto y = build(ties.y_groups);

  const std::int64_t n0 = pairs(n);
  const std::int64_t n1 = tie_pair_sum(ties.x_groups);
  const std::int64_t n2 = tie_pair_sum(ties.y_groups);
  const double s_obs = std::fabs(tau * std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2)));
  const auto threshold = static_cast<std::int64_t>(std::llround(s_obs));

  std::sort(y.begin(), y.end());
  std::int64_t total = 0, extreme = 0;
  do {
    std::int64_t s = 0;
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = i + 1; j < n; ++j) {
        const double dx = x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)];
        const double dy = y[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(i)];
        s += ((dx > 0) - (dx < 0)) * ((dy > 0) - (dy < 0));
      }
    ++total;
    if ((s < 0 ? -s : s) >= threshold) ++extreme;
  } while (std::next_permutation(y.begin(), y.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

double kendall_p(double tau, std::int64_t n, const TieTerms& ties) {
  return n < 10 ? kendall_p_exact(tau, n, ties) : kendall_p_normal(tau, n, ties);
}

double pearson_p(double r, std::int64_t n) {
  if (n < 3) throw UndefinedStatistic("pearson p-value needs n >= 3");
  const double ar = std::fabs(r);
  if (ar >= 1.0) return 0.0;
  if (ar == 0.0) return 1.0;
  const double df = static_cast<double>(n - 2);
  const double t = ar * std::sqrt(df / (1.0 - r * r));
  const boost::math::students_t_distribution<double> dist(df);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, t)));
}

PearsonResult pearson_with_p(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 3) throw UndefinedStatistic("pearson: need at least three observations for a p-value");
  PearsonResult out;
  out.r = pearson(x, y);
  out.p = pearson_p(out.r, static_cast<std::int64_t>(x.size()));
  return out;
}

}  // namespace stylo::stats
