#include "orthopath/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orthopath {

namespace {

double norm_pow(double sq_norm, double p) {
  if (p == 2.0) return sq_norm;
  if (p == 1.0) return std::sqrt(sq_norm);
  return std::pow(sq_norm, 0.5 * p);
}

std::vector<std::int64_t> backtrack(const std::vector<std::int64_t>& prev,
                                    std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> partition;
  for (std::int64_t j = b; j != a; j = prev[j - a]) partition.push_back(j);
  partition.push_back(a);
  std::reverse(partition.begin(), partition.end());
  return partition;
}

}  // namespace

VariationResult p_var_exact(const LatticePath& path, double p, IntervalZ interval) {
  if (p < 1.0) throw std::invalid_argument("p-variation requires p >= 1");
  check_interval(path, interval);
  const std::int64_t a = interval.a;
  const std::int64_t b = interval.b;
  const std::int64_t n = b - a;
  const int d = path.dim();
  const double* x = path.raw().data();

  // Accumulate in extended precision, report as double.
  std::vector<long double> best(n + 1, 0.0L);
  std::vector<std::int64_t> prev(n + 1, a);
  for (std::int64_t j = 1; j <= n; ++j) {
    const double* xj = x + (a + j) * d;
    long double top = -1.0L;
    std::int64_t arg = a;
    for (std::int64_t i = 0; i < j; ++i) {
      const double* xi = x + (a + i) * d;
      double sq = 0.0;
      for (int c = 0; c < d; ++c) {
        const double diff = xj[c] - xi[c];
        sq += diff * diff;
      }
      const long double cand = best[i] + static_cast<long double>(norm_pow(sq, p));
      if (cand > top) {
        top = cand;
        arg = a + i;
      }
    }
    best[j] = top;
    prev[j] = arg;
  }

  VariationResult out;
  out.power_sum = static_cast<double>(best[n]);
  out.norm = std::pow(out.power_sum, 1.0 / p);
  out.partition = backtrack(prev, a, b);
  return out;
}

VariationResult p_var_bruteforce(const LatticePath& path, double p, IntervalZ interval) {
  if (p < 1.0) throw std::invalid_argument("p-variation requires p >= 1");
  check_interval(path, interval);
  const std::int64_t a = interval.a;
  const std::int64_t b = interval.b;
  if (b - a > 20) {
    throw std::length_error("brute force refuses intervals longer than 20");
  }
  const int d = path.dim();
  const int interior = static_cast<int>(b - a - 1);

  const auto seg = [&](std::int64_t i, std::int64_t j) {
    double sq = 0.0;
    for (int c = 0; c < d; ++c) {
      const double diff = path.at(j, c) - path.at(i, c);
      sq += diff * diff;
    }
    return norm_pow(sq, p);
  };

  long double best = -1.0L;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
    long double sum = 0.0L;
    std::int64_t last = a;
    for (int t = 0; t < interior; ++t) {
      if (mask & (1u << t)) {
        const std::int64_t pt = a + 1 + t;
        sum += seg(last, pt);
        last = pt;
      }
    }
    sum += seg(last, b);
    if (sum > best) {
      best = sum;
      best_mask = mask;
    }
  }

  VariationResult out;
  out.power_sum = static_cast<double>(best);
  out.norm = std::pow(out.power_sum, 1.0 / p);
  out.partition.push_back(a);
  for (int t = 0; t < interior; ++t) {
    if (best_mask & (1u << t)) out.partition.push_back(a + 1 + t);
  }
  out.partition.push_back(b);
  return out;
}

double sup_oscillation(const LatticePath& path, IntervalZ interval) {
  check_interval(path, interval);
  const int d = path.dim();
  double best = 0.0;
  for (std::int64_t i = interval.a; i <= interval.b; ++i) {
    for (std::int64_t j = i + 1; j <= interval.b; ++j) {
      double sq = 0.0;
      for (int c = 0; c < d; ++c) {
        const double diff = path.at(j, c) - path.at(i, c);
        sq += diff * diff;
      }
      best = std::max(best, sq);
    }
  }
  return std::sqrt(best);
}

VariationResult table_one_var(const AreaTable& table, IntervalZ interval) {
  if (interval.a < 0 || interval.b <= interval.a || interval.b > table.length()) {
    throw std::out_of_range("interval outside area table");
  }
  const std::int64_t a = interval.a;
  const std::int64_t n = interval.b - a;

  std::vector<long double> best(n + 1, 0.0L);
  std::vector<std::int64_t> prev(n + 1, a);
  for (std::int64_t j = 1; j <= n; ++j) {
    long double top = -1.0L;
    std::int64_t arg = a;
    for (std::int64_t i = 0; i < j; ++i) {
      const long double cand = best[i] + static_cast<long double>(table.frobenius(a + i, a + j));
      if (cand > top) {
        top = cand;
        arg = a + i;
      }
    }
    best[j] = top;
    prev[j] = arg;
  }

  VariationResult out;
  out.power_sum = static_cast<double>(best[n]);
  out.norm = out.power_sum;
  out.partition = backtrack(prev, a, interval.b);
  return out;
}

VariationResult area_one_var_streaming(const LatticePath& path, IntervalZ interval) {
  check_interval(path, interval);
  const std::int64_t a = interval.a;
  const std::int64_t n = interval.b - a;
  const int d = path.dim();
  const double* x = path.raw().data();
  const int dd = d * d;

  // row[i] carries A(a+i, a+j) for the current j. Chen step per j:
  // A(i,j) = A(i,j-1) + 1/2 [x_{j-1} - x_i, x_j - x_{j-1}], segment area zero.
  std::vector<double> row(static_cast<std::size_t>(n) * dd, 0.0);
  std::vector<long double> best(n + 1, 0.0L);
  std::vector<std::int64_t> prev(n + 1, a);
  std::vector<double> delta(d);

  for (std::int64_t j = 1; j <= n; ++j) {
    const double* xj = x + (a + j) * d;
    const double* xm = x + (a + j - 1) * d;
    for (int c = 0; c < d; ++c) delta[c] = xj[c] - xm[c];
    long double top = -1.0L;
    std::int64_t arg = a;
    for (std::int64_t i = 0; i < j; ++i) {
      double* aij = row.data() + i * dd;
      const double* xi = x + (a + i) * d;
      double fro = 0.0;
      for (int pc = 0; pc < d; ++pc) {
        const double ep = xm[pc] - xi[pc];
        for (int qc = 0; qc < d; ++qc) {
          const double eq = xm[qc] - xi[qc];
          const double v = aij[pc * d + qc] + 0.5 * (ep * delta[qc] - eq * delta[pc]);
          aij[pc * d + qc] = v;
          fro += v * v;
        }
      }
      const long double cand = best[i] + static_cast<long double>(std::sqrt(fro));
      if (cand > top) {
        top = cand;
        arg = a + i;
      }
    }
    best[j] = top;
    prev[j] = arg;
  }

  VariationResult out;
  out.power_sum = static_cast<double>(best[n]);
  out.norm = out.power_sum;
  out.partition = backtrack(prev, a, interval.b);
  return out;
}

double maximal_block_oscillation(const LatticePath& path) {
  const int d = path.dim();
  const std::int64_t n = path.length();
  double best = 0.0;
  // Block sums are x_j - x_{i-1} with the x_{-1} = 0 convention; scan all
  // pairs over the zero-prepended value sequence.
  for (std::int64_t j = 0; j <= n; ++j) {
    const auto xj = path.at(j);
    double sq = 0.0;
    for (int c = 0; c < d; ++c) sq += xj[c] * xj[c];
    best = std::max(best, sq);
    for (std::int64_t i = 0; i < j; ++i) {
      const auto xi = path.at(i);
      sq = 0.0;
      for (int c = 0; c < d; ++c) {
        const double diff = xj[c] - xi[c];
        sq += diff * diff;
      }
      best = std::max(best, sq);
    }
  }
  return best;
}

double max_weight_chain(std::span<const std::int64_t> knots,
                        const std::function<double(std::int64_t, std::int64_t)>& weight) {
  const std::size_t n = knots.size();
  if (n < 2) return 0.0;
  std::vector<long double> best(n, 0.0L);
  for (std::size_t j = 1; j < n; ++j) {
    long double top = 0.0L;
    for (std::size_t i = 0; i < j; ++i) {
      const long double cand = best[i] + static_cast<long double>(weight(knots[i], knots[j]));
      top = std::max(top, cand);
    }
    best[j] = top;
  }
  // Chains may stop before the last knot; weights are nonnegative so the
  // maximum over end points is the overall supremum.
  long double overall = 0.0L;
  for (std::size_t j = 0; j < n; ++j) overall = std::max(overall, best[j]);
  return static_cast<double>(overall);
}

}  // namespace orthopath
