#include "orthopath/lattice_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace orthopath {

IntervalZ make_interval(std::int64_t a, std::int64_t b) {
  if (a < 0 || b <= a) {
    throw std::invalid_argument("interval requires 0 <= a < b, got [" +
                                std::to_string(a) + "," + std::to_string(b) + "]");
  }
  return {a, b};
}

LatticePath::LatticePath(int dim, std::vector<double> values)
    : dim_(dim), values_(std::move(values)) {
  if (dim_ <= 0) throw std::invalid_argument("path dimension must be positive");
  if (values_.empty() || values_.size() % static_cast<std::size_t>(dim_) != 0) {
    throw std::invalid_argument("path values must hold a positive number of d-vectors");
  }
}

LatticePath LatticePath::zeros(int dim, std::int64_t n_knots) {
  return LatticePath(dim, std::vector<double>(static_cast<std::size_t>(dim) * (n_knots + 1), 0.0));
}

void LatticePath::set(std::int64_t k, std::span<const double> v) {
  std::copy(v.begin(), v.end(), values_.begin() + k * dim_);
}

void check_interval(const LatticePath& path, IntervalZ interval) {
  if (interval.a < 0 || interval.b <= interval.a || interval.b > path.length()) {
    throw std::out_of_range("interval [" + std::to_string(interval.a) + "," +
                            std::to_string(interval.b) + "] outside path of length " +
                            std::to_string(path.length()));
  }
}

std::vector<double> increment(const LatticePath& path, IntervalZ interval) {
  check_interval(path, interval);
  std::vector<double> out(path.dim());
  const auto xa = path.at(interval.a);
  const auto xb = path.at(interval.b);
  for (int c = 0; c < path.dim(); ++c) out[c] = xb[c] - xa[c];
  return out;
}

std::vector<double> eval_at(const LatticePath& path, double t) {
  if (t < 0.0 || t > static_cast<double>(path.length())) {
    throw std::out_of_range("evaluation time outside [0, N]");
  }
  const auto k = static_cast<std::int64_t>(std::floor(t));
  std::vector<double> out(path.dim());
  if (k >= path.length()) {
    const auto x = path.at(path.length());
    std::copy(x.begin(), x.end(), out.begin());
    return out;
  }
  const double frac = t - static_cast<double>(k);
  const auto x0 = path.at(k);
  const auto x1 = path.at(k + 1);
  for (int c = 0; c < path.dim(); ++c) out[c] = x0[c] + frac * (x1[c] - x0[c]);
  return out;
}

LatticePath coarsen_at_knots(const LatticePath& path,
                             std::span<const std::int64_t> knots) {
  if (knots.empty()) throw std::invalid_argument("knot sequence is empty");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i] < 0 || knots[i] > path.length()) {
      throw std::invalid_argument("knot outside [0, N]");
    }
    if (i > 0 && knots[i] <= knots[i - 1]) {
      throw std::invalid_argument("knots must be strictly increasing");
    }
  }
  const std::int64_t n = path.length();
  LatticePath out = LatticePath::zeros(path.dim(), n);
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k <= knots.front()) {
      out.set(k, path.at(knots.front()));
    } else if (k >= knots.back()) {
      out.set(k, path.at(knots.back()));
    } else {
      const auto it = std::upper_bound(knots.begin(), knots.end(), k);
      const std::int64_t t1 = *it;
      const std::int64_t t0 = *(it - 1);
      const double frac = static_cast<double>(k - t0) / static_cast<double>(t1 - t0);
      const auto x0 = path.at(t0);
      const auto x1 = path.at(t1);
      for (int c = 0; c < path.dim(); ++c) {
        out.set(k, c, x0[c] + frac * (x1[c] - x0[c]));
      }
    }
  }
  return out;
}

LatticePath restrict_to(const LatticePath& path, IntervalZ interval) {
  check_interval(path, interval);
  std::vector<double> values(path.raw().begin() + interval.a * path.dim(),
                             path.raw().begin() + (interval.b + 1) * path.dim());
  return LatticePath(path.dim(), std::move(values));
}

}  // namespace orthopath
