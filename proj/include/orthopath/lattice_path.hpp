#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace orthopath {

// Integer interval [a, b] with a < b. Interval endpoints index path knots.
struct IntervalZ {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t length() const { return b - a; }
  bool operator==(const IntervalZ&) const = default;
};

// Validates a >= 0 and b > a; throws std::invalid_argument otherwise.
IntervalZ make_interval(std::int64_t a, std::int64_t b);

// d-dimensional values at integer knots 0..N, linear on each [k, k+1].
// Immutable after construction; every operation below is pure.
class LatticePath {
 public:
  LatticePath() = default;

  // values holds (N+1) knots of dim entries each, row-major.
  LatticePath(int dim, std::vector<double> values);

  static LatticePath zeros(int dim, std::int64_t n_knots);

  int dim() const { return dim_; }
  // Path length N in knots; values exist at 0..N.
  std::int64_t length() const {
    return static_cast<std::int64_t>(values_.size()) / dim_ - 1;
  }

  std::span<const double> at(std::int64_t k) const {
    return {values_.data() + k * dim_, static_cast<std::size_t>(dim_)};
  }
  double at(std::int64_t k, int coord) const { return values_[k * dim_ + coord]; }
  void set(std::int64_t k, std::span<const double> v);
  void set(std::int64_t k, int coord, double v) { values_[k * dim_ + coord] = v; }

  const std::vector<double>& raw() const { return values_; }

 private:
  int dim_ = 1;
  std::vector<double> values_{0.0};
};

// gamma(I) = x_b - x_a.
std::vector<double> increment(const LatticePath& path, IntervalZ interval);

// Linear interpolation at real time t in [0, N].
std::vector<double> eval_at(const LatticePath& path, double t);

// L(path, {t_k}): equals path at each knot t_k, constant before t_0 and after
// t_K, linear in between. Output is defined on the same index range 0..N.
LatticePath coarsen_at_knots(const LatticePath& path,
                             std::span<const std::int64_t> knots);

// Sub-path over [a, b], re-indexed to 0..(b-a).
LatticePath restrict_to(const LatticePath& path, IntervalZ interval);

// Throws std::out_of_range unless 0 <= a < b <= N.
void check_interval(const LatticePath& path, IntervalZ interval);

}  // namespace orthopath
