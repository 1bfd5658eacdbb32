#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orthopath/lattice_path.hpp"

namespace orthopath {

// Dense table of the level-2 increments A(i,j), 0 <= i <= j <= N, each a
// d x d matrix (row-major). Entries of a self-area table are antisymmetric
// and satisfy the Chen relation; pair tables (two distinct paths) are not
// antisymmetric. Storage is the upper triangle only.
class AreaTable {
 public:
  // Full-table storage is refused above this many knots; use the streaming
  // one-variation in variation.hpp for longer paths.
  static constexpr std::int64_t kMaxKnots = 20000;

  AreaTable() = default;
  AreaTable(int dim, std::int64_t n_knots);

  int dim() const { return dim_; }
  std::int64_t length() const { return n_; }

  std::span<const double> at(std::int64_t i, std::int64_t j) const {
    return {values_.data() + index(i, j) * dim_ * dim_,
            static_cast<std::size_t>(dim_) * dim_};
  }
  std::span<double> entry(std::int64_t i, std::int64_t j) {
    return {values_.data() + index(i, j) * dim_ * dim_,
            static_cast<std::size_t>(dim_) * dim_};
  }
  double frobenius(std::int64_t i, std::int64_t j) const;

 private:
  // Row-major upper triangle: row i holds entries for j = i..N.
  std::size_t index(std::int64_t i, std::int64_t j) const {
    return static_cast<std::size_t>(i) * (2 * n_ + 3 - i) / 2 + (j - i);
  }

  int dim_ = 1;
  std::int64_t n_ = 0;
  std::vector<double> values_;
};

// [u, v] = u (x) v - v (x) u, written into out (d x d row-major, accumulated
// with the given scale).
void add_scaled_bracket(std::span<const double> u, std::span<const double> v,
                        double scale, std::span<double> out);

// Area of the path via the Chen recursion; per-segment areas vanish since the
// path is linear on [k, k+1].
AreaTable build_area_table(const LatticePath& path);

// A(a,b) by the direct double sum (1/2) sum_{a<=k<l<b} [dx_k, dx_l].
// Test oracle; refuses b - a > 500.
std::vector<double> area_direct_oracle(const LatticePath& path, IntervalZ interval);

// || A(s,t) - A(s,u) - A(u,t) - 1/2 [x_u - x_s, x_t - x_u] ||_F.
double chen_defect(const LatticePath& path, const AreaTable& table,
                   std::int64_t s, std::int64_t u, std::int64_t t);

// Area produced by two paths of equal dim and length.
AreaTable pair_area_table(const LatticePath& p1, const LatticePath& p2);

// A(s,t) at real times, using the table at integer knots plus the linear
// segments at both ends (A vanishes on segments).
std::vector<double> area_at_real(const LatticePath& path, const AreaTable& table,
                                 double s, double t);

// ||path||^2_{2-var,I} + ||A||_{1-var,I}, the quantity all the expectation
// bounds control.
double rough_norm_sq(const LatticePath& path, const AreaTable& table,
                     IntervalZ interval);

}  // namespace orthopath
