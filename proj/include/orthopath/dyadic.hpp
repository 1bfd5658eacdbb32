#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "orthopath/lattice_path.hpp"

namespace orthopath {

// Sentinel for N(0): every power of two divides 0.
inline constexpr int kLevelInfinity = std::numeric_limits<int>::max();

// [k * 2^level, (k+1) * 2^level].
struct DyadicInterval {
  std::int64_t k = 0;
  int level = 0;

  std::int64_t lo() const { return k << level; }
  std::int64_t hi() const { return (k + 1) << level; }
  std::int64_t length() const { return std::int64_t{1} << level; }
  IntervalZ as_interval() const { return {lo(), hi()}; }
  bool operator==(const DyadicInterval&) const = default;
  auto operator<=>(const DyadicInterval&) const = default;
};

// Ordered dyadic cover of an interval: levels strictly decrease moving left
// and right away from the peak point P, N(P) >= n(J) + 1, at most two pieces
// per level, |pieces| <= 4 log2(|J|+1).
struct PeakedDecomposition {
  std::vector<DyadicInterval> pieces;  // left to right
  std::int64_t peak = 0;
};

// Level of the biggest dyadic interval contained in J.
int n_of(IntervalZ j);

// 2-adic valuation of a point; kLevelInfinity for 0.
int point_level(std::int64_t p);

enum class Side { kLeft, kRight };

// Cover of J by dyadic intervals with levels strictly increasing toward the
// designated boundary, which must be a dyadic point of level n with |J| < 2^n.
std::vector<DyadicInterval> decompose_monotone(IntervalZ j, Side dyadic_boundary);

PeakedDecomposition decompose_peaked(IntervalZ j);

// Repeatedly cuts out the biggest dyadic interval available in the remaining
// gaps (ties: all maxima removed). Returns pieces in left-to-right order.
std::vector<DyadicInterval> greedy_decompose(IntervalZ j);

struct Bisection {
  IntervalZ j1, j2;          // J = J1 u J2, both of positive length
  DyadicInterval i1, i2;     // disjoint dyadics with J^i c I^i, |J^i| > |I^i|/2
};

// Throws std::invalid_argument if J is dyadic.
Bisection bisect(IntervalZ j);

// Recursively bisect until every piece is dyadic; equals decompose_peaked(J).pieces.
std::vector<DyadicInterval> bisect_to_dyadics(IntervalZ j);

bool is_dyadic(IntervalZ j);

// B_J: all dyadic intervals contained in J. Materializes only for
// |J| <= 65536; use for_each_b_set beyond that.
std::vector<DyadicInterval> b_set(IntervalZ j);

// B_J^level.
std::vector<DyadicInterval> b_set_level(IntervalZ j, int level);

void for_each_b_set(IntervalZ j,
                    const std::function<void(DyadicInterval)>& fn);

// |I n J| > |I| / 2 (membership in the enlarged family B~_J).
bool tilde_member(DyadicInterval i, IntervalZ j);

}  // namespace orthopath
