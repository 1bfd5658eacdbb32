#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orthopath/lattice_path.hpp"
#include "orthopath/levy_area.hpp"

namespace orthopath {

struct VariationResult {
  double power_sum = 0.0;               // sup of sum ||increment||^p
  double norm = 0.0;                    // power_sum^(1/p)
  std::vector<std::int64_t> partition;  // knots attaining the supremum
};

// Exact p-variation over integer partitions of [a, b] by the O((b-a)^2)
// recurrence V[j] = max_i (V[i] + ||x_j - x_i||^p). By the integer-partition
// reduction for piecewise-linear paths this equals the supremum over all
// real partitions. Ties in the argmax break toward the smallest predecessor.
VariationResult p_var_exact(const LatticePath& path, double p, IntervalZ interval);

// Exhaustive enumeration over all subsets of interior integer points.
// Refuses b - a > 20.
VariationResult p_var_bruteforce(const LatticePath& path, double p, IntervalZ interval);

// sup_{a <= i <= j <= b} ||x_j - x_i|| (attained at knots).
double sup_oscillation(const LatticePath& path, IntervalZ interval);

// 1-variation of a two-index table over integer partitions of [a, b]:
// max over partitions of sum ||A(n_{j-1}, n_j)||_F, same DP as p_var_exact.
VariationResult table_one_var(const AreaTable& table, IntervalZ interval);

// Same value as table_one_var(build_area_table(path), I) but recomputes the
// area row by row in O(N) memory; used above AreaTable::kMaxKnots.
VariationResult area_one_var_streaming(const LatticePath& path, IntervalZ interval);

// max_{0 <= i <= j <= N} ||x_j - x_{i-1}||^2 with x_{-1} := 0, i.e. the
// largest squared block sum of the underlying series.
double maximal_block_oscillation(const LatticePath& path);

// Maximum-weight increasing chain t_0 < ... < t_end through the given knots:
// max over subsequences of sum w(t_{k}, t_{k+1}). Weights must be >= 0.
double max_weight_chain(std::span<const std::int64_t> knots,
                        const std::function<double(std::int64_t, std::int64_t)>& weight);

}  // namespace orthopath
