#include "orthopath/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace orthopath {

namespace {

void check_len(IntervalZ j) {
  if (j.a < 0 || j.b <= j.a) throw std::invalid_argument("interval must satisfy 0 <= a < b");
}

int floor_log2(std::int64_t v) {
  return 63 - std::countl_zero(static_cast<std::uint64_t>(v));
}

}  // namespace

int n_of(IntervalZ j) {
  check_len(j);
  // A level-n interval fits iff ceil(a / 2^n) + 1 <= floor(b / 2^n).
  int best = -1;
  for (int n = 0; (std::int64_t{1} << n) <= j.length(); ++n) {
    const std::int64_t k_lo = (j.a + (std::int64_t{1} << n) - 1) >> n;
    const std::int64_t k_hi = j.b >> n;
    if (k_lo + 1 <= k_hi) best = n;
  }
  return best;  // >= 0 whenever |J| >= 1
}

int point_level(std::int64_t p) {
  if (p < 0) throw std::invalid_argument("points are nonnegative integers");
  if (p == 0) return kLevelInfinity;
  return std::countr_zero(static_cast<std::uint64_t>(p));
}

bool is_dyadic(IntervalZ j) {
  check_len(j);
  const std::int64_t len = j.length();
  if ((len & (len - 1)) != 0) return false;
  return j.a % len == 0;
}

std::vector<DyadicInterval> decompose_monotone(IntervalZ j, Side dyadic_boundary) {
  check_len(j);
  const std::int64_t boundary = dyadic_boundary == Side::kRight ? j.b : j.a;
  const int valuation = point_level(boundary);
  const std::int64_t len = j.length();
  if (valuation != kLevelInfinity && (valuation < 1 || len >= (std::int64_t{1} << valuation))) {
    throw std::invalid_argument(
        "boundary must be a level-n dyadic point with |J| < 2^n, n >= 1");
  }
  // Levels are the set bits of |J|, smallest level farthest from the boundary.
  std::vector<DyadicInterval> pieces;
  if (dyadic_boundary == Side::kRight) {
    std::int64_t lo = j.a;
    for (int e = 0; (std::int64_t{1} << e) <= len; ++e) {
      if (len & (std::int64_t{1} << e)) {
        pieces.push_back({lo >> e, e});
        lo += std::int64_t{1} << e;
      }
    }
  } else {
    std::int64_t hi = j.b;
    for (int e = 0; (std::int64_t{1} << e) <= len; ++e) {
      if (len & (std::int64_t{1} << e)) {
        hi -= std::int64_t{1} << e;
        pieces.push_back({hi >> e, e});
      }
    }
    std::reverse(pieces.begin(), pieces.end());
  }
  return pieces;
}

PeakedDecomposition decompose_peaked(IntervalZ j) {
  check_len(j);
  const int n0 = n_of(j);
  const std::int64_t w = std::int64_t{1} << n0;
  const std::int64_t k_lo = (j.a + w - 1) >> n0;
  const std::int64_t k_hi = j.b >> n0;  // top intervals are k_lo .. k_hi-1

  PeakedDecomposition out;
  if (k_hi - k_lo == 2) {
    // Two adjacent top-level intervals; the point parting them has level >= n0+1.
    out.peak = (k_lo + 1) * w;
  } else {
    // Single top interval [k_lo*w, (k_lo+1)*w]: even k -> left end, odd -> right.
    out.peak = (k_lo % 2 == 0) ? k_lo * w : (k_lo + 1) * w;
  }

  const std::int64_t top_lo = k_lo * w;
  const std::int64_t top_hi = k_hi * w;
  if (j.a < top_lo) {
    auto left = decompose_monotone({j.a, top_lo}, Side::kRight);
    out.pieces.insert(out.pieces.end(), left.begin(), left.end());
  }
  for (std::int64_t k = k_lo; k < k_hi; ++k) out.pieces.push_back({k, n0});
  if (top_hi < j.b) {
    auto right = decompose_monotone({top_hi, j.b}, Side::kLeft);
    out.pieces.insert(out.pieces.end(), right.begin(), right.end());
  }
  return out;
}

std::vector<DyadicInterval> greedy_decompose(IntervalZ j) {
  check_len(j);
  std::vector<DyadicInterval> out;
  // Cut all biggest dyadic intervals, then recurse into the side gaps.
  const int n0 = n_of(j);
  const std::int64_t w = std::int64_t{1} << n0;
  const std::int64_t k_lo = (j.a + w - 1) >> n0;
  const std::int64_t k_hi = j.b >> n0;
  if (j.a < k_lo * w) {
    auto left = greedy_decompose({j.a, k_lo * w});
    out.insert(out.end(), left.begin(), left.end());
  }
  for (std::int64_t k = k_lo; k < k_hi; ++k) out.push_back({k, n0});
  if (k_hi * w < j.b) {
    auto right = greedy_decompose({k_hi * w, j.b});
    out.insert(out.end(), right.begin(), right.end());
  }
  return out;
}

namespace {

// Smallest dyadic interval I with K c I and |K| > |I|/2, for K that is
// either dyadic or a monotone union whose biggest piece touches a dyadic
// point one level up.
DyadicInterval enclosing_dyadic(IntervalZ k) {
  if (is_dyadic(k)) {
    const int level = floor_log2(k.length());
    return {k.a >> level, level};
  }
  const int level = floor_log2(k.length());  // biggest piece level
  const std::int64_t w = std::int64_t{1} << (level + 1);
  const std::int64_t q = k.a / w;
  if (!(q * w <= k.a && k.b <= (q + 1) * w)) {
    throw std::logic_error("interval not covered by one level-(n+1) dyadic");
  }
  return {q, level + 1};
}

}  // namespace

Bisection bisect(IntervalZ j) {
  check_len(j);
  if (is_dyadic(j)) throw std::invalid_argument("every non-dyadic interval splits; got a dyadic one");
  const PeakedDecomposition peaked = decompose_peaked(j);

  std::int64_t split = 0;
  if (j.a < peaked.peak && peaked.peak < j.b) {
    split = peaked.peak;
  } else {
    // Monotone case: split at the inner boundary of the biggest piece.
    const auto& pieces = peaked.pieces;
    const bool peak_right = peaked.peak == j.b;
    const DyadicInterval& big = peak_right ? pieces.back() : pieces.front();
    split = peak_right ? big.lo() : big.hi();
  }

  Bisection out;
  out.j1 = {j.a, split};
  out.j2 = {split, j.b};
  out.i1 = enclosing_dyadic(out.j1);
  out.i2 = enclosing_dyadic(out.j2);
  return out;
}

std::vector<DyadicInterval> bisect_to_dyadics(IntervalZ j) {
  check_len(j);
  if (is_dyadic(j)) {
    const int level = floor_log2(j.length());
    return {{j.a >> level, level}};
  }
  const Bisection cut = bisect(j);
  auto out = bisect_to_dyadics(cut.j1);
  auto right = bisect_to_dyadics(cut.j2);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::vector<DyadicInterval> b_set(IntervalZ j) {
  check_len(j);
  if (j.length() > (std::int64_t{1} << 16)) {
    throw std::length_error("b_set materializes only |J| <= 65536; use for_each_b_set");
  }
  std::vector<DyadicInterval> out;
  for_each_b_set(j, [&](DyadicInterval i) { out.push_back(i); });
  return out;
}

std::vector<DyadicInterval> b_set_level(IntervalZ j, int level) {
  check_len(j);
  std::vector<DyadicInterval> out;
  if (level < 0 || (std::int64_t{1} << level) > j.length()) return out;
  const std::int64_t w = std::int64_t{1} << level;
  const std::int64_t k_lo = (j.a + w - 1) >> level;
  const std::int64_t k_hi = j.b >> level;
  for (std::int64_t k = k_lo; k < k_hi; ++k) out.push_back({k, level});
  return out;
}

void for_each_b_set(IntervalZ j, const std::function<void(DyadicInterval)>& fn) {
  check_len(j);
  for (int level = 0; (std::int64_t{1} << level) <= j.length(); ++level) {
    for (const DyadicInterval i : b_set_level(j, level)) fn(i);
  }
}

bool tilde_member(DyadicInterval i, IntervalZ j) {
  check_len(j);
  const std::int64_t lo = std::max(i.lo(), j.a);
  const std::int64_t hi = std::min(i.hi(), j.b);
  const std::int64_t overlap = std::max<std::int64_t>(0, hi - lo);
  return 2 * overlap > i.length();
}

}  // namespace orthopath
