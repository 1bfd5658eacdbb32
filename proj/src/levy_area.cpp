#include "orthopath/levy_area.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "orthopath/variation.hpp"

namespace orthopath {

AreaTable::AreaTable(int dim, std::int64_t n_knots) : dim_(dim), n_(n_knots) {
  if (dim <= 0 || n_knots < 0) throw std::invalid_argument("bad area table shape");
  if (n_knots > kMaxKnots) {
    throw std::length_error("area table capped at " + std::to_string(kMaxKnots) +
                            " knots; use area_one_var_streaming for longer paths");
  }
  const std::size_t pairs = static_cast<std::size_t>(n_ + 1) * (n_ + 2) / 2;
  values_.assign(pairs * dim_ * dim_, 0.0);
}

double AreaTable::frobenius(std::int64_t i, std::int64_t j) const {
  const auto m = at(i, j);
  double sq = 0.0;
  for (const double v : m) sq += v * v;
  return std::sqrt(sq);
}

void add_scaled_bracket(std::span<const double> u, std::span<const double> v,
                        double scale, std::span<double> out) {
  const int d = static_cast<int>(u.size());
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      out[p * d + q] += scale * (u[p] * v[q] - v[p] * u[q]);
    }
  }
}

AreaTable build_area_table(const LatticePath& path) {
  const std::int64_t n = path.length();
  const int d = path.dim();
  AreaTable table(d, n);
  std::vector<double> delta(d), offset(d);
  for (std::int64_t j = 1; j <= n; ++j) {
    const auto xj = path.at(j);
    const auto xm = path.at(j - 1);
    for (int c = 0; c < d; ++c) delta[c] = xj[c] - xm[c];
    for (std::int64_t i = 0; i < j; ++i) {
      const auto xi = path.at(i);
      for (int c = 0; c < d; ++c) offset[c] = xm[c] - xi[c];
      auto out = table.entry(i, j);
      const auto in = table.at(i, j - 1);
      std::copy(in.begin(), in.end(), out.begin());
      add_scaled_bracket(offset, delta, 0.5, out);
    }
  }
  return table;
}

std::vector<double> area_direct_oracle(const LatticePath& path, IntervalZ interval) {
  check_interval(path, interval);
  if (interval.length() > 500) {
    throw std::length_error("direct area oracle refuses intervals longer than 500");
  }
  const int d = path.dim();
  std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
  std::vector<double> dk(d), dl(d);
  for (std::int64_t k = interval.a; k < interval.b; ++k) {
    for (int c = 0; c < d; ++c) dk[c] = path.at(k + 1, c) - path.at(k, c);
    for (std::int64_t l = k + 1; l < interval.b; ++l) {
      for (int c = 0; c < d; ++c) dl[c] = path.at(l + 1, c) - path.at(l, c);
      add_scaled_bracket(dk, dl, 0.5, out);
    }
  }
  return out;
}

double chen_defect(const LatticePath& path, const AreaTable& table,
                   std::int64_t s, std::int64_t u, std::int64_t t) {
  if (!(0 <= s && s <= u && u <= t && t <= table.length())) {
    throw std::invalid_argument("chen_defect requires 0 <= s <= u <= t <= N");
  }
  const int d = path.dim();
  std::vector<double> resid(static_cast<std::size_t>(d) * d, 0.0);
  const auto a_st = table.at(s, t);
  const auto a_su = table.at(s, u);
  const auto a_ut = table.at(u, t);
  for (std::size_t c = 0; c < resid.size(); ++c) resid[c] = a_st[c] - a_su[c] - a_ut[c];
  std::vector<double> left(d), right(d);
  for (int c = 0; c < d; ++c) {
    left[c] = path.at(u, c) - path.at(s, c);
    right[c] = path.at(t, c) - path.at(u, c);
  }
  add_scaled_bracket(left, right, -0.5, resid);
  double sq = 0.0;
  for (const double v : resid) sq += v * v;
  return std::sqrt(sq);
}

AreaTable pair_area_table(const LatticePath& p1, const LatticePath& p2) {
  if (p1.dim() != p2.dim() || p1.length() != p2.length()) {
    throw std::invalid_argument("pair area requires equal dim and length");
  }
  const std::int64_t n = p1.length();
  const int d = p1.dim();
  AreaTable table(d, n);
  std::vector<double> d1(d), d2(d), offset(d);
  for (std::int64_t j = 1; j <= n; ++j) {
    for (int c = 0; c < d; ++c) {
      d1[c] = p1.at(j, c) - p1.at(j - 1, c);
      d2[c] = p2.at(j, c) - p2.at(j - 1, c);
    }
    // Per-segment area of two linear strands.
    auto seg = table.entry(j - 1, j);
    add_scaled_bracket(d1, d2, 0.25, seg);
    for (std::int64_t i = 0; i < j - 1; ++i) {
      auto out = table.entry(i, j);
      const auto prior = table.at(i, j - 1);
      const auto segc = table.at(j - 1, j);
      for (int c = 0; c < d * d; ++c) out[c] = prior[c] + segc[c];
      for (int c = 0; c < d; ++c) offset[c] = p1.at(j - 1, c) - p1.at(i, c);
      add_scaled_bracket(offset, d2, 0.5, out);
    }
  }
  return table;
}

std::vector<double> area_at_real(const LatticePath& path, const AreaTable& table,
                                 double s, double t) {
  if (s < 0.0 || t < s || t > static_cast<double>(path.length())) {
    throw std::out_of_range("real times outside [0, N]");
  }
  const int d = path.dim();
  std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
  const auto ia = static_cast<std::int64_t>(std::ceil(s));
  const auto ib = static_cast<std::int64_t>(std::floor(t));
  if (ib < ia) return out;  // both times inside one linear segment
  // A(s,t) = A(ia,ib) + 1/2 [x_ib - x_ia, x_t - x_ib] + 1/2 [x_ia - x_s, x_t - x_ia]
  // from two Chen steps; the all-linear end pieces carry no area.
  if (ia < ib) {
    const auto mid = table.at(ia, ib);
    std::copy(mid.begin(), mid.end(), out.begin());
  }
  const auto xs = eval_at(path, s);
  const auto xt = eval_at(path, t);
  std::vector<double> u(d), v(d);
  for (int c = 0; c < d; ++c) {
    u[c] = path.at(ib, c) - path.at(ia, c);
    v[c] = xt[c] - path.at(ib, c);
  }
  add_scaled_bracket(u, v, 0.5, out);
  for (int c = 0; c < d; ++c) {
    u[c] = path.at(ia, c) - xs[c];
    v[c] = xt[c] - path.at(ia, c);
  }
  add_scaled_bracket(u, v, 0.5, out);
  return out;
}

double rough_norm_sq(const LatticePath& path, const AreaTable& table,
                     IntervalZ interval) {
  if (table.length() != path.length() || table.dim() != path.dim()) {
    throw std::invalid_argument("area table does not match path");
  }
  return p_var_exact(path, 2.0, interval).power_sum +
         table_one_var(table, interval).power_sum;
}

}  // namespace orthopath
