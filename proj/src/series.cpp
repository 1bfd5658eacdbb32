#include "orthopath/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "orthopath/rng.hpp"

namespace orthopath {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double DiscreteONS::u(int omega, std::int64_t n) const {
  return std::sqrt(static_cast<double>(m)) * q[static_cast<std::size_t>(omega) * m + n];
}

double DiscreteONS::orthonormality_defect() const {
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      double dot = 0.0;
      for (int w = 0; w < m; ++w) dot += q[static_cast<std::size_t>(w) * m + i] * q[static_cast<std::size_t>(w) * m + j];
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

BlockPlan BlockPlan::single(std::int64_t m, std::int64_t n) {
  return make({m}, {n});
}

BlockPlan BlockPlan::make(std::vector<std::int64_t> multiplicity,
                          std::vector<std::int64_t> depth) {
  if (multiplicity.size() != depth.size() || multiplicity.empty()) {
    throw std::invalid_argument("block plan needs matching nonempty m_k, n_k");
  }
  BlockPlan plan;
  plan.prefix.push_back(0);
  for (std::size_t k = 0; k < multiplicity.size(); ++k) {
    if (multiplicity[k] < 1 || depth[k] < 1) {
      throw std::invalid_argument("block multiplicities and depths must be >= 1");
    }
    plan.prefix.push_back(plan.prefix.back() + multiplicity[k] * depth[k]);
  }
  plan.multiplicity = std::move(multiplicity);
  plan.depth = std::move(depth);
  return plan;
}

LatticePath partial_sum_path(const FourierSystem&, const CoefficientSeq& c,
                             double theta, std::int64_t n) {
  if (theta < -std::numbers::pi || theta > std::numbers::pi) {
    throw std::invalid_argument("theta outside [-pi, pi]");
  }
  if (n + 1 > c.size()) throw std::invalid_argument("n exceeds coefficient range");
  LatticePath out = LatticePath::zeros(2, n);
  std::complex<double> acc = 0.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    acc += c.c[k] * std::polar(1.0, static_cast<double>(k) * theta);
    out.set(k, 0, acc.real());
    out.set(k, 1, acc.imag());
  }
  return out;
}

LatticePath partial_sum_path(const DiscreteONS& ons, const CoefficientSeq& c,
                             int omega, std::int64_t n) {
  if (omega < 0 || omega >= ons.m) throw std::invalid_argument("omega outside {0..m-1}");
  if (n + 1 > c.size() || n >= ons.m) {
    throw std::invalid_argument("n exceeds coefficient or system range");
  }
  // Real coefficients give a 1-D path, complex ones a 2-D path.
  bool complex_coeffs = false;
  for (const auto& z : c.c) {
    if (z.imag() != 0.0) {
      complex_coeffs = true;
      break;
    }
  }
  LatticePath out = LatticePath::zeros(complex_coeffs ? 2 : 1, n);
  std::complex<double> acc = 0.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    acc += c.c[k] * ons.u(omega, k);
    out.set(k, 0, acc.real());
    if (complex_coeffs) out.set(k, 1, acc.imag());
  }
  return out;
}

std::pair<CoefficientSeq, std::vector<IntervalZ>> block_reparametrize(
    const CoefficientSeq& c) {
  if (c.size() < 3) throw std::invalid_argument("need at least three coefficients");
  CoefficientSeq b;
  b.label = c.label.empty() ? "blocks" : c.label + ":blocks";
  std::vector<IntervalZ> blocks;
  for (int n = 0; (std::int64_t{1} << n) + 1 <= c.size() - 1; ++n) {
    const std::int64_t lo = (std::int64_t{1} << n) + 1;
    const std::int64_t hi = std::min<std::int64_t>(std::int64_t{1} << (n + 1), c.size() - 1);
    double energy = 0.0;
    for (std::int64_t k = lo; k <= hi; ++k) energy += std::norm(c.c[k]);
    b.c.emplace_back(std::sqrt(energy), 0.0);
    blocks.push_back({lo, hi});
  }
  return {std::move(b), std::move(blocks)};
}

CoefficientSeq finite_2var_coefficients(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max >= 1");
  CoefficientSeq c;
  c.label = "finite2var";
  c.c.assign((std::size_t{1} << (n_max + 1)) + 1, {0.0, 0.0});
  for (int n = 1; n <= n_max; ++n) {
    const double value = 1.0 / (n * std::pow(2.0, 0.5 * n));
    for (std::int64_t k = (std::int64_t{1} << n) + 1; k <= (std::int64_t{1} << (n + 1)); ++k) {
      c.c[k] = {value, 0.0};
    }
  }
  return c;
}

LatticePath fourier_block_path_direct(int n, double theta) {
  if (n < 1) throw std::invalid_argument("block index n >= 1");
  const std::int64_t len = std::int64_t{1} << n;
  const double scale = 1.0 / (n * std::pow(2.0, 0.5 * n));
  LatticePath out = LatticePath::zeros(2, len);
  std::complex<double> acc = 0.0;
  for (std::int64_t j = 1; j <= len; ++j) {
    acc += scale * std::polar(1.0, static_cast<double>(len + j) * theta);
    out.set(j, 0, acc.real());
    out.set(j, 1, acc.imag());
  }
  return out;
}

LatticePath fourier_block_path(int n, double theta, bool use_closed_form) {
  if (n < 1) throw std::invalid_argument("block index n >= 1");
  const std::complex<double> denom = 1.0 - std::polar(1.0, theta);
  if (!use_closed_form || std::abs(denom) < 1e-8) {
    // Geometric form cancels catastrophically near theta = 0.
    return fourier_block_path_direct(n, theta);
  }
  const std::int64_t len = std::int64_t{1} << n;
  const double scale = n * std::pow(2.0, 0.5 * n);
  const std::complex<double> head = std::polar(1.0, static_cast<double>(len + 1) * theta);
  LatticePath out = LatticePath::zeros(2, len);
  for (std::int64_t j = 1; j <= len; ++j) {
    const std::complex<double> tail = std::polar(1.0, static_cast<double>(len + j + 1) * theta);
    const std::complex<double> z = (head - tail) / (scale * denom);
    out.set(j, 0, z.real());
    out.set(j, 1, z.imag());
  }
  return out;
}

std::vector<double> weyl_inverse_a(std::span<const double> w_pow2, int n_start,
                                   int n_max) {
  if (n_start < 2 || n_max < n_start) {
    throw std::invalid_argument("need 2 <= n_start <= n_max");
  }
  if (static_cast<int>(w_pow2.size()) < n_max + 2) {
    throw std::invalid_argument("w table must reach n_max + 1");
  }
  const auto r_at = [&](int n) {
    const double l = std::log2(static_cast<double>(n));
    return w_pow2[n] / (l * l);
  };
  for (int n = n_start; n <= n_max; ++n) {
    if (w_pow2[n + 1] < w_pow2[n]) {
      throw std::invalid_argument("w must be non-decreasing");
    }
    if (!(r_at(n + 1) > r_at(n))) {
      throw std::invalid_argument("w(2^n)/(log2 n)^2 must increase strictly from n_start on");
    }
  }
  std::vector<double> inv_a;
  inv_a.reserve(n_max - n_start + 1);
  for (int n = n_start; n <= n_max; ++n) {
    const double r_prev = (n == n_start) ? 0.5 * r_at(n_start) : r_at(n - 1);
    const double r_deriv = 0.5 * (r_at(n + 1) - r_prev);
    const double l = std::log2(static_cast<double>(n));
    inv_a.push_back(r_deriv / (r_at(n) * std::sqrt(l * l * w_pow2[n])));
  }
  return inv_a;
}

CoefficientSeq weyl_multiplier_coefficients(std::span<const double> w_pow2,
                                            int n_start, int n_max) {
  const std::vector<double> inv_a = weyl_inverse_a(w_pow2, n_start, n_max);
  CoefficientSeq c;
  c.label = "weyl";
  c.c.assign((std::size_t{1} << (n_max + 1)) + 1, {0.0, 0.0});
  for (int n = n_start; n <= n_max; ++n) {
    const double value = std::sqrt(inv_a[n - n_start]) * std::pow(2.0, -0.5 * n);
    for (std::int64_t k = (std::int64_t{1} << n) + 1; k <= (std::int64_t{1} << (n + 1)); ++k) {
      c.c[k] = {value, 0.0};
    }
  }
  return c;
}

std::int64_t area_blowup_grid_size(int n) {
  if (n < 1 || n > 8) throw std::length_error("grid resolution supports only n <= 8");
  const double panels = 64.0 * std::pow(4.0, n) / n;
  return static_cast<std::int64_t>(std::ceil(panels));
}

LatticePath area_blowup_grid_path(int n) {
  const std::int64_t panels = area_blowup_grid_size(n);
  LatticePath out = LatticePath::zeros(2, panels);
  for (std::int64_t j = 0; j <= panels; ++j) {
    const double theta = static_cast<double>(j) / static_cast<double>(panels);
    std::complex<double> z = 0.0;
    for (int k = 1; k <= n; ++k) {
      z += std::pow(2.0, -k) * std::polar(1.0, kTwoPi * std::pow(4.0, k) / k * theta);
    }
    out.set(j, 0, z.real());
    out.set(j, 1, z.imag());
  }
  return out;
}

DiscreteONS haar_ons(int m, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("DiscreteONS needs m >= 2");
  SplitMix64 rng(seed);
  DiscreteONS ons;
  ons.m = m;
  ons.q.resize(static_cast<std::size_t>(m) * m);
  for (auto& v : ons.q) v = rng.gaussian();
  // Modified Gram-Schmidt on columns, run twice for the 1e-10 defect contract.
  for (int pass = 0; pass < 2; ++pass) {
    for (int col = 0; col < m; ++col) {
      for (int prior = 0; prior < col; ++prior) {
        double dot = 0.0;
        for (int w = 0; w < m; ++w) dot += ons.q[static_cast<std::size_t>(w) * m + col] * ons.q[static_cast<std::size_t>(w) * m + prior];
        for (int w = 0; w < m; ++w) ons.q[static_cast<std::size_t>(w) * m + col] -= dot * ons.q[static_cast<std::size_t>(w) * m + prior];
      }
      double nrm = 0.0;
      for (int w = 0; w < m; ++w) nrm += ons.q[static_cast<std::size_t>(w) * m + col] * ons.q[static_cast<std::size_t>(w) * m + col];
      nrm = std::sqrt(nrm);
      for (int w = 0; w < m; ++w) ons.q[static_cast<std::size_t>(w) * m + col] /= nrm;
    }
  }
  return ons;
}

double zeta_sample(const BlockPlan& plan, std::int64_t k, std::int64_t i,
                   std::span<const std::uint8_t> digits) {
  if (k < 1 || k > static_cast<std::int64_t>(plan.multiplicity.size())) {
    throw std::invalid_argument("block index k outside plan");
  }
  if (i < 1 || i > plan.multiplicity[k - 1]) {
    throw std::invalid_argument("variable index i outside block");
  }
  const std::int64_t nk = plan.depth[k - 1];
  const std::int64_t start = plan.prefix[k - 1] + (i - 1) * nk;  // theta_{start+1} first
  if (start + nk > static_cast<std::int64_t>(digits.size())) {
    throw std::invalid_argument("digit stream too short for requested window");
  }
  double frac = 0.0;
  for (std::int64_t j = 1; j <= nk; ++j) {
    frac += static_cast<double>(digits[start + j - 1]) * std::pow(2.0, -static_cast<double>(j));
  }
  return std::cos(kTwoPi * frac);
}

LatticePath walk_path(std::int64_t m, std::int64_t n,
                      std::span<const std::uint8_t> digits) {
  if (m < 1 || n < 1) throw std::invalid_argument("walk needs m >= 1, n >= 1");
  if (static_cast<std::int64_t>(digits.size()) < m * n) {
    throw std::invalid_argument("digit stream shorter than m*n");
  }
  const BlockPlan plan = BlockPlan::single(m, n);
  LatticePath out = LatticePath::zeros(1, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  double acc = 0.0;
  for (std::int64_t i = 1; i <= m; ++i) {
    acc += zeta_sample(plan, 1, i, digits) * scale;
    out.set(i, 0, acc);
  }
  return out;
}

std::vector<std::uint8_t> digit_stream(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> out(count);
  for (auto& d : out) d = rng.bit() ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> digits_of(double theta, int count) {
  if (theta < 0.0 || theta >= 1.0) throw std::invalid_argument("theta must lie in [0,1)");
  std::vector<std::uint8_t> out(count);
  double frac = theta;
  for (int j = 0; j < count; ++j) {
    frac *= 2.0;
    const int bit = frac >= 1.0 ? 1 : 0;
    out[j] = static_cast<std::uint8_t>(bit);
    frac -= bit;
  }
  return out;
}

}  // namespace orthopath
