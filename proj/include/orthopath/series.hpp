#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orthopath/lattice_path.hpp"

namespace orthopath {

struct CoefficientSeq {
  std::vector<std::complex<double>> c;
  std::string label;

  std::int64_t size() const { return static_cast<std::int64_t>(c.size()); }
};

// u_n(theta) = e^{i n theta}, theta in [-pi, pi] (complex values realized as
// d=2 real paths).
struct FourierSystem {};

// Finite orthonormal system on Omega = {0..m-1} with uniform measure 1/m and
// u_n(omega) = sqrt(m) * Q[omega][n] for an orthogonal matrix Q. Expectations
// over Omega are exact finite averages.
struct DiscreteONS {
  int m = 0;
  std::vector<double> q;  // m x m row-major, Q^T Q = Id to 1e-10

  double u(int omega, std::int64_t n) const;
  // max |Q^T Q - Id| entry.
  double orthonormality_defect() const;
};

// Block layout for the digit-block trigonometric variables: block k >= 1
// holds multiplicity[k-1] variables of digit depth depth[k-1]; prefix[k] is
// s_k = sum_{j<=k} m_j n_j with prefix[0] = 0.
struct BlockPlan {
  std::vector<std::int64_t> multiplicity;  // m_k
  std::vector<std::int64_t> depth;         // n_k
  std::vector<std::int64_t> prefix;        // s_0..s_K

  static BlockPlan single(std::int64_t m, std::int64_t n);
  static BlockPlan make(std::vector<std::int64_t> multiplicity,
                        std::vector<std::int64_t> depth);
};

struct DigitBlockSystem {
  BlockPlan plan;
};

using OrthonormalSystem = std::variant<FourierSystem, DiscreteONS, DigitBlockSystem>;

// x_k = sum_{j<=k} c_j u_j(omega); throws if n exceeds the coefficient range
// or omega is outside the sample space.
LatticePath partial_sum_path(const FourierSystem&, const CoefficientSeq& c,
                             double theta, std::int64_t n);
LatticePath partial_sum_path(const DiscreteONS& ons, const CoefficientSeq& c,
                             int omega, std::int64_t n);

// b_n = sqrt(sum_{k=2^n+1}^{2^{n+1}} |c_k|^2) together with the index blocks.
std::pair<CoefficientSeq, std::vector<IntervalZ>> block_reparametrize(
    const CoefficientSeq& c);

// Coefficients of f(theta) = sum_n (n 2^{n/2})^{-1} sum_{k=2^n+1}^{2^{n+1}} e^{ik theta},
// blocks n = 1..n_max.
CoefficientSeq finite_2var_coefficients(int n_max);

// The partial-sum path of the block-constant series above over [2^n, 2^{n+1}],
// re-indexed to 0..2^n, by the geometric closed form. Falls back to direct
// summation when |1 - e^{i theta}| < 1e-8 or use_closed_form is false.
LatticePath fourier_block_path(int n, double theta, bool use_closed_form = true);

// Same path by direct summation (oracle for the closed form).
LatticePath fourier_block_path_direct(int n, double theta);

// Generalized multiplier example: given w(2^n) at integer n (w_pow2[n]),
// r(n) = w(2^n) / (log2 n)^2 must be strictly increasing on n >= n_start and
// w non-decreasing; coefficients are a(n)^{-1/2} 2^{-n/2} on (2^n, 2^{n+1}]
// with 1/a(n) = r'(n) / (r(n) sqrt((log2 n)^2 w(2^n))),
// r'(n) = (r(n+1) - r(n-1))/2 and r(n_start - 1) := r(n_start)/2.
// Requires w_pow2 defined up to n_max + 1.
CoefficientSeq weyl_multiplier_coefficients(std::span<const double> w_pow2,
                                            int n_start, int n_max);
// 1/a(n) for the same construction, n in [n_start, n_max].
std::vector<double> weyl_inverse_a(std::span<const double> w_pow2, int n_start,
                                   int n_max);

// f_n(theta) = sum_{k=1}^{n} 2^{-k} exp(2 pi i (2^{2k}/k) theta) sampled on a
// uniform grid of at least 64 * 2^{2n} / n panels over [0,1], returned as a
// d=2 path in the sample index. Requires n <= 8.
LatticePath area_blowup_grid_path(int n);
std::int64_t area_blowup_grid_size(int n);

// Orthogonal Q from Gram-Schmidt on a seeded Gaussian matrix; defect < 1e-10,
// identical output for identical seeds.
DiscreteONS haar_ons(int m, std::uint64_t seed);

// cos(2 pi sum_{j=1}^{n_k} theta_{s_{k-1} + (i-1) n_k + j} / 2^j) for block k
// and 1 <= i <= m_k; digits[t] is the (t+1)-th binary digit theta_{t+1}.
double zeta_sample(const BlockPlan& plan, std::int64_t k, std::int64_t i,
                   std::span<const std::uint8_t> digits);

// Y_m^n rescaled to integer time: x_j = sum_{i<=j} zeta_i^{(n)} / sqrt(m),
// j = 0..m (p-variation is reparametrization-invariant).
LatticePath walk_path(std::int64_t m, std::int64_t n,
                      std::span<const std::uint8_t> digits);

// Seeded digit stream (SplitMix64 bits, one digit per generator draw).
std::vector<std::uint8_t> digit_stream(std::uint64_t seed, std::size_t count);

// First `count` binary digits of theta in [0,1).
std::vector<std::uint8_t> digits_of(double theta, int count);

}  // namespace orthopath
