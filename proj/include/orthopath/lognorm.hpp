#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "orthopath/series.hpp"

namespace orthopath {

// Numerical realization of the double-integral norm. The integrals themselves
// are exact objects; panels/band/tol are artifact knobs and never hide inside
// assertions.
struct QuadratureSpec {
  enum class Scheme { kMidpoint, kAdaptive };

  std::int64_t panels = 2048;        // M >= 16
  Scheme scheme = Scheme::kMidpoint;
  double band = 1e-4;                // half-width of excluded |u-v| band, < pi/4
  double tol = 1e-4;                 // residual tolerance for orthogonality checks

  void validate() const;
};

// l(f) = sum_n (log2(n+1))^{2s} |c_n|^2.
double l_norm(const CoefficientSeq& c, double s);

// L(f) = int int |f(u)-f(v)|^2 / |sin((u-v)/2)| * (log2(pi/|sin((u-v)/2)|))^{2s-1} du dv
// by the midpoint rule on an M x M grid over [-pi,pi]^2, skipping |u-v| < band.
double big_l_norm_quadrature(const std::function<std::complex<double>(double)>& f,
                             double s, const QuadratureSpec& q);
double big_l_norm_quadrature(const CoefficientSeq& c, double s,
                             const QuadratureSpec& q);

// L(f) = sum_n |c_n|^2 T_n^s (monomials are orthogonal for this kernel).
double big_l_norm_spectral(const CoefficientSeq& c, double s,
                           const QuadratureSpec& q);

// T_n^s, evaluated through the (u+v, u-v) substitution as the 1-D integral
// 8 int_0^pi (pi - e) sin^2(n e)/sin(e) (log2(pi/sin e))^{2s-1} de.
double t_monomial(std::int64_t n, double s, const QuadratureSpec& q);

// R_n^s = int_0^1 sin^2(pi n t / 2) / t * (log2(2/t))^{2s-1} dt.
double r_monomial(std::int64_t n, double s, const QuadratureSpec& q);

// Midpoint quadrature of
// int int Re((e^{imu}-e^{imv}) conj(e^{inu}-e^{inv})) g((u-v)/2) du dv
// with the Log kernel g; analytically zero for m != n. Pass log_kernel=false
// for the g == 1 variant. Throws std::invalid_argument when m == n.
double cross_orthogonality(std::int64_t m, std::int64_t n, double s,
                           const QuadratureSpec& q, bool log_kernel = true);

// l_norm(c, r) <= l_norm(c, p)^(1-theta) * l_norm(c, q)^theta with
// r = (1-theta) p + theta q, within 1e-10 relative slack.
bool holder_interpolation_check(const CoefficientSeq& c, double p, double q,
                                double theta);

}  // namespace orthopath
