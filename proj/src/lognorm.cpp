#include "orthopath/lognorm.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace orthopath {

namespace {

constexpr double kPi = std::numbers::pi;

double log_factor(double sine, double s) {
  if (s == 0.5) return 1.0;  // exponent 2s-1 vanishes
  return std::pow(std::log2(kPi / sine), 2.0 * s - 1.0);
}

// Composite Gauss-Kronrod over [a, b] split into `panels` equal pieces; the
// per-panel adaptivity handles the mild endpoint log singularities, the panel
// count tracks the oscillation. Fixed left-to-right reduction order.
template <typename F>
double composite_integral(const F& f, double a, double b, std::int64_t panels) {
  namespace bq = boost::math::quadrature;
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::int64_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double hi = (p + 1 == panels) ? b : lo + width;
    total += bq::gauss_kronrod<double, 15>::integrate(f, lo, hi, 6, 1e-10);
  }
  return total;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (panels < 16) throw std::invalid_argument("quadrature needs at least 16 panels");
  if (band < 0.0 || band >= kPi / 4.0) {
    throw std::invalid_argument("diagonal band half-width must lie in [0, pi/4)");
  }
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
}

double l_norm(const CoefficientSeq& c, double s) {
  if (s <= 0.0) throw std::invalid_argument("l_norm requires s > 0");
  // Fixed ascending accumulation; the n = 0 term vanishes since log2(1) = 0.
  double total = 0.0;
  for (std::int64_t n = 1; n < c.size(); ++n) {
    total += std::pow(std::log2(static_cast<double>(n) + 1.0), 2.0 * s) * std::norm(c.c[n]);
  }
  return total;
}

double t_monomial(std::int64_t n, double s, const QuadratureSpec& q) {
  q.validate();
  if (s <= 0.0) throw std::invalid_argument("t_monomial requires s > 0");
  if (n < 0) throw std::invalid_argument("t_monomial requires n >= 0");
  if (n == 0) return 0.0;
  const auto f = [n, s](double eta) {
    const double sine = std::sin(eta);
    if (sine <= 0.0) return 0.0;
    const double sn = std::sin(static_cast<double>(n) * eta);
    return (kPi - eta) * sn * sn / sine * log_factor(sine, s);
  };
  const std::int64_t panels = std::max<std::int64_t>(48, 6 * n);
  return 8.0 * composite_integral(f, 0.0, kPi, panels);
}

double r_monomial(std::int64_t n, double s, const QuadratureSpec& q) {
  q.validate();
  if (s <= 0.0) throw std::invalid_argument("r_monomial requires s > 0");
  if (n < 0) throw std::invalid_argument("r_monomial requires n >= 0");
  if (n == 0) return 0.0;
  const auto f = [n, s](double t) {
    if (t <= 0.0) return 0.0;
    const double sn = std::sin(0.5 * kPi * static_cast<double>(n) * t);
    double v = sn * sn / t;
    if (s != 0.5) v *= std::pow(std::log2(2.0 / t), 2.0 * s - 1.0);
    return v;
  };
  const std::int64_t panels = std::max<std::int64_t>(48, 6 * n);
  return composite_integral(f, 0.0, 1.0, panels);
}

double big_l_norm_quadrature(const std::function<std::complex<double>(double)>& f,
                             double s, const QuadratureSpec& q) {
  q.validate();
  if (s <= 0.0) throw std::invalid_argument("big_l_norm requires s > 0");
  const std::int64_t m = q.panels;
  const double h = 2.0 * kPi / static_cast<double>(m);

  std::vector<std::complex<double>> values(m);
  for (std::int64_t i = 0; i < m; ++i) {
    values[i] = f(-kPi + (static_cast<double>(i) + 0.5) * h);
  }
  // Kernel depends on u - v only; one evaluation per diagonal offset.
  std::vector<double> kernel(m, 0.0);
  for (std::int64_t dd = 1; dd < m; ++dd) {
    const double delta = static_cast<double>(dd) * h;
    if (delta < q.band) continue;
    const double sine = std::abs(std::sin(0.5 * delta));
    kernel[dd] = log_factor(sine, s) / sine;
  }
  double total = 0.0;
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < i; ++j) {
      const double diff = std::norm(values[i] - values[j]);
      total += diff * kernel[i - j];
    }
  }
  return 2.0 * total * h * h;  // (i,j) and (j,i) contribute equally
}

double big_l_norm_quadrature(const CoefficientSeq& c, double s,
                             const QuadratureSpec& q) {
  return big_l_norm_quadrature(
      [&c](double theta) {
        std::complex<double> acc = 0.0;
        for (std::int64_t n = 0; n < c.size(); ++n) {
          acc += c.c[n] * std::polar(1.0, static_cast<double>(n) * theta);
        }
        return acc;
      },
      s, q);
}

double big_l_norm_spectral(const CoefficientSeq& c, double s,
                           const QuadratureSpec& q) {
  // |e^{inu} - e^{inv}|^2 = 4 sin^2(n(u-v)/2), so each monomial contributes
  // 4 T_n^s to L.
  double total = 0.0;
  for (std::int64_t n = 1; n < c.size(); ++n) {
    const double energy = std::norm(c.c[n]);
    if (energy > 0.0) total += 4.0 * energy * t_monomial(n, s, q);
  }
  return total;
}

double cross_orthogonality(std::int64_t m, std::int64_t n, double s,
                           const QuadratureSpec& q, bool log_kernel) {
  q.validate();
  if (m == n) throw std::invalid_argument("cross term needs m != n; use t_monomial");
  if (m < 0 || n < 0) throw std::invalid_argument("indices must be nonnegative");
  const std::int64_t grid = q.panels;
  const double h = 2.0 * kPi / static_cast<double>(grid);

  // Re((e^{imu}-e^{imv}) conj(e^{inu}-e^{inv}))
  //   = 4 cos((m-n)(u+v)/2) sin(m(u-v)/2) sin(n(u-v)/2),
  // so the midpoint sum factors along diagonals u - v = const.
  double total = 0.0;
  for (std::int64_t dd = 1; dd < grid; ++dd) {
    const double delta = static_cast<double>(dd) * h;
    if (delta < q.band) continue;
    const double sine = std::abs(std::sin(0.5 * delta));
    double g = 1.0;
    if (log_kernel) g = log_factor(sine, s) / sine;
    const double w =
        4.0 * std::sin(0.5 * m * delta) * std::sin(0.5 * n * delta) * g;
    double cos_sum = 0.0;
    for (std::int64_t i = dd; i < grid; ++i) {
      // u_i + u_{i-dd} = -2 pi + (2 i - dd + 1) h
      const double mid = -2.0 * kPi + (2.0 * static_cast<double>(i) - dd + 1.0) * h;
      cos_sum += std::cos(0.5 * static_cast<double>(m - n) * mid);
    }
    total += 2.0 * w * cos_sum;  // offsets +dd and -dd agree
  }
  return total * h * h;
}

bool holder_interpolation_check(const CoefficientSeq& c, double p, double q,
                                double theta) {
  if (!(0.0 < p && p < q) || !(0.0 < theta && theta < 1.0)) {
    throw std::invalid_argument("need 0 < p < q and theta in (0,1)");
  }
  const double r = (1.0 - theta) * p + theta * q;
  const double lhs = l_norm(c, r);
  const double rhs = std::pow(l_norm(c, p), 1.0 - theta) * std::pow(l_norm(c, q), theta);
  return lhs <= rhs * (1.0 + 1e-10) + 1e-300;
}

}  // namespace orthopath
