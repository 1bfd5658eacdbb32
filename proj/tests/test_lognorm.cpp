#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "orthopath/lognorm.hpp"
#include "orthopath/rng.hpp"

using namespace orthopath;

namespace {
constexpr double kPi = std::numbers::pi;

CoefficientSeq delta(int n, std::complex<double> value = {1.0, 0.0}) {
  CoefficientSeq c;
  c.c.assign(n + 1, {0.0, 0.0});
  c.c[n] = value;
  return c;
}
}  // namespace

TEST_CASE("coefficient-side norm") {
  CHECK(l_norm(delta(3), 0.5) == doctest::Approx(2.0));
  CHECK(l_norm(delta(0), 1.0) == 0.0);

  SplitMix64 rng(61);
  CoefficientSeq c;
  c.c.resize(30);
  for (auto& z : c.c) z = {rng.gaussian(), rng.gaussian()};
  double reference = 0.0;
  for (std::int64_t n = c.size() - 1; n >= 1; --n) {
    reference += std::pow(std::log2(static_cast<double>(n) + 1.0), 2.0) * std::norm(c.c[n]);
  }
  CHECK(l_norm(c, 1.0) == doctest::Approx(reference).epsilon(1e-13));
}

TEST_CASE("monomial integrals and the substitution bracket") {
  QuadratureSpec q;
  CHECK(t_monomial(0, 0.5, q) == 0.0);
  CHECK(r_monomial(0, 0.5, q) == 0.0);

  const double t1 = t_monomial(1, 0.5, q);
  const double t2 = t_monomial(2, 0.5, q);
  CHECK(t1 > 0.0);
  CHECK(t2 > 0.0);
  CHECK(std::isfinite(t1));
  CHECK(std::isfinite(t2));

  const double t4 = t_monomial(4, 0.5, q);
  const double r4 = r_monomial(4, 0.5, q);
  CHECK(t4 >= 4.0 * kPi * r4);
  CHECK(t4 <= 8.0 * kPi * kPi * r4);

  double prev = 0.0;
  for (int n = 1; n <= 64; ++n) {
    const double rn = r_monomial(n, 0.5, q);
    CHECK(rn > prev);
    prev = rn;
  }
}

TEST_CASE("tail bracket of the 1-D integral at large n") {
  QuadratureSpec q;
  for (const double s : {0.5, 1.0}) {
    const double lo = std::log(2.0) / std::pow(2.0, 2.0 * s + 3.0);
    const double hi = std::log(2.0) / (2.0 * s) + lo;
    for (const std::int64_t n : {430, 470, 512}) {
      const double ratio =
          r_monomial(n, s, q) / std::pow(std::log2(kPi * n), 2.0 * s);
      CHECK(ratio >= lo);
      CHECK(ratio <= hi);
    }
  }
}

TEST_CASE("double-integral norm by midpoint quadrature") {
  QuadratureSpec q;
  q.panels = 1024;

  const double zero = big_l_norm_quadrature(
      [](double) { return std::complex<double>{3.0, -1.0}; }, 0.5, q);
  CHECK(zero == 0.0);

  QuadratureSpec q2048;
  const double direct = big_l_norm_quadrature(
      [](double u) { return std::polar(1.0, u); }, 0.5, q2048);
  CHECK(direct == doctest::Approx(4.0 * t_monomial(1, 0.5, q2048)).epsilon(0.01));

  // Quadratic scaling in a single coefficient.
  const double one = big_l_norm_quadrature(delta(2), 0.5, q);
  const double doubled = big_l_norm_quadrature(delta(2, {2.0, 0.0}), 0.5, q);
  CHECK(doubled == doctest::Approx(4.0 * one).epsilon(1e-12));
}

TEST_CASE("spectral evaluation matches the direct quadrature") {
  QuadratureSpec q;
  CHECK(big_l_norm_spectral(delta(5, {0.0, 0.0}), 0.5, q) == 0.0);
  CHECK(big_l_norm_spectral(delta(7, {0.0, 3.0}), 0.5, q) ==
        doctest::Approx(36.0 * t_monomial(7, 0.5, q)).epsilon(1e-12));

  SplitMix64 rng(62);
  for (int rep = 0; rep < 2; ++rep) {
    CoefficientSeq c;
    c.c.resize(17);
    for (auto& z : c.c) z = {rng.gaussian(), rng.gaussian()};
    const double spectral = big_l_norm_spectral(c, 0.5, q);
    const double direct = big_l_norm_quadrature(c, 0.5, q);
    CHECK(std::abs(spectral - direct) <= 0.03 * spectral);
  }
}

TEST_CASE("monomials are orthogonal for the log kernel") {
  QuadratureSpec q;
  const double t1 = t_monomial(1, 0.5, q);
  const double t2 = t_monomial(2, 0.5, q);
  CHECK(std::abs(cross_orthogonality(1, 2, 0.5, q)) <= q.tol * std::sqrt(t1 * t2));

  const double t3 = t_monomial(3, 0.5, q);
  const double t7 = t_monomial(7, 0.5, q);
  CHECK(std::abs(cross_orthogonality(3, 7, 0.5, q)) <= q.tol * std::sqrt(t3 * t7));

  // The flat-kernel variant is the plain L2 orthogonality.
  CHECK(std::abs(cross_orthogonality(2, 5, 0.5, q, false)) <= q.tol);

  CHECK_THROWS_AS(cross_orthogonality(4, 4, 0.5, q), std::invalid_argument);
}

TEST_CASE("interpolation inequality") {
  CHECK(holder_interpolation_check(delta(9), 0.5, 1.0, 0.5));
  // Monomials are the equality case.
  const double lhs = l_norm(delta(9), 0.75);
  const double rhs = std::pow(l_norm(delta(9), 0.5), 0.5) *
                     std::pow(l_norm(delta(9), 1.0), 0.5);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

  SplitMix64 rng(63);
  for (int rep = 0; rep < 50; ++rep) {
    CoefficientSeq c;
    c.c.resize(24);
    for (auto& z : c.c) z = {rng.gaussian(), rng.gaussian()};
    CHECK(holder_interpolation_check(c, 0.5, 1.0, 0.5));
    CHECK(holder_interpolation_check(c, 0.25, 2.0, 0.7));
  }

  CoefficientSeq zero;
  zero.c.assign(4, {0.0, 0.0});
  CHECK(holder_interpolation_check(zero, 0.5, 1.0, 0.5));
}

TEST_CASE("larger log bases sandwich the weighted integrals") {
  // For nonnegative g and a > b > 1:
  //   int g (log2(b/t))^s <= int g (log2(a/t))^s <= (log_b a)^s int g (log2(b/t))^s.
  const auto g = [](double t) { return t * t + 0.25 * std::sin(6.0 * t) + 0.3; };
  for (const double s : {0.5, 1.0, 2.0}) {
    for (const auto [a, b] : {std::pair{4.0, 2.0}, std::pair{3.0, 1.5}}) {
      const auto weighted = [&](double base) {
        const int grid = 40000;
        double total = 0.0;
        for (int i = 0; i < grid; ++i) {
          const double t = (i + 0.5) / grid;
          total += g(t) * std::pow(std::log2(base / t), s) / grid;
        }
        return total;
      };
      const double with_b = weighted(b);
      const double with_a = weighted(a);
      CHECK(with_b <= with_a * (1.0 + 1e-12));
      CHECK(with_a <= std::pow(std::log2(a) / std::log2(b), s) * with_b * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec bad;
  bad.panels = 8;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.panels = 64;
  bad.band = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.band = 0.0;
  bad.tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
