// Acceptance suite: one line per criterion, exit 0 iff everything passes.
// Tolerances are fixed here, not read from any environment.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthopath/dyadic.hpp"
#include "orthopath/experiments.hpp"
#include "orthopath/io.hpp"
#include "orthopath/lognorm.hpp"
#include "orthopath/rng.hpp"
#include "orthopath/variation.hpp"

using namespace orthopath;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int index, const char* label, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %2d: %s (%s) [%.1fs]\n", pass ? "PASS" : "FAIL",
              index, label, detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

LatticePath random_path(SplitMix64& rng, int dim, std::int64_t n) {
  std::vector<double> values(static_cast<std::size_t>(dim) * (n + 1));
  for (auto& v : values) v = rng.gaussian();
  return LatticePath(dim, std::move(values));
}

// 1. Integer-partition DP against exhaustive enumeration.
void criterion_dp_oracle() {
  Timer timer;
  SplitMix64 rng(1001);
  const double ps[] = {1.0, 2.0, 2.5};
  bool pass = true;
  double worst = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const int dim = 1 + static_cast<int>(rng.below(2));
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(11));
    const auto path = random_path(rng, dim, n);
    const double p = ps[rng.below(3)];
    const double fast = p_var_exact(path, p, {0, n}).power_sum;
    const double slow = p_var_bruteforce(path, p, {0, n}).power_sum;
    const double rel = std::abs(fast - slow) / std::max(slow, 1e-30);
    worst = std::max(worst, rel);
    pass = pass && rel <= 1e-12;
  }
  report(1, "p-variation DP equals brute force on 500 paths", pass,
         "worst relative gap " + format_double(worst), timer.seconds());
}

// 2. Real partitions cannot beat integer ones, for the path (p=2) and the
// area table (p=1).
void criterion_real_partitions() {
  Timer timer;
  SplitMix64 rng(1002);
  bool pass = true;
  double worst_path = -1e300, worst_area = -1e300;
  for (int rep = 0; rep < 100; ++rep) {
    const auto path = random_path(rng, 2, 64);
    const auto table = build_area_table(path);
    const double dp_path = p_var_exact(path, 2.0, {0, 64}).power_sum;
    const double dp_area = table_one_var(table, {0, 64}).power_sum;
    for (int trial = 0; trial < 10000; ++trial) {
      const int cuts = 1 + static_cast<int>(rng.below(10));
      std::vector<double> times{0.0};
      for (int c = 0; c < cuts; ++c) times.push_back(64.0 * rng.uniform01());
      times.push_back(64.0);
      std::sort(times.begin(), times.end());
      double path_sum = 0.0, area_sum = 0.0;
      for (std::size_t k = 1; k < times.size(); ++k) {
        const auto x0 = eval_at(path, times[k - 1]);
        const auto x1 = eval_at(path, times[k]);
        path_sum += (x1[0] - x0[0]) * (x1[0] - x0[0]) + (x1[1] - x0[1]) * (x1[1] - x0[1]);
        const auto a = area_at_real(path, table, times[k - 1], times[k]);
        double sq = 0.0;
        for (const double v : a) sq += v * v;
        area_sum += std::sqrt(sq);
      }
      worst_path = std::max(worst_path, path_sum - dp_path);
      worst_area = std::max(worst_area, area_sum - dp_area);
      pass = pass && path_sum <= dp_path + 1e-9 && area_sum <= dp_area + 1e-9;
    }
  }
  report(2, "10^6 random real partitions never beat the integer DP", pass,
         "max path excess " + format_double(worst_path) + ", max area excess " +
             format_double(worst_area),
         timer.seconds());
}

// 3. Chen relation of built tables and the direct-sum oracle.
void criterion_chen() {
  Timer timer;
  SplitMix64 rng(1003);
  bool pass = true;
  double worst_defect = 0.0, worst_gap = 0.0;
  const auto path = random_path(rng, 2, 200);
  const auto table = build_area_table(path);
  for (int rep = 0; rep < 1000; ++rep) {
    std::int64_t s = rng.below(201), u = rng.below(201), t = rng.below(201);
    if (s > u) std::swap(s, u);
    if (u > t) std::swap(u, t);
    if (s > u) std::swap(s, u);
    const double defect = chen_defect(path, table, s, u, t);
    worst_defect = std::max(worst_defect, defect);
    pass = pass && defect < 1e-10;
  }
  for (int rep = 0; rep < 200; ++rep) {
    const auto sample = random_path(rng, 2, 40);
    const auto built = build_area_table(sample);
    const auto direct = area_direct_oracle(sample, {0, 40});
    const auto entry = built.at(0, 40);
    double sq = 0.0;
    for (std::size_t c = 0; c < direct.size(); ++c) {
      sq += (entry[c] - direct[c]) * (entry[c] - direct[c]);
    }
    worst_gap = std::max(worst_gap, std::sqrt(sq));
    pass = pass && std::sqrt(sq) <= 1e-11;
  }
  report(3, "Chen identity and direct-sum area oracle", pass,
         "max defect " + format_double(worst_defect) + ", max oracle gap " +
             format_double(worst_gap),
         timer.seconds());
}

// 4. The 768 bound over a finite orthonormal system, exact expectations.
void criterion_theorem1() {
  Timer timer;
  const auto rep = run_experiment(
      "theorem1", json{{"seed", 2026}, {"m", 64}, {"n_max", 48}, {"trials", 100}});
  report(4, "E[||X||_2var^2 + ||A||_1var] <= 768 sum (log2(n+1))^2 |c_n|^2", rep.pass,
         rep.notes, timer.seconds());
}

// 5. The 8 (log2(n+1))^2 local bound and the 36 bound, same setup.
void criterion_lemmas() {
  Timer timer;
  const json cfg{{"seed", 2026}, {"m", 64}, {"n_max", 48}, {"trials", 100}};
  const auto local = run_experiment("lemma_local_2var", cfg);
  const auto full = run_experiment("lemma_36", cfg);
  report(5, "8 (log2(n+1))^2 and 36 bounds for E||X||_2var^2", local.pass && full.pass,
         "local " + format_double(local.lhs) + ", 36-bound " + format_double(full.lhs),
         timer.seconds());
}

// 6. Per-block bound of the lacunary Fourier example.
void criterion_example_local() {
  Timer timer;
  bool pass = true;
  double worst = 0.0;
  for (const double theta : {kPi / 2, kPi, 3 * kPi / 2}) {
    const auto rep = run_experiment(
        "example_local", json{{"theta", theta}, {"n_min", 6}, {"n_max", 12}});
    pass = pass && rep.pass;
    worst = std::max(worst, rep.ratio);
  }
  report(6, "||X||_2var^2 + ||A||_1var <= 49 pi theta / (2 sin^2(theta/2) n^2)", pass,
         "worst block ratio " + format_double(worst), timer.seconds());
}

// 7. Digit-block variables: truncation error bound, exhaustive moments.
void criterion_digit_blocks() {
  Timer timer;
  SplitMix64 rng(1007);
  bool pass = true;
  for (const int depth : {3, 6, 10}) {
    const auto plan = BlockPlan::single(4, depth);
    for (int rep = 0; rep < 1000; ++rep) {
      const double theta = rng.uniform01();
      const auto digits = digits_of(theta, 4 * depth + 64);
      const std::int64_t i = 1 + static_cast<std::int64_t>(rng.below(4));
      const std::int64_t pos = (i - 1) * depth;
      double tail = 0.0;
      for (int j = 1; j <= 53; ++j) {
        tail += static_cast<double>(digits[pos + j - 1]) * std::pow(2.0, -j);
      }
      const double err =
          std::abs(zeta_sample(plan, 1, i, digits) - std::cos(2.0 * kPi * tail));
      pass = pass && err <= kPi * std::pow(2.0, -(depth - 1));
    }
  }
  // Exhaustive moments per depth; depth 1 is Rademacher with variance 1.
  for (int depth = 1; depth <= 10; ++depth) {
    const auto plan = BlockPlan::single(1, depth);
    double mean = 0.0, second = 0.0;
    const std::int64_t total = std::int64_t{1} << depth;
    for (std::int64_t mask = 0; mask < total; ++mask) {
      std::vector<std::uint8_t> digits(depth);
      for (int b = 0; b < depth; ++b) digits[b] = (mask >> b) & 1;
      const double value = zeta_sample(plan, 1, 1, digits);
      mean += value / total;
      second += value * value / total;
    }
    pass = pass && std::abs(mean) <= 1e-12;
    pass = pass && std::abs(second - (depth == 1 ? 1.0 : 0.5)) <= 1e-12;
  }
  report(7, "digit-block truncation bound pi/2^(n-1), exact mean and variance", pass,
         "1000 samples per depth in {3,6,10}; exhaustive moments up to depth 10",
         timer.seconds());
}

// 8. Walk 2-variation medians increase across m.
void criterion_walk_growth() {
  Timer timer;
  const auto rep = run_experiment(
      "walk_growth",
      json{{"seed", 2026}, {"m_list", json::array({64, 256, 1024})}, {"n", 16},
           {"samples", 500}});
  report(8, "median ||Y_m^16||_2var^2 strictly increases over m in {64,256,1024}",
         rep.pass, rep.notes, timer.seconds());
}

// 9. Monomial bracket 4 pi R_n <= T_n <= 8 pi^2 R_n at s = 1/2, and the
// kernel orthogonality residual.
void criterion_sobolev() {
  Timer timer;
  const auto sweep = run_experiment(
      "sobolev_equiv",
      json{{"s", 0.5}, {"n_lo", 1}, {"n_hi", 512}, {"tolerance", 0.02}});
  bool pass = sweep.pass;

  QuadratureSpec q;  // 2048 panels, band 1e-4, tol 1e-4
  SplitMix64 rng(1009);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng.below(512));
    std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(512));
    while (n == m) n = 1 + static_cast<std::int64_t>(rng.below(512));
    const double bound =
        1e-4 * std::sqrt(t_monomial(m, 0.5, q) * t_monomial(n, 0.5, q));
    const double resid = std::abs(cross_orthogonality(m, n, 0.5, q));
    worst = std::max(worst, resid / bound);
    pass = pass && resid < bound;
  }
  report(9, "T/R bracket for n <= 512 and cross-orthogonality residuals", pass,
         sweep.notes + "; worst residual/bound " + format_double(worst),
         timer.seconds());
}

// 10. Dyadic machinery: bisection chain vs peaked pieces, size bound, greedy.
void criterion_dyadic() {
  Timer timer;
  bool pass = true;
  for (std::int64_t a = 0; a < 512; ++a) {
    for (std::int64_t b = a + 1; b <= 512; ++b) {
      const IntervalZ j{a, b};
      const auto peaked = decompose_peaked(j);
      pass = pass && bisect_to_dyadics(j) == peaked.pieces;
      pass = pass && static_cast<double>(peaked.pieces.size()) <=
                         4.0 * std::log2(static_cast<double>(j.length()) + 1.0);
    }
  }
  SplitMix64 rng(1010);
  for (int rep = 0; rep < 200; ++rep) {
    const std::int64_t a = rng.below(4096);
    const std::int64_t b = a + 1 + static_cast<std::int64_t>(rng.below(4096 - a));
    auto greedy = greedy_decompose({a, b});
    auto peaked = decompose_peaked({a, b}).pieces;
    std::sort(greedy.begin(), greedy.end());
    std::sort(peaked.begin(), peaked.end());
    pass = pass && greedy == peaked;
  }
  report(10, "bisection chain = peaked pieces on all J in [0,512], size bound, greedy",
         pass, "131328 intervals exhaustively, 200 random greedy checks",
         timer.seconds());
}

// 11. The smooth family with exploding area: 2-variation stabilizes while the
// area 1-variation keeps growing.
void criterion_area_blowup() {
  Timer timer;
  const auto rep = run_experiment("area_blowup",
                                  json{{"n_lo", 1}, {"n_hi", 6},
                                       {"stabilization", 0.05}, {"growth", 1.5}});
  report(11, "f_n grid 2-var changes < 5% at n=6 while area 1-var grows > 1.5x", rep.pass,
         rep.notes, timer.seconds());
}

}  // namespace

int main() {
  criterion_dp_oracle();
  criterion_real_partitions();
  criterion_chen();
  criterion_theorem1();
  criterion_lemmas();
  criterion_example_local();
  criterion_digit_blocks();
  criterion_walk_growth();
  criterion_sobolev();
  criterion_dyadic();
  criterion_area_blowup();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
