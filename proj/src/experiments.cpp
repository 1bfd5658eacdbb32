#include "orthopath/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <stdexcept>
#include <thread>

#include "orthopath/io.hpp"
#include "orthopath/lognorm.hpp"
#include "orthopath/rng.hpp"
#include "orthopath/variation.hpp"

namespace orthopath {

namespace {

constexpr double kPi = std::numbers::pi;

double log2_weight(std::int64_t n) { return std::log2(static_cast<double>(n) + 1.0); }

// Doubling knots {1, 2, 4, ...} up to N, with N itself appended so the
// key-inequality blocks cover the whole range.
std::vector<std::int64_t> doubling_knots(std::int64_t n) {
  std::vector<std::int64_t> knots;
  for (std::int64_t t = 1; t < n; t *= 2) knots.push_back(t);
  knots.push_back(n);
  return knots;
}

CoefficientSeq random_unit_coefficients(SplitMix64& rng, std::int64_t degree,
                                        bool complex_valued) {
  CoefficientSeq c;
  c.c.resize(degree + 1);
  double energy = 0.0;
  for (auto& z : c.c) {
    const double re = rng.gaussian();
    const double im = complex_valued ? rng.gaussian() : 0.0;
    z = {re, im};
    energy += std::norm(z);
  }
  const double scale = 1.0 / std::sqrt(energy);
  for (auto& z : c.c) z *= scale;
  return c;
}

// Runs fn(t) for t = 0..count-1 on `threads` workers writing into slot t;
// callers reduce the slots in index order, so results never depend on the
// thread count.
template <typename Fn>
void run_trials(std::int64_t count, int threads, const Fn& fn) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for (std::int64_t t = 0; t < count; ++t) fn(t);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::int64_t> next{0};
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t t = next.fetch_add(1); t < count; t = next.fetch_add(1)) fn(t);
    });
  }
  for (auto& th : pool) th.join();
}

struct Config {
  nlohmann::ordered_json used;
  const nlohmann::json* raw;

  Config(const nlohmann::json& config, std::initializer_list<const char*> keys)
      : raw(&config) {
    std::set<std::string> known(keys.begin(), keys.end());
    for (const auto& item : config.items()) {
      if (!known.contains(item.key())) {
        throw std::invalid_argument("unknown config key: " + item.key());
      }
    }
  }

  template <typename T>
  T get(const char* key, T fallback) {
    T v = raw->value(key, fallback);
    used[key] = v;
    return v;
  }
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct OmegaSweep {
  double mean_var2 = 0.0;      // (1/m) sum ||X_w||^2_{2-var}
  double mean_area1 = 0.0;     // (1/m) sum ||A_w||_{1-var}
  double mean_maxblock = 0.0;  // (1/m) sum max block^2
  double key_path_slack = 0.0;
  double key_area_slack = 0.0;
};

// Exact expectation over the finite sample space, with the two coarsening
// inequalities re-checked on every path when check_keys is set.
OmegaSweep sweep_discrete(const DiscreteONS& ons, const CoefficientSeq& c,
                          std::int64_t degree, bool with_area, bool check_keys) {
  OmegaSweep out;
  const IntervalZ whole{0, degree};
  const auto knots = doubling_knots(degree);
  for (int omega = 0; omega < ons.m; ++omega) {
    const LatticePath path = partial_sum_path(ons, c, omega, degree);
    const double var2 = p_var_exact(path, 2.0, whole).power_sum;
    out.mean_var2 += var2;
    out.mean_maxblock += maximal_block_oscillation(path);
    double area1 = 0.0;
    AreaTable table;
    if (with_area) {
      table = build_area_table(path);
      area1 = table_one_var(table, whole).power_sum;
      out.mean_area1 += area1;
    }
    if (check_keys) {
      const LatticePath coarse = coarsen_at_knots(path, knots);
      // ||g||_2^2 <= 3 (||g||^2 on [0,t0] + ||g^1||_2^2 + sum over blocks)
      double rhs_path = p_var_exact(path, 2.0, {0, knots.front()}).power_sum +
                        p_var_exact(coarse, 2.0, whole).power_sum;
      for (std::size_t b = 0; b + 1 < knots.size(); ++b) {
        rhs_path += p_var_exact(path, 2.0, {knots[b], knots[b + 1]}).power_sum;
      }
      out.key_path_slack = std::max(out.key_path_slack, var2 / (3.0 * rhs_path));
      if (with_area) {
        const AreaTable coarse_table = build_area_table(coarse);
        const double chain = max_weight_chain(
            knots, [&](std::int64_t i, std::int64_t j) { return coarse_table.frobenius(i, j); });
        double rhs_area = table_one_var(table, {0, knots.front()}).power_sum +
                          2.0 * var2 + 2.0 * chain;
        for (std::size_t b = 0; b + 1 < knots.size(); ++b) {
          rhs_area += 2.0 * table_one_var(table, {knots[b], knots[b + 1]}).power_sum;
        }
        if (rhs_area > 0.0) {
          out.key_area_slack = std::max(out.key_area_slack, area1 / rhs_area);
        }
      }
    }
  }
  out.mean_var2 /= ons.m;
  out.mean_area1 /= ons.m;
  out.mean_maxblock /= ons.m;
  return out;
}

// (1/2pi) integral over theta of ||X||_2^2 + ||A||_1 d theta, composite
// midpoint on `grid` points (midpoints avoid theta = 0 exactly).
double fourier_mean_rough_norm(const CoefficientSeq& c, std::int64_t degree,
                               std::int64_t grid, int threads) {
  std::vector<double> per_point(grid, 0.0);
  run_trials(grid, threads, [&](std::int64_t g) {
    const double theta = -kPi + (static_cast<double>(g) + 0.5) * (2.0 * kPi / grid);
    const LatticePath path = partial_sum_path(FourierSystem{}, c, theta, degree);
    const AreaTable table = build_area_table(path);
    per_point[g] = p_var_exact(path, 2.0, {0, degree}).power_sum +
                   table_one_var(table, {0, degree}).power_sum;
  });
  double total = 0.0;
  for (const double v : per_point) total += v;
  return total / static_cast<double>(grid);
}

ExperimentReport finish(ExperimentReport report,
                        std::chrono::steady_clock::time_point start) {
  report.ratio = report.rhs > 0.0 ? report.lhs / report.rhs : 0.0;
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

ExperimentReport exp_expectation_bounds(const std::string& name,
                                    const nlohmann::json& config) {
  const auto start = std::chrono::steady_clock::now();
  Config cfg(config, {"seed", "m", "n_max", "trials", "threads"});
  const auto seed = cfg.get<std::uint64_t>("seed", 1);
  const int m = cfg.get<int>("m", 64);
  const auto degree = cfg.get<std::int64_t>("n_max", 48);
  const auto trials = cfg.get<std::int64_t>("trials", 100);
  const int threads = cfg.get<int>("threads", 1);
  if (degree >= m) throw std::invalid_argument("need n_max < m for a DiscreteONS");

  const DiscreteONS ons = haar_ons(m, seed);
  const bool with_area = name == "theorem1";
  const bool is_mr = name == "mr_maximal";

  std::vector<double> ratios(trials, 0.0);
  std::vector<double> path_slacks(trials, 0.0), area_slacks(trials, 0.0);
  run_trials(trials, threads, [&](std::int64_t t) {
    SplitMix64 rng = substream(seed, t);
    const CoefficientSeq c = random_unit_coefficients(rng, degree, with_area);
    const OmegaSweep sweep = sweep_discrete(ons, c, degree, with_area, with_area);
    double weighted = 0.0, tail = 0.0;
    for (std::int64_t n = 0; n <= degree; ++n) {
      const double w = log2_weight(n);
      weighted += w * w * std::norm(c.c[n]);
      if (n >= 1) tail += std::norm(c.c[n]);
    }
    double lhs = 0.0, rhs = 1.0;
    if (name == "theorem1") {
      lhs = sweep.mean_var2 + sweep.mean_area1;
      rhs = 768.0 * weighted;
    } else if (name == "lemma_local_2var") {
      lhs = sweep.mean_var2;
      rhs = 8.0 * log2_weight(degree) * log2_weight(degree) * tail;
    } else if (name == "lemma_36") {
      lhs = sweep.mean_var2;
      rhs = 36.0 * weighted;
    } else {  // mr_maximal
      lhs = sweep.mean_maxblock;
      rhs = weighted;
    }
    ratios[t] = lhs / rhs;
    path_slacks[t] = sweep.key_path_slack;
    area_slacks[t] = sweep.key_area_slack;
  });

  ExperimentReport report;
  report.name = name;
  report.config = cfg.used;
  report.lhs = *std::max_element(ratios.begin(), ratios.end());
  if (is_mr) {
    report.rhs = 0.0;
    report.pass = true;
    report.notes = "max E[max-block^2] / sum (log2(n+1))^2 |c_n|^2 = " +
                   format_double(report.lhs) +
                   "; the absolute constant is unnamed, no threshold asserted";
  } else {
    report.rhs = 1.0;
    report.pass = report.lhs <= report.rhs;
    report.notes = "worst trial LHS/RHS = " + format_double(report.lhs);
    if (with_area) {
      report.notes += "; coarsening inequalities: path slack " +
                      format_double(*std::max_element(path_slacks.begin(), path_slacks.end())) +
                      ", area slack " +
                      format_double(*std::max_element(area_slacks.begin(), area_slacks.end())) +
                      " (both must be <= 1)";
      if (*std::max_element(path_slacks.begin(), path_slacks.end()) > 1.0 ||
          *std::max_element(area_slacks.begin(), area_slacks.end()) > 1.0) {
        report.pass = false;
      }
    }
  }
  return finish(std::move(report), start);
}

ExperimentReport exp_theorem2(const nlohmann::json& config) {
  const auto start = std::chrono::steady_clock::now();
  Config cfg(config, {"seed", "degree", "trials", "theta_grid", "hardy_trials",
                      "hardy_degree", "threads"});
  const auto seed = cfg.get<std::uint64_t>("seed", 1);
  const auto degree = cfg.get<std::int64_t>("degree", 48);
  const auto trials = cfg.get<std::int64_t>("trials", 20);
  const auto grid = cfg.get<std::int64_t>("theta_grid", 2048);
  auto hardy_trials = cfg.get<std::int64_t>("hardy_trials", 200);
  const auto hardy_degree = cfg.get<std::int64_t>("hardy_degree", 32);
  const int threads = cfg.get<int>("threads", 1);

  double hardy = estimate_hardy(FourierSystem{}, static_cast<int>(hardy_trials),
                                seed + 1, hardy_degree);
  std::string refined;
  for (int attempt = 0;; ++attempt) {
    const double constant = 3580.0 + 40.0 * hardy;
    double worst = 0.0, refinement_delta = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
      SplitMix64 rng = substream(seed, t);
      const CoefficientSeq c = random_unit_coefficients(rng, degree, true);
      double weighted = 0.0;
      for (std::int64_t n = 0; n <= degree; ++n) weighted += log2_weight(n) * std::norm(c.c[n]);
      const double lhs = fourier_mean_rough_norm(c, degree, grid, threads);
      if (t == 0) {
        // Half-grid rerun bounds the theta discretization error.
        const double coarse = fourier_mean_rough_norm(c, degree, grid / 2, threads);
        refinement_delta = std::abs(lhs - coarse);
      }
      worst = std::max(worst, lhs / (constant * weighted));
    }
    if (worst <= 1.0 || attempt == 2) {
      ExperimentReport report;
      report.name = "theorem2";
      report.config = cfg.used;
      report.lhs = worst;
      report.rhs = 1.0;
      report.pass = worst <= 1.0;
      report.notes =
          "hardy lower bound C^ = " + format_double(hardy) + refined +
          "; grid refinement delta " + format_double(refinement_delta) +
          "; caveat: C^ underestimates the Hardy constant, a pass is evidence, not proof";
      return finish(std::move(report), start);
    }
    // Small C^ can produce spurious failures; refine before reporting.
    hardy_trials *= 4;
    hardy = estimate_hardy(FourierSystem{}, static_cast<int>(hardy_trials), seed + 1,
                           hardy_degree);
    refined = " (refined with " + std::to_string(hardy_trials) + " trials)";
  }
}

ExperimentReport exp_example_local(const nlohmann::json& config) {
  const auto start = std::chrono::steady_clock::now();
  Config cfg(config, {"theta", "n_min", "n_max"});
  const double theta = cfg.get<double>("theta", kPi);
  const int n_min = cfg.get<int>("n_min", 6);
  const int n_max = cfg.get<int>("n_max", 12);
  if (!(theta > 0.0 && theta < 2.0 * kPi)) {
    throw std::invalid_argument("theta must lie in (0, 2 pi)");
  }
  const double floor_n = std::max(std::log2(2.0 * kPi / theta), 1.0);
  if (n_min < floor_n) {
    throw std::invalid_argument("blocks need n >= max(log2(2 pi / theta), 1)");
  }
  const double sine = std::sin(0.5 * theta);
  const double c_theta = 49.0 * kPi * theta / (2.0 * sine * sine);

  double worst = 0.0;
  std::string blocks;
  for (int n = n_min; n <= n_max; ++n) {
    const LatticePath path = fourier_block_path(n, theta);
    const IntervalZ whole{0, path.length()};
    const double var2 = p_var_exact(path, 2.0, whole).power_sum;
    const AreaTable table = build_area_table(path);
    const double area1 = table_one_var(table, whole).power_sum;
    const double lhs = (var2 + area1) * n * n;
    worst = std::max(worst, lhs);
    blocks += (blocks.empty() ? "n=" : "; n=") + std::to_string(n) + ": " +
              format_double(var2 + area1);
  }

  ExperimentReport report;
  report.name = "example_local";
  report.config = cfg.used;
  report.lhs = worst;            // max over blocks of n^2 (||X||_2^2 + ||A||_1)
  report.rhs = c_theta;          // 49 pi theta / (2 sin^2(theta/2))
  report.pass = worst <= c_theta;
  report.notes = blocks;
  return finish(std::move(report), start);
}

ExperimentReport exp_walk_growth(const nlohmann::json& config) {
  const auto start = std::chrono::steady_clock::now();
  Config cfg(config, {"seed", "m_list", "n", "samples", "threshold", "threads"});
  const auto seed = cfg.get<std::uint64_t>("seed", 1);
  const auto m_list = cfg.get<std::vector<std::int64_t>>("m_list", {64, 256, 1024});
  const auto depth = cfg.get<std::int64_t>("n", 16);
  const auto samples = cfg.get<std::int64_t>("samples", 500);
  const double threshold = cfg.get<double>("threshold", 1.0);
  const int threads = cfg.get<int>("threads", 1);
  if (m_list.size() < 2) throw std::invalid_argument("m_list needs at least two sizes");

  std::vector<double> medians, exceed;
  for (std::size_t idx = 0; idx < m_list.size(); ++idx) {
    const std::int64_t m = m_list[idx];
    std::vector<double> values;
    if (m * depth <= 20) {
      // Small digit budgets enumerate exactly instead of sampling.
      const std::int64_t total = std::int64_t{1} << (m * depth);
      values.resize(total);
      for (std::int64_t mask = 0; mask < total; ++mask) {
        std::vector<std::uint8_t> digits(m * depth);
        for (std::int64_t b = 0; b < m * depth; ++b) digits[b] = (mask >> b) & 1;
        values[mask] = p_var_exact(walk_path(m, depth, digits), 2.0, {0, m}).power_sum;
      }
    } else {
      values.resize(samples);
      run_trials(samples, threads, [&](std::int64_t t) {
        SplitMix64 rng = substream(seed + idx, t);
        std::vector<std::uint8_t> digits(m * depth);
        for (auto& d : digits) d = rng.bit() ? 1 : 0;
        values[t] = p_var_exact(walk_path(m, depth, digits), 2.0, {0, m}).power_sum;
      });
    }
    double over = 0.0;
    for (const double v : values) over += v > threshold ? 1.0 : 0.0;
    exceed.push_back(over / static_cast<double>(values.size()));
    medians.push_back(median(std::move(values)));
  }

  bool increasing = true;
  double worst_step = 0.0;
  for (std::size_t i = 0; i + 1 < medians.size(); ++i) {
    increasing = increasing && medians[i] < medians[i + 1];
    worst_step = std::max(worst_step, medians[i] / medians[i + 1]);
  }

  ExperimentReport report;
  report.name = "walk_growth";
  report.config = cfg.used;
  report.lhs = worst_step;  // < 1 iff medians strictly increase
  report.rhs = 1.0;
  report.pass = increasing;
  report.notes = "medians";
  for (std::size_t i = 0; i < medians.size(); ++i) {
    report.notes += (i ? ", " : " ") + std::string("m=") + std::to_string(m_list[i]) +
                    ": " + format_double(medians[i]) + " (P[>" + format_double(threshold) +
                    "]=" + format_double(exceed[i]) + ")";
  }
  return finish(std::move(report), start);
}

ExperimentReport exp_area_blowup(const nlohmann::json& config) {
  const auto start = std::chrono::steady_clock::now();
  Config cfg(config, {"n_lo", "n_hi", "stabilization", "growth"});
  const int n_lo = cfg.get<int>("n_lo", 1);
  const int n_hi = cfg.get<int>("n_hi", 6);
  const double stabilization = cfg.get<double>("stabilization", 0.05);
  const double growth = cfg.get<double>("growth", 1.5);
  if (n_lo < 1 || n_hi <= n_lo) throw std::invalid_argument("need 1 <= n_lo < n_hi");

  std::vector<double> var2(n_hi + 1, 0.0), area1(n_hi + 1, 0.0);
  for (int n = n_lo; n <= n_hi; ++n) {
    const LatticePath path = area_blowup_grid_path(n);
    const IntervalZ whole{0, path.length()};
    var2[n] = p_var_exact(path, 2.0, whole).norm;
    area1[n] = area_one_var_streaming(path, whole).power_sum;
  }
  const double change = std::abs(var2[n_hi] - var2[n_hi - 1]) / var2[n_hi - 1];
  const double family_growth = area1[n_hi] / area1[n_lo];
  const double step_growth = area1[n_hi] / area1[n_hi - 1];

  ExperimentReport report;
  report.name = "area_blowup";
  report.config = cfg.used;
  report.lhs = change;
  report.rhs = stabilization;
  report.pass = change < stabilization && family_growth > growth;
  report.notes = "2-var";
  for (int n = n_lo; n <= n_hi; ++n) {
    report.notes += (n == n_lo ? " " : ", ") + std::string("f") + std::to_string(n) + "=" +
                    format_double(var2[n]);
  }
  report.notes += "; area 1-var";
  for (int n = n_lo; n <= n_hi; ++n) {
    report.notes += (n == n_lo ? " " : ", ") + std::string("f") + std::to_string(n) + "=" +
                    format_double(area1[n]);
  }
  report.notes += "; area growth over the family " + format_double(family_growth) +
                  ", last step " + format_double(step_growth);
  return finish(std::move(report), start);
}

ExperimentReport exp_sobolev_equiv(const nlohmann::json& config) {
  const auto start = std::chrono::steady_clock::now();
  Config cfg(config, {"s", "n_lo", "n_hi", "tolerance", "panels", "band", "threads"});
  const double s = cfg.get<double>("s", 0.5);
  const auto n_lo = cfg.get<std::int64_t>("n_lo", 1);
  const auto n_hi = cfg.get<std::int64_t>("n_hi", 512);
  const double tolerance = cfg.get<double>("tolerance", 0.02);
  QuadratureSpec q;
  q.panels = cfg.get<std::int64_t>("panels", 2048);
  q.band = cfg.get<double>("band", 1e-4);
  const int threads = cfg.get<int>("threads", 1);

  // Bracket from the substitution lemma; the (log2 pi)^{2s-1} factor sits on
  // the upper end for s >= 1/2 and on the lower end below.
  const double log_pi_pow = std::pow(std::log2(kPi), 2.0 * s - 1.0);
  const double lo_factor = s >= 0.5 ? 4.0 * kPi : 4.0 * kPi * log_pi_pow;
  const double hi_factor = s >= 0.5 ? 8.0 * kPi * kPi * log_pi_pow : 8.0 * kPi * kPi;

  const std::int64_t count = n_hi - n_lo + 1;
  std::vector<double> worst_per(count, 0.0), ratio_per(count, 0.0);
  run_trials(count, threads, [&](std::int64_t i) {
    const std::int64_t n = n_lo + i;
    const double t = t_monomial(n, s, q);
    const double r = r_monomial(n, s, q);
    worst_per[i] = std::max(lo_factor * r / t, t / (hi_factor * r));
    ratio_per[i] = t / std::pow(log2_weight(n), 2.0 * s);
  });

  ExperimentReport report;
  report.name = "sobolev_equiv";
  report.config = cfg.used;
  report.lhs = *std::max_element(worst_per.begin(), worst_per.end());
  report.rhs = 1.0 / (1.0 - tolerance);
  report.pass = report.lhs <= report.rhs;
  report.notes = "empirical T_n / (log2(n+1))^{2s} within [" +
                 format_double(*std::min_element(ratio_per.begin(), ratio_per.end())) + ", " +
                 format_double(*std::max_element(ratio_per.begin(), ratio_per.end())) +
                 "] for n in [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]";
  return finish(std::move(report), start);
}

}  // namespace

double estimate_hardy(const OrthonormalSystem& system, int trials,
                      std::uint64_t seed, std::int64_t degree) {
  if (trials < 1) throw std::invalid_argument("needs at least one trial");
  double best = 0.0;
  if (const auto* ons = std::get_if<DiscreteONS>(&system)) {
    const std::int64_t deg = degree > 0 ? degree : ons->m - 1;
    for (int t = 0; t < trials; ++t) {
      SplitMix64 rng = substream(seed, t);
      const CoefficientSeq a = random_unit_coefficients(rng, deg, false);
      double value = 0.0;
      for (int omega = 0; omega < ons->m; ++omega) {
        value += maximal_block_oscillation(partial_sum_path(*ons, a, omega, deg));
      }
      best = std::max(best, value / ons->m);
    }
    return best;
  }
  if (std::holds_alternative<FourierSystem>(system)) {
    const std::int64_t deg = degree > 0 ? degree : 32;
    const std::int64_t grid = 2048;
    for (int t = 0; t < trials; ++t) {
      SplitMix64 rng = substream(seed, t);
      const CoefficientSeq a = random_unit_coefficients(rng, deg, true);
      double value = 0.0;
      for (std::int64_t g = 0; g < grid; ++g) {
        const double theta = -kPi + (static_cast<double>(g) + 0.5) * (2.0 * kPi / grid);
        value += maximal_block_oscillation(partial_sum_path(FourierSystem{}, a, theta, deg));
      }
      best = std::max(best, value / static_cast<double>(grid));
    }
    return best;
  }
  throw std::invalid_argument("hardy estimate supports Fourier and DiscreteONS");
}

ExperimentReport run_experiment(const std::string& name,
                                const nlohmann::json& config) {
  if (name == "theorem1" || name == "lemma_local_2var" || name == "lemma_36" ||
      name == "mr_maximal") {
    return exp_expectation_bounds(name, config);
  }
  if (name == "theorem2") return exp_theorem2(config);
  if (name == "example_local") return exp_example_local(config);
  if (name == "walk_growth") return exp_walk_growth(config);
  if (name == "area_blowup") return exp_area_blowup(config);
  if (name == "sobolev_equiv") return exp_sobolev_equiv(config);
  throw std::invalid_argument("unknown experiment: " + name);
}

nlohmann::ordered_json report_json(const ExperimentReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = "orthopath-report-v1";
  doc["name"] = report.name;
  doc["config"] = report.config;
  doc["lhs"] = report.lhs;
  doc["rhs"] = report.rhs;
  doc["ratio"] = report.ratio;
  doc["pass"] = report.pass;
  doc["notes"] = report.notes;
  return doc;
}

std::string report_csv(const ExperimentReport& report) {
  const auto quote = [](std::string s) {
    std::string out = "\"";
    for (const char ch : s) {
      if (ch == '"') out += "\"\"";
      out += ch;
    }
    return out + "\"";
  };
  std::string row = "name,config,lhs,rhs,ratio,pass,notes\n";
  row += report.name + ',' + quote(report.config.dump()) + ',' +
         format_double(report.lhs) + ',' + format_double(report.rhs) + ',' +
         format_double(report.ratio) + ',' + (report.pass ? "true" : "false") + ',' +
         quote(report.notes) + '\n';
  return row;
}

void write_report(const ExperimentReport& report, ReportFormat format,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  if (format == ReportFormat::kJson) {
    out << report_json(report).dump(2) << '\n';
  } else {
    out << report_csv(report);
  }
  if (!out.good()) throw std::runtime_error("short write to " + path);
}

}  // namespace orthopath
