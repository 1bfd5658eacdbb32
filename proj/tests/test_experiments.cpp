#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "orthopath/experiments.hpp"
#include "orthopath/variation.hpp"

using namespace orthopath;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("hardy ratio on the two-point identity system") {
  DiscreteONS ons;
  ons.m = 2;
  ons.q = {1, 0, 0, 1};
  CoefficientSeq a;
  a.c = {{1, 0}, {0, 0}};
  double mean = 0.0;
  for (int omega = 0; omega < 2; ++omega) {
    mean += maximal_block_oscillation(partial_sum_path(ons, a, omega, 1)) / 2.0;
  }
  CHECK(mean == doctest::Approx(1.0));  // (1/2)(2 + 0), unit energy

  // A single monomial never drops below ratio one.
  const auto haar = haar_ons(8, 3);
  CoefficientSeq mono;
  mono.c.assign(4, {0, 0});
  mono.c[3] = {1, 0};
  double ratio = 0.0;
  for (int omega = 0; omega < 8; ++omega) {
    ratio += maximal_block_oscillation(partial_sum_path(haar, mono, omega, 3)) / 8.0;
  }
  CHECK(ratio >= 1.0 - 1e-12);
}

TEST_CASE("hardy estimates are reproducible and positive") {
  const double a = estimate_hardy(DiscreteONS(haar_ons(8, 11)), 5, 77);
  const double b = estimate_hardy(DiscreteONS(haar_ons(8, 11)), 5, 77);
  CHECK(a == b);
  CHECK(a >= 1.0 - 1e-12);

  const double f1 = estimate_hardy(FourierSystem{}, 2, 5, 8);
  const double f2 = estimate_hardy(FourierSystem{}, 2, 5, 8);
  CHECK(f1 == f2);
  CHECK(f1 > 0.0);

  CHECK_THROWS_AS(estimate_hardy(DigitBlockSystem{BlockPlan::single(2, 2)}, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("bound experiments pass on small instances") {
  const json cfg{{"seed", 9}, {"m", 16}, {"n_max", 12}, {"trials", 5}};
  for (const std::string name : {"theorem1", "lemma_local_2var", "lemma_36"}) {
    const auto report = run_experiment(name, cfg);
    CHECK(report.pass);
    CHECK(report.lhs <= report.rhs);
    CHECK(report.ratio == report.lhs / report.rhs);
  }

  const auto mr = run_experiment("mr_maximal", cfg);
  CHECK(mr.pass);
  CHECK(mr.rhs == 0.0);
  CHECK(mr.lhs > 0.0);
}

TEST_CASE("experiments are deterministic per (name, config)") {
  const json cfg{{"seed", 4}, {"m", 8}, {"n_max", 6}, {"trials", 3}};
  const auto a = run_experiment("theorem1", cfg);
  const auto b = run_experiment("theorem1", cfg);
  CHECK(report_json(a).dump() == report_json(b).dump());

  // Thread count must not change the result.
  json threaded = cfg;
  threaded["threads"] = 3;
  const auto c = run_experiment("theorem1", threaded);
  CHECK(c.lhs == a.lhs);
  CHECK(c.notes == a.notes);
}

TEST_CASE("hardy-weighted bound holds on a small Fourier instance") {
  const json cfg{{"seed", 2},      {"degree", 10},       {"trials", 2},
                 {"theta_grid", 128}, {"hardy_trials", 2}, {"hardy_degree", 6}};
  const auto report = run_experiment("theorem2", cfg);
  CHECK(report.pass);
  CHECK(report.notes.find("caveat") != std::string::npos);
  CHECK(report.notes.find("refinement delta") != std::string::npos);
  const auto again = run_experiment("theorem2", cfg);
  CHECK(report_json(report) == report_json(again));
}

TEST_CASE("local block experiment and its guards") {
  const json cfg{{"theta", 3.141592653589793}, {"n_min", 6}, {"n_max", 8}};
  const auto report = run_experiment("example_local", cfg);
  CHECK(report.pass);
  CHECK(report.lhs <= report.rhs);

  CHECK_THROWS_AS(run_experiment("example_local", json{{"theta", 7.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_experiment("example_local", json{{"theta", 0.01}, {"n_min", 2}}),
                  std::invalid_argument);
}

TEST_CASE("walk growth runs exhaustively below the digit budget") {
  const json cfg{{"seed", 3}, {"m_list", json::array({2, 4})}, {"n", 2}, {"samples", 10}};
  const auto a = run_experiment("walk_growth", cfg);
  const auto b = run_experiment("walk_growth", cfg);
  CHECK(report_json(a) == report_json(b));
  CHECK(a.notes.find("medians") != std::string::npos);

  const json sampled{{"seed", 3}, {"m_list", json::array({16, 64})}, {"n", 4},
                     {"samples", 60}};
  const auto c = run_experiment("walk_growth", sampled);
  CHECK(c.pass);  // medians grow with m
}

TEST_CASE("blow-up experiment exposes both predicates") {
  const json cfg{{"n_lo", 1}, {"n_hi", 3}, {"stabilization", 0.2}, {"growth", 1.2}};
  const auto report = run_experiment("area_blowup", cfg);
  CHECK(report.pass);
  CHECK(report.notes.find("area growth over the family") != std::string::npos);

  const json strict{{"n_lo", 1}, {"n_hi", 2}, {"stabilization", 1e-9}};
  CHECK_FALSE(run_experiment("area_blowup", strict).pass);
}

TEST_CASE("monomial bracket sweep on a short range") {
  const json cfg{{"n_lo", 1}, {"n_hi", 16}};
  const auto report = run_experiment("sobolev_equiv", cfg);
  CHECK(report.pass);
  CHECK(report.notes.find("empirical") != std::string::npos);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(run_experiment("no_such_experiment", json::object()),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_experiment("theorem1", json{{"bogus_key", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_experiment("theorem1", json{{"m", 8}, {"n_max", 20}}),
                  std::invalid_argument);
}

TEST_CASE("report serialization is bit-stable") {
  const json cfg{{"seed", 12}, {"m", 8}, {"n_max", 6}, {"trials", 2}};
  const auto report = run_experiment("lemma_36", cfg);

  const std::string json_path = "report_test.json";
  const std::string csv_path = "report_test.csv";
  write_report(report, ReportFormat::kJson, json_path);
  const std::string first = slurp(json_path);
  write_report(report, ReportFormat::kJson, json_path);
  CHECK(first == slurp(json_path));

  // Round trip carries every serialized field.
  const json parsed = json::parse(first);
  CHECK(parsed["name"] == "lemma_36");
  CHECK(parsed["lhs"].get<double>() == report.lhs);
  CHECK(parsed["rhs"].get<double>() == report.rhs);
  CHECK(parsed["pass"].get<bool>() == report.pass);
  CHECK(parsed["config"]["seed"].get<std::uint64_t>() == 12);

  write_report(report, ReportFormat::kCsv, csv_path);
  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("name,config,lhs,rhs,ratio,pass,notes\n", 0) == 0);
  write_report(report, ReportFormat::kCsv, csv_path);
  CHECK(csv == slurp(csv_path));

  // Same seed, fresh run: identical bytes on disk.
  const auto rerun = run_experiment("lemma_36", cfg);
  write_report(rerun, ReportFormat::kJson, csv_path);
  CHECK(first == slurp(csv_path));

  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());
}
