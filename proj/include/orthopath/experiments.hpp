#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "orthopath/series.hpp"

namespace orthopath {

// One replayable numerical experiment. lhs/rhs/ratio/pass are fully
// determined by (name, config); runtime_ms is wall clock and is excluded
// from serialized reports so identical seeds produce identical files.
struct ExperimentReport {
  std::string name;
  nlohmann::ordered_json config;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs when rhs > 0
  bool pass = false;
  double runtime_ms = 0.0;
  std::string notes;
};

// Recognized names: theorem1, lemma_local_2var, lemma_36, theorem2,
// mr_maximal, example_local, walk_growth, area_blowup, sobolev_equiv.
// Missing config keys take documented defaults; unknown names throw.
ExperimentReport run_experiment(const std::string& name,
                                const nlohmann::json& config);

// Empirical lower bound for the Hardy constant: max over `trials` random
// unit-energy coefficient draws of E sup_{i<=j} ||sum_{k=i}^j a_k u_k||^2.
// Exact expectation for DiscreteONS; 2048-point midpoint theta grid for
// Fourier. degree < 0 selects m-1 (DiscreteONS) or 32 (Fourier).
double estimate_hardy(const OrthonormalSystem& system, int trials,
                      std::uint64_t seed, std::int64_t degree = -1);

enum class ReportFormat { kJson, kCsv };

nlohmann::ordered_json report_json(const ExperimentReport& report);
// Fixed header: name,config,lhs,rhs,ratio,pass,notes
std::string report_csv(const ExperimentReport& report);

// Bit-stable write: the same report always produces identical bytes.
void write_report(const ExperimentReport& report, ReportFormat format,
                  const std::string& path);

}  // namespace orthopath
