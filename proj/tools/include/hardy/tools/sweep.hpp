#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hardy/oracle.hpp"

namespace hardy::tools {

inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string> kSuites = {"chain", "bridge", "partition",
                                                 "lemma-3.5-exactness", "equivalence-ratio"};

struct ExponentPair {
  double p;
  double q;
};

struct SweepSpec {
  std::vector<std::string> suites = kSuites;
  std::vector<ExponentPair> regimes = {{2, 3}, {3, 2}, {1, 1}, {0.5, 1}, {1, 0.5}, {0.5, 0.25}};
  std::vector<std::size_t> window_sizes = {2, 4, 6, 8};
  std::size_t ensemble = 10;
  /// Weights are drawn log-uniformly from [2^-e, 2^e].
  double weight_exponent = 4.0;
  double zero_rate = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::size_t threads = 1;
  OracleConfig oracle = default_oracle();
  /// Serialized instances to re-run instead of sampling.
  std::vector<nlohmann::json> replay;

  static OracleConfig default_oracle();
};

/// Throws InvalidInput on schema errors (unknown keys are rejected).
SweepSpec parse_sweep_spec(const nlohmann::json& j);
nlohmann::json to_json(const SweepSpec& spec);

nlohmann::json oracle_config_to_json(const OracleConfig& cfg);
OracleConfig oracle_config_from_json(const nlohmann::json& j, OracleConfig base = {});

struct InstanceOutcome {
  bool ok;
  nlohmann::json detail;
};

/// Re-evaluates a serialized instance; the result depends on the instance only.
InstanceOutcome evaluate_instance(const nlohmann::json& instance);

struct SweepOutcome {
  nlohmann::json report;
  bool passed;
};

SweepOutcome run_sweep(const SweepSpec& spec);

}  // namespace hardy::tools
