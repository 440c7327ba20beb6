#pragma once

#include "dyadlab/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dyadlab {

struct ExperimentSpec {
  std::string name;
  Json params = Json::object();
  uint64_t seed = 1;
  bool plot = false;
};

struct ExperimentResult {
  std::string name;
  bool pass = false;
  Json summary;
  /// filename -> contents; the runner owns writing them out
  std::vector<std::pair<std::string, std::string>> files;
};

struct ExperimentInfo {
  std::string name;
  std::string description;
};

const std::vector<ExperimentInfo>& experiment_registry();

/// Runs a registered experiment; throws std::invalid_argument for unknown
/// names or malformed parameters. Deterministic given (params, seed).
ExperimentResult run_experiment(const ExperimentSpec& spec);

}  // namespace dyadlab
