#pragma once

#include <map>
#include <string>

#include "agot/errors.hpp"

namespace agot {

/// Run-wide settings. Defaults follow the reference configuration:
/// depth 1, three layers, three nodes per layer, temperature 0.3.
struct AgotConfig {
  int d_max = 1;  ///< maximum recursion depth; 0 disables nesting entirely
  int l_max = 3;  ///< maximum layers per graph, at least 1
  int n_max = 3;  ///< maximum nodes per layer, at least 1

  double temperature = 0.3;

  std::string default_model = "gpt-4o-mini";
  std::map<std::string, std::string> role_models;  ///< per-role overrides

  int max_in_flight = 8;                 ///< global cap on concurrent completions
  bool within_layer_concurrency = true;  ///< fan out checks/evaluations per layer
  int context_char_budget = 16000;       ///< prompt context cap, oldest dropped first

  std::string model_for(const std::string& role) const {
    auto it = role_models.find(role);
    return it == role_models.end() ? default_model : it->second;
  }
};

inline void validate_config(const AgotConfig& cfg) {
  if (cfg.d_max < 0) throw ConfigError("d_max must be non-negative");
  if (cfg.l_max < 1) throw ConfigError("l_max must be at least 1");
  if (cfg.n_max < 1) throw ConfigError("n_max must be at least 1");
  if (cfg.temperature < 0.0 || cfg.temperature > 2.0) {
    throw ConfigError("temperature must lie in [0, 2]");
  }
  if (cfg.max_in_flight < 1) throw ConfigError("max_in_flight must be at least 1");
  if (cfg.context_char_budget < 256) {
    throw ConfigError("context_char_budget unreasonably small (< 256)");
  }
  if (cfg.default_model.empty()) throw ConfigError("default_model must be non-empty");
}

}  // namespace agot
