#pragma once

#include <cstdint>
#include <functional>

#include "gauge/config.hpp"
#include "gauge/report.hpp"

namespace gauge {

struct ScenarioParams {
  std::uint64_t seed = 7;
  long resolution = 0;  // 0 = scenario default
  double step = 0;      // 0 = scenario default
  Config config;        // optional [scenario] sections with overrides
};

const std::vector<std::string>& scenario_names();

// Deterministic verification run; unknown names raise ConfigError.
Report run_scenario(const std::string& name, const ScenarioParams& p);

std::vector<Report> run_suite(const ScenarioParams& p);

}  // namespace gauge
