#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cansim/budgets.hpp"
#include "cansim/descent.hpp"
#include "cansim/fsm.hpp"
#include "cansim/parachute.hpp"
#include "cansim/sensors.hpp"
#include "cansim/telemetry.hpp"

namespace cansim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Whole-mission configuration. The file form is line-based `key = value`
// text with dotted section keys (`fsm.secondary_deploy_altitude_m = 500`),
// `#` comments, and indexed `component.<n>.<field>` entries.
struct MissionConfig {
  std::string mission_id = "default";
  std::string start_timestamp = "2024-04-16T00:00:00Z";
  std::uint64_t seed = 42;

  double dt_s = 0.01;
  double cadence_s = 2.0;
  double ascent_rate_mps = 5.0;
  double max_duration_s = 3600.0;

  AirEnvironment env;
  DescentBody body;
  FsmConfig fsm;
  ParachuteSpec primary_chute;
  ParachuteSpec secondary_chute;
  SensorSuiteConfig sensors;
  LinkConfig link;
  Battery battery;
  double regulator_efficiency = 0.85;
  std::vector<ComponentEntry> components;

  static MissionConfig defaults();
};

// Throws ConfigError naming the offending field.
void validate(const MissionConfig& config);

MissionConfig parse_config(const std::string& text);
MissionConfig load_config(const std::filesystem::path& path);

// Canonical `key = value` dump; parse_config(write_config(c)) == c.
std::string write_config(const MissionConfig& config);

}  // namespace cansim
