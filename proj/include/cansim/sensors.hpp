#pragma once

#include <cstdint>

#include "cansim/descent.hpp"
#include "cansim/rng.hpp"

namespace cansim {

struct NoiseSpec {
  double bias = 0.0;   // same units as the channel
  double sigma = 0.0;  // standard deviation, same units
};

struct SensorSuiteConfig {
  NoiseSpec altimeter;  // hPa, applied to the pressure reading
  NoiseSpec gas;        // ppm
  double baseline_ppm = 50.0;
  NoiseSpec gps;  // degrees
  double site_lat = 23.11;
  double site_lon = 72.49;
  NoiseSpec imu;  // rotation-rate / acceleration channels
  NoiseSpec power;  // volts
  double bus_voltage_nominal = 12.0;
  double bus_current_nominal_ma = 350.0;
  double surface_temp_c = 41.3;
  double lapse_c_per_m = 0.0065;
  std::uint64_t seed = 1;
};

struct SensorReadings {
  double pressure_hpa = 0.0;
  double derived_altitude_m = 0.0;
  double ppm = 0.0;
  double lat = 0.0;
  double lon = 0.0;
  double rot_x = 0.0, rot_y = 0.0, rot_z = 0.0;
  double acc_x = 0.0, acc_y = 0.0, acc_z = 0.0;
  double bus_voltage = 0.0;
  double current_ma = 0.0;
};

// Rate-damping factor applied to the rotation channels while the
// stabilizer runs (secondary descent). Stands in for the detumbling
// hardware, which is not modeled.
inline constexpr double kStabilizedRotSigmaFactor = 0.25;

// Generates noisy readings from simulator truth. One seeded generator, one
// fixed channel draw order (pressure, ppm, lat, lon, rot xyz, acc xyz, bus
// voltage), so a (seed, truth stream) pair reproduces the same readings on
// every run.
class SensorSuite {
 public:
  explicit SensorSuite(const SensorSuiteConfig& config);

  const SensorSuiteConfig& config() const { return config_; }

  SensorReadings sample(const VehicleState& truth, const AirEnvironment& env,
                        bool stabilized);

  // surface_temp - lapse * altitude
  double temperature_profile(const VehicleState& truth) const;

 private:
  SensorSuiteConfig config_;
  Rng rng_;
};

}  // namespace cansim
