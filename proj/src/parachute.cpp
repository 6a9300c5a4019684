#include "cansim/parachute.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace cansim {

namespace {

void check_invariants(const ParachuteSpec& spec, std::vector<SpecViolation>* out) {
  auto report = [out](const char* field, const std::string& msg) {
    if (out == nullptr) throw std::invalid_argument(std::string(field) + ": " + msg);
    out->push_back({field, msg});
  };
  if (!(spec.canopy_diameter_m > 0.0))
    report("canopy_diameter_m", "must be > 0");
  if (spec.spill_ratio < 0.0 || spec.spill_ratio >= 1.0)
    report("spill_ratio", "must be in [0, 1)");
  if (!(spec.cd > 0.0)) report("cd", "must be > 0");
  if (spec.deploy_altitude_m < 0.0)
    report("deploy_altitude_m", "must be >= 0");
}

}  // namespace

double effective_area(const ParachuteSpec& spec) {
  check_invariants(spec, nullptr);
  const double d2 = spec.canopy_diameter_m * spec.canopy_diameter_m;
  return std::numbers::pi / 4.0 * d2 * (1.0 - spec.spill_ratio * spec.spill_ratio);
}

ParachuteSpec size_for_descent(double mass_kg, double target_v_mps, double cd,
                               const AirEnvironment& env, double spill_ratio) {
  if (!(mass_kg > 0.0)) throw std::domain_error("size_for_descent: mass must be > 0");
  if (!(target_v_mps > 0.0))
    throw std::domain_error("size_for_descent: target velocity must be > 0");
  if (!(cd > 0.0)) throw std::domain_error("size_for_descent: cd must be > 0");
  if (spill_ratio < 0.0 || spill_ratio >= 1.0)
    throw std::domain_error("size_for_descent: spill ratio must be in [0, 1)");

  // A = 2 m g / (cd rho v^2), then open the diameter up so the hole-reduced
  // disc still provides A.
  const double area =
      2.0 * mass_kg * env.g / (cd * env.rho * target_v_mps * target_v_mps);
  const double diameter = std::sqrt(
      4.0 * area / (std::numbers::pi * (1.0 - spill_ratio * spill_ratio)));

  ParachuteSpec spec;
  char name[64];
  std::snprintf(name, sizeof(name), "sized-%.2fmps", target_v_mps);
  spec.name = name;
  spec.canopy_diameter_m = diameter;
  spec.spill_ratio = spill_ratio;
  spec.cd = cd;
  spec.deploy_altitude_m = 0.0;
  return spec;
}

std::vector<SpecViolation> validate_spec(const ParachuteSpec& spec,
                                         bool check_spill_guideline) {
  std::vector<SpecViolation> violations;
  check_invariants(spec, &violations);
  if (check_spill_guideline && std::abs(spec.spill_ratio - 0.20) > 0.005)
    violations.push_back(
        {"spill_ratio", "guideline: spill-hole diameter should be 20% of the canopy"});
  return violations;
}

}  // namespace cansim
