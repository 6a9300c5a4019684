#pragma once

#include <string>
#include <vector>

#include "cansim/descent.hpp"

namespace cansim {

// Round canopy with a central spill hole. The hole steadies the descent;
// its diameter is kept at 20% of the canopy diameter.
struct ParachuteSpec {
  std::string name;
  double canopy_diameter_m = 0.0;
  double spill_ratio = 0.0;  // spill-hole diameter / canopy diameter
  double cd = 1.75;          // mid-range for spill-hole round canopies
  double deploy_altitude_m = 0.0;  // 0 = active from release
  std::string material = "nylon";
};

struct SpecViolation {
  std::string field;
  std::string message;
};

// Drag reference area: canopy disc minus the spill-hole disc,
// (pi/4) D^2 (1 - r^2). Throws std::invalid_argument on an invalid spec.
double effective_area(const ParachuteSpec& spec);

// Inverts the terminal-velocity relation for the canopy that descends at
// `target_v_mps`: A = 2 m g / (cd rho v^2), then sizes the diameter so the
// hole-reduced area hits A. The returned spec reproduces the target rate
// through terminal_velocity() to better than 1e-6 relative.
ParachuteSpec size_for_descent(double mass_kg, double target_v_mps, double cd,
                               const AirEnvironment& env, double spill_ratio);

// Invariant checks, plus the 20% spill-hole guideline (|ratio - 0.20| <= 0.005)
// when requested. Violations are data, not failures.
std::vector<SpecViolation> validate_spec(const ParachuteSpec& spec,
                                         bool check_spill_guideline = false);

}  // namespace cansim
