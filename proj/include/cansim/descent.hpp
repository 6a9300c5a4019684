#pragma once

#include <string>
#include <vector>

#include "cansim/fsm.hpp"

namespace cansim {

struct ParachuteSpec;  // parachute.hpp

// Constant-density atmosphere over the mission's altitude span.
struct AirEnvironment {
  double rho = 1.225;       // air density, kg/m^3
  double g = 9.81;          // m/s^2
  double p0_hpa = 1013.25;  // sea-level reference pressure
};

struct DescentBody {
  double mass_kg = 0.7276;
  double cd = 0.0;       // bare-can drag coefficient
  double area_m2 = 0.0;  // bare-can frontal area
};

// Simulator truth. Velocity is signed, negative while descending.
struct VehicleState {
  double t = 0.0;
  double altitude_m = 0.0;
  double v_mps = 0.0;
  std::vector<std::string> active_chutes;
  FlightMode mode = FlightMode::Prelaunch;
};

// D = 1/2 * cd * rho * v^2 * A. Magnitude only; the integrator applies it
// against the direction of motion.
double drag_force(double cd, double rho, double v_mps, double area_m2);

// Steady-state speed where drag balances weight: v = sqrt(2 W / (cd rho A)).
double terminal_velocity(double weight_n, double cd, double rho, double area_m2);

// Barometric formula, troposphere constants: h = 44330 (1 - (p/p0)^(1/5.255)).
double pressure_to_altitude(double p_hpa, double p0_hpa);
double altitude_to_pressure(double altitude_m, double p0_hpa);

// One fixed step of 1-D vertical motion under gravity plus quadratic drag
// from the body and every active canopy (effective Cd*A values sum).
// Semi-implicit Euler: velocity first, then position from the new velocity;
// quadratic drag is stiff near terminal velocity and this keeps the step
// stable at dt <= 0.1 s. Ground contact clamps altitude to 0 and zeroes the
// velocity, no bounce.
VehicleState step_descent(const VehicleState& state, const DescentBody& body,
                          const std::vector<ParachuteSpec>& active_chutes,
                          const AirEnvironment& env, double dt);

}  // namespace cansim
