#include "cansim/descent.hpp"

#include <cmath>
#include <stdexcept>

#include "cansim/parachute.hpp"

namespace cansim {

namespace {

// Barometric exponent and scale for the troposphere fit h = S (1 - (p/p0)^k).
constexpr double kBaroScaleM = 44330.0;
constexpr double kBaroExponent = 1.0 / 5.255;

}  // namespace

double drag_force(double cd, double rho, double v_mps, double area_m2) {
  if (cd < 0.0) throw std::domain_error("drag_force: cd must be >= 0");
  if (rho <= 0.0) throw std::domain_error("drag_force: rho must be > 0");
  if (area_m2 < 0.0) throw std::domain_error("drag_force: area must be >= 0");
  return 0.5 * cd * rho * v_mps * v_mps * area_m2;
}

double terminal_velocity(double weight_n, double cd, double rho, double area_m2) {
  if (weight_n < 0.0) throw std::domain_error("terminal_velocity: weight must be >= 0");
  if (cd < 0.0 || rho < 0.0 || area_m2 < 0.0)
    throw std::domain_error("terminal_velocity: cd, rho and area must be >= 0");
  const double denom = cd * rho * area_m2;
  if (denom == 0.0)
    throw std::domain_error("terminal_velocity: cd*rho*area must be nonzero");
  return std::sqrt(2.0 * weight_n / denom);
}

double pressure_to_altitude(double p_hpa, double p0_hpa) {
  if (p0_hpa <= 0.0) throw std::domain_error("pressure_to_altitude: p0 must be > 0");
  if (p_hpa <= 0.0) throw std::domain_error("pressure_to_altitude: pressure must be > 0");
  if (p_hpa > p0_hpa * 1.05)
    throw std::domain_error("pressure_to_altitude: pressure above reference by more than 5%");
  return kBaroScaleM * (1.0 - std::pow(p_hpa / p0_hpa, kBaroExponent));
}

double altitude_to_pressure(double altitude_m, double p0_hpa) {
  if (p0_hpa <= 0.0) throw std::domain_error("altitude_to_pressure: p0 must be > 0");
  if (altitude_m >= kBaroScaleM)
    throw std::domain_error("altitude_to_pressure: altitude outside model range");
  return p0_hpa * std::pow(1.0 - altitude_m / kBaroScaleM, 1.0 / kBaroExponent);
}

VehicleState step_descent(const VehicleState& state, const DescentBody& body,
                          const std::vector<ParachuteSpec>& active_chutes,
                          const AirEnvironment& env, double dt) {
  if (!(dt > 0.0) || dt > 0.1)
    throw std::invalid_argument("step_descent: dt must be in (0, 0.1] s");
  if (body.mass_kg <= 0.0)
    throw std::invalid_argument("step_descent: mass must be > 0");

  double cda = body.cd * body.area_m2;
  for (const ParachuteSpec& chute : active_chutes)
    cda += chute.cd * effective_area(chute);

  const double v = state.v_mps;
  const double drag = drag_force(1.0, env.rho, v, cda);  // magnitude, cd folded into cda
  double accel = -env.g;
  if (v > 0.0)
    accel -= drag / body.mass_kg;
  else if (v < 0.0)
    accel += drag / body.mass_kg;

  VehicleState next = state;
  next.t = state.t + dt;
  next.v_mps = v + accel * dt;
  next.altitude_m = state.altitude_m + next.v_mps * dt;
  if (next.altitude_m <= 0.0) {
    next.altitude_m = 0.0;
    next.v_mps = 0.0;
  }
  return next;
}

}  // namespace cansim
