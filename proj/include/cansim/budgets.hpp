#pragma once

#include <string>
#include <vector>

namespace cansim {

enum class Rail { None, V3_3, V5, V12 };

const char* rail_name(Rail rail);
Rail rail_from_name(const std::string& name);
double rail_voltage(Rail rail);

struct ComponentEntry {
  std::string name;
  double mass_g = 0.0;
  Rail rail = Rail::None;
  double current_ma = 0.0;  // 0 if unpowered
};

struct Battery {
  double capacity_mah = 1090.0;
  double nominal_voltage = 12.0;
};

// Outer envelope of the can.
struct CanGeometry {
  double height_mm = 310.0;
  double diameter_mm = 125.0;
  double wall_thickness_mm = 3.0;
};

// The flight component list with datasheet-typical current draws. Masses are
// fixed; draws are placeholders meant to be overridden from the mission
// config when better numbers exist.
std::vector<ComponentEntry> default_component_table();

// Sum of entry masses, grams. Negative mass throws std::domain_error.
double total_mass(const std::vector<ComponentEntry>& components);

// pi (d/2)^2 h of the outer envelope, cm^3. Wall thickness is reported
// separately, never subtracted here.
double can_volume_cm3(const CanGeometry& geom);

// Battery-referred draw: regulated rails convert through
// rail_V * I / (battery_V * efficiency), the battery-voltage rail draws
// directly. Returns minutes; +infinity when nothing draws.
double endurance_minutes(const Battery& battery,
                         const std::vector<ComponentEntry>& components,
                         double regulator_efficiency);

struct RailIssue {
  std::string component;
  std::string message;
};

struct RailReport {
  std::vector<RailIssue> violations;
  std::vector<std::string> notes;  // powered components with no known rule
};

// Checks the rail assignment: sensor and radio parts belong on 3.3 V, the
// controllers on 5 V, the drive motors on the battery rail. Components the
// rule table does not know are skipped with a note.
RailReport validate_rails(const std::vector<ComponentEntry>& components);

}  // namespace cansim
