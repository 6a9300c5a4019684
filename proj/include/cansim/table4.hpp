#pragma once

#include <string>
#include <vector>

#include "cansim/telemetry.hpp"

namespace cansim {

// Bundled reference flight recording ("table4" dataset): 14 downlink rows
// captured at a 2 s cadence during an ascent leg. Ships as frames and as the
// raw wire-format stream they encode to.
std::vector<TelemetryFrame> table4_frames();
std::string table4_raw_stream();

}  // namespace cansim
