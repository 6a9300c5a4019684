#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "cansim/config.hpp"
#include "cansim/ground_station.hpp"

namespace cansim {

struct MissionArtifacts {
  MissionLog log;               // ground-station product
  std::string received_stream;  // downlink bytes exactly as they arrived
  std::vector<FsmEvent> fsm_events;
  MissionSummary summary;
  std::vector<ChannelEvent> channel_events;
  std::size_t frames_emitted = 0;
  std::size_t buzzer_chirps = 0;
  bool reached_ground = true;  // false if max_duration_s expired first
};

// Full flight: scripted climb to the release altitude, release, two-stage
// descent to ground, sensor sampling every step, frame emission on the
// cadence, the lossy channel, and ground-station ingest. Deterministic for a
// fixed (config, seed).
MissionArtifacts run_mission(const MissionConfig& config);

// received.raw, frames.raw/.csv/.jsonl, errors.log, fsm_events.csv,
// summary.json and config_used.cfg under out_dir.
void write_artifacts(const MissionArtifacts& artifacts,
                     const MissionConfig& config,
                     const std::filesystem::path& out_dir);

std::string summary_json(const MissionArtifacts& artifacts,
                         const MissionConfig& config);

}  // namespace cansim
