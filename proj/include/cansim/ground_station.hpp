#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cansim/telemetry.hpp"

namespace cansim {

struct IngestError {
  std::size_t offset = 0;  // byte offset into the received stream
  DecodeError category = DecodeError::None;
};

struct MissionMeta {
  std::string mission_id;
  std::string start_timestamp;
  std::string config_snapshot;
};

// Everything the ground station keeps from one flight: decoded frames in
// arrival order (seq gaps = lost frames), every decode failure with its byte
// offset, and positions of frames that arrived out of sequence order.
struct MissionLog {
  std::vector<TelemetryFrame> frames;
  std::vector<IngestError> errors;
  std::vector<std::size_t> out_of_order;  // indices into frames
  MissionMeta meta;
};

struct BandRate {
  double band_high_m = 0.0;
  double band_low_m = 0.0;
  std::optional<double> rate_mps;  // absent when the band has < 2 frames
  std::size_t frames_used = 0;
};

struct MissionSummary {
  std::size_t frame_count = 0;
  double loss_rate = 0.0;  // from seq gaps
  double min_altitude_m = 0.0;
  double max_altitude_m = 0.0;
  std::vector<BandRate> descent_rate_estimates;
  double ppm_min = 0.0;
  double ppm_max = 0.0;
  double ppm_mean = 0.0;
  double duration_s = 0.0;
};

// Scans a byte stream for $NVJ starts, decodes line by line, and records
// every failure instead of aborting: skipped garbage becomes a MISSING_START
// entry at its offset, bad lines become entries with their decode category.
// Arbitrary input never throws.
MissionLog ingest(std::string_view stream);

// Frame-count, loss, altitude envelope, ppm statistics and per-band descent
// rates. A band rate is the least-squares altitude-vs-time slope (sign
// flipped, so descending is positive) over frames inside the band whose mode
// is a descent mode; the two default bands match the two-canopy phases.
MissionSummary summarize(const MissionLog& log, double band_high_m = 900.0,
                         double band_mid_m = 500.0);

// Writes frames.raw (canonical encoded lines), frames.csv (header plus one
// row per frame, wire order and quantization), frames.jsonl, and errors.log
// (`<offset>\t<category>` per line) under `dir`. Throws std::runtime_error
// naming the path when the destination is not writable.
void persist(const MissionLog& log, const std::filesystem::path& dir);

// Inverse of the CSV side of persist(): reconstructs frames exactly
// (quantized values). Throws std::runtime_error on malformed input.
MissionLog load_frames_csv(const std::filesystem::path& csv_path);

// Names accepted by emit_plot_data: every frame field except t.
std::vector<std::string> plot_channels();

// Two-column CSV, time versus one frame channel. Unknown channel names throw
// std::invalid_argument listing the valid ones.
void emit_plot_data(const MissionLog& log, const std::string& channel,
                    const std::filesystem::path& out_path);

}  // namespace cansim
