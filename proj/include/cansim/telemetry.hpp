#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cansim/fsm.hpp"
#include "cansim/rng.hpp"

namespace cansim {

// One downlink record.
struct TelemetryFrame {
  std::uint32_t seq = 0;
  double t = 0.0;  // seconds since power-on
  FlightMode mode = FlightMode::Prelaunch;
  double lat = 0.0;
  double lon = 0.0;
  double temp = 0.0;      // degC
  double pressure = 0.0;  // hPa
  double altitude = 0.0;  // m
  double rot_x = 0.0, rot_y = 0.0, rot_z = 0.0;
  double acc_x = 0.0, acc_y = 0.0, acc_z = 0.0;
  double ppm = 0.0;
  double power = 0.0;  // mW
};

// Wire format, byte-exact:
//
//   $NVJ,<seq>,<t>,<mode>,<lat>,<lon>,<temp>,<pressure>,<altitude>,
//        <rot_x>,<rot_y>,<rot_z>,<acc_x>,<acc_y>,<acc_z>,<ppm>,<power>*HH\r\n
//
// HH is the XOR of every payload byte between `$` and `*` exclusive, as two
// uppercase hex digits. seq and mode are decimal integers; t, pressure,
// altitude and power carry 2 decimals; lat/lon 6; temp/ppm 2; rot/acc 4.
// The fixed formats make encoding quantized and round-trippable.

struct FrameField {
  const char* name;
  int decimals;  // -1 = unsigned integer field
  double (*get)(const TelemetryFrame&);
  void (*set)(TelemetryFrame&, double);
};

// Field table in wire order; drives the codec, CSV/JSONL persistence and
// plot-series emission.
const std::array<FrameField, 16>& frame_fields();

// Two uppercase hex digits of the XOR of all bytes.
std::string checksum_hex(std::string_view payload);

// Throws std::invalid_argument if any field is non-finite.
std::string encode_frame(const TelemetryFrame& frame);

enum class DecodeError {
  None,
  MissingStart,  // no $NVJ framing
  BadChecksum,   // checksum absent, malformed, or mismatched
  FieldCount,
  NonNumeric,
};

const char* decode_error_name(DecodeError error);

struct DecodeResult {
  std::optional<TelemetryFrame> frame;
  DecodeError error = DecodeError::None;

  explicit operator bool() const { return frame.has_value(); }
};

// Decodes one line. Checksum is verified before anything else is interpreted,
// so any single corrupted payload byte reports BAD_CHECKSUM rather than a
// downstream parse error.
DecodeResult decode_frame(std::string_view line);

// True once a full cadence interval has elapsed since the last emission.
bool emission_due(double last_emit_t, double now, double cadence_s = 2.0);

// Distance-dependent downlink loss around the radio's rated range R:
// delivery is certain up to clear_fraction*R, impossible beyond
// cutoff_fraction*R, with the loss probability ramping linearly in between.
struct LinkConfig {
  double nominal_range_m = 1200.0;
  double clear_fraction = 0.8;
  double cutoff_fraction = 1.5;
  double corruption_probability = 0.01;  // per delivered frame, one byte flipped
};

enum class ChannelOutcome { Delivered, Lost, Corrupted };

const char* channel_outcome_name(ChannelOutcome outcome);

struct ChannelEvent {
  std::uint32_t seq = 0;
  ChannelOutcome outcome = ChannelOutcome::Lost;
  double distance_m = 0.0;
  std::string line;  // bytes as they arrive; empty when lost
};

class RadioLink {
 public:
  RadioLink(const LinkConfig& config, std::uint64_t seed);

  const LinkConfig& config() const { return config_; }

  static double loss_probability(const LinkConfig& config, double distance_m);

  // Sends one encoded line across `distance_m` of air. A corrupted delivery
  // has one random bit of one random payload byte flipped.
  ChannelEvent transmit(std::string_view line, double distance_m,
                        std::uint32_t seq = 0);

 private:
  LinkConfig config_;
  Rng rng_;
};

}  // namespace cansim
