#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cansim {

// Mission phases, in the only order they may occur.
enum class FlightMode : int {
  Prelaunch = 0,
  Ascent = 1,
  PrimaryDescent = 2,
  SecondaryDescent = 3,
  Landed = 4,
};

const char* mode_name(FlightMode mode);
std::optional<FlightMode> mode_from_code(int code);

enum class BuzzerPattern { Silent, Chirp, Continuous };

struct FsmConfig {
  double release_altitude_m = 900.0;
  double secondary_deploy_altitude_m = 500.0;
  double landed_altitude_m = 2.0;  // above zero: barometric noise straddles ground
  int debounce_samples = 3;
};

struct FsmEvent {
  double t = 0.0;
  FlightMode from = FlightMode::Prelaunch;
  FlightMode to = FlightMode::Prelaunch;
  double trigger_altitude_m = 0.0;
};

struct InvalidTransition : std::logic_error {
  using std::logic_error::logic_error;
};

// Altitude/event driven mode sequencer. Altitude-triggered transitions need
// `debounce_samples` consecutive qualifying samples, and secondary deployment
// additionally needs a descending trend, so a noisy altimeter cannot misfire
// a transition on a single stray reading. Single-owner mutable state; callers
// serialize events.
class FlightFsm {
 public:
  explicit FlightFsm(FsmConfig config = {});

  FlightMode mode() const { return mode_; }
  const FsmConfig& config() const { return config_; }
  const std::vector<FsmEvent>& events() const { return events_; }

  // Prelaunch -> Ascent. Any other mode throws InvalidTransition.
  FsmEvent trigger_liftoff(double t);

  // Ascent -> PrimaryDescent, the release signal. Any other mode throws.
  FsmEvent trigger_release(double t);

  // Feeds one altimeter sample. Returns the transition it fired, if any.
  // Samples must carry strictly increasing timestamps; a stale timestamp is
  // rejected with std::invalid_argument. Altitude crossings during ascent are
  // inert: only the release signal leaves Ascent.
  std::optional<FsmEvent> on_altitude_sample(double altitude_m, double t);

  // True only during secondary descent, where rate damping runs.
  bool stabilization_active() const { return mode_ == FlightMode::SecondaryDescent; }

  // Continuous once landed, a chirp per transmitted frame in flight.
  BuzzerPattern buzzer_pattern(bool frame_just_sent) const;

 private:
  FsmEvent transition(FlightMode to, double t, double trigger_altitude_m);

  FsmConfig config_;
  FlightMode mode_ = FlightMode::Prelaunch;
  std::vector<FsmEvent> events_;
  double last_sample_t_ = 0.0;
  double last_sample_altitude_m_ = 0.0;
  bool has_sample_ = false;
  int qualifying_count_ = 0;
};

}  // namespace cansim
