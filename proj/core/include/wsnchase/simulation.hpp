#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wsnchase/grid.hpp"
#include "wsnchase/policies.hpp"
#include "wsnchase/target_motion.hpp"

namespace wsnchase {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SimConfig {
  GridSpec grid{200, 200};
  Coord sink_start{5, 5};
  Coord target_start{100, 100};
  KinematicModel sink_model{2, MovementMode::AxisOnly};
  KinematicModel target_model{1, MovementMode::AxisOnly};
  Policy policy = Policy::always_send();
  int max_steps{10'000};
  // Travel-time mode for the probability-gain catch area (see DecisionContext).
  std::optional<MovementMode> catch_time_mode;
  // When null, a random walk of max_steps + 1 positions is generated from `seed`.
  std::shared_ptr<const Track> track;
  std::uint64_t seed{1};
  WalkOptions walk;
};

// Throws ConfigError describing the first violated constraint.
void validate(const SimConfig& config);

// The track a run will follow: the supplied one, or the seeded walk.
std::shared_ptr<const Track> resolve_track(const SimConfig& config);

enum class RunOutcome : std::uint8_t { Caught, NonTermination, TrackExhausted };

std::string_view to_string(RunOutcome outcome);

struct StepTrace {
  int step{0};
  Coord target_pos;
  Coord sink_pos;  // after the sink's move
  Coord dest;      // after any transfer this step
  bool transferred{false};
  int hops{0};
  std::size_t activated{0};

  friend bool operator==(const StepTrace&, const StepTrace&) = default;
};

struct RunRecord {
  RunOutcome outcome{RunOutcome::Caught};
  // Step at which the sink caught the target; for other outcomes, the last
  // step simulated.
  int time_to_catch{0};
  std::int64_t total_hops{0};
  int transfer_count{0};
  std::int64_t total_activations{0};
  Policy policy = Policy::always_send();
  int track_id{0};
  std::optional<std::uint64_t> seed;

  bool caught() const { return outcome == RunOutcome::Caught; }
};

struct SimResult {
  RunRecord record;
  std::vector<StepTrace> trace;  // empty unless requested; step 0 is the initial report
};

struct SimOptions {
  bool record_trace{false};
  int track_id{0};
};

// Runs one chase. Per step: target moves along the track, the prediction set
// is activated, the policy decides on a report (hops measured from the sink's
// pre-move position), the sink moves toward its destination, then catch is
// checked. The initial report at step 0 is counted as a transfer.
SimResult simulate(const SimConfig& config, const SimOptions& options = {});

constexpr bool catch_check(Coord sink, Coord target) { return sink == target; }

}  // namespace wsnchase
