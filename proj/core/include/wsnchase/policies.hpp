#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsnchase/grid.hpp"

namespace wsnchase {

// Probability threshold in [0, 1], held as an exact count of millionths so
// that gain comparisons can be done on integer cardinalities.
class Threshold {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Threshold() = default;

  // Nearest millionth; throws std::invalid_argument outside [0, 1].
  static Threshold from_double(double value);
  // Exact decimal parse ("0.2", "1", ".25"); at most six fractional digits.
  static Threshold parse(std::string_view text);

  constexpr std::int64_t millionths() const { return millionths_; }
  double value() const { return static_cast<double>(millionths_) / kScale; }
  // Shortest decimal form, e.g. "0.2".
  std::string to_string() const;

  friend constexpr bool operator==(Threshold, Threshold) = default;
  friend constexpr auto operator<=>(Threshold, Threshold) = default;

 private:
  constexpr explicit Threshold(std::int64_t millionths) : millionths_(millionths) {}
  std::int64_t millionths_{0};
};

enum class PolicyKind : std::uint8_t { AlwaysSend, Beacon, DirectionChange, ProbabilityGain };

std::string_view to_string(PolicyKind kind);
// Accepts the CLI names: always, beacon, dirchange, probgain.
PolicyKind parse_policy_kind(std::string_view name);

class Policy {
 public:
  static Policy always_send() { return Policy(PolicyKind::AlwaysSend, std::nullopt); }
  static Policy beacon() { return Policy(PolicyKind::Beacon, std::nullopt); }
  static Policy direction_change() { return Policy(PolicyKind::DirectionChange, std::nullopt); }
  static Policy probability_gain(Threshold t) { return Policy(PolicyKind::ProbabilityGain, t); }
  // Threshold is ignored unless kind is ProbabilityGain.
  static Policy make(PolicyKind kind, Threshold t = {});

  PolicyKind kind() const { return kind_; }
  const std::optional<Threshold>& threshold() const { return threshold_; }

  friend bool operator==(const Policy&, const Policy&) = default;
  friend bool operator<(const Policy& a, const Policy& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.threshold_ < b.threshold_;
  }

 private:
  Policy(PolicyKind kind, std::optional<Threshold> t) : kind_(kind), threshold_(t) {}
  PolicyKind kind_;
  std::optional<Threshold> threshold_;
};

// What the target node knows when deciding whether to report.
struct DecisionContext {
  Coord target_pos;  // current detection
  Coord dest;        // last position reported to the sink
  Coord sink_pos;
  KinematicModel sink_model{2, MovementMode::AxisOnly};
  KinematicModel target_model{1, MovementMode::AxisOnly};
  GridSpec grid;
  // Mode used for catch-area travel times; unset means each agent's own
  // movement mode. ManhattanBall here with AxisOnly agents measures time
  // against the |dx| + |dy| <= v_max velocity bound while moves stay axial.
  std::optional<MovementMode> catch_time_mode;
};

// Segment sets are sorted in row-major order.
struct AreaPartition {
  std::vector<Coord> area;            // catch area
  std::vector<Coord> toward_current;  // strictly closer to next_if_current
  std::vector<Coord> toward_dest;     // strictly closer to next_if_dest
  Coord next_if_current;              // sink's next cell if the current position is sent
  Coord next_if_dest;                 // sink's next cell if the transfer is skipped
};

// Cardinalities behind the direction probabilities.
struct DirectionOdds {
  std::int64_t area{0};
  std::int64_t toward_current{0};
  std::int64_t toward_dest{0};

  double p_current() const { return area == 0 ? 0.0 : static_cast<double>(toward_current) / area; }
  double p_dest() const { return area == 0 ? 0.0 : static_cast<double>(toward_dest) / area; }
  double gain() const { return p_current() - p_dest(); }
  // p_current - p_dest > threshold, evaluated exactly on the counts.
  bool gain_exceeds(Threshold t) const;
};

// Every in-grid segment the target can reach no later than the sink:
// min_time(target) <= min_time(sink).
std::vector<Coord> catch_area(const DecisionContext& ctx);

AreaPartition partition_area(const DecisionContext& ctx);

// Same counts as partition_area without materialising the sets.
DirectionOdds direction_probabilities(const DecisionContext& ctx);

// Sensor nodes to activate: the in-grid Manhattan ball of radius v_max around
// the previous detection, independent of the movement mode.
std::vector<Coord> prediction_set(Coord prev_target, const KinematicModel& target_model,
                                  const GridSpec& grid);
std::size_t prediction_set_size(Coord prev_target, const KinematicModel& target_model,
                                const GridSpec& grid);

bool should_transfer(const Policy& policy, const DecisionContext& ctx);

}  // namespace wsnchase
