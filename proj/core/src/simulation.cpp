#include "wsnchase/simulation.hpp"

#include <cassert>
#include <string>

namespace wsnchase {

namespace {

std::string coord_str(Coord c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

}  // namespace

void validate(const SimConfig& c) {
  if (c.grid.width < 1 || c.grid.height < 1) throw ConfigError("grid dimensions must be at least 1x1");
  if (!c.grid.contains(c.sink_start)) throw ConfigError("sink start " + coord_str(c.sink_start) + " is outside the grid");
  if (!c.grid.contains(c.target_start)) {
    throw ConfigError("target start " + coord_str(c.target_start) + " is outside the grid");
  }
  if (c.sink_model.v_max < 1) throw ConfigError("sink velocity must be at least 1");
  if (c.target_model.v_max < 1) throw ConfigError("target velocity must be at least 1");
  if (c.max_steps < 1) throw ConfigError("max steps must be positive");
  if (c.track) {
    try {
      validate_track(*c.track, c.grid, c.target_model.v_max);
    } catch (const TrackError& e) {
      throw ConfigError(std::string("invalid track: ") + e.what());
    }
    if (c.track->front() != c.target_start) {
      throw ConfigError("track starts at " + coord_str(c.track->front()) + " but target start is " +
                        coord_str(c.target_start));
    }
  }
}

std::shared_ptr<const Track> resolve_track(const SimConfig& c) {
  if (c.track) return c.track;
  return std::make_shared<const Track>(generate_track(c.target_start, static_cast<std::size_t>(c.max_steps) + 1,
                                                      c.target_model.v_max, c.grid, c.seed, c.walk));
}

std::string_view to_string(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::Caught: return "caught";
    case RunOutcome::NonTermination: return "non-termination";
    case RunOutcome::TrackExhausted: return "track-exhausted";
  }
  return "?";
}

SimResult simulate(const SimConfig& config, const SimOptions& options) {
  validate(config);
  const auto track_ptr = resolve_track(config);
  const Track& track = *track_ptr;

  SimResult result;
  RunRecord& rec = result.record;
  rec.policy = config.policy;
  rec.track_id = options.track_id;
  rec.seed = track.seed;

  Coord target = track.front();
  Coord sink = config.sink_start;
  Coord dest = target;

  const int initial_hops = hop_count(target, sink);
  rec.transfer_count = 1;
  rec.total_hops = initial_hops;
  if (options.record_trace) {
    result.trace.push_back({0, target, sink, dest, true, initial_hops, 0});
  }
  if (catch_check(sink, target)) {
    rec.outcome = RunOutcome::Caught;
    rec.time_to_catch = 0;
    return result;
  }

  DecisionContext ctx{target, dest, sink, config.sink_model, config.target_model, config.grid,
                      config.catch_time_mode};
  for (int t = 1; t <= config.max_steps; ++t) {
    if (static_cast<std::size_t>(t) >= track.size()) {
      rec.outcome = RunOutcome::TrackExhausted;
      rec.time_to_catch = t - 1;
      return result;
    }

    const Coord prev_target = target;
    target = track.at(static_cast<std::size_t>(t));
    const std::size_t activated = prediction_set_size(prev_target, config.target_model, config.grid);
    rec.total_activations += static_cast<std::int64_t>(activated);
    assert(manhattan(prev_target, target) <= config.target_model.v_max);  // detection lies in M

    ctx.target_pos = target;
    ctx.dest = dest;
    ctx.sink_pos = sink;
    int hops = 0;
    const bool transferred = should_transfer(config.policy, ctx);
    if (transferred) {
      dest = target;
      hops = hop_count(target, sink);
      rec.total_hops += hops;
      ++rec.transfer_count;
    }

    const Coord next = sink_step(sink, dest, config.sink_model, config.grid);
    assert(manhattan(sink, next) <= config.sink_model.v_max);
    sink = next;

    if (options.record_trace) {
      result.trace.push_back({t, target, sink, dest, transferred, hops, activated});
    }
    if (catch_check(sink, target)) {
      rec.outcome = RunOutcome::Caught;
      rec.time_to_catch = t;
      return result;
    }
  }
  rec.outcome = RunOutcome::NonTermination;
  rec.time_to_catch = config.max_steps;
  return result;
}

}  // namespace wsnchase
