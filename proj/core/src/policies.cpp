#include "wsnchase/policies.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace wsnchase {

Threshold Threshold::from_double(double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1]");
  }
  return Threshold(std::llround(value * kScale));
}

Threshold Threshold::parse(std::string_view text) {
  auto fail = [&]() -> Threshold {
    throw std::invalid_argument("invalid threshold '" + std::string(text) +
                                "': expected a decimal in [0, 1] with at most 6 fractional digits");
  };
  if (text.empty()) return fail();
  std::int64_t whole = 0;
  std::size_t i = 0;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (text[i] < '0' || text[i] > '9' || i > 6) return fail();
    whole = whole * 10 + (text[i] - '0');
  }
  std::int64_t frac = 0;
  std::int64_t scale = kScale;
  if (i < text.size()) {
    ++i;
    if (i == text.size() && i == 1) return fail();
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9' || scale == 1) return fail();
      scale /= 10;
      frac += (text[i] - '0') * scale;
    }
  }
  const std::int64_t millionths = whole * kScale + frac;
  if (millionths > kScale) return fail();
  return Threshold(millionths);
}

std::string Threshold::to_string() const {
  std::string out = std::to_string(millionths_ / kScale);
  std::int64_t frac = millionths_ % kScale;
  if (frac == 0) return out;
  std::string digits = std::to_string(frac);
  digits.insert(0, 6 - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return out + "." + digits;
}

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::AlwaysSend: return "always";
    case PolicyKind::Beacon: return "beacon";
    case PolicyKind::DirectionChange: return "dirchange";
    case PolicyKind::ProbabilityGain: return "probgain";
  }
  return "?";
}

PolicyKind parse_policy_kind(std::string_view name) {
  if (name == "always") return PolicyKind::AlwaysSend;
  if (name == "beacon") return PolicyKind::Beacon;
  if (name == "dirchange") return PolicyKind::DirectionChange;
  if (name == "probgain") return PolicyKind::ProbabilityGain;
  throw std::invalid_argument("unknown policy '" + std::string(name) +
                              "' (expected always, beacon, dirchange or probgain)");
}

Policy Policy::make(PolicyKind kind, Threshold t) {
  if (kind == PolicyKind::ProbabilityGain) return probability_gain(t);
  return Policy(kind, std::nullopt);
}

bool DirectionOdds::gain_exceeds(Threshold t) const {
  return (toward_current - toward_dest) * Threshold::kScale > t.millionths() * area;
}

namespace {

// Visits every in-grid cell with its catch-area membership. Axis-only times
// are separable, so per-column and per-row parts are tabulated once.
template <typename Visit>
void scan_catch_area(const DecisionContext& ctx, Visit&& visit) {
  const GridSpec& g = ctx.grid;
  KinematicModel target_model = ctx.target_model;
  KinematicModel sink_model = ctx.sink_model;
  if (ctx.catch_time_mode) target_model.mode = sink_model.mode = *ctx.catch_time_mode;
  const bool separable =
      target_model.mode == MovementMode::AxisOnly && sink_model.mode == MovementMode::AxisOnly;
  if (separable) {
    // t_T - t_S = (col_T - col_S)[x] + (row_T - row_S)[y]
    std::vector<int> col(g.width), row(g.height);
    for (int x = 0; x < g.width; ++x) {
      col[x] = min_time({ctx.target_pos.x, 0}, {x, 0}, target_model) -
               min_time({ctx.sink_pos.x, 0}, {x, 0}, sink_model);
    }
    for (int y = 0; y < g.height; ++y) {
      row[y] = min_time({0, ctx.target_pos.y}, {0, y}, target_model) -
               min_time({0, ctx.sink_pos.y}, {0, y}, sink_model);
    }
    for (int y = 0; y < g.height; ++y) {
      for (int x = 0; x < g.width; ++x) {
        if (col[x] + row[y] <= 0) visit(Coord{x, y});
      }
    }
    return;
  }
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const Coord c{x, y};
      if (min_time(ctx.target_pos, c, target_model) <= min_time(ctx.sink_pos, c, sink_model)) {
        visit(c);
      }
    }
  }
}

}  // namespace

std::vector<Coord> catch_area(const DecisionContext& ctx) {
  std::vector<Coord> area;
  scan_catch_area(ctx, [&](Coord c) { area.push_back(c); });
  return area;
}

AreaPartition partition_area(const DecisionContext& ctx) {
  AreaPartition p;
  p.next_if_current = sink_step(ctx.sink_pos, ctx.target_pos, ctx.sink_model, ctx.grid);
  p.next_if_dest = sink_step(ctx.sink_pos, ctx.dest, ctx.sink_model, ctx.grid);
  scan_catch_area(ctx, [&](Coord c) {
    p.area.push_back(c);
    const auto dc = squared_distance(c, p.next_if_current);
    const auto dd = squared_distance(c, p.next_if_dest);
    if (dc < dd) p.toward_current.push_back(c);
    if (dd < dc) p.toward_dest.push_back(c);
  });
  return p;
}

DirectionOdds direction_probabilities(const DecisionContext& ctx) {
  const Coord nc = sink_step(ctx.sink_pos, ctx.target_pos, ctx.sink_model, ctx.grid);
  const Coord nd = sink_step(ctx.sink_pos, ctx.dest, ctx.sink_model, ctx.grid);
  DirectionOdds odds;
  if (nc == nd) {
    // Both subsets are empty; only |A| is needed.
    scan_catch_area(ctx, [&](Coord) { ++odds.area; });
    return odds;
  }
  scan_catch_area(ctx, [&](Coord c) {
    ++odds.area;
    const auto dc = squared_distance(c, nc);
    const auto dd = squared_distance(c, nd);
    odds.toward_current += dc < dd;
    odds.toward_dest += dd < dc;
  });
  return odds;
}

std::vector<Coord> prediction_set(Coord prev, const KinematicModel& target_model, const GridSpec& grid) {
  return reachable_segments(prev, {target_model.v_max, MovementMode::ManhattanBall}, grid);
}

std::size_t prediction_set_size(Coord prev, const KinematicModel& target_model, const GridSpec& grid) {
  const int v = target_model.v_max;
  std::size_t n = 0;
  for (int dy = -v; dy <= v; ++dy) {
    const int y = prev.y + dy;
    if (y < 0 || y >= grid.height) continue;
    const int span = v - std::abs(dy);
    const int lo = std::max(prev.x - span, 0);
    const int hi = std::min(prev.x + span, grid.width - 1);
    if (hi >= lo) n += static_cast<std::size_t>(hi - lo + 1);
  }
  return n;
}

bool should_transfer(const Policy& policy, const DecisionContext& ctx) {
  switch (policy.kind()) {
    case PolicyKind::AlwaysSend:
      return true;
    case PolicyKind::Beacon:
      return ctx.sink_pos == ctx.dest;
    case PolicyKind::DirectionChange:
      return dir_toward(ctx.sink_pos, ctx.dest, ctx.sink_model, ctx.grid) !=
             dir_toward(ctx.sink_pos, ctx.target_pos, ctx.sink_model, ctx.grid);
    case PolicyKind::ProbabilityGain: {
      // A non-positive gain never beats a threshold in [0, 1].
      if (ctx.dest == ctx.target_pos) return false;
      return direction_probabilities(ctx).gain_exceeds(policy.threshold().value_or(Threshold{}));
    }
  }
  return false;
}

}  // namespace wsnchase
