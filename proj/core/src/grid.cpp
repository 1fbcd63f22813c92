#include "wsnchase/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace wsnchase {

std::ostream& operator<<(std::ostream& os, const Coord& c) {
  return os << '(' << c.x << ',' << c.y << ')';
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::North: return "North";
    case Direction::East: return "East";
    case Direction::South: return "South";
    case Direction::West: return "West";
    case Direction::Stay: return "Stay";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, Direction d) { return os << to_string(d); }

std::vector<Coord> reachable_segments(Coord pos, const KinematicModel& model, const GridSpec& grid) {
  std::vector<Coord> out;
  const int v = std::max(model.v_max, 0);
  if (model.mode == MovementMode::AxisOnly) {
    out.reserve(4 * static_cast<std::size_t>(v) + 1);
    out.push_back(pos);
    for (Direction d : kCardinalDirections) {
      const Coord u = unit_step(d);
      for (int k = 1; k <= v; ++k) {
        const Coord c{pos.x + k * u.x, pos.y + k * u.y};
        if (!grid.contains(c)) break;
        out.push_back(c);
      }
    }
    return out;
  }
  for (int dy = -v; dy <= v; ++dy) {
    const int span = v - std::abs(dy);
    for (int dx = -span; dx <= span; ++dx) {
      const Coord c{pos.x + dx, pos.y + dy};
      if (grid.contains(c)) out.push_back(c);
    }
  }
  return out;
}

Direction direction_of(Coord d) {
  if (d.x == 0 && d.y == 0) return Direction::Stay;
  if (std::abs(d.y) >= std::abs(d.x)) return d.y > 0 ? Direction::North : Direction::South;
  return d.x > 0 ? Direction::East : Direction::West;
}

Coord sink_step(Coord pos, Coord dest, const KinematicModel& model, const GridSpec& grid) {
  if (pos == dest) return pos;

  auto key = [&](Coord c) {
    const Coord step{c.x - pos.x, c.y - pos.y};
    return std::make_tuple(squared_distance(c, dest), static_cast<int>(direction_of(step)),
                           manhattan(c, pos), step.x, step.y);
  };

  const auto candidates = reachable_segments(pos, model, grid);
  Coord best = candidates.front();
  auto best_key = key(best);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    auto k = key(candidates[i]);
    if (k < best_key) {
      best_key = k;
      best = candidates[i];
    }
  }
  return best;
}

Direction dir_toward(Coord pos, Coord dest, const KinematicModel& model, const GridSpec& grid) {
  const Coord next = sink_step(pos, dest, model, grid);
  return direction_of({next.x - pos.x, next.y - pos.y});
}

namespace {

constexpr int ceil_div(int n, int d) { return (n + d - 1) / d; }

}  // namespace

int min_time(Coord from, Coord to, const KinematicModel& model) {
  const int dx = std::abs(from.x - to.x);
  const int dy = std::abs(from.y - to.y);
  const int v = model.v_max;
  if (model.mode == MovementMode::AxisOnly) return ceil_div(dx, v) + ceil_div(dy, v);
  return ceil_div(dx + dy, v);
}

}  // namespace wsnchase
