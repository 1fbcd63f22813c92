#include "oracles.hpp"

#include <cstdlib>
#include <deque>
#include <tuple>

namespace wsnchase::oracle {

namespace {

int idx(Coord c, const GridSpec& g) { return c.y * g.width + c.x; }
bool inside(Coord c, const GridSpec& g) { return c.x >= 0 && c.y >= 0 && c.x < g.width && c.y < g.height; }

bool legal_move(int dx, int dy, const KinematicModel& m) {
  if (std::abs(dx) + std::abs(dy) > m.v_max) return false;
  if (m.mode == MovementMode::AxisOnly) return dx == 0 || dy == 0;
  return true;
}

// Direction rank in North, East, South, West, Stay order for a displacement;
// diagonals take the larger axis, vertical on ties.
int direction_rank(int dx, int dy) {
  if (dx == 0 && dy == 0) return 4;
  if (std::abs(dy) >= std::abs(dx)) return dy > 0 ? 0 : 2;
  return dx > 0 ? 1 : 3;
}

template <typename Neighbours>
std::vector<int> bfs(Coord source, const GridSpec& g, Neighbours&& neighbours) {
  std::vector<int> dist(static_cast<std::size_t>(g.width * g.height), -1);
  std::deque<Coord> queue{source};
  dist[idx(source, g)] = 0;
  while (!queue.empty()) {
    const Coord c = queue.front();
    queue.pop_front();
    neighbours(c, [&](Coord n) {
      if (!inside(n, g) || dist[idx(n, g)] >= 0) return;
      dist[idx(n, g)] = dist[idx(c, g)] + 1;
      queue.push_back(n);
    });
  }
  return dist;
}

}  // namespace

std::vector<int> movement_bfs(Coord source, const KinematicModel& model, const GridSpec& grid) {
  const int v = model.v_max;
  return bfs(source, grid, [&](Coord c, auto&& emit) {
    for (int dx = -v; dx <= v; ++dx) {
      for (int dy = -v; dy <= v; ++dy) {
        if ((dx != 0 || dy != 0) && legal_move(dx, dy, model)) emit(Coord{c.x + dx, c.y + dy});
      }
    }
  });
}

std::vector<int> radio_bfs(Coord source, const GridSpec& grid) {
  return bfs(source, grid, [&](Coord c, auto&& emit) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        if (dx != 0 || dy != 0) emit(Coord{c.x + dx, c.y + dy});
      }
    }
  });
}

Coord sink_step(Coord pos, Coord dest, const KinematicModel& model, const GridSpec& grid) {
  std::optional<std::tuple<long long, int, int, int, int>> best_key;
  Coord best = pos;
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const int dx = x - pos.x, dy = y - pos.y;
      if (!legal_move(dx, dy, model)) continue;
      const long long ex = x - dest.x, ey = y - dest.y;
      const auto key = std::make_tuple(ex * ex + ey * ey, direction_rank(dx, dy), std::abs(dx) + std::abs(dy), dx, dy);
      if (!best_key || key < *best_key) {
        best_key = key;
        best = {x, y};
      }
    }
  }
  return best;
}

PartitionCounts partition(const DecisionContext& ctx) {
  KinematicModel tm = ctx.target_model, sm = ctx.sink_model;
  if (ctx.catch_time_mode) tm.mode = sm.mode = *ctx.catch_time_mode;
  const auto t_target = movement_bfs(ctx.target_pos, tm, ctx.grid);
  const auto t_sink = movement_bfs(ctx.sink_pos, sm, ctx.grid);

  PartitionCounts out;
  out.next_if_current = oracle::sink_step(ctx.sink_pos, ctx.target_pos, ctx.sink_model, ctx.grid);
  out.next_if_dest = oracle::sink_step(ctx.sink_pos, ctx.dest, ctx.sink_model, ctx.grid);
  auto d2 = [](Coord a, Coord b) {
    const long long dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
  };
  for (int y = 0; y < ctx.grid.height; ++y) {
    for (int x = 0; x < ctx.grid.width; ++x) {
      const Coord c{x, y};
      const int i = idx(c, ctx.grid);
      if (t_target[i] > t_sink[i]) continue;
      ++out.area;
      out.area_cells.push_back(c);
      const auto dc = d2(c, out.next_if_current), dd = d2(c, out.next_if_dest);
      if (dc < dd) {
        ++out.toward_current;
        out.current_cells.push_back(c);
      } else if (dd < dc) {
        ++out.toward_dest;
        out.dest_cells.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace wsnchase::oracle
