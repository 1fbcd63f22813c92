#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string_view>
#include <vector>

namespace wsnchase {

// Integer segment coordinates. x grows East, y grows North.
struct Coord {
  int x{};
  int y{};

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

std::ostream& operator<<(std::ostream& os, const Coord& c);

struct GridSpec {
  int width{200};
  int height{200};

  constexpr bool contains(Coord c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width && c.y < height;
  }
  constexpr int cell_count() const { return width * height; }
  // Row-major dense index; only meaningful for in-grid coordinates.
  constexpr int index_of(Coord c) const { return c.y * width + c.x; }
  constexpr Coord coord_at(int index) const { return {index % width, index / width}; }

  friend constexpr bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Declaration order is the tie-breaking order used by sink_step.
enum class Direction : std::uint8_t { North, East, South, West, Stay };

std::string_view to_string(Direction d);
std::ostream& operator<<(std::ostream& os, Direction d);

// Unit displacement for a cardinal direction; {0,0} for Stay.
constexpr Coord unit_step(Direction d) {
  switch (d) {
    case Direction::North: return {0, 1};
    case Direction::East: return {1, 0};
    case Direction::South: return {0, -1};
    case Direction::West: return {-1, 0};
    case Direction::Stay: break;
  }
  return {0, 0};
}

inline constexpr Direction kCardinalDirections[] = {Direction::North, Direction::East,
                                                    Direction::South, Direction::West};

enum class MovementMode : std::uint8_t {
  AxisOnly,       // up to v_max segments along a single cardinal direction
  ManhattanBall,  // any displacement with |dx| + |dy| <= v_max
};

struct KinematicModel {
  int v_max{1};
  MovementMode mode{MovementMode::AxisOnly};

  friend constexpr bool operator==(const KinematicModel&, const KinematicModel&) = default;
};

constexpr int manhattan(Coord a, Coord b) {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy;
}

constexpr std::int64_t squared_distance(Coord a, Coord b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Segments an agent at `pos` can occupy after one step, clipped to the grid.
// Always contains `pos`. v_max == 0 is accepted and yields {pos}.
std::vector<Coord> reachable_segments(Coord pos, const KinematicModel& model, const GridSpec& grid);

// Cardinal direction of a displacement. Diagonal displacements report the
// axis with the larger component; equal components report the vertical axis
// (North/South precede East/West in the direction order).
Direction direction_of(Coord displacement);

// One sink move toward `dest`: the reachable segment closest to `dest` in
// Euclidean distance. Ties go to the earlier direction in North, East, South,
// West, Stay order, then to the shorter step, then to the smaller (dx, dy).
Coord sink_step(Coord pos, Coord dest, const KinematicModel& model, const GridSpec& grid);

Direction dir_toward(Coord pos, Coord dest, const KinematicModel& model, const GridSpec& grid);

// Minimum number of steps from `from` to `to` under `model`.
int min_time(Coord from, Coord to, const KinematicModel& model);

// Shortest path length on the 8-neighbour radio graph (Chebyshev distance).
constexpr int hop_count(Coord a, Coord b) {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx > dy ? dx : dy;
}

}  // namespace wsnchase

template <>
struct std::hash<wsnchase::Coord> {
  std::size_t operator()(const wsnchase::Coord& c) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
                                      static_cast<std::uint32_t>(c.y));
  }
};
