#pragma once

// Reference computations used only by tests. Nothing here calls into the
// library's geometry: moves, travel times, hop distances and sink choices
// are rebuilt from first principles by enumeration and breadth-first search.

#include <cstdint>
#include <optional>
#include <vector>

#include "wsnchase/grid.hpp"
#include "wsnchase/policies.hpp"

namespace wsnchase::oracle {

// Step counts from `source` to every cell (row-major), by BFS over the
// movement graph of `model`. Unreachable cells hold -1.
std::vector<int> movement_bfs(Coord source, const KinematicModel& model, const GridSpec& grid);

// Hop counts from `source` to every cell by BFS over the 8-neighbour graph.
std::vector<int> radio_bfs(Coord source, const GridSpec& grid);

// Sink choice by scanning the whole grid for legal destinations.
Coord sink_step(Coord pos, Coord dest, const KinematicModel& model, const GridSpec& grid);

struct PartitionCounts {
  std::int64_t area{0};
  std::int64_t toward_current{0};
  std::int64_t toward_dest{0};
  std::vector<Coord> area_cells;
  std::vector<Coord> current_cells;
  std::vector<Coord> dest_cells;
  Coord next_if_current;
  Coord next_if_dest;
};

// Double loop over all cells with BFS travel times.
PartitionCounts partition(const DecisionContext& ctx);

}  // namespace wsnchase::oracle
