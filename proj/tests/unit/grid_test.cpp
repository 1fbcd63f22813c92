#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "wsnchase/grid.hpp"

namespace wsnchase {
namespace {

constexpr GridSpec kGrid{200, 200};
constexpr KinematicModel kAxis2{2, MovementMode::AxisOnly};
constexpr KinematicModel kBall2{2, MovementMode::ManhattanBall};

std::vector<Coord> sorted(std::vector<Coord> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(ReachableSegments, ZeroVelocityIsJustThePosition) {
  EXPECT_EQ(reachable_segments({5, 5}, {0, MovementMode::AxisOnly}, kGrid), (std::vector<Coord>{{5, 5}}));
  EXPECT_EQ(reachable_segments({5, 5}, {0, MovementMode::ManhattanBall}, kGrid), (std::vector<Coord>{{5, 5}}));
}

TEST(ReachableSegments, AxisRaysOfLengthTwo) {
  const std::vector<Coord> expected{{5, 5}, {4, 5}, {6, 5}, {3, 5}, {7, 5}, {5, 4}, {5, 6}, {5, 3}, {5, 7}};
  EXPECT_EQ(sorted(reachable_segments({5, 5}, kAxis2, kGrid)), sorted(expected));
}

TEST(ReachableSegments, BallClippedAtCorner) {
  const std::vector<Coord> expected{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}};
  EXPECT_EQ(sorted(reachable_segments({0, 0}, kBall2, kGrid)), sorted(expected));
}

TEST(ReachableSegments, SingleCellGrid) {
  EXPECT_EQ(reachable_segments({0, 0}, {3, MovementMode::AxisOnly}, {1, 1}), (std::vector<Coord>{{0, 0}}));
}

TEST(SinkStep, AtDestinationStays) { EXPECT_EQ(sink_step({3, 3}, {3, 3}, kAxis2, kGrid), (Coord{3, 3})); }

TEST(SinkStep, AxisMoveTowardWest) { EXPECT_EQ(sink_step({3, 3}, {0, 3}, kAxis2, kGrid), (Coord{1, 3})); }

TEST(SinkStep, BallPrefersDiagonal) {
  // |(1,1)-(10,10)|^2 = 162 < |(2,0)-(10,10)|^2 = 164
  EXPECT_EQ(sink_step({0, 0}, {10, 10}, kBall2, kGrid), (Coord{1, 1}));
}

TEST(SinkStep, EquidistantAxisCandidatesPreferNorth) {
  // (5,7) and (7,5) are equally close to (100,100).
  EXPECT_EQ(sink_step({5, 5}, {100, 100}, kAxis2, kGrid), (Coord{5, 7}));
  EXPECT_EQ(sink_step({5, 5}, {0, 10}, kAxis2, kGrid), (Coord{5, 7}));
  // North and South ties cannot occur, but East beats West and South beats West.
  EXPECT_EQ(sink_step({5, 5}, {10, 0}, kAxis2, kGrid), (Coord{7, 5}));
  EXPECT_EQ(sink_step({5, 5}, {0, 0}, kAxis2, kGrid), (Coord{5, 3}));
}

TEST(SinkStep, StopsOnAdjacentDestination) {
  EXPECT_EQ(sink_step({4, 4}, {5, 4}, kAxis2, kGrid), (Coord{5, 4}));
  EXPECT_EQ(sink_step({4, 4}, {5, 5}, kAxis2, kGrid), (Coord{4, 5}));
}

TEST(DirToward, Examples) {
  EXPECT_EQ(dir_toward({3, 3}, {3, 3}, kAxis2, kGrid), Direction::Stay);
  EXPECT_EQ(dir_toward({3, 3}, {0, 3}, kAxis2, kGrid), Direction::West);
  EXPECT_EQ(sink_step({3, 3}, {3, 0}, kAxis2, kGrid), (Coord{3, 1}));
  EXPECT_EQ(dir_toward({3, 3}, {3, 0}, kAxis2, kGrid), Direction::South);
}

TEST(DirToward, DiagonalStepsReportDominantAxis) {
  EXPECT_EQ(direction_of({1, 1}), Direction::North);
  EXPECT_EQ(direction_of({1, -1}), Direction::South);
  EXPECT_EQ(direction_of({2, 1}), Direction::East);
  EXPECT_EQ(direction_of({-2, 1}), Direction::West);
  EXPECT_EQ(dir_toward({0, 0}, {10, 10}, kBall2, kGrid), Direction::North);
  EXPECT_EQ(dir_toward({0, 0}, {10, 3}, {3, MovementMode::ManhattanBall}, kGrid), Direction::East);
}

TEST(MinTime, Examples) {
  EXPECT_EQ(min_time({7, 7}, {7, 7}, kAxis2), 0);
  EXPECT_EQ(min_time({7, 7}, {7, 7}, kBall2), 0);
  EXPECT_EQ(min_time({0, 0}, {1, 1}, kAxis2), 2);
  EXPECT_EQ(min_time({0, 0}, {1, 1}, kBall2), 1);
}

TEST(MinTime, ExamplesAgreeWithBfs) {
  const GridSpec g{4, 4};
  EXPECT_EQ(oracle::movement_bfs({0, 0}, kAxis2, g)[g.index_of({1, 1})], 2);
  EXPECT_EQ(oracle::movement_bfs({0, 0}, kBall2, g)[g.index_of({1, 1})], 1);
}

TEST(HopCount, Examples) {
  EXPECT_EQ(hop_count({5, 5}, {5, 5}), 0);
  EXPECT_EQ(hop_count({0, 0}, {3, 1}), 3);
  EXPECT_EQ(hop_count({5, 5}, {100, 100}), 95);
}

TEST(HopCount, ExamplesAgreeWithBfs) {
  const GridSpec g{101, 101};
  EXPECT_EQ(oracle::radio_bfs({0, 0}, g)[g.index_of({3, 1})], 3);
  EXPECT_EQ(oracle::radio_bfs({5, 5}, g)[g.index_of({100, 100})], 95);
}

TEST(GridSpec, IndexRoundTrip) {
  const GridSpec g{7, 3};
  for (int i = 0; i < g.cell_count(); ++i) EXPECT_EQ(g.index_of(g.coord_at(i)), i);
  EXPECT_FALSE(g.contains({7, 0}));
  EXPECT_FALSE(g.contains({0, -1}));
}

}  // namespace
}  // namespace wsnchase
