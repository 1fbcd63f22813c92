#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsnchase/grid.hpp"

namespace wsnchase {

// std::mt19937_64 has a fully specified output sequence; index draws are done
// by rejection sampling here because std::uniform_int_distribution is not
// portable across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

struct WalkOptions {
  bool allow_stay{false};
};

// One random-walk move: `v_max` segments along a cardinal direction drawn
// uniformly from those that stay in-grid (plus Stay when allowed). Returns
// `pos` if no direction is feasible.
Coord random_walk_step(Coord pos, int v_max, const GridSpec& grid, Rng& rng,
                       const WalkOptions& options = {});

struct Track {
  std::vector<Coord> positions;
  std::optional<std::uint64_t> seed;

  std::size_t size() const { return positions.size(); }
  Coord front() const { return positions.front(); }
  Coord at(std::size_t step) const { return positions.at(step); }

  friend bool operator==(const Track&, const Track&) = default;
};

Track generate_track(Coord start, std::size_t length, int v_max, const GridSpec& grid,
                     std::uint64_t seed, const WalkOptions& options = {});

class TrackError : public std::runtime_error {
 public:
  // line == 0 means the problem is not tied to a specific line.
  TrackError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Throws TrackError when a position leaves the grid or a move exceeds v_max.
void validate_track(const Track& track, const GridSpec& grid, int v_max);

// One `x,y` line per step, LF-terminated, no header. The seed is not stored.
void save_track(const Track& track, std::ostream& out);
Track load_track(std::istream& in, const GridSpec& grid, int v_max);

void save_track(const Track& track, const std::filesystem::path& path);
Track load_track(const std::filesystem::path& path, const GridSpec& grid, int v_max);

}  // namespace wsnchase
