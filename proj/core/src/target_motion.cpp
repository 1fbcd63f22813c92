#include "wsnchase/target_motion.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace wsnchase {

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  // Reject the tail so every residue class is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % n;
}

Coord random_walk_step(Coord pos, int v_max, const GridSpec& grid, Rng& rng,
                       const WalkOptions& options) {
  std::array<Coord, 5> feasible{};
  std::size_t count = 0;
  for (Direction d : kCardinalDirections) {
    const Coord u = unit_step(d);
    const Coord next{pos.x + v_max * u.x, pos.y + v_max * u.y};
    if (grid.contains(next)) feasible[count++] = next;
  }
  if (options.allow_stay) feasible[count++] = pos;
  if (count == 0) return pos;
  return feasible[rng.uniform_index(count)];
}

Track generate_track(Coord start, std::size_t length, int v_max, const GridSpec& grid,
                     std::uint64_t seed, const WalkOptions& options) {
  Track track;
  track.seed = seed;
  track.positions.reserve(length);
  Rng rng(seed);
  Coord pos = start;
  track.positions.push_back(pos);
  for (std::size_t i = 1; i < length; ++i) {
    pos = random_walk_step(pos, v_max, grid, rng, options);
    track.positions.push_back(pos);
  }
  return track;
}

TrackError::TrackError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

void validate_track(const Track& track, const GridSpec& grid, int v_max) {
  if (track.positions.empty()) throw TrackError(0, "track must contain at least one position");
  for (std::size_t i = 0; i < track.positions.size(); ++i) {
    const Coord c = track.positions[i];
    if (!grid.contains(c)) {
      throw TrackError(i + 1, "position (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                  ") is outside the " + std::to_string(grid.width) + "x" +
                                  std::to_string(grid.height) + " grid");
    }
    if (i > 0 && manhattan(track.positions[i - 1], c) > v_max) {
      throw TrackError(i + 1, "move of " + std::to_string(manhattan(track.positions[i - 1], c)) +
                                  " segments exceeds target velocity " + std::to_string(v_max));
    }
  }
}

void save_track(const Track& track, std::ostream& out) {
  for (const Coord& c : track.positions) out << c.x << ',' << c.y << '\n';
}

namespace {

bool parse_non_negative(std::string_view text, int& value) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc{} && ptr == end && value >= 0 && text.front() != '-';
}

}  // namespace

Track load_track(std::istream& in, const GridSpec& grid, int v_max) {
  Track track;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view(line);
    const auto comma = view.find(',');
    Coord c;
    if (comma == std::string_view::npos || !parse_non_negative(view.substr(0, comma), c.x) ||
        !parse_non_negative(view.substr(comma + 1), c.y)) {
      throw TrackError(line_no, "malformed position '" + line + "', expected x,y");
    }
    track.positions.push_back(c);
  }
  validate_track(track, grid, v_max);
  return track;
}

void save_track(const Track& track, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  save_track(track, out);
}

Track load_track(const std::filesystem::path& path, const GridSpec& grid, int v_max) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open track file " + path.string());
  return load_track(in, grid, v_max);
}

}  // namespace wsnchase
