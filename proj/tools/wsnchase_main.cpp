// wsnchase: run single target-chasing simulations or multi-track experiments.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "wsnchase/harness.hpp"
#include "wsnchase/simulation.hpp"
#include "wsnchase/target_motion.hpp"

namespace {

using namespace wsnchase;

constexpr int kExitInvalid = 1;
constexpr int kExitNotCaught = 2;

int parse_int(std::string_view text, std::string_view what) {
  int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::pair<int, int> parse_pair(const std::string& text, char sep, std::string_view what) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) {
    throw ConfigError("bad " + std::string(what) + " '" + text + "', expected A" + sep + "B");
  }
  return {parse_int(std::string_view(text).substr(0, pos), what),
          parse_int(std::string_view(text).substr(pos + 1), what)};
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  out.push_back(item);
  return out;
}

struct ScenarioFlags {
  std::string grid = "200x200";
  std::string sink_start = "5,5";
  std::string target_start = "100,100";
  int v_sink = 2;
  int v_target = 1;
  std::string mode = "axis";
  std::string catch_time;
  int max_steps = 10'000;
  bool allow_stay = false;

  void add_to(CLI::App& app) {
    app.add_option("--grid", grid, "Grid size WxH")->capture_default_str();
    app.add_option("--sink-start", sink_start, "Sink start x,y")->capture_default_str();
    app.add_option("--target-start", target_start, "Target start x,y")->capture_default_str();
    app.add_option("--v-sink", v_sink, "Sink maximum velocity")->capture_default_str();
    app.add_option("--v-target", v_target, "Target maximum velocity")->capture_default_str();
    app.add_option("--mode", mode, "Movement mode")->check(CLI::IsMember({"axis", "ball"}))->capture_default_str();
    app.add_option("--catch-time", catch_time, "Travel-time mode for the probgain catch area (default: --mode)")
        ->check(CLI::IsMember({"axis", "ball"}));
    app.add_option("--max-steps", max_steps, "Step cap before a run is reported as non-terminating")
        ->capture_default_str();
    app.add_flag("--allow-stay", allow_stay, "Let the random-walk target stay in place");
  }

  SimConfig to_config() const {
    SimConfig c;
    const auto [w, h] = parse_pair(grid, 'x', "grid");
    c.grid = {w, h};
    const auto [sx, sy] = parse_pair(sink_start, ',', "sink start");
    c.sink_start = {sx, sy};
    const auto [tx, ty] = parse_pair(target_start, ',', "target start");
    c.target_start = {tx, ty};
    const MovementMode m = mode == "ball" ? MovementMode::ManhattanBall : MovementMode::AxisOnly;
    c.sink_model = {v_sink, m};
    c.target_model = {v_target, m};
    c.max_steps = max_steps;
    if (!catch_time.empty()) {
      c.catch_time_mode = catch_time == "ball" ? MovementMode::ManhattanBall : MovementMode::AxisOnly;
    }
    c.walk.allow_stay = allow_stay;
    return c;
  }
};

void print_run(const RunRecord& r) {
  write_runs_csv(std::cout, std::span<const RunRecord>(&r, 1));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate a mobile sink chasing a target through a grid sensor network"};
  app.require_subcommand(1);

  ScenarioFlags sim_flags;
  std::string policy = "always";
  std::string threshold = "0.2";
  std::uint64_t seed = 1;
  std::string trace_path;
  std::string track_path;
  auto* sim = app.add_subcommand("simulate", "Run a single chase and print its per-run CSV row");
  sim_flags.add_to(*sim);
  sim->add_option("--policy", policy, "Transfer policy")
      ->check(CLI::IsMember({"always", "beacon", "dirchange", "probgain"}))
      ->capture_default_str();
  sim->add_option("--threshold", threshold, "Probability-gain threshold in [0,1]")->capture_default_str();
  sim->add_option("--seed", seed, "Random-walk seed (ignored with --track)")->capture_default_str();
  sim->add_option("--trace", trace_path, "Write the per-step trace CSV to this path");
  sim->add_option("--track", track_path, "Follow the target track in this file instead of a random walk");

  ScenarioFlags exp_flags;
  int tracks = 10;
  std::uint64_t base_seed = 1;
  std::string policies = "always,beacon,dirchange,probgain";
  std::string thresholds = "0.0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::string out_dir = "results";
  unsigned jobs = 0;
  auto* exp = app.add_subcommand("experiment", "Run every policy over seeded tracks and write runs.csv/summary.csv");
  exp_flags.add_to(*exp);
  exp->add_option("--tracks", tracks, "Number of random tracks")->capture_default_str();
  exp->add_option("--base-seed", base_seed, "Track i uses seed base-seed + i")->capture_default_str();
  exp->add_option("--policies", policies, "Comma-separated policy list")->capture_default_str();
  exp->add_option("--thresholds", thresholds, "Comma-separated probgain thresholds")->capture_default_str();
  exp->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  exp->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();

  std::uint64_t gen_seed = 1;
  std::size_t gen_length = 1000;
  std::string gen_out;
  ScenarioFlags gen_flags;
  auto* gen = app.add_subcommand("generate-track", "Write a seeded random-walk track file");
  gen_flags.add_to(*gen);
  gen->add_option("--seed", gen_seed, "Random-walk seed")->capture_default_str();
  gen->add_option("--length", gen_length, "Number of positions")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      SimConfig config = sim_flags.to_config();
      config.policy = Policy::make(parse_policy_kind(policy), Threshold::parse(threshold));
      config.seed = seed;
      if (!track_path.empty()) {
        auto track = load_track(std::filesystem::path(track_path), config.grid, config.target_model.v_max);
        if (sim->count("--target-start") == 0) config.target_start = track.front();
        config.track = std::make_shared<const Track>(std::move(track));
      }
      const SimResult result = simulate(config, {.record_trace = !trace_path.empty(), .track_id = 0});
      if (!trace_path.empty()) {
        std::ofstream out(trace_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + trace_path + " for writing");
        write_trace_csv(out, result.trace);
      }
      print_run(result.record);
      if (!result.record.caught()) {
        std::cerr << "wsnchase: " << to_string(result.record.outcome) << " after " << result.record.time_to_catch
                  << " steps\n";
        return kExitNotCaught;
      }
      return 0;
    }

    if (*exp) {
      ExperimentSpec spec;
      spec.base = exp_flags.to_config();
      spec.track_count = tracks;
      spec.base_seed = base_seed;
      spec.jobs = jobs;
      spec.algorithms.clear();
      for (const auto& name : split(policies)) spec.algorithms.push_back(parse_policy_kind(name));
      spec.thresholds.clear();
      for (const auto& t : split(thresholds)) spec.thresholds.push_back(Threshold::parse(t));
      const ExperimentResult result = run_experiment(spec);
      write_experiment(result, out_dir);
      for (const auto& w : result.warnings) std::cerr << "wsnchase: warning: " << w << '\n';
      write_summary_csv(std::cout, result.summary);
      return result.warnings.empty() ? 0 : kExitNotCaught;
    }

    if (*gen) {
      const SimConfig config = gen_flags.to_config();
      validate(config);
      if (gen_length < 1) throw ConfigError("track length must be at least 1");
      const Track track = generate_track(config.target_start, gen_length, config.target_model.v_max, config.grid,
                                         gen_seed, config.walk);
      save_track(track, std::filesystem::path(gen_out));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "wsnchase: error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
