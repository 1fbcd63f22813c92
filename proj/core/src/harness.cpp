#include "wsnchase/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace wsnchase {

std::vector<Threshold> default_threshold_sweep() {
  std::vector<Threshold> out;
  for (int i = 0; i <= 9; ++i) out.push_back(Threshold::parse("0." + std::to_string(i)));
  return out;
}

void validate(const ExperimentSpec& spec) {
  if (spec.track_count < 1) throw ConfigError("track count must be at least 1");
  if (spec.algorithms.empty()) throw ConfigError("at least one policy is required");
  const bool has_gain = std::find(spec.algorithms.begin(), spec.algorithms.end(),
                                  PolicyKind::ProbabilityGain) != spec.algorithms.end();
  if (has_gain && spec.thresholds.empty()) throw ConfigError("probgain requires at least one threshold");
  SimConfig probe = spec.base;
  probe.track.reset();
  validate(probe);
}

std::vector<Policy> expand_policies(const ExperimentSpec& spec) {
  std::vector<Policy> out;
  for (PolicyKind kind : spec.algorithms) {
    if (kind == PolicyKind::ProbabilityGain) {
      for (Threshold t : spec.thresholds) out.push_back(Policy::probability_gain(t));
    } else {
      out.push_back(Policy::make(kind));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  const auto policies = expand_policies(spec);

  std::vector<std::shared_ptr<const Track>> tracks;
  tracks.reserve(static_cast<std::size_t>(spec.track_count));
  for (int i = 0; i < spec.track_count; ++i) {
    auto track = generate_track(spec.base.target_start, static_cast<std::size_t>(spec.base.max_steps) + 1,
                                spec.base.target_model.v_max, spec.base.grid,
                                spec.base_seed + static_cast<std::uint64_t>(i), spec.base.walk);
    tracks.push_back(std::make_shared<const Track>(std::move(track)));
  }

  const std::size_t task_count = tracks.size() * policies.size();
  std::vector<RunRecord> runs(task_count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < task_count; i = next++) {
      const std::size_t track_idx = i / policies.size();
      SimConfig config = spec.base;
      config.policy = policies[i % policies.size()];
      config.track = tracks[track_idx];
      try {
        runs[i] = simulate(config, {.record_trace = false, .track_id = static_cast<int>(track_idx)}).record;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned jobs = spec.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, task_count));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  // Task order is already (track_id, policy); the sort pins it regardless.
  std::stable_sort(runs.begin(), runs.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.track_id != b.track_id) return a.track_id < b.track_id;
    return a.policy < b.policy;
  });

  ExperimentResult result;
  result.runs = std::move(runs);
  result.summary = summarize(result.runs, &result.warnings);
  return result;
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records, std::vector<std::string>* warnings) {
  if (records.empty()) throw std::invalid_argument("cannot summarize an empty set of runs");

  struct Acc {
    std::size_t runs = 0, excluded = 0;
    double ttc = 0, hops = 0, transfers = 0;
  };
  std::map<Policy, Acc> groups;
  for (const RunRecord& r : records) {
    Acc& acc = groups[r.policy];
    if (!r.caught()) {
      ++acc.excluded;
      if (warnings) {
        const auto t = r.policy.threshold();
        warnings->push_back(fmt::format("track {} policy {}{}: {} after {} steps, excluded from means", r.track_id,
                                        to_string(r.policy.kind()), t ? " " + t->to_string() : "",
                                        to_string(r.outcome), r.time_to_catch));
      }
      continue;
    }
    ++acc.runs;
    acc.ttc += r.time_to_catch;
    acc.hops += static_cast<double>(r.total_hops);
    acc.transfers += r.transfer_count;
  }

  std::vector<SummaryRow> rows;
  for (const auto& [policy, acc] : groups) {
    SummaryRow row;
    row.policy = policy;
    row.runs = acc.runs;
    row.excluded = acc.excluded;
    if (acc.runs > 0) {
      const double n = static_cast<double>(acc.runs);
      row.mean_time_to_catch = acc.ttc / n;
      row.mean_total_hops = acc.hops / n;
      row.mean_transfer_count = acc.transfers / n;
    }
    rows.push_back(row);
  }

  const auto baseline = std::find_if(rows.begin(), rows.end(), [](const SummaryRow& r) {
    return r.policy.kind() == PolicyKind::AlwaysSend;
  });
  if (baseline != rows.end() && baseline->mean_total_hops) {
    const double base_hops = *baseline->mean_total_hops;
    const double base_ttc = *baseline->mean_time_to_catch;
    for (SummaryRow& row : rows) {
      if (!row.mean_total_hops) continue;
      if (base_hops > 0) row.hop_reduction_vs_baseline_pct = (1.0 - *row.mean_total_hops / base_hops) * 100.0;
      if (base_ttc > 0) row.time_increase_vs_baseline_pct = (*row.mean_time_to_catch / base_ttc - 1.0) * 100.0;
    }
  }
  return rows;
}

namespace {

std::string threshold_field(const Policy& p) { return p.threshold() ? p.threshold()->to_string() : ""; }

std::string opt_field(const std::optional<double>& v, int precision) {
  return v ? fmt::format("{:.{}f}", *v, precision) : "NA";
}

}  // namespace

void write_runs_csv(std::ostream& out, std::span<const RunRecord> runs) {
  out << kRunsCsvHeader << '\n';
  for (const RunRecord& r : runs) {
    out << fmt::format("{},{},{},{},{},{},{},{}\n", r.track_id, to_string(r.policy.kind()), threshold_field(r.policy),
                       r.caught() ? std::to_string(r.time_to_catch) : "NA", r.total_hops, r.transfer_count,
                       r.total_activations, r.seed ? std::to_string(*r.seed) : "");
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << kSummaryCsvHeader << '\n';
  for (const SummaryRow& r : rows) {
    out << fmt::format("{},{},{},{},{},{},{}\n", to_string(r.policy.kind()), threshold_field(r.policy),
                       opt_field(r.mean_time_to_catch, 6), opt_field(r.mean_total_hops, 6),
                       opt_field(r.mean_transfer_count, 6), opt_field(r.hop_reduction_vs_baseline_pct, 2),
                       opt_field(r.time_increase_vs_baseline_pct, 2));
  }
}

void write_trace_csv(std::ostream& out, std::span<const StepTrace> trace) {
  out << kTraceCsvHeader << '\n';
  for (const StepTrace& s : trace) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", s.step, s.target_pos.x, s.target_pos.y, s.sink_pos.x,
                       s.sink_pos.y, s.dest.x, s.dest.y, s.transferred ? 1 : 0, s.hops, s.activated);
  }
}

namespace {

template <typename T>
T parse_field(std::string_view text, std::size_t line_no, std::string_view column) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error(fmt::format("runs csv line {}: bad {} '{}'", line_no, column, text));
  }
  return value;
}

}  // namespace

std::vector<RunRecord> read_runs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRunsCsvHeader) {
    throw std::runtime_error("runs csv line 1: missing or unexpected header");
  }
  std::vector<RunRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 8) throw std::runtime_error(fmt::format("runs csv line {}: expected 8 fields", line_no));

    RunRecord r;
    r.track_id = parse_field<int>(f[0], line_no, "track_id");
    const PolicyKind kind = parse_policy_kind(f[1]);
    r.policy = kind == PolicyKind::ProbabilityGain ? Policy::probability_gain(Threshold::parse(f[2]))
                                                   : Policy::make(kind);
    if (f[3] == "NA") {
      r.outcome = RunOutcome::NonTermination;
    } else {
      r.time_to_catch = parse_field<int>(f[3], line_no, "time_to_catch");
    }
    r.total_hops = parse_field<std::int64_t>(f[4], line_no, "total_hops");
    r.transfer_count = parse_field<int>(f[5], line_no, "transfer_count");
    r.total_activations = parse_field<std::int64_t>(f[6], line_no, "total_activations");
    if (!f[7].empty()) r.seed = parse_field<std::uint64_t>(f[7], line_no, "seed");
    out.push_back(r);
  }
  return out;
}

void write_experiment(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [](const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + p.string() + " for writing");
    return out;
  };
  {
    auto out = open(dir / "runs.csv");
    write_runs_csv(out, result.runs);
  }
  auto out = open(dir / "summary.csv");
  write_summary_csv(out, result.summary);
}

}  // namespace wsnchase
