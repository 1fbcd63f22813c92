#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsnchase/policies.hpp"
#include "wsnchase/simulation.hpp"

namespace wsnchase {

inline constexpr std::string_view kRunsCsvHeader =
    "track_id,policy,threshold,time_to_catch,total_hops,transfer_count,total_activations,seed";
inline constexpr std::string_view kSummaryCsvHeader =
    "policy,threshold,mean_time_to_catch,mean_total_hops,mean_transfer_count,"
    "hop_reduction_vs_baseline_pct,time_increase_vs_baseline_pct";
inline constexpr std::string_view kTraceCsvHeader =
    "step,target_x,target_y,sink_x,sink_y,dest_x,dest_y,transferred,hops,activated";

// 0.0, 0.1, ..., 0.9
std::vector<Threshold> default_threshold_sweep();

struct ExperimentSpec {
  // base.policy, base.track and base.seed are ignored; each track i is a
  // fresh walk seeded with base_seed + i and shared by every policy.
  SimConfig base;
  std::vector<PolicyKind> algorithms{PolicyKind::AlwaysSend, PolicyKind::Beacon,
                                     PolicyKind::DirectionChange, PolicyKind::ProbabilityGain};
  std::vector<Threshold> thresholds = default_threshold_sweep();
  int track_count{10};
  std::uint64_t base_seed{1};
  unsigned jobs{0};  // 0 = hardware concurrency
};

void validate(const ExperimentSpec& spec);

// One policy per non-threshold algorithm, one per threshold for ProbabilityGain.
// Duplicates are dropped; order is (kind, threshold).
std::vector<Policy> expand_policies(const ExperimentSpec& spec);

struct SummaryRow {
  Policy policy = Policy::always_send();
  std::size_t runs{0};      // caught runs entering the means
  std::size_t excluded{0};  // runs that did not end in a catch
  std::optional<double> mean_time_to_catch;
  std::optional<double> mean_total_hops;
  std::optional<double> mean_transfer_count;
  std::optional<double> hop_reduction_vs_baseline_pct;
  std::optional<double> time_increase_vs_baseline_pct;
};

struct ExperimentResult {
  std::vector<RunRecord> runs;  // sorted by (track_id, policy)
  std::vector<SummaryRow> summary;
  std::vector<std::string> warnings;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

// Per-policy arithmetic means over caught runs, with deltas against the
// AlwaysSend means when that policy is present. Throws std::invalid_argument
// on empty input. Excluded runs are reported through `warnings` if given.
std::vector<SummaryRow> summarize(std::span<const RunRecord> records,
                                  std::vector<std::string>* warnings = nullptr);

void write_runs_csv(std::ostream& out, std::span<const RunRecord> runs);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
void write_trace_csv(std::ostream& out, std::span<const StepTrace> trace);

// Parses a per-run CSV written by write_runs_csv. A run marked NA in the
// time_to_catch column comes back as NonTermination. Throws std::runtime_error
// naming the offending line.
std::vector<RunRecord> read_runs_csv(std::istream& in);

// Writes runs.csv and summary.csv into `dir`, creating it if needed.
void write_experiment(const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace wsnchase
