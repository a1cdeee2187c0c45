#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "randpoly/config.hpp"
#include "randpoly/discrepancy.hpp"

namespace randpoly {

struct TrialRecord {
  int degree = 0;
  int trial = 0;
  std::vector<DiscrepancyRow> rows;
  double sup_discrepancy = 0.0;
  NthRootStatistics root_stats;
  int iterations = 0;
  bool converged = false;
  int deflated = 0;
  double wall_ms = 0.0;  // excluded from aggregates; informational only
};

struct DegreeStats {
  int degree = 0;
  long trials = 0;
  double mean_sup = 0.0, std_sup = 0.0, se_sup = 0.0;
  double mean_sector_diff = 0.0, std_sector_diff = 0.0, se_sector_diff = 0.0;
  double mean_max_root_stat = 0.0;
  double converged_fraction = 0.0;
  double mean_iterations = 0.0;
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int points_used = 0;
  std::vector<int> excluded_degrees;  // zero means dropped from the fit
};

struct DominanceRow {
  int degree = 0;
  double empirical_mean = 0.0;
  double bound = 0.0;
  bool dominated = false;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  // sorted by (degree, trial)
  std::vector<DegreeStats> per_degree;
  int resumed_trials = 0;  // trials loaded from disk instead of recomputed
};

/// Per-trial seed; fixed published mixing so schedules cannot matter.
std::uint64_t trial_seed(std::uint64_t master_seed, int degree, int trial);

/// sample -> expand -> roots -> counting measure -> discrepancies.
/// Root-finder non-convergence is recorded, not fatal. `triangle` may carry a
/// precomputed change of basis covering `degree`.
TrialRecord run_trial(const ExperimentConfig& config, int degree, int trial,
                      const BasisTriangle* triangle = nullptr);

/// Runs (or resumes) all trials, aggregates, and persists trials.csv /
/// summary.json under config.output_path when set.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::vector<DegreeStats> aggregate(const std::vector<TrialRecord>& records);

/// Least-squares line through (log n, log mean); needs >= 4 positive means.
RateFit fit_rate(const std::vector<DegreeStats>& per_degree);

/// Compare per-degree empirical means against per-degree bound values.
std::vector<DominanceRow> verify_dominance(
    const std::vector<DegreeStats>& per_degree,
    const std::map<int, double>& bounds);

/// CSV with columns degree,trial,sector_id,tau,mu,diff,sup_diff,
/// max_root_stat,iters,converged,wall_ms (one row per sector per trial).
std::string trials_csv_header();
void append_trials_csv(const std::string& path,
                       const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_trials_csv(const std::string& path);

/// Deterministic JSON summary (never includes wall times).
std::string summary_json(const ExperimentConfig& config,
                         const ExperimentResult& result,
                         const std::optional<RateFit>& fit,
                         const std::vector<DominanceRow>& dominance);

}  // namespace randpoly
