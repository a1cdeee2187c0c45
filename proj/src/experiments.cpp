#include "randpoly/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace randpoly {

namespace fs = std::filesystem;

std::uint64_t trial_seed(std::uint64_t master_seed, int degree, int trial) {
  return mix(master_seed, static_cast<std::uint64_t>(degree),
             static_cast<std::uint64_t>(trial));
}

TrialRecord run_trial(const ExperimentConfig& config, int degree, int trial,
                      const BasisTriangle* triangle) {
  auto t0 = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.degree = degree;
  rec.trial = trial;

  std::uint64_t seed = trial_seed(config.master_seed, degree, trial);
  Eigen::VectorXcd coeffs = sample_coefficients(config.ensemble, degree, seed);

  rec.root_stats.first = std::pow(std::abs(coeffs[0]), 1.0 / degree);
  rec.root_stats.last = std::pow(std::abs(coeffs[degree]), 1.0 / degree);
  rec.root_stats.max = std::pow(coeffs.cwiseAbs().maxCoeff(), 1.0 / degree);

  BasisTriangle local;
  if (!triangle || triangle->max_degree < degree) {
    BasisSpec spec = config.basis;
    spec.max_degree = degree;
    local = basis_triangle(spec);
    triangle = &local;
  }
  Eigen::VectorXcd mono = expand_to_monomial(coeffs, *triangle);

  ComplexPolynomial poly(mono);
  RootSet roots = find_roots(poly);
  rec.iterations = roots.iterations;
  rec.converged = roots.converged;
  rec.deflated = roots.deflated;

  ZeroCountingMeasure tau = counting_measure(roots, /*allow_non_converged=*/true);
  DiscrepancyReport report =
      sector_discrepancy(tau, config.domain, config.sectors());
  rec.rows = report.rows;
  rec.sup_discrepancy = report.sup_discrepancy;

  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rec;
}

std::vector<DegreeStats> aggregate(const std::vector<TrialRecord>& records) {
  std::map<int, std::vector<const TrialRecord*>> by_degree;
  for (const auto& r : records) by_degree[r.degree].push_back(&r);

  std::vector<DegreeStats> out;
  for (auto& [deg, recs] : by_degree) {
    // Aggregation is a fold over trial index order; sort for schedule
    // independence.
    std::sort(recs.begin(), recs.end(),
              [](const TrialRecord* a, const TrialRecord* b) {
                return a->trial < b->trial;
              });
    DegreeStats s;
    s.degree = deg;
    s.trials = static_cast<long>(recs.size());
    double sum_sup = 0, sumsq_sup = 0, sum_sd = 0, sumsq_sd = 0;
    for (const TrialRecord* r : recs) {
      sum_sup += r->sup_discrepancy;
      sumsq_sup += r->sup_discrepancy * r->sup_discrepancy;
      double mean_diff = 0.0;
      for (const auto& row : r->rows) mean_diff += row.diff;
      if (!r->rows.empty()) mean_diff /= static_cast<double>(r->rows.size());
      sum_sd += mean_diff;
      sumsq_sd += mean_diff * mean_diff;
      s.mean_max_root_stat += r->root_stats.max;
      s.converged_fraction += r->converged ? 1.0 : 0.0;
      s.mean_iterations += r->iterations;
    }
    double n = static_cast<double>(s.trials);
    s.mean_sup = sum_sup / n;
    s.mean_sector_diff = sum_sd / n;
    s.mean_max_root_stat /= n;
    s.converged_fraction /= n;
    s.mean_iterations /= n;
    if (s.trials > 1) {
      s.std_sup = std::sqrt(std::max(0.0, (sumsq_sup - sum_sup * sum_sup / n) /
                                              (n - 1.0)));
      s.std_sector_diff = std::sqrt(
          std::max(0.0, (sumsq_sd - sum_sd * sum_sd / n) / (n - 1.0)));
      s.se_sup = s.std_sup / std::sqrt(n);
      s.se_sector_diff = s.std_sector_diff / std::sqrt(n);
    }
    out.push_back(s);
  }
  return out;
}

RateFit fit_rate(const std::vector<DegreeStats>& per_degree) {
  RateFit fit;
  std::vector<double> xs, ys;
  for (const auto& s : per_degree) {
    if (s.mean_sup > 0.0) {
      xs.push_back(std::log(static_cast<double>(s.degree)));
      ys.push_back(std::log(s.mean_sup));
    } else {
      fit.excluded_degrees.push_back(s.degree);
    }
  }
  if (xs.size() < 4)
    throw std::invalid_argument(
        "fit_rate: need at least 4 degrees with positive mean discrepancy");
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0, ybar = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double pred = fit.slope * xs[i] + fit.intercept;
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.points_used = static_cast<int>(xs.size());
  return fit;
}

std::vector<DominanceRow> verify_dominance(
    const std::vector<DegreeStats>& per_degree,
    const std::map<int, double>& bounds) {
  std::vector<DominanceRow> out;
  for (const auto& s : per_degree) {
    auto it = bounds.find(s.degree);
    if (it == bounds.end()) continue;
    DominanceRow row;
    row.degree = s.degree;
    row.empirical_mean = s.mean_sup;
    row.bound = it->second;
    row.dominated = row.empirical_mean <= row.bound;
    out.push_back(row);
  }
  return out;
}

std::string trials_csv_header() {
  return "degree,trial,sector_id,tau,mu,diff,sup_diff,max_root_stat,iters,"
         "converged,wall_ms";
}

namespace {

std::string format_record_rows(const TrialRecord& rec) {
  std::string out;
  char buf[512];
  for (const auto& row : rec.rows) {
    std::snprintf(buf, sizeof buf,
                  "%d,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d,%.3f\n",
                  rec.degree, rec.trial, row.sector_id, row.tau, row.mu,
                  row.diff, rec.sup_discrepancy, rec.root_stats.max,
                  rec.iterations, rec.converged ? 1 : 0, rec.wall_ms);
    out += buf;
  }
  return out;
}

}  // namespace

void append_trials_csv(const std::string& path,
                       const std::vector<TrialRecord>& records) {
  bool fresh = !fs::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open for append: " + path);
  if (fresh) out << trials_csv_header() << "\n";
  for (const auto& rec : records) out << format_record_rows(rec);
}

std::vector<TrialRecord> read_trials_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trials csv: " + path);
  std::map<std::pair<int, int>, TrialRecord> by_key;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    TrialRecord tmp;
    DiscrepancyRow row;
    int converged = 0;
    int got = std::sscanf(
        line.c_str(), "%d,%d,%d,%lg,%lg,%lg,%lg,%lg,%d,%d,%lg", &tmp.degree,
        &tmp.trial, &row.sector_id, &row.tau, &row.mu, &row.diff,
        &tmp.sup_discrepancy, &tmp.root_stats.max, &tmp.iterations, &converged,
        &tmp.wall_ms);
    if (got != 11)
      throw std::runtime_error("malformed trials csv row: " + line);
    tmp.converged = converged != 0;
    auto key = std::make_pair(tmp.degree, tmp.trial);
    auto it = by_key.find(key);
    if (it == by_key.end()) {
      tmp.rows.push_back(row);
      by_key.emplace(key, std::move(tmp));
    } else {
      it->second.rows.push_back(row);
    }
  }
  std::vector<TrialRecord> out;
  out.reserve(by_key.size());
  for (auto& [key, rec] : by_key) out.push_back(std::move(rec));
  return out;
}

namespace {

// Closed-form Kac bound inputs exist for the iid Gaussian/Rademacher circle
// presets; dominance rows in summaries are restricted to those so summaries
// stay deterministic.
std::map<int, double> closed_form_bounds(const ExperimentConfig& config) {
  std::map<int, double> bounds;
  if (config.domain.kind != DomainKind::UnitCircle) return bounds;
  if (config.basis.kind != BasisKind::Monomial) return bounds;
  if (config.ensemble.mode != EnsembleMode::IidSequence) return bounds;
  const double gamma = std::numbers::egamma;
  for (int n : config.degrees) {
    BoundInputs in;
    in.n = n;
    in.t = 1.0;
    in.r = config.r < 1.0 ? config.r : 1.0 / config.r;
    if (config.ensemble.base.kind == DistKind::ComplexGaussian &&
        config.ensemble.base.sigma == 1.0 &&
        config.ensemble.base.mean == Complex(0.0, 0.0)) {
      in.sum_t_moments = (n + 1) * std::sqrt(std::numbers::pi) / 2.0;
      in.log_moment_first = -gamma / 2.0;
      in.log_moment_last = -gamma / 2.0;
    } else if (config.ensemble.base.kind == DistKind::Rademacher) {
      in.sum_t_moments = n + 1;
      in.log_moment_first = 0.0;
      in.log_moment_last = 0.0;
    } else {
      return {};
    }
    bounds[n] = kac_bound(in);
  }
  return bounds;
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write: " + tmp);
    out << content;
  }
  fs::rename(tmp, path);
}

}  // namespace

std::string summary_json(const ExperimentConfig& config,
                         const ExperimentResult& result,
                         const std::optional<RateFit>& fit,
                         const std::vector<DominanceRow>& dominance) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : describe_config(config)) cfg[k] = v;
  j["config"] = cfg;
  j["seed"] = config.master_seed;

  nlohmann::ordered_json degs = nlohmann::ordered_json::array();
  for (const auto& s : result.per_degree) {
    nlohmann::ordered_json d;
    d["degree"] = s.degree;
    d["trials"] = s.trials;
    d["mean_sup"] = s.mean_sup;
    d["std_sup"] = s.std_sup;
    d["se_sup"] = s.se_sup;
    d["mean_sector_diff"] = s.mean_sector_diff;
    d["std_sector_diff"] = s.std_sector_diff;
    d["se_sector_diff"] = s.se_sector_diff;
    d["mean_max_root_stat"] = s.mean_max_root_stat;
    d["converged_fraction"] = s.converged_fraction;
    d["mean_iterations"] = s.mean_iterations;
    degs.push_back(d);
  }
  j["per_degree"] = degs;

  if (fit) {
    nlohmann::ordered_json f;
    f["slope"] = fit->slope;
    f["intercept"] = fit->intercept;
    f["r_squared"] = fit->r_squared;
    f["points_used"] = fit->points_used;
    j["rate_fit"] = f;
  } else {
    j["rate_fit"] = nullptr;
  }

  nlohmann::ordered_json dom = nlohmann::ordered_json::array();
  for (const auto& row : dominance) {
    nlohmann::ordered_json d;
    d["degree"] = row.degree;
    d["empirical_mean"] = row.empirical_mean;
    d["bound"] = row.bound;
    d["dominated"] = row.dominated;
    dom.push_back(d);
  }
  j["dominance"] = dom;
  return j.dump(2) + "\n";
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;

  std::string trials_path, summary_path, marker_path;
  std::map<std::pair<int, int>, TrialRecord> have;
  if (!config.output_path.empty()) {
    fs::create_directories(config.output_path);
    trials_path = config.output_path + "/trials.csv";
    summary_path = config.output_path + "/summary.json";
    marker_path = config.output_path + "/.complete";
    if (fs::exists(trials_path)) {
      // Keep only trials inside the configured grid: a wider earlier run may
      // have left extra degrees/trials in the CSV, and those must not leak
      // into this run's aggregate.
      for (auto& rec : read_trials_csv(trials_path)) {
        bool wanted = rec.trial < config.trials_per_degree &&
                      std::find(config.degrees.begin(), config.degrees.end(),
                                rec.degree) != config.degrees.end();
        if (wanted)
          have.emplace(std::make_pair(rec.degree, rec.trial), std::move(rec));
      }
    }
  }

  for (int degree : config.degrees) {
    std::vector<int> missing;
    for (int trial = 0; trial < config.trials_per_degree; ++trial)
      if (!have.count({degree, trial})) missing.push_back(trial);

    std::vector<TrialRecord> fresh(missing.size());
    if (!missing.empty()) {
      BasisSpec spec = config.basis;
      spec.max_degree = degree;
      BasisTriangle triangle = basis_triangle(spec);

      int workers = std::max(1, std::min<int>(config.workers,
                                              static_cast<int>(missing.size())));
      auto work = [&](int w) {
        for (std::size_t i = w; i < missing.size();
             i += static_cast<std::size_t>(workers))
          fresh[i] = run_trial(config, degree, missing[i], &triangle);
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
      }
      if (!trials_path.empty()) append_trials_csv(trials_path, fresh);
    }
    result.resumed_trials +=
        config.trials_per_degree - static_cast<int>(missing.size());
    for (auto& rec : fresh)
      have.emplace(std::make_pair(rec.degree, rec.trial), std::move(rec));
  }

  result.records.reserve(have.size());
  for (auto& [key, rec] : have) result.records.push_back(std::move(rec));
  result.per_degree = aggregate(result.records);

  std::optional<RateFit> fit;
  int positive = 0;
  for (const auto& s : result.per_degree)
    if (s.mean_sup > 0.0) ++positive;
  if (positive >= 4) fit = fit_rate(result.per_degree);

  std::vector<DominanceRow> dominance =
      verify_dominance(result.per_degree, closed_form_bounds(config));

  if (!summary_path.empty()) {
    write_atomic(summary_path, summary_json(config, result, fit, dominance));
    write_atomic(marker_path, "complete\n");
  }
  return result;
}

}  // namespace randpoly
