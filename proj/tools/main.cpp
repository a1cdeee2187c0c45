// randpoly: command-line front end for the random-polynomial laboratory.
//
// Subcommands map 1:1 onto library operations:
//   sample          draw a coefficient vector from an ensemble
//   roots           find all zeros of a polynomial given by coefficients
//   basis-check     regularity diagnostics for a polynomial basis
//   bound           evaluate the expected-discrepancy bound
//   experiment-run  run (or resume) a full Monte Carlo experiment
//   experiment-fit  fit a log-log convergence rate to trial data
//   report          print the summary of a finished experiment
//
// Exit codes: 0 success, 1 user error, 2 numeric failure (non-convergence).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "randpoly/discrepancy.hpp"
#include "randpoly/experiments.hpp"

namespace {

using namespace randpoly;

constexpr const char* kConfigSchema = R"(Config file schema (key = value lines):
  [ensemble]
    preset = gaussian-kac | rademacher-kac | cauchy-kac | shared-xi |
             variance-decay | chebyshev-rademacher | bergman-gaussian
    dist   = complex-gaussian | real-gaussian(mean,sigma) | rademacher |
             cauchy(scale) | log-cauchy | uniform-disk(radius) |
             uniform-interval(lo,hi)
    mode   = iid | shared-identical | variance-decay(alpha)
  [basis]
    kind   = monomial | szego-circle | bergman-disk | chebyshev(a,b) |
             faber-interval(a,b) | faber-disk | faber-ellipse(R) |
             gram-schmidt-circle | gram-schmidt-arcsine | gram-schmidt-disk
  [domain]
    kind   = circle | disk | interval(a,b) | ellipse(R)
  [run]
    degrees = 64,128,256       trials = 200       sectors = 8
    sector  = annular(r,alpha,beta)   (repeatable; overrides `sectors`)
    t = 1.0    r = 0.5    seed = 1    out = results/run1
    workers = 1    label = my-run
)";

std::string fmt_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Write to --out path, or stdout when the path is empty.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << content;
}

/// Tabular payload rendered as CSV or a JSON array of row objects; both
/// encodings carry the same %.17g-formatted numbers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    if (format == "csv") {
      std::string out;
      for (std::size_t i = 0; i < columns.size(); ++i)
        out += (i ? "," : "") + columns[i];
      out += "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out += (i ? "," : "") + row[i];
        out += "\n";
      }
      return out;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i)
        obj[columns[i]] = row[i];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }
};

Eigen::VectorXcd read_coeffs_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficients file: " + path);
  std::vector<std::pair<int, Complex>> entries;
  std::string line;
  int max_j = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int j;
    double re, im;
    if (std::sscanf(line.c_str(), "%d,%lg,%lg", &j, &re, &im) != 3)
      continue;  // header or comment line
    entries.emplace_back(j, Complex(re, im));
    max_j = std::max(max_j, j);
  }
  if (max_j < 1)
    throw std::runtime_error("coefficients file needs degrees 0.." +
                             std::string("n with n >= 1: ") + path);
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(max_j + 1);
  for (const auto& [j, c] : entries) coeffs[j] = c;
  return coeffs;
}

int cmd_sample(const std::string& preset, int n, std::uint64_t seed,
               const std::string& out, const std::string& format) {
  ExperimentConfig cfg = preset_config(preset);
  Eigen::VectorXcd coeffs = sample_coefficients(cfg.ensemble, n, seed);
  Table t;
  t.columns = {"j", "real", "imag"};
  for (int j = 0; j <= n; ++j)
    t.rows.push_back({std::to_string(j), fmt_g(coeffs[j].real()),
                      fmt_g(coeffs[j].imag())});
  emit(out, t.render(format));
  return 0;
}

int cmd_roots(const std::string& coeffs_path, double tol, int max_iters,
              const std::string& out, const std::string& format) {
  Eigen::VectorXcd coeffs = read_coeffs_csv(coeffs_path);
  ComplexPolynomial poly(coeffs);
  RootSet roots = find_roots(poly, tol, max_iters);
  Table t;
  t.columns = {"index", "real", "imag", "residual"};
  for (Eigen::Index i = 0; i < roots.roots.size(); ++i)
    t.rows.push_back({std::to_string(i), fmt_g(roots.roots[i].real()),
                      fmt_g(roots.roots[i].imag()), fmt_g(roots.residuals[i])});
  emit(out, t.render(format));
  if (!roots.converged) {
    std::cerr << "roots: iteration did not converge within " << max_iters
              << " sweeps\n";
    return 2;
  }
  return 0;
}

int cmd_basis_check(const std::string& basis_value,
                    const std::string& domain_value, int k_max,
                    const std::string& out, const std::string& format) {
  BasisSpec spec = parse_basis_value(basis_value, k_max);
  DomainModel domain = parse_domain_value(domain_value);
  std::vector<RegularityRow> rows = regularity_report(spec, domain, k_max);
  Table t;
  t.columns = {"k", "leading_times_cap", "sup_norm"};
  for (const auto& row : rows)
    t.rows.push_back({std::to_string(row.k), fmt_g(row.leading_times_cap),
                      fmt_g(row.sup_norm)});
  emit(out, t.render(format));
  return 0;
}

int cmd_bound(const std::string& preset, int n, double t, double r, long trials,
              std::uint64_t seed, const std::string& out,
              const std::string& format) {
  BoundInputs in;
  in.n = n;
  in.t = t;
  in.r = r;
  const double gamma = std::numbers::egamma;
  if (preset == "gaussian-kac" && t == 1.0) {
    in.sum_t_moments = (n + 1) * std::sqrt(std::numbers::pi) / 2.0;
    in.log_moment_first = -gamma / 2.0;
    in.log_moment_last = -gamma / 2.0;
  } else if (preset == "rademacher-kac") {
    in.sum_t_moments = n + 1;
    in.log_moment_first = 0.0;
    in.log_moment_last = 0.0;
  } else {
    // No closed form on file: estimate the moments by Monte Carlo.
    ExperimentConfig cfg = preset_config(preset);
    if (cfg.ensemble.mode != EnsembleMode::IidSequence)
      throw std::invalid_argument(
          "bound: preset '" + preset + "' is not an iid coefficient ensemble");
    MomentEstimate abs_t = empirical_moment(
        cfg.ensemble.base, {MomentKind::AbsPower, t, {}}, trials, seed);
    MomentEstimate log_abs = empirical_moment(
        cfg.ensemble.base, {MomentKind::LogAbs, 1.0, {}}, trials, mix(seed, 1));
    in.sum_t_moments = (n + 1) * abs_t.estimate;
    in.log_moment_first = log_abs.estimate;
    in.log_moment_last = log_abs.estimate;
  }
  double value = kac_bound(in);
  Table tab;
  tab.columns = {"preset", "n", "t", "r", "bound"};
  tab.rows.push_back({preset, std::to_string(n), fmt_g(t), fmt_g(r),
                      fmt_g(value)});
  emit(out, tab.render(format));
  return 0;
}

int cmd_experiment_run(ExperimentConfig cfg, const std::string& format) {
  ExperimentResult result = run_experiment(cfg);
  Table t;
  t.columns = {"degree",  "trials",  "mean_sup",           "std_sup",
               "se_sup",  "mean_sector_diff",  "converged_fraction"};
  for (const auto& s : result.per_degree)
    t.rows.push_back({std::to_string(s.degree), std::to_string(s.trials),
                      fmt_g(s.mean_sup), fmt_g(s.std_sup), fmt_g(s.se_sup),
                      fmt_g(s.mean_sector_diff), fmt_g(s.converged_fraction)});
  std::cout << t.render(format);
  if (result.resumed_trials > 0)
    std::cerr << "resumed " << result.resumed_trials
              << " trials from existing output\n";
  return 0;
}

int cmd_experiment_fit(const std::string& trials_path, const std::string& out,
                       const std::string& format) {
  std::vector<TrialRecord> records = read_trials_csv(trials_path);
  std::vector<DegreeStats> per_degree = aggregate(records);
  RateFit fit = fit_rate(per_degree);
  Table t;
  t.columns = {"slope", "intercept", "r_squared", "points_used"};
  t.rows.push_back({fmt_g(fit.slope), fmt_g(fit.intercept),
                    fmt_g(fit.r_squared), std::to_string(fit.points_used)});
  emit(out, t.render(format));
  for (int d : fit.excluded_degrees)
    std::cerr << "note: degree " << d
              << " excluded from the fit (zero mean discrepancy)\n";
  return 0;
}

int cmd_report(const std::string& dir) {
  std::ifstream in(dir + "/summary.json");
  if (!in)
    throw std::runtime_error("no summary.json under: " + dir);
  std::cout << in.rdbuf();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randpoly: zeros of random polynomials, equilibrium measures, "
               "and discrepancy bounds"};
  app.require_subcommand(1);
  app.footer(kConfigSchema);

  std::string format = "csv", out_path, preset = "gaussian-kac";
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Output file (default: stdout)");
    if (with_seed) sub->add_option("--seed", seed, "RNG seed");
  };

  // sample
  int n = 64;
  auto* sample = app.add_subcommand("sample", "Draw a coefficient vector");
  sample->add_option("--preset", preset, "Ensemble preset")
      ->check(CLI::IsMember(preset_names()));
  sample->add_option("--n", n, "Polynomial degree")->required();
  add_common(sample, true);

  // roots
  std::string coeffs_path;
  double tol = kDefaultRootTol;
  int max_iters = kDefaultMaxIters;
  auto* roots = app.add_subcommand("roots", "Find all zeros of a polynomial");
  roots->add_option("--coeffs", coeffs_path, "CSV with columns j,real,imag")
      ->required();
  roots->add_option("--tol", tol, "Relative residual tolerance");
  roots->add_option("--max-iters", max_iters, "Maximum Aberth sweeps");
  add_common(roots, false);

  // basis-check
  std::string basis_value = "monomial", domain_value = "circle";
  int k_max = 60;
  auto* basis = app.add_subcommand("basis-check", "Basis regularity report");
  basis->add_option("--basis", basis_value, "Basis kind")->required();
  basis->add_option("--domain", domain_value, "Domain the basis lives on")
      ->required();
  basis->add_option("--kmax", k_max, "Highest degree to report");
  add_common(basis, false);

  // bound
  double t_order = 1.0, r_param = 0.5;
  long mc_trials = 1000000;
  auto* bound = app.add_subcommand("bound", "Expected-discrepancy bound");
  bound->add_option("--preset", preset, "Ensemble preset")->required();
  bound->add_option("--n", n, "Polynomial degree")->required();
  bound->add_option("--t", t_order, "Fractional moment order in (0,1]");
  bound->add_option("--r", r_param, "Annulus parameter in (0,1)");
  bound->add_option("--trials", mc_trials, "Monte Carlo moment sample size");
  add_common(bound, true);

  // experiment-run
  std::string config_path, degrees_csv;
  int trials_override = -1, workers = -1, sectors_override = -1;
  bool seed_given = false;
  auto* run = app.add_subcommand("experiment-run", "Run a full experiment");
  run->add_option("--config", config_path, "Config file (see --help schema)");
  run->add_option("--preset", preset, "Ensemble preset instead of a config");
  run->add_option("--degrees", degrees_csv, "Override degree grid, e.g. 64,128");
  run->add_option("--trials", trials_override, "Override trials per degree");
  run->add_option("--workers", workers, "Parallel trial workers");
  run->add_option("--sectors", sectors_override, "Equal-measure sector count");
  run->add_option("--seed", seed, "Master seed")
      ->each([&](const std::string&) { seed_given = true; });
  run->add_option("--out", out_path, "Output directory for trials/summary");
  run->add_option("--format", format, "Console table format")
      ->check(CLI::IsMember({"csv", "json"}));

  // experiment-fit
  std::string trials_path;
  auto* fitcmd = app.add_subcommand("experiment-fit",
                                    "Fit a log-log rate to trials.csv");
  fitcmd->add_option("--trials", trials_path, "Path to trials.csv")->required();
  add_common(fitcmd, false);

  // report
  std::string report_dir;
  auto* report = app.add_subcommand("report", "Print a finished experiment's summary");
  report->add_option("--dir", report_dir, "Experiment output directory")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sample->parsed())
      return cmd_sample(preset, n, seed, out_path, format);
    if (roots->parsed())
      return cmd_roots(coeffs_path, tol, max_iters, out_path, format);
    if (basis->parsed())
      return cmd_basis_check(basis_value, domain_value, k_max, out_path, format);
    if (bound->parsed())
      return cmd_bound(preset, n, t_order, r_param, mc_trials, seed, out_path,
                       format);
    if (run->parsed()) {
      ExperimentConfig cfg = config_path.empty() ? preset_config(preset)
                                                 : load_config(config_path);
      if (!degrees_csv.empty()) {
        cfg.degrees.clear();
        std::stringstream ss(degrees_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) cfg.degrees.push_back(std::stoi(tok));
      }
      if (trials_override > 0) cfg.trials_per_degree = trials_override;
      if (workers > 0) cfg.workers = workers;
      if (sectors_override > 0) cfg.num_sectors = sectors_override;
      if (seed_given) cfg.master_seed = seed;
      if (!out_path.empty()) cfg.output_path = out_path;
      return cmd_experiment_run(cfg, format);
    }
    if (fitcmd->parsed())
      return cmd_experiment_fit(trials_path, out_path, format);
    if (report->parsed()) return cmd_report(report_dir);
  } catch (const NonConvergedRootsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrthogonalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NegativeBracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
