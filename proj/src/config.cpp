#include "randpoly/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace randpoly {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "name(arg1,arg2)" -> name + args; bare "name" gives empty args.
struct Call {
  std::string name;
  std::vector<double> args;
};

Call parse_call(const std::string& value, int line) {
  Call c;
  auto open = value.find('(');
  if (open == std::string::npos) {
    c.name = trim(value);
    return c;
  }
  auto close = value.rfind(')');
  if (close == std::string::npos || close < open)
    throw ConfigError("unbalanced parentheses in '" + value + "'", line);
  c.name = trim(value.substr(0, open));
  std::string inner = value.substr(open + 1, close - open - 1);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    try {
      c.args.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("expected a number, got '" + tok + "'", line);
    }
  }
  return c;
}

double want_arg(const Call& c, std::size_t i, double fallback) {
  return i < c.args.size() ? c.args[i] : fallback;
}

}  // namespace

DomainModel parse_domain_value(const std::string& value) {
  Call c = parse_call(value, 0);
  if (c.name == "circle" || c.name == "unit-circle") return unit_circle();
  if (c.name == "disk" || c.name == "unit-disk") return closed_unit_disk();
  if (c.name == "interval")
    return interval(want_arg(c, 0, -1.0), want_arg(c, 1, 1.0));
  if (c.name == "ellipse") return ellipse(want_arg(c, 0, 2.0));
  throw ConfigError("unknown domain '" + value + "'", 0);
}

BasisSpec parse_basis_value(const std::string& value, int max_degree) {
  Call c = parse_call(value, 0);
  if (c.name == "monomial") return monomial_basis(max_degree);
  if (c.name == "szego-circle") return szego_circle_basis(max_degree);
  if (c.name == "bergman-disk") return bergman_disk_basis(max_degree);
  if (c.name == "chebyshev" || c.name == "chebyshev-orthonormal")
    return chebyshev_orthonormal_basis(want_arg(c, 0, -1.0), want_arg(c, 1, 1.0),
                                       max_degree);
  if (c.name == "faber-interval")
    return faber_interval_basis(want_arg(c, 0, -1.0), want_arg(c, 1, 1.0),
                                max_degree);
  if (c.name == "faber-disk") return faber_disk_basis(max_degree);
  if (c.name == "faber-ellipse")
    return faber_ellipse_basis(want_arg(c, 0, 2.0), max_degree);
  if (c.name == "gram-schmidt-circle")
    return gram_schmidt_basis(circle_uniform_measure(4 * max_degree + 64),
                              max_degree);
  if (c.name == "gram-schmidt-arcsine")
    return gram_schmidt_basis(interval_arcsine_measure(4 * max_degree + 64),
                              max_degree);
  if (c.name == "gram-schmidt-disk")
    return gram_schmidt_basis(
        unit_disk_area_measure(2 * max_degree + 16, 4 * max_degree + 64),
        max_degree);
  throw ConfigError("unknown basis '" + value + "'", 0);
}

Sector parse_sector_value(const std::string& value) {
  Call c = parse_call(value, 0);
  if (c.name == "annular" || c.name == "annular-sector")
    return annular_sector(want_arg(c, 0, 0.5), want_arg(c, 1, 0.0),
                          want_arg(c, 2, 0.0));
  if (c.name == "two-sided" || c.name == "two-sided-annular-sector")
    return two_sided_annular_sector(want_arg(c, 0, 2.0), want_arg(c, 1, 0.0),
                                    want_arg(c, 2, 0.0));
  if (c.name == "strip" || c.name == "vertical-strip")
    return vertical_strip(want_arg(c, 0, 0.0), want_arg(c, 1, 0.0));
  if (c.name == "parameter" || c.name == "parameter-sector")
    return parameter_sector(want_arg(c, 0, 2.0), want_arg(c, 1, 0.0),
                            want_arg(c, 2, 0.0));
  throw ConfigError("unknown sector '" + value + "'", 0);
}

std::vector<Sector> ExperimentConfig::sectors() const {
  if (!sector_list.empty()) return sector_list;
  double rr = r;
  // Disk/ellipse partitions use the r > 1 convention; pull the configured r
  // to the right side of 1.
  if (domain.kind == DomainKind::ClosedUnitDisk ||
      domain.kind == DomainKind::Ellipse) {
    rr = r > 1.0 ? r : 1.0 / r;
  } else if (domain.kind == DomainKind::UnitCircle) {
    rr = r < 1.0 ? r : 1.0 / r;
  }
  return equal_measure_partition(domain, num_sectors, rr);
}

void ExperimentConfig::validate() const {
  if (degrees.empty())
    throw std::invalid_argument("experiment config: no degrees given");
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
    if (degrees[i] >= degrees[i + 1])
      throw std::invalid_argument(
          "experiment config: degrees must be strictly increasing");
  if (degrees.front() < 1)
    throw std::invalid_argument("experiment config: degrees must be >= 1");
  if (trials_per_degree < 1)
    throw std::invalid_argument("experiment config: trials must be >= 1");
  if (sector_list.empty() && num_sectors < 1)
    throw std::invalid_argument("experiment config: sector family is empty");
  if (!(t > 0.0 && t <= 1.0))
    throw std::invalid_argument("experiment config: t must lie in (0,1]");
  if (workers < 1)
    throw std::invalid_argument("experiment config: workers must be >= 1");
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig c;
  c.degrees = {64, 128, 256, 512};
  c.trials_per_degree = 200;
  c.label = name;
  c.domain = unit_circle();
  c.basis = monomial_basis(0);  // sized per degree at run time
  if (name == "gaussian-kac") {
    c.ensemble = iid_ensemble(standard_complex_gaussian());
  } else if (name == "rademacher-kac") {
    c.ensemble = iid_ensemble(rademacher());
  } else if (name == "cauchy-kac") {
    c.ensemble = iid_ensemble(cauchy(1.0));
    c.t = 0.5;
  } else if (name == "shared-xi") {
    c.ensemble = shared_identical_ensemble(standard_complex_gaussian());
  } else if (name == "variance-decay") {
    c.ensemble = variance_decay_ensemble(3.0);
  } else if (name == "chebyshev-rademacher") {
    c.ensemble = iid_ensemble(rademacher());
    c.domain = interval(-1.0, 1.0);
    c.basis = chebyshev_orthonormal_basis(-1.0, 1.0, 0);
  } else if (name == "bergman-gaussian") {
    c.ensemble = iid_ensemble(standard_complex_gaussian());
    c.domain = closed_unit_disk();
    c.basis = bergman_disk_basis(0);
    c.r = 2.0;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return c;
}

std::vector<std::string> preset_names() {
  return {"gaussian-kac",  "rademacher-kac",       "cauchy-kac",
          "shared-xi",     "variance-decay",       "chebyshev-rademacher",
          "bergman-gaussian"};
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig c;
  c.ensemble = iid_ensemble(standard_complex_gaussian());
  c.domain = unit_circle();
  c.basis = monomial_basis(0);
  c.degrees = {64};

  std::string section;
  std::string basis_value = "monomial";
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool degrees_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("malformed section header", line);
      section = trim(s.substr(1, s.size() - 2));
      if (section != "ensemble" && section != "basis" && section != "domain" &&
          section != "run")
        throw ConfigError("unknown section [" + section + "]", line);
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", line);
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("empty key or value", line);

    try {
      if (section == "ensemble") {
        if (key == "preset") {
          ExperimentConfig p = preset_config(value);
          c.ensemble = p.ensemble;
          c.domain = p.domain;
          c.basis = p.basis;
          c.t = p.t;
          c.r = p.r;
          c.label = value;
        } else if (key == "dist") {
          Call call = parse_call(value, line);
          if (call.name == "complex-gaussian")
            c.ensemble = iid_ensemble(standard_complex_gaussian());
          else if (call.name == "real-gaussian")
            c.ensemble = iid_ensemble(
                real_gaussian(want_arg(call, 0, 0.0), want_arg(call, 1, 1.0)));
          else if (call.name == "rademacher")
            c.ensemble = iid_ensemble(rademacher());
          else if (call.name == "cauchy")
            c.ensemble = iid_ensemble(cauchy(want_arg(call, 0, 1.0)));
          else if (call.name == "log-cauchy")
            c.ensemble = iid_ensemble(log_cauchy());
          else if (call.name == "uniform-disk")
            c.ensemble = iid_ensemble(uniform_disk(want_arg(call, 0, 1.0)));
          else if (call.name == "uniform-interval")
            c.ensemble = iid_ensemble(uniform_interval(want_arg(call, 0, -1.0),
                                                       want_arg(call, 1, 1.0)));
          else
            throw ConfigError("unknown dist '" + value + "'", line);
        } else if (key == "mode") {
          Call call = parse_call(value, line);
          if (call.name == "iid") {
            // keep current base distribution
          } else if (call.name == "shared-identical") {
            c.ensemble = shared_identical_ensemble(c.ensemble.base);
          } else if (call.name == "variance-decay") {
            c.ensemble = variance_decay_ensemble(want_arg(call, 0, 3.0));
          } else {
            throw ConfigError("unknown mode '" + value + "'", line);
          }
        } else {
          throw ConfigError("unknown ensemble key '" + key + "'", line);
        }
      } else if (section == "basis") {
        if (key != "kind") throw ConfigError("unknown basis key '" + key + "'", line);
        basis_value = value;
        c.basis = parse_basis_value(value, 0);
      } else if (section == "domain") {
        if (key != "domain" && key != "kind")
          throw ConfigError("unknown domain key '" + key + "'", line);
        c.domain = parse_domain_value(value);
      } else if (section == "run") {
        if (key == "degrees") {
          c.degrees.clear();
          std::stringstream ss(value);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            if (!tok.empty()) c.degrees.push_back(std::stoi(tok));
          }
          degrees_seen = true;
        } else if (key == "trials") {
          c.trials_per_degree = std::stoi(value);
        } else if (key == "sectors") {
          c.num_sectors = std::stoi(value);
        } else if (key == "sector") {
          Sector s = parse_sector_value(value);
          s.id = static_cast<int>(c.sector_list.size());
          c.sector_list.push_back(s);
        } else if (key == "t") {
          c.t = std::stod(value);
        } else if (key == "r") {
          c.r = std::stod(value);
        } else if (key == "seed") {
          c.master_seed = std::stoull(value);
        } else if (key == "out") {
          c.output_path = value;
        } else if (key == "workers") {
          c.workers = std::stoi(value);
        } else if (key == "label") {
          c.label = value;
        } else {
          throw ConfigError("unknown run key '" + key + "'", line);
        }
      } else {
        throw ConfigError("key outside any section", line);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("bad value for '") + key + "': " + e.what(),
                        line);
    }
  }
  (void)degrees_seen;
  // Re-parse the basis once the degree grid is known so degree-dependent
  // resources (gram-schmidt quadrature measures) are sized for the largest
  // degree actually run.
  if (!c.degrees.empty() && c.basis.kind == BasisKind::GramSchmidt)
    c.basis = parse_basis_value(
        basis_value, *std::max_element(c.degrees.begin(), c.degrees.end()));
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::vector<std::pair<std::string, std::string>> describe_config(
    const ExperimentConfig& config) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("label", config.label);
  kv.emplace_back("ensemble", config.ensemble.label);
  kv.emplace_back("basis", config.basis.name());
  kv.emplace_back("domain", config.domain.name());
  std::string degs;
  for (std::size_t i = 0; i < config.degrees.size(); ++i) {
    if (i) degs += ",";
    degs += std::to_string(config.degrees[i]);
  }
  kv.emplace_back("degrees", degs);
  kv.emplace_back("trials", std::to_string(config.trials_per_degree));
  kv.emplace_back("sectors", std::to_string(static_cast<int>(config.sectors().size())));
  std::ostringstream tt, rr;
  tt << config.t;
  rr << config.r;
  kv.emplace_back("t", tt.str());
  kv.emplace_back("r", rr.str());
  kv.emplace_back("seed", std::to_string(config.master_seed));
  return kv;
}

}  // namespace randpoly
