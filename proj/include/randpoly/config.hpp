#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpoly/bases.hpp"
#include "randpoly/ensembles.hpp"
#include "randpoly/potential.hpp"

namespace randpoly {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  int line_number;
};

struct ExperimentConfig {
  CoefficientEnsemble ensemble;
  BasisSpec basis;
  DomainModel domain;
  std::vector<int> degrees;
  int trials_per_degree = 1;
  int num_sectors = 8;              // generated equal-measure partition
  std::vector<Sector> sector_list;  // explicit sectors override the partition
  double t = 1.0;
  double r = 0.5;
  std::uint64_t master_seed = 1;
  std::string output_path;
  int workers = 1;
  std::string label = "experiment";

  std::vector<Sector> sectors() const;
  void validate() const;
};

/// Bundled golden ensembles: gaussian-kac, rademacher-kac, cauchy-kac,
/// shared-xi, variance-decay, chebyshev-rademacher, bergman-gaussian.
ExperimentConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

/// Line-based `key = value` file with [ensemble], [basis], [domain], [run]
/// sections. Malformed input raises ConfigError naming the line.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Flat key-value echo of a config (used in summary.json and `report`).
std::vector<std::pair<std::string, std::string>> describe_config(
    const ExperimentConfig& config);

DomainModel parse_domain_value(const std::string& value);
BasisSpec parse_basis_value(const std::string& value, int max_degree);
Sector parse_sector_value(const std::string& value);

}  // namespace randpoly
