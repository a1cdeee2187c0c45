#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpoly/polyroots.hpp"
#include "randpoly/potential.hpp"

namespace randpoly {

struct NegativeBracketError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonConvergedRootsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// tau_n: unit mass split evenly over the computed zeros.
struct ZeroCountingMeasure {
  Eigen::VectorXcd atoms;
  double mass_per_atom() const {
    return atoms.size() > 0 ? 1.0 / static_cast<double>(atoms.size()) : 0.0;
  }
};

ZeroCountingMeasure counting_measure(const RootSet& roots,
                                     bool allow_non_converged = false);

/// tau_n(sector) under the half-open membership convention.
double measure_of_sector(const ZeroCountingMeasure& tau,
                         const DomainModel& domain, const Sector& sector);

struct DiscrepancyRow {
  int sector_id = 0;
  double tau = 0.0;
  double mu = 0.0;
  double diff = 0.0;  // |tau - mu|
};

struct DiscrepancyReport {
  std::vector<DiscrepancyRow> rows;
  double sup_discrepancy = 0.0;
};

DiscrepancyReport sector_discrepancy(const ZeroCountingMeasure& tau,
                                     const DomainModel& domain,
                                     const std::vector<Sector>& sectors);

/// Catalan's constant to 1e-14 by accelerated alternating-series summation.
double catalan_constant();

/// sqrt(2 pi / catalan) + 2 / (1 - r), the circle discrepancy constant.
double circle_constant(double r);

/// Everything the bound right-hand sides consume. Logarithmic moments are
/// required finite where used; t must lie in (0,1].
struct BoundInputs {
  int n = 0;
  double t = 1.0;
  double sum_t_moments = 0.0;     // sum_k E|A_k|^t
  double log_moment_first = 0.0;  // E log|A_0|
  double log_moment_last = 0.0;   // E log|A_n|
  double log_moment_at_w = 0.0;   // E log|A_n P_n(w)| (disk case)
  double basis_max_norm = 1.0;    // max_k ||B_k||_E
  double leading = 1.0;           // |b_{n,n}| cap(E)^n
  double r = 0.5;
};

/// Kac / unit-circle expected-discrepancy bound.
double kac_bound(const BoundInputs& inputs);

struct GeneralBound {
  double value = 0.0;
  bool constant_known = false;  // false: reported up to an absolute constant
};

/// Arc/interval bound; C = 8 when the set is a real interval, otherwise the
/// bracket is returned with C treated as 1 and flagged.
GeneralBound arc_bound(const BoundInputs& inputs, bool real_interval = true);

/// Domain-with-interior bound; the constant is never known numerically.
GeneralBound disk_bound(const BoundInputs& inputs);

struct EstimateWithError {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Log-sum/moment-sum inequality check at tolerance 3 combined standard
/// errors.
bool lemma44_check(const std::vector<EstimateWithError>& t_moments, double t,
                   const EstimateWithError& sample_log_sum);

}  // namespace randpoly
