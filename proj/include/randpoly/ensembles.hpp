#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpoly/rng.hpp"

namespace randpoly {

using Complex = std::complex<double>;

struct DegeneratePolynomialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateLeadingCoefficientError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class DistKind {
  ComplexGaussian,
  RealGaussian,
  Rademacher,
  UniformDisk,
  UniformInterval,
  Cauchy,
  LogCauchy,
  SharedValue,
};

/// Tail/anti-concentration properties of a coefficient distribution.
/// Flags are declared per distribution when the spec is constructed; nothing
/// is inferred at runtime.
struct AssumptionEnvelope {
  bool satisfies_a1 = false;       // upper tail log-integrable
  bool satisfies_a2 = false;       // no concentration at 0
  bool satisfies_a1star = false;   // triangular-array upper tail
  bool satisfies_a2star = false;   // triangular-array lower tail
  bool satisfies_anticonc = false; // fractional log-minus moments bounded in z
  std::optional<double> finite_t_moment;  // largest declared t with E|A|^t < inf, t in (0,1]
  int threshold_n = 1;
};

struct DistributionSpec {
  DistKind kind = DistKind::ComplexGaussian;
  Complex mean{0.0, 0.0};
  double sigma = 1.0;    // gaussian kinds
  double radius = 1.0;   // uniform-disk
  double lo = -1.0;      // uniform-interval
  double hi = 1.0;
  double scale = 1.0;    // cauchy
  std::shared_ptr<DistributionSpec> xi;  // shared-value inner spec
  std::string label;

  AssumptionEnvelope envelope() const;
};

DistributionSpec standard_complex_gaussian();
DistributionSpec real_gaussian(double mean, double sigma);
DistributionSpec rademacher();
DistributionSpec uniform_disk(double radius);
DistributionSpec uniform_interval(double lo, double hi);
DistributionSpec cauchy(double scale);
DistributionSpec log_cauchy();
DistributionSpec shared_value(DistributionSpec xi_spec);

/// One draw from the distribution using the given stream.
Complex sample_one(const DistributionSpec& spec, Rng& rng);

enum class EnsembleMode {
  IidSequence,
  PerIndexSequence,
  TriangularArray,
  SharedIdentical,
  VarianceDecay,
};

struct CoefficientEnsemble {
  EnsembleMode mode = EnsembleMode::IidSequence;
  DistributionSpec base;
  // PerIndexSequence / TriangularArray: spec for index k is per_index[min(k, size-1)].
  std::vector<DistributionSpec> per_index;
  double alpha = 0.0;  // VarianceDecay: sigma_k = exp(-k^alpha / 2)
  AssumptionEnvelope envelope;
  std::string label;
};

CoefficientEnsemble iid_ensemble(DistributionSpec spec);
CoefficientEnsemble shared_identical_ensemble(DistributionSpec xi_spec);
CoefficientEnsemble variance_decay_ensemble(double alpha);

/// Draw the coefficient vector A_0..A_n. Deterministic in (ensemble, n, seed)
/// regardless of thread schedule: coefficient k uses the stream mix(seed, k).
Eigen::VectorXcd sample_coefficients(const CoefficientEnsemble& ensemble, int n,
                                     std::uint64_t seed);

enum class MomentKind {
  AbsPower,             // E |A|^t
  LogAbs,               // E log|A|
  LogPlus,              // E log^+ |A|
  LogMinus,             // E log^- |A|
  ShiftedLogMinusPower, // E (log^- |A - z|)^t
};

struct MomentQuery {
  MomentKind kind = MomentKind::AbsPower;
  double t = 1.0;
  Complex shift{0.0, 0.0};
};

struct MomentEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  long trials = 0;
};

MomentEstimate empirical_moment(const DistributionSpec& spec,
                                const MomentQuery& query, long trials,
                                std::uint64_t seed);

struct NthRootStatistics {
  double last = 0.0;   // |A_n|^{1/n}
  double first = 0.0;  // |A_0|^{1/n}
  double max = 0.0;    // (max_k |A_k|)^{1/n}
};

NthRootStatistics nth_root_statistics(const Eigen::VectorXcd& coeffs);

}  // namespace randpoly
