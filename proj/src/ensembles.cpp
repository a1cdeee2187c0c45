#include "randpoly/ensembles.hpp"

#include <cmath>
#include <numbers>

namespace randpoly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

AssumptionEnvelope gaussian_envelope() {
  AssumptionEnvelope e;
  e.satisfies_a1 = true;
  e.satisfies_a2 = true;
  e.satisfies_a1star = true;
  e.satisfies_a2star = true;
  e.satisfies_anticonc = true;
  e.finite_t_moment = 1.0;
  return e;
}

}  // namespace

AssumptionEnvelope DistributionSpec::envelope() const {
  switch (kind) {
    case DistKind::ComplexGaussian:
    case DistKind::RealGaussian:
      return gaussian_envelope();
    case DistKind::Rademacher: {
      AssumptionEnvelope e;
      e.satisfies_a1 = e.satisfies_a2 = true;
      e.satisfies_a1star = e.satisfies_a2star = true;
      e.satisfies_anticonc = false;  // point masses
      e.finite_t_moment = 1.0;
      return e;
    }
    case DistKind::UniformDisk:
    case DistKind::UniformInterval: {
      AssumptionEnvelope e;
      e.satisfies_a1 = e.satisfies_a2 = true;
      e.satisfies_a1star = e.satisfies_a2star = true;
      e.satisfies_anticonc = true;
      e.finite_t_moment = 1.0;
      return e;
    }
    case DistKind::Cauchy: {
      // Tail ~ 1/x: log-integrable, but E|A|^t diverges for t >= 1.
      AssumptionEnvelope e;
      e.satisfies_a1 = e.satisfies_a2 = true;
      e.satisfies_a1star = false;  // f(x) log x / x is not integrable
      e.satisfies_a2star = true;
      e.satisfies_anticonc = true;
      e.finite_t_moment = 0.5;
      return e;
    }
    case DistKind::LogCauchy: {
      // E[log^+ |A|] = infinity: violates the upper-tail assumption.
      AssumptionEnvelope e;
      e.satisfies_a1 = false;
      e.satisfies_a2 = false;
      e.satisfies_a1star = false;
      e.satisfies_a2star = false;
      e.satisfies_anticonc = false;
      e.finite_t_moment = std::nullopt;
      return e;
    }
    case DistKind::SharedValue:
      return xi ? xi->envelope() : AssumptionEnvelope{};
  }
  return {};
}

DistributionSpec standard_complex_gaussian() {
  DistributionSpec s;
  s.kind = DistKind::ComplexGaussian;
  s.mean = {0.0, 0.0};
  s.sigma = 1.0;
  s.label = "complex-gaussian(0,1)";
  return s;
}

DistributionSpec real_gaussian(double mean, double sigma) {
  DistributionSpec s;
  s.kind = DistKind::RealGaussian;
  s.mean = {mean, 0.0};
  s.sigma = sigma;
  s.label = "real-gaussian";
  return s;
}

DistributionSpec rademacher() {
  DistributionSpec s;
  s.kind = DistKind::Rademacher;
  s.label = "rademacher";
  return s;
}

DistributionSpec uniform_disk(double radius) {
  DistributionSpec s;
  s.kind = DistKind::UniformDisk;
  s.radius = radius;
  s.label = "uniform-disk";
  return s;
}

DistributionSpec uniform_interval(double lo, double hi) {
  DistributionSpec s;
  s.kind = DistKind::UniformInterval;
  s.lo = lo;
  s.hi = hi;
  s.label = "uniform-interval";
  return s;
}

DistributionSpec cauchy(double scale) {
  DistributionSpec s;
  s.kind = DistKind::Cauchy;
  s.scale = scale;
  s.label = "cauchy";
  return s;
}

DistributionSpec log_cauchy() {
  DistributionSpec s;
  s.kind = DistKind::LogCauchy;
  s.label = "log-cauchy";
  return s;
}

DistributionSpec shared_value(DistributionSpec xi_spec) {
  DistributionSpec s;
  s.kind = DistKind::SharedValue;
  s.xi = std::make_shared<DistributionSpec>(std::move(xi_spec));
  s.label = "shared-value(" + s.xi->label + ")";
  return s;
}

Complex sample_one(const DistributionSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case DistKind::ComplexGaussian: {
      // Density exp(-|z|^2/sigma^2)/(pi sigma^2): |z - mean|^2 ~ sigma^2 Exp(1).
      double u1 = rng.next_unit();
      double u2 = rng.next_unit();
      double r = spec.sigma * std::sqrt(-std::log(u1));
      return spec.mean + Complex(r * std::cos(kTwoPi * u2),
                                 r * std::sin(kTwoPi * u2));
    }
    case DistKind::RealGaussian: {
      double u1 = rng.next_unit();
      double u2 = rng.next_unit();
      double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
      return spec.mean + Complex(spec.sigma * g, 0.0);
    }
    case DistKind::Rademacher:
      return (rng.next_u64() & 1u) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
    case DistKind::UniformDisk: {
      double u1 = rng.next_unit();
      double u2 = rng.next_unit();
      double r = spec.radius * std::sqrt(u1);
      return Complex(r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2));
    }
    case DistKind::UniformInterval: {
      double u = rng.next_unit();
      return Complex(spec.lo + (spec.hi - spec.lo) * u, 0.0);
    }
    case DistKind::Cauchy: {
      double u = rng.next_unit();
      return Complex(spec.scale * std::tan(std::numbers::pi * (u - 0.5)), 0.0);
    }
    case DistKind::LogCauchy: {
      double u = rng.next_unit();
      return Complex(std::exp(std::tan(std::numbers::pi * (u - 0.5))), 0.0);
    }
    case DistKind::SharedValue:
      return sample_one(*spec.xi, rng);
  }
  return {};
}

CoefficientEnsemble iid_ensemble(DistributionSpec spec) {
  CoefficientEnsemble e;
  e.mode = EnsembleMode::IidSequence;
  e.envelope = spec.envelope();
  e.label = "iid(" + spec.label + ")";
  e.base = std::move(spec);
  return e;
}

CoefficientEnsemble shared_identical_ensemble(DistributionSpec xi_spec) {
  CoefficientEnsemble e;
  e.mode = EnsembleMode::SharedIdentical;
  e.envelope = xi_spec.envelope();
  e.label = "shared-identical(" + xi_spec.label + ")";
  e.base = std::move(xi_spec);
  return e;
}

CoefficientEnsemble variance_decay_ensemble(double alpha) {
  CoefficientEnsemble e;
  e.mode = EnsembleMode::VarianceDecay;
  e.alpha = alpha;
  // Uniform lower/upper tail bounds fail: sigma_k -> 0 super-exponentially.
  e.envelope.satisfies_a1 = true;
  e.envelope.satisfies_a2 = false;
  e.envelope.finite_t_moment = 1.0;
  e.label = "variance-decay";
  return e;
}

Eigen::VectorXcd sample_coefficients(const CoefficientEnsemble& ensemble, int n,
                                     std::uint64_t seed) {
  if (n < 1) {
    throw DegeneratePolynomialError(
        "sample_coefficients: degree must be at least 1");
  }
  Eigen::VectorXcd coeffs(n + 1);
  switch (ensemble.mode) {
    case EnsembleMode::SharedIdentical: {
      Rng rng(mix(seed, 0));
      Complex xi = sample_one(ensemble.base, rng);
      coeffs.setConstant(xi);
      break;
    }
    case EnsembleMode::VarianceDecay: {
      for (int k = 0; k <= n; ++k) {
        Rng rng(mix(seed, static_cast<std::uint64_t>(k)));
        double sigma_k = std::exp(-std::pow(static_cast<double>(k),
                                            ensemble.alpha) / 2.0);
        DistributionSpec g = real_gaussian(0.0, sigma_k);
        coeffs[k] = sample_one(g, rng);
      }
      break;
    }
    case EnsembleMode::IidSequence:
    case EnsembleMode::PerIndexSequence:
    case EnsembleMode::TriangularArray: {
      for (int k = 0; k <= n; ++k) {
        Rng rng(mix(seed, static_cast<std::uint64_t>(k)));
        const DistributionSpec* spec = &ensemble.base;
        if (!ensemble.per_index.empty() &&
            ensemble.mode != EnsembleMode::IidSequence) {
          std::size_t idx = std::min<std::size_t>(
              static_cast<std::size_t>(k), ensemble.per_index.size() - 1);
          spec = &ensemble.per_index[idx];
        }
        coeffs[k] = sample_one(*spec, rng);
      }
      break;
    }
  }
  return coeffs;
}

MomentEstimate empirical_moment(const DistributionSpec& spec,
                                const MomentQuery& query, long trials,
                                std::uint64_t seed) {
  double sum = 0.0;
  double sumsq = 0.0;
  for (long i = 0; i < trials; ++i) {
    Rng rng(mix(seed, static_cast<std::uint64_t>(i)));
    Complex a = sample_one(spec, rng);
    double v = 0.0;
    switch (query.kind) {
      case MomentKind::AbsPower:
        v = std::pow(std::abs(a), query.t);
        break;
      case MomentKind::LogAbs:
        v = std::log(std::abs(a));
        break;
      case MomentKind::LogPlus:
        v = std::max(0.0, std::log(std::abs(a)));
        break;
      case MomentKind::LogMinus:
        v = std::max(0.0, -std::log(std::abs(a)));
        break;
      case MomentKind::ShiftedLogMinusPower: {
        double lm = std::max(0.0, -std::log(std::abs(a - query.shift)));
        v = std::pow(lm, query.t);
        break;
      }
    }
    sum += v;
    sumsq += v * v;
  }
  MomentEstimate out;
  out.trials = trials;
  out.estimate = sum / static_cast<double>(trials);
  if (trials > 1) {
    double var = (sumsq - sum * sum / static_cast<double>(trials)) /
                 static_cast<double>(trials - 1);
    out.standard_error = std::sqrt(std::max(0.0, var) /
                                   static_cast<double>(trials));
  }
  return out;
}

NthRootStatistics nth_root_statistics(const Eigen::VectorXcd& coeffs) {
  const Eigen::Index n = coeffs.size() - 1;
  if (n < 1) {
    throw DegeneratePolynomialError("nth_root_statistics: degree must be >= 1");
  }
  if (coeffs[n] == Complex(0.0, 0.0)) {
    throw DegenerateLeadingCoefficientError(
        "nth_root_statistics: leading coefficient is zero");
  }
  double inv_n = 1.0 / static_cast<double>(n);
  NthRootStatistics s;
  s.last = std::pow(std::abs(coeffs[n]), inv_n);
  s.first = std::pow(std::abs(coeffs[0]), inv_n);
  s.max = std::pow(coeffs.cwiseAbs().maxCoeff(), inv_n);
  return s;
}

}  // namespace randpoly
