#include <doctest.h>

#include <cmath>
#include <numbers>

#include "randpoly/ensembles.hpp"

using namespace randpoly;

namespace {
constexpr double kGamma = std::numbers::egamma;
}

TEST_CASE("shared-identical constant xi gives an all-ones vector") {
  // xi drawn from the point mass uniform-interval(1,1).
  CoefficientEnsemble ens = shared_identical_ensemble(uniform_interval(1.0, 1.0));
  Eigen::VectorXcd a = sample_coefficients(ens, 5, 12345);
  REQUIRE(a.size() == 6);
  for (int k = 0; k <= 5; ++k) CHECK(a[k] == Complex(1.0, 0.0));
}

TEST_CASE("rademacher samples lie in {-1,+1} exactly") {
  CoefficientEnsemble ens = iid_ensemble(rademacher());
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    Eigen::VectorXcd a = sample_coefficients(ens, 3, seed);
    for (int k = 0; k <= 3; ++k) {
      CHECK(a[k].imag() == 0.0);
      CHECK(std::abs(a[k].real()) == 1.0);
    }
  }
}

TEST_CASE("sampling is deterministic in (ensemble, n, seed)") {
  CoefficientEnsemble ens = iid_ensemble(standard_complex_gaussian());
  Eigen::VectorXcd a = sample_coefficients(ens, 40, 7);
  Eigen::VectorXcd b = sample_coefficients(ens, 40, 7);
  Eigen::VectorXcd c = sample_coefficients(ens, 40, 8);
  CHECK(a == b);
  CHECK(a != c);
  // Coefficient streams are per-index: a shorter draw is a prefix.
  Eigen::VectorXcd head = sample_coefficients(ens, 10, 7);
  CHECK(head == a.head(11));
}

TEST_CASE("degenerate degree is rejected") {
  CoefficientEnsemble ens = iid_ensemble(rademacher());
  CHECK_THROWS_AS((void)sample_coefficients(ens, 0, 1),
                  DegeneratePolynomialError);
}

TEST_CASE("variance-decay coefficients collapse: |A_4|/|A_0| < 1e-12") {
  // sigma_4 = e^{-32} ~ 1.3e-14, so the ratio is tiny except on the rare
  // event that |A_0| itself is minuscule.
  CoefficientEnsemble ens = variance_decay_ensemble(3.0);
  int tiny = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Eigen::VectorXcd a = sample_coefficients(ens, 10, seed);
    if (std::abs(a[4]) / std::abs(a[0]) < 1e-12) ++tiny;
  }
  CHECK(tiny >= 95);
}

TEST_CASE("empirical log-abs moment of the standard complex gaussian") {
  // Oracle: |A|^2 ~ Exp(1), so E log|A| = -gamma/2.
  DistributionSpec g = standard_complex_gaussian();
  MomentEstimate m =
      empirical_moment(g, {MomentKind::LogAbs, 1.0, {}}, 1000000, 11);
  CHECK(std::abs(m.estimate - (-kGamma / 2.0)) < 4.0 * m.standard_error);
  CHECK(m.standard_error < 1e-2);
}

TEST_CASE("empirical first absolute moment of the standard complex gaussian") {
  // Oracle: |A| is Rayleigh with mean sqrt(pi)/2.
  DistributionSpec g = standard_complex_gaussian();
  MomentEstimate m =
      empirical_moment(g, {MomentKind::AbsPower, 1.0, {}}, 1000000, 13);
  CHECK(std::abs(m.estimate - std::sqrt(std::numbers::pi) / 2.0) <
        4.0 * m.standard_error);
}

TEST_CASE("empirical half-moment of the standard cauchy") {
  // Oracle: E|C|^t = 1/cos(pi t/2) for |t| < 1, so t = 1/2 gives sqrt(2).
  MomentEstimate m = empirical_moment(
      cauchy(1.0), {MomentKind::AbsPower, 0.5, {}}, 1000000, 17);
  CHECK(std::abs(m.estimate - std::sqrt(2.0)) < 4.0 * m.standard_error);
}

TEST_CASE("rademacher log-abs moment is exactly zero") {
  MomentEstimate m =
      empirical_moment(rademacher(), {MomentKind::LogAbs, 1.0, {}}, 1000, 3);
  CHECK(m.estimate == 0.0);
  CHECK(m.standard_error == 0.0);
}

TEST_CASE("standard error shrinks like trials^{-1/2}") {
  DistributionSpec g = standard_complex_gaussian();
  MomentEstimate small =
      empirical_moment(g, {MomentKind::AbsPower, 1.0, {}}, 10000, 5);
  MomentEstimate big =
      empirical_moment(g, {MomentKind::AbsPower, 1.0, {}}, 160000, 5);
  double ratio = big.standard_error / small.standard_error;  // ideal 1/4
  CHECK(ratio > 0.15);
  CHECK(ratio < 0.40);
}

TEST_CASE("nth-root statistics on unit-modulus coefficients") {
  Eigen::VectorXcd a(4);
  a << 1.0, 1.0, 1.0, 1.0;
  NthRootStatistics s = nth_root_statistics(a);
  CHECK(s.first == 1.0);
  CHECK(s.last == 1.0);
  CHECK(s.max == 1.0);
}

TEST_CASE("nth-root statistics: direct arithmetic case") {
  Eigen::VectorXcd a(4);
  a << 0.5, 0.0, 0.0, 2.0;
  NthRootStatistics s = nth_root_statistics(a);
  CHECK(s.last == doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-14));
  CHECK(s.max == doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-14));
  CHECK(s.first == doctest::Approx(std::pow(0.5, 1.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("nth-root statistics reject a vanishing leading coefficient") {
  Eigen::VectorXcd a(3);
  a << 1.0, 1.0, 0.0;
  CHECK_THROWS_AS((void)nth_root_statistics(a),
                  DegenerateLeadingCoefficientError);
}

TEST_CASE("assumption envelopes are declared, not inferred") {
  CHECK(standard_complex_gaussian().envelope().satisfies_a1);
  CHECK(standard_complex_gaussian().envelope().satisfies_a2);
  CHECK(standard_complex_gaussian().envelope().finite_t_moment == 1.0);

  AssumptionEnvelope c = cauchy(1.0).envelope();
  CHECK(c.satisfies_a1);
  CHECK(c.finite_t_moment == 0.5);
  CHECK_FALSE(c.satisfies_a1star);

  AssumptionEnvelope lc = log_cauchy().envelope();
  CHECK_FALSE(lc.satisfies_a1);
  CHECK_FALSE(lc.satisfies_a2);
  CHECK_FALSE(lc.satisfies_anticonc);
}

TEST_CASE("gaussian max-coefficient nth root concentrates near 1 at n=1000") {
  CoefficientEnsemble ens = iid_ensemble(standard_complex_gaussian());
  int in_band = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Eigen::VectorXcd a = sample_coefficients(ens, 1000, seed);
    double m = nth_root_statistics(a).max;
    if (m >= 0.95 && m <= 1.05) ++in_band;
  }
  CHECK(in_band >= 99);
}

TEST_CASE("log-cauchy negative control escapes the band at n=1000") {
  CoefficientEnsemble ens = iid_ensemble(log_cauchy());
  int escaped = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Eigen::VectorXcd a = sample_coefficients(ens, 1000, seed);
    if (nth_root_statistics(a).max > 1.5) ++escaped;
  }
  CHECK(escaped >= 10);
}
