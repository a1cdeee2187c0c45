#include <doctest.h>

#include <cmath>
#include <numbers>

#include "randpoly/discrepancy.hpp"
#include "randpoly/ensembles.hpp"
#include "randpoly/rng.hpp"

using namespace randpoly;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGamma = std::numbers::egamma;
constexpr double kCatalanReference = 0.915965594177219;

RootSet roots_of_ones(int n) {
  return find_roots(ComplexPolynomial(Eigen::VectorXcd::Ones(n + 1)));
}
}  // namespace

TEST_CASE("counting measure basics") {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(5);
  c[0] = -1.0;
  c[4] = 1.0;
  RootSet rs = find_roots(ComplexPolynomial(c));
  ZeroCountingMeasure tau = counting_measure(rs);
  CHECK(tau.atoms.size() == 4);
  CHECK(tau.mass_per_atom() == 0.25);
  // Whole-plane sector captures all atoms: total mass 1.
  CHECK(measure_of_sector(tau, unit_circle(),
                          annular_sector(0.5, 0.0, 2.0 * kPi)) == 1.0);
}

TEST_CASE("identical-coefficient zeros all live on the unit circle") {
  ZeroCountingMeasure tau = counting_measure(roots_of_ones(5));
  CHECK(measure_of_sector(tau, unit_circle(),
                          annular_sector(0.5, 0.0, 2.0 * kPi)) == 1.0);
}

TEST_CASE("non-converged root sets are rejected without the override") {
  RootSet fake;
  fake.roots = Eigen::VectorXcd::Ones(3);
  fake.converged = false;
  CHECK_THROWS_AS((void)counting_measure(fake), NonConvergedRootsError);
  CHECK(counting_measure(fake, true).atoms.size() == 3);
}

TEST_CASE("half-plane sector of the 6th-roots-minus-one example") {
  // Atoms at e^{i pi k/3}, k=1..5.  Sector [0, pi) catches k=1,2 only
  // (e^{i pi} is excluded by the half-open convention), so tau = 2/5.
  ZeroCountingMeasure tau = counting_measure(roots_of_ones(5));
  Sector s = annular_sector(0.5, 0.0, kPi);
  double t = measure_of_sector(tau, unit_circle(), s);
  CHECK(t == doctest::Approx(0.4).epsilon(1e-12));
  DiscrepancyReport rep = sector_discrepancy(tau, unit_circle(), {s});
  CHECK(rep.sup_discrepancy == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("full-circle sector has zero discrepancy") {
  ZeroCountingMeasure tau = counting_measure(roots_of_ones(5));
  DiscrepancyReport rep = sector_discrepancy(
      tau, unit_circle(), {annular_sector(0.5, 0.0, 2.0 * kPi)});
  CHECK(rep.sup_discrepancy == doctest::Approx(0.0));
}

TEST_CASE("rotation equivariance of sector discrepancies") {
  ZeroCountingMeasure tau = counting_measure(roots_of_ones(7));
  double theta = 0.83;
  ZeroCountingMeasure rotated;
  rotated.atoms = tau.atoms * std::polar(1.0, theta);
  for (double alpha : {0.0, 1.0, 2.5}) {
    Sector s = annular_sector(0.5, alpha, alpha + 0.9);
    Sector s_rot = annular_sector(0.5, alpha + theta, alpha + theta + 0.9);
    CHECK(measure_of_sector(tau, unit_circle(), s) ==
          doctest::Approx(measure_of_sector(rotated, unit_circle(), s_rot)));
  }
}

TEST_CASE("catalan constant") {
  CHECK(std::abs(catalan_constant() - kCatalanReference) < 1e-12);
  // Partial-sum oracle: alternating series brackets the limit.
  double partial = 1.0 - 1.0 / 9.0;
  CHECK(partial == doctest::Approx(0.888888888888889));
  CHECK(catalan_constant() > partial);
  CHECK(catalan_constant() < partial + 1.0 / 25.0);
}

TEST_CASE("circle constant C_r at r = 1/2") {
  double c = circle_constant(0.5);
  CHECK(c == doctest::Approx(std::sqrt(2.0 * kPi / catalan_constant()) + 4.0));
  CHECK(std::abs(c - 6.6191) < 1e-3);
  CHECK_THROWS_AS((void)circle_constant(1.0), std::invalid_argument);
}

TEST_CASE("kac bound: gaussian plug-in at n = 512") {
  // Closed-form moments: sum E|A_k| = 513 sqrt(pi)/2, E log|A_0 A_n| = -gamma.
  BoundInputs in;
  in.n = 512;
  in.t = 1.0;
  in.r = 0.5;
  in.sum_t_moments = 513.0 * std::sqrt(kPi) / 2.0;
  in.log_moment_first = -kGamma / 2.0;
  in.log_moment_last = -kGamma / 2.0;
  double bound = kac_bound(in);
  // Oracle: assemble the bracket by hand.
  double bracket = (std::log(513.0 * std::sqrt(kPi) / 2.0) + kGamma / 2.0) / 512.0;
  CHECK(bound == doctest::Approx(circle_constant(0.5) * std::sqrt(bracket))
                     .epsilon(1e-14));
  CHECK(std::abs(bound - 0.7405) < 1e-3);
}

TEST_CASE("kac bound: rademacher closed form") {
  for (int n : {64, 128, 1024}) {
    BoundInputs in;
    in.n = n;
    in.sum_t_moments = n + 1;
    in.r = 0.5;
    CHECK(kac_bound(in) ==
          doctest::Approx(circle_constant(0.5) * std::sqrt(std::log(n + 1.0) / n))
              .epsilon(1e-14));
  }
}

TEST_CASE("kac bound decreases in n with fixed moments") {
  double prev = 1e300;
  for (int n : {64, 128, 256, 512, 2048}) {
    BoundInputs in;
    in.n = n;
    in.sum_t_moments = 100.0;
    double b = kac_bound(in);
    CHECK(b < prev);
    prev = b;
  }
}

TEST_CASE("negative bracket raises the dedicated error") {
  BoundInputs in;
  in.n = 4;
  in.sum_t_moments = 1.0;  // log term 0
  in.log_moment_first = 3.0;
  in.log_moment_last = 3.0;
  CHECK_THROWS_AS((void)kac_bound(in), NegativeBracketError);
  CHECK_THROWS_AS((void)arc_bound(in), NegativeBracketError);
  in.t = 1.5;
  CHECK_THROWS_AS((void)kac_bound(in), std::invalid_argument);
}

TEST_CASE("arc bound: chebyshev/rademacher closed form with C = 8") {
  // basis-max-norm sqrt(2), leading sqrt(2)/2 -> log term log 2.
  for (int n : {64, 256}) {
    BoundInputs in;
    in.n = n;
    in.sum_t_moments = n + 1;
    in.basis_max_norm = std::sqrt(2.0);
    in.leading = std::sqrt(2.0) / 2.0;
    GeneralBound g = arc_bound(in, true);
    CHECK(g.constant_known);
    CHECK(g.value ==
          doctest::Approx(8.0 * std::sqrt((std::log(n + 1.0) + std::log(2.0)) / n))
              .epsilon(1e-14));
    // The interval constant has no r dependence.
    in.r = 0.9;
    CHECK(arc_bound(in, true).value == doctest::Approx(g.value));
  }
}

TEST_CASE("disk bound: bergman leading coefficient tightens the bracket") {
  BoundInputs in;
  in.n = 100;
  in.sum_t_moments = 101.0 * std::sqrt(kPi) / 2.0;
  in.basis_max_norm = std::sqrt(101.0 / kPi);
  in.log_moment_at_w = -1.0;
  in.leading = std::sqrt(101.0 / kPi);  // > 1: negative log contribution
  GeneralBound tight = disk_bound(in);
  CHECK_FALSE(tight.constant_known);
  in.leading = 1.0;
  GeneralBound loose = disk_bound(in);
  CHECK(tight.value < loose.value);
}

TEST_CASE("log-sum moment inequality: rademacher equality case") {
  // |A_k| = 1 deterministically: LHS = log(n+1) = RHS at t = 1.
  std::vector<EstimateWithError> moments(10, {1.0, 0.0});
  EstimateWithError lhs{std::log(10.0), 0.0};
  CHECK(lemma44_check(moments, 1.0, lhs));
  EstimateWithError too_big{std::log(10.0) + 0.1, 0.0};
  CHECK_FALSE(lemma44_check(moments, 1.0, too_big));
}

TEST_CASE("log-sum moment inequality: gaussian and cauchy monte carlo") {
  const int n = 100;
  const long trials = 100000;
  for (auto [spec, t] : {std::pair{standard_complex_gaussian(), 1.0},
                         std::pair{cauchy(1.0), 0.5}}) {
    std::vector<EstimateWithError> moments;
    for (int k = 0; k <= n; ++k) {
      MomentEstimate m = empirical_moment(spec, {MomentKind::AbsPower, t, {}},
                                          trials / 10, mix(77, k));
      moments.push_back({m.estimate, m.standard_error});
    }
    // Sample E[log sum |A_k|] directly.
    double acc = 0.0, acc2 = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
      Rng rng(mix(99, static_cast<std::uint64_t>(trial)));
      double sum = 0.0;
      for (int k = 0; k <= n; ++k) sum += std::abs(sample_one(spec, rng));
      double v = std::log(sum);
      acc += v;
      acc2 += v * v;
    }
    double mean = acc / trials;
    double se = std::sqrt(std::max(0.0, acc2 / trials - mean * mean) / trials);
    CHECK(lemma44_check(moments, t, {mean, se}));
  }
}
