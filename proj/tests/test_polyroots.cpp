#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "randpoly/ensembles.hpp"
#include "randpoly/polyroots.hpp"

using namespace randpoly;

namespace {
constexpr double kPi = std::numbers::pi;

// Greedy match of a computed root multiset against expected values.
double max_match_distance(const Eigen::VectorXcd& roots,
                          std::vector<Complex> expected) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    double best = 1e300;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      double d = std::abs(roots[i] - expected[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    worst = std::max(worst, best);
    expected.erase(expected.begin() + static_cast<long>(best_j));
  }
  return worst;
}
}  // namespace

TEST_CASE("roots of z^4 - 1 are the 4th roots of unity") {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(5);
  c[0] = -1.0;
  c[4] = 1.0;
  RootSet rs = find_roots(ComplexPolynomial(c));
  REQUIRE(rs.converged);
  REQUIRE(rs.roots.size() == 4);
  std::vector<Complex> expected = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CHECK(max_match_distance(rs.roots, expected) < 1e-12);
}

TEST_CASE("identical coefficients: 6th roots of unity except z = 1") {
  Eigen::VectorXcd c = Eigen::VectorXcd::Ones(6);
  RootSet rs = find_roots(ComplexPolynomial(c));
  REQUIRE(rs.converged);
  REQUIRE(rs.roots.size() == 5);
  std::vector<Complex> expected;
  for (int k = 1; k <= 5; ++k) expected.push_back(std::polar(1.0, kPi * k / 3.0));
  CHECK(max_match_distance(rs.roots, expected) < 1e-10);
}

TEST_CASE("expanded product (z-1)...(z-10) recovers 1..10") {
  // Oracle: coefficients built by convolving the linear factors.
  Eigen::VectorXcd c(1);
  c[0] = 1.0;
  for (int m = 1; m <= 10; ++m) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(c.size() + 1);
    for (Eigen::Index j = 0; j < c.size(); ++j) {
      next[j] += c[j] * Complex(-m, 0.0);
      next[j + 1] += c[j];
    }
    c = next;
  }
  RootSet rs = find_roots(ComplexPolynomial(c));
  REQUIRE(rs.converged);
  std::vector<Complex> expected;
  for (int m = 1; m <= 10; ++m) expected.emplace_back(m, 0.0);
  CHECK(max_match_distance(rs.roots, expected) < 1e-6);
}

TEST_CASE("horner evaluation with derivative") {
  Eigen::VectorXcd c(3);
  c << 1.0, 0.0, 1.0;  // 1 + z^2
  auto [v, d] = ComplexPolynomial(c).evaluate(Complex(0.0, 1.0));
  CHECK(std::abs(v) < 1e-15);
  CHECK(std::abs(d - Complex(0.0, 2.0)) < 1e-15);

  Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(4);
  auto [v1, d1] = ComplexPolynomial(ones).evaluate(Complex(1.0, 0.0));
  CHECK(std::abs(v1 - 4.0) < 1e-14);
  CHECK(std::abs(d1 - 6.0) < 1e-14);  // 1 + 2z + 3z^2 at 1

  // At zero the pair is (c_0, c_1); evaluation undoes the internal max-modulus
  // normalization.
  Eigen::VectorXcd rnd(4);
  rnd << Complex(0.3, -0.2), Complex(-1.5, 0.4), Complex(0.0, 2.0),
      Complex(1.0, 1.0);
  ComplexPolynomial p(rnd);
  auto [v0, d0] = p.evaluate(Complex(0.0, 0.0));
  CHECK(std::abs(v0 - rnd[0]) < 1e-14);
  CHECK(std::abs(d0 - rnd[1]) < 1e-14);
}

TEST_CASE("derivative agrees with finite differences") {
  Eigen::VectorXcd c(6);
  c << Complex(0.5, 0.1), Complex(-1, 2), Complex(3, -1), Complex(0, 1),
      Complex(2, 2), Complex(-1, 0.5);
  ComplexPolynomial p(c);
  for (Complex z : {Complex(0.3, -0.7), Complex(1.4, 0.2), Complex(-2.1, 1.0)}) {
    double h = 1e-7;
    auto [v, d] = p.evaluate(z);
    auto [vp, dp] = p.evaluate(z + h);
    (void)dp;
    Complex fd = (vp - v) / h;
    CHECK(std::abs(fd - d) < 1e-6 * std::max(1.0, std::abs(d)));
  }
}

TEST_CASE("initial guesses: degree 1 short-circuits to -c0/c1") {
  Eigen::VectorXcd c(2);
  c << Complex(3.0, -1.0), Complex(2.0, 0.0);
  Eigen::VectorXcd g = initial_guesses(ComplexPolynomial(c));
  REQUIRE(g.size() == 1);
  CHECK(std::abs(g[0] - Complex(-1.5, 0.5)) < 1e-15);
}

TEST_CASE("initial guesses for z^n - 1 sit near the unit circle") {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(13);
  c[0] = -1.0;
  c[12] = 1.0;
  Eigen::VectorXcd g = initial_guesses(ComplexPolynomial(c));
  REQUIRE(g.size() == 12);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    CHECK(std::abs(g[i]) > 0.5);
    CHECK(std::abs(g[i]) < 2.0);
  }
}

TEST_CASE("tiny constant term produces a small-radius starting ring") {
  Eigen::VectorXcd c(4);
  c << Complex(1e-10, 0), Complex(1, 0), Complex(0.5, 0), Complex(1, 0);
  Eigen::VectorXcd g = initial_guesses(ComplexPolynomial(c));
  double smallest = 1e300;
  for (Eigen::Index i = 0; i < g.size(); ++i)
    smallest = std::min(smallest, std::abs(g[i]));
  CHECK(smallest < 1e-8);  // near |c0/c1| = 1e-10
}

TEST_CASE("real coefficients give a conjugate-symmetric root multiset") {
  Eigen::VectorXcd c(7);
  c << 2.0, -1.0, 0.5, 3.0, -2.0, 0.25, 1.0;
  RootSet rs = find_roots(ComplexPolynomial(c));
  REQUIRE(rs.converged);
  std::vector<Complex> conj;
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i)
    conj.push_back(std::conj(rs.roots[i]));
  CHECK(max_match_distance(rs.roots, conj) < 1e-9);
}

TEST_CASE("scale invariance: roots of lambda P equal roots of P") {
  Eigen::VectorXcd c(5);
  c << Complex(1, 1), Complex(0, -2), Complex(3, 0), Complex(-1, 1),
      Complex(2, -1);
  RootSet a = find_roots(ComplexPolynomial(c));
  // A power-of-two factor keeps the scaling exact in binary floating point.
  RootSet b = find_roots(ComplexPolynomial(Complex(1073741824.0, 0.0) * c));
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  CHECK((a.roots - b.roots).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("residual certificate holds for every converged root") {
  CoefficientEnsemble ens = iid_ensemble(standard_complex_gaussian());
  Eigen::VectorXcd c = sample_coefficients(ens, 80, 321);
  ComplexPolynomial p(c);
  RootSet rs = find_roots(p);
  REQUIRE(rs.converged);
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
    auto [v, d] = p.evaluate(rs.roots[i]);
    (void)d;
    CHECK(std::abs(v) <= kDefaultRootTol * p.residual_scale(rs.roots[i]));
  }
}

TEST_CASE("near-zero leading coefficients deflate with a record") {
  Eigen::VectorXcd c(5);
  c << 1.0, 1.0, 1.0, 1e-305, 1e-310;
  ComplexPolynomial p(c);
  CHECK(p.degree() == 2);
  CHECK(p.deflated() == 2);
}

TEST_CASE("degree-1000 gaussian kac polynomials converge reliably") {
  CoefficientEnsemble ens = iid_ensemble(standard_complex_gaussian());
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Eigen::VectorXcd c = sample_coefficients(ens, 1000, seed);
    RootSet rs = find_roots(ComplexPolynomial(c), kDefaultRootTol, 120);
    if (rs.converged) ++ok;
  }
  CHECK(ok >= 99);
}
