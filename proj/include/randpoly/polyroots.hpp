#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "randpoly/ensembles.hpp"

namespace randpoly {

/// Monomial-form polynomial c_0 + c_1 z + ... + c_n z^n, pre-scaled so the
/// largest coefficient modulus is 1 (scale retained; roots are unaffected).
class ComplexPolynomial {
 public:
  /// Trailing coefficients below the relative guard are deflated away;
  /// `deflated()` reports how many degrees were dropped.
  explicit ComplexPolynomial(const Eigen::VectorXcd& coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Eigen::VectorXcd& coefficients() const { return coeffs_; }
  double scale() const { return scale_; }
  int deflated() const { return deflated_; }

  /// Horner value and derivative at z. For |z| > 1 the reversed polynomial in
  /// 1/z is used, so large roots do not overflow.
  std::pair<Complex, Complex> evaluate(Complex z) const;

  /// sum_j |c_j| |z|^j, the local scale for backward-error residuals.
  double residual_scale(Complex z) const;

 private:
  Eigen::VectorXcd coeffs_;   // normalized, max modulus 1
  Eigen::VectorXcd reversed_;
  double scale_ = 1.0;
  int deflated_ = 0;
};

struct RootSet {
  Eigen::VectorXcd roots;
  Eigen::VectorXd residuals;  // |P(Z_k)| / sum_j |c_j||Z_k|^j
  int iterations = 0;
  bool converged = false;
  int deflated = 0;
};

constexpr double kDefaultRootTol = 1e-12;
constexpr int kDefaultMaxIters = 200;

/// Bini-style starting points: circles with radii from the upper convex hull
/// of (j, log|c_j|), angularly equispaced with an irrational offset.
Eigen::VectorXcd initial_guesses(const ComplexPolynomial& poly);

/// Ehrlich-Aberth simultaneous iteration. Converged roots certify
/// |P(Z)| <= tol * sum_j |c_j||Z|^j.
RootSet find_roots(const ComplexPolynomial& poly,
                   double tol = kDefaultRootTol,
                   int max_iters = kDefaultMaxIters);

}  // namespace randpoly
