#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpoly/potential.hpp"

namespace randpoly {

struct OrthogonalizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BasisDomainMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Quadrature discretization of a positive measure: complex nodes with
/// positive weights. `mass` is the exact total mass for sanity checks.
struct MeasureSpec {
  Eigen::VectorXcd nodes;
  Eigen::VectorXd weights;
  double mass = 1.0;
  std::string label;
};

/// dtheta/(2pi) on the unit circle (trapezoid, spectrally exact).
MeasureSpec circle_uniform_measure(int num_nodes);
/// Arclength ds on the unit circle, total mass 2pi.
MeasureSpec circle_arclength_measure(int num_nodes);
/// dx / (pi sqrt(1-x^2)) on [-1,1] via Gauss-Chebyshev (exact for polynomials).
MeasureSpec interval_arcsine_measure(int num_nodes);
/// Area measure dA on the closed unit disk (Gauss-Legendre radially x trapezoid).
MeasureSpec unit_disk_area_measure(int radial_nodes, int angular_nodes);

enum class BasisKind {
  Monomial,
  SzegoCircle,
  BergmanDisk,
  ChebyshevOrthonormal,
  FaberInterval,
  FaberDisk,
  FaberEllipse,
  GramSchmidt,
};

struct BasisSpec {
  BasisKind kind = BasisKind::Monomial;
  int max_degree = 0;
  double a = -1.0;  // interval kinds
  double b = 1.0;
  double R = 2.0;   // faber-ellipse
  MeasureSpec measure;  // gram-schmidt only
  std::string name() const;
};

BasisSpec monomial_basis(int max_degree);
BasisSpec szego_circle_basis(int max_degree);
BasisSpec bergman_disk_basis(int max_degree);
BasisSpec chebyshev_orthonormal_basis(double a, double b, int max_degree);
BasisSpec faber_interval_basis(double a, double b, int max_degree);
BasisSpec faber_disk_basis(int max_degree);
BasisSpec faber_ellipse_basis(double R, int max_degree);
BasisSpec gram_schmidt_basis(MeasureSpec measure, int max_degree);

/// Lower-triangular change of basis B_k(z) = sum_j entries(j,k) z^j.
struct BasisTriangle {
  Eigen::MatrixXcd entries;  // (power j, degree k)
  int max_degree = 0;

  Complex leading(int k) const { return entries(k, k); }
  /// Values of B_k at a point by Horner on column k.
  Complex evaluate(int k, Complex z) const;
};

BasisTriangle basis_triangle(const BasisSpec& spec);

/// Monomial coefficients of sum_k A_k B_k: c = entries * A.
Eigen::VectorXcd expand_to_monomial(const Eigen::VectorXcd& random_coeffs,
                                    const BasisTriangle& triangle);

/// Stieltjes orthonormalization of 1, z, z^2, ... against the measure, with
/// one full reorthogonalization pass and real positive diagonal.
BasisTriangle gram_schmidt_orthonormalize(const MeasureSpec& measure, int n,
                                          double* achieved_residual = nullptr);

/// B_k at the given points for k = 0..spec.max_degree, evaluated through the
/// defining recurrences (stable at high degree, unlike monomial Horner).
/// Closed-form kinds only.
Eigen::MatrixXcd basis_node_values(const BasisSpec& spec,
                                   const Eigen::VectorXcd& points);

/// Max residual |(G - I)_{ij}| of the Gram matrix under the quadrature.
double gram_residual(const BasisSpec& spec, const MeasureSpec& measure,
                     int up_to_degree);

struct RegularityRow {
  int k = 0;
  double leading_times_cap = 0.0;  // |b_{k,k}|^{1/k} * cap(E)
  double sup_norm = 0.0;           // boundary-grid estimate of ||B_k||_E
};

/// Regularity diagnostics on the basis's natural set E; grid density grows
/// with the degree (64k points, at least 4096).
std::vector<RegularityRow> regularity_report(const BasisSpec& spec,
                                             const DomainModel& domain,
                                             int k_max);

}  // namespace randpoly
