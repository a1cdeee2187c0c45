#include "randpoly/bases.hpp"

#include <cmath>
#include <numbers>

namespace randpoly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coefficient columns of Chebyshev polynomials T_k(l(z)) where
// l(z) = (2z - a - b)/(b - a), via the three-term recurrence.
Eigen::MatrixXcd chebyshev_columns(double a, double b, int max_degree) {
  const int m = max_degree + 1;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(m, m);
  const double c1 = 2.0 / (b - a);
  const double c0 = -(a + b) / (b - a);
  t(0, 0) = 1.0;
  if (max_degree >= 1) {
    t(0, 1) = c0;
    t(1, 1) = c1;
  }
  for (int k = 2; k <= max_degree; ++k) {
    // T_k = 2 l T_{k-1} - T_{k-2}
    for (int j = 0; j < k; ++j) {
      t(j + 1, k) += 2.0 * c1 * t(j, k - 1);
      t(j, k) += 2.0 * c0 * t(j, k - 1);
    }
    t.col(k) -= t.col(k - 2);
  }
  return t;
}

// Gauss-Legendre nodes/weights on [0,1] by Newton on P_n (plenty for the
// radial factor of the disk rule).
void gauss_legendre_01(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[n - 1 - i] = 0.5 * (t + 1.0);
    w[n - 1 - i] = 1.0 / ((1.0 - t * t) * pp * pp);
  }
}

}  // namespace

MeasureSpec circle_uniform_measure(int num_nodes) {
  MeasureSpec m;
  m.nodes.resize(num_nodes);
  m.weights = Eigen::VectorXd::Constant(num_nodes, 1.0 / num_nodes);
  for (int j = 0; j < num_nodes; ++j) {
    double th = kTwoPi * j / num_nodes;
    m.nodes[j] = Complex(std::cos(th), std::sin(th));
  }
  m.mass = 1.0;
  m.label = "circle-uniform";
  return m;
}

MeasureSpec circle_arclength_measure(int num_nodes) {
  MeasureSpec m = circle_uniform_measure(num_nodes);
  m.weights *= kTwoPi;
  m.mass = kTwoPi;
  m.label = "circle-arclength";
  return m;
}

MeasureSpec interval_arcsine_measure(int num_nodes) {
  MeasureSpec m;
  m.nodes.resize(num_nodes);
  m.weights = Eigen::VectorXd::Constant(num_nodes, 1.0 / num_nodes);
  for (int j = 0; j < num_nodes; ++j) {
    m.nodes[j] = Complex(std::cos(kPi * (2 * j + 1) / (2.0 * num_nodes)), 0.0);
  }
  m.mass = 1.0;
  m.label = "interval-arcsine";
  return m;
}

MeasureSpec unit_disk_area_measure(int radial_nodes, int angular_nodes) {
  // dA = r dr dtheta; substitute s = r^2 so the radial integral is
  // (1/2) * int_0^1 f(sqrt(s)) ds, handled by Gauss-Legendre in s.
  Eigen::VectorXd s, ws;
  gauss_legendre_01(radial_nodes, s, ws);
  MeasureSpec m;
  m.nodes.resize(radial_nodes * angular_nodes);
  m.weights.resize(radial_nodes * angular_nodes);
  int idx = 0;
  for (int i = 0; i < radial_nodes; ++i) {
    double r = std::sqrt(s[i]);
    double wr = 0.5 * ws[i] * kTwoPi / angular_nodes;
    for (int j = 0; j < angular_nodes; ++j) {
      double th = kTwoPi * j / angular_nodes;
      m.nodes[idx] = Complex(r * std::cos(th), r * std::sin(th));
      m.weights[idx] = wr;
      ++idx;
    }
  }
  m.mass = kPi;
  m.label = "disk-area";
  return m;
}

std::string BasisSpec::name() const {
  switch (kind) {
    case BasisKind::Monomial: return "monomial";
    case BasisKind::SzegoCircle: return "szego-circle";
    case BasisKind::BergmanDisk: return "bergman-disk";
    case BasisKind::ChebyshevOrthonormal: return "chebyshev-orthonormal";
    case BasisKind::FaberInterval: return "faber-interval";
    case BasisKind::FaberDisk: return "faber-disk";
    case BasisKind::FaberEllipse: return "faber-ellipse";
    case BasisKind::GramSchmidt: return "gram-schmidt(" + measure.label + ")";
  }
  return "?";
}

BasisSpec monomial_basis(int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::Monomial;
  s.max_degree = max_degree;
  return s;
}

BasisSpec szego_circle_basis(int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::SzegoCircle;
  s.max_degree = max_degree;
  return s;
}

BasisSpec bergman_disk_basis(int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::BergmanDisk;
  s.max_degree = max_degree;
  return s;
}

BasisSpec chebyshev_orthonormal_basis(double a, double b, int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::ChebyshevOrthonormal;
  s.a = a;
  s.b = b;
  s.max_degree = max_degree;
  return s;
}

BasisSpec faber_interval_basis(double a, double b, int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::FaberInterval;
  s.a = a;
  s.b = b;
  s.max_degree = max_degree;
  return s;
}

BasisSpec faber_disk_basis(int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::FaberDisk;
  s.max_degree = max_degree;
  return s;
}

BasisSpec faber_ellipse_basis(double R, int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::FaberEllipse;
  s.R = R;
  s.max_degree = max_degree;
  return s;
}

BasisSpec gram_schmidt_basis(MeasureSpec measure, int max_degree) {
  BasisSpec s;
  s.kind = BasisKind::GramSchmidt;
  s.measure = std::move(measure);
  s.max_degree = max_degree;
  return s;
}

Complex BasisTriangle::evaluate(int k, Complex z) const {
  Complex acc = entries(k, k);
  for (int j = k - 1; j >= 0; --j) acc = acc * z + entries(j, k);
  return acc;
}

BasisTriangle basis_triangle(const BasisSpec& spec) {
  if (spec.max_degree < 0)
    throw std::invalid_argument("basis_triangle: max_degree must be >= 0");
  const int m = spec.max_degree + 1;
  BasisTriangle t;
  t.max_degree = spec.max_degree;
  switch (spec.kind) {
    case BasisKind::Monomial:
      t.entries = Eigen::MatrixXcd::Identity(m, m);
      break;
    case BasisKind::SzegoCircle:
      t.entries = Eigen::MatrixXcd::Identity(m, m) / std::sqrt(kTwoPi);
      break;
    case BasisKind::BergmanDisk: {
      t.entries = Eigen::MatrixXcd::Zero(m, m);
      for (int k = 0; k < m; ++k)
        t.entries(k, k) = std::sqrt((k + 1) / kPi);
      break;
    }
    case BasisKind::ChebyshevOrthonormal: {
      t.entries = chebyshev_columns(spec.a, spec.b, spec.max_degree);
      for (int k = 1; k < m; ++k) t.entries.col(k) *= std::sqrt(2.0);
      break;
    }
    case BasisKind::FaberInterval: {
      t.entries = chebyshev_columns(spec.a, spec.b, spec.max_degree);
      for (int k = 1; k < m; ++k) t.entries.col(k) *= 2.0;
      break;
    }
    case BasisKind::FaberDisk:
      t.entries = Eigen::MatrixXcd::Identity(m, m);
      break;
    case BasisKind::FaberEllipse: {
      t.entries = chebyshev_columns(-1.0, 1.0, spec.max_degree);
      double scale = 1.0;
      for (int k = 1; k < m; ++k) {
        scale /= spec.R;
        t.entries.col(k) *= 2.0 * scale;
      }
      break;
    }
    case BasisKind::GramSchmidt:
      return gram_schmidt_orthonormalize(spec.measure, spec.max_degree);
  }
  return t;
}

Eigen::VectorXcd expand_to_monomial(const Eigen::VectorXcd& random_coeffs,
                                    const BasisTriangle& triangle) {
  const Eigen::Index n = random_coeffs.size() - 1;
  if (n > triangle.max_degree)
    throw std::invalid_argument("expand_to_monomial: triangle too small");
  return triangle.entries.topLeftCorner(n + 1, n + 1) * random_coeffs;
}

BasisTriangle gram_schmidt_orthonormalize(const MeasureSpec& measure, int n,
                                          double* achieved_residual) {
  const Eigen::Index num_nodes = measure.nodes.size();
  if (num_nodes < 4 * std::max(n, 1))
    throw std::invalid_argument(
        "gram_schmidt_orthonormalize: quadrature too coarse for degree " +
        std::to_string(n));
  const int m = n + 1;
  BasisTriangle t;
  t.max_degree = n;
  t.entries = Eigen::MatrixXcd::Zero(m, m);
  // vals(:,k) holds B_k at the quadrature nodes.
  Eigen::MatrixXcd vals(num_nodes, m);

  const double quad_mass = measure.weights.sum();
  t.entries(0, 0) = 1.0 / std::sqrt(quad_mass);
  vals.col(0).setConstant(t.entries(0, 0));

  Eigen::VectorXcd q_vals(num_nodes);
  for (int k = 1; k <= n; ++k) {
    // Stieltjes step: orthogonalize z * B_{k-1}.
    q_vals = measure.nodes.cwiseProduct(vals.col(k - 1));
    Eigen::VectorXcd q_coef = Eigen::VectorXcd::Zero(m);
    q_coef.segment(1, k) = t.entries.col(k - 1).head(k);

    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < k; ++i) {
        Complex h = (measure.weights.array() *
                     (vals.col(i).conjugate().array() * q_vals.array()))
                        .sum();
        q_vals -= h * vals.col(i);
        q_coef.head(i + 1) -= h * t.entries.col(i).head(i + 1);
      }
    }
    double norm2 =
        (measure.weights.array() * q_vals.array().abs2()).sum();
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
      throw OrthogonalizationError(
          "gram_schmidt_orthonormalize: breakdown at degree " +
          std::to_string(k));
    double norm = std::sqrt(norm2);
    q_vals /= norm;
    q_coef /= norm;
    // Real positive diagonal convention.
    Complex lead = q_coef[k];
    if (lead == Complex(0.0, 0.0))
      throw OrthogonalizationError(
          "gram_schmidt_orthonormalize: zero leading coefficient at degree " +
          std::to_string(k));
    Complex phase = std::conj(lead) / std::abs(lead);
    q_vals *= phase;
    q_coef *= phase;
    vals.col(k) = q_vals;
    t.entries.col(k) = q_coef;
  }

  // Conditioning gate: the quadrature Gram matrix must be the identity.
  Eigen::MatrixXcd g =
      vals.adjoint() * measure.weights.asDiagonal() * vals;
  double resid = (g - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
  if (achieved_residual) *achieved_residual = resid;
  if (resid > 1e-8)
    throw OrthogonalizationError(
        "gram_schmidt_orthonormalize: loss of orthogonality, residual " +
        std::to_string(resid) + " at degree " + std::to_string(n));
  return t;
}

Eigen::MatrixXcd basis_node_values(const BasisSpec& spec,
                                   const Eigen::VectorXcd& points) {
  const Eigen::Index num = points.size();
  const int m = spec.max_degree + 1;
  Eigen::MatrixXcd vals(num, m);
  switch (spec.kind) {
    case BasisKind::Monomial:
    case BasisKind::FaberDisk:
    case BasisKind::SzegoCircle:
    case BasisKind::BergmanDisk: {
      vals.col(0).setOnes();
      for (int k = 1; k < m; ++k)
        vals.col(k) = vals.col(k - 1).cwiseProduct(points);
      for (int k = 0; k < m; ++k) {
        if (spec.kind == BasisKind::SzegoCircle)
          vals.col(k) /= std::sqrt(kTwoPi);
        else if (spec.kind == BasisKind::BergmanDisk)
          vals.col(k) *= std::sqrt((k + 1) / kPi);
      }
      break;
    }
    case BasisKind::ChebyshevOrthonormal:
    case BasisKind::FaberInterval:
    case BasisKind::FaberEllipse: {
      // Chebyshev recurrence in the mapped variable; stable at high degree.
      const double c1 = 2.0 / (spec.b - spec.a);
      const double c0 = -(spec.a + spec.b) / (spec.b - spec.a);
      Eigen::VectorXcd x = c1 * points.array() + c0;
      if (spec.kind == BasisKind::FaberEllipse) x = points;
      vals.col(0).setOnes();
      if (m > 1) vals.col(1) = x;
      for (int k = 2; k < m; ++k)
        vals.col(k) = 2.0 * x.cwiseProduct(vals.col(k - 1)) - vals.col(k - 2);
      double scale = 1.0;
      for (int k = 1; k < m; ++k) {
        if (spec.kind == BasisKind::ChebyshevOrthonormal)
          vals.col(k) *= std::sqrt(2.0);
        else if (spec.kind == BasisKind::FaberInterval)
          vals.col(k) *= 2.0;
        else {
          scale /= spec.R;
          vals.col(k) *= 2.0 * scale;
        }
      }
      break;
    }
    case BasisKind::GramSchmidt:
      throw std::invalid_argument(
          "basis_node_values: no recurrence for gram-schmidt bases");
  }
  return vals;
}

double gram_residual(const BasisSpec& spec, const MeasureSpec& measure,
                     int up_to_degree) {
  const int m = up_to_degree + 1;
  Eigen::MatrixXcd vals;
  if (spec.kind == BasisKind::GramSchmidt) {
    // The Stieltjes pass maintains node values itself; its residual is the
    // Gram residual under the given quadrature.
    double resid = 0.0;
    gram_schmidt_orthonormalize(measure, up_to_degree, &resid);
    return resid;
  } else {
    BasisSpec clipped = spec;
    clipped.max_degree = up_to_degree;
    vals = basis_node_values(clipped, measure.nodes);
  }
  Eigen::MatrixXcd g = vals.adjoint() * measure.weights.asDiagonal() * vals;
  return (g - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
}

std::vector<RegularityRow> regularity_report(const BasisSpec& spec,
                                             const DomainModel& domain,
                                             int k_max) {
  // Reject pairings whose natural set differs from the given domain.
  auto mismatch = [&]() {
    throw BasisDomainMismatchError("regularity_report: basis " + spec.name() +
                                   " does not live on " + domain.name());
  };
  switch (spec.kind) {
    case BasisKind::Monomial:
    case BasisKind::SzegoCircle:
      if (domain.kind != DomainKind::UnitCircle) mismatch();
      break;
    case BasisKind::BergmanDisk:
    case BasisKind::FaberDisk:
      if (domain.kind != DomainKind::ClosedUnitDisk) mismatch();
      break;
    case BasisKind::ChebyshevOrthonormal:
    case BasisKind::FaberInterval:
      if (domain.kind != DomainKind::Interval || domain.a != spec.a ||
          domain.b != spec.b)
        mismatch();
      break;
    case BasisKind::FaberEllipse:
      if (domain.kind != DomainKind::Ellipse || domain.R != spec.R) mismatch();
      break;
    case BasisKind::GramSchmidt:
      break;  // caller vouches for the pairing
  }

  BasisSpec full = spec;
  full.max_degree = std::max(spec.max_degree, k_max);
  const double cap = domain.capacity();

  // Boundary grid dense enough for the highest degree requested.
  const int grid = std::max(4096, 64 * k_max);
  Eigen::VectorXcd pts(grid);
  for (int j = 0; j < grid; ++j) {
    double th = kTwoPi * j / grid;
    switch (domain.kind) {
      case DomainKind::UnitCircle:
      case DomainKind::ClosedUnitDisk:
        pts[j] = Complex(std::cos(th), std::sin(th));
        break;
      case DomainKind::Interval: {
        double mid = 0.5 * (domain.a + domain.b);
        double half = 0.5 * (domain.b - domain.a);
        pts[j] = Complex(mid + half * std::cos(th), 0.0);
        break;
      }
      case DomainKind::Ellipse: {
        Complex u(domain.R * std::cos(th), domain.R * std::sin(th));
        pts[j] = 0.5 * (u + 1.0 / u);
        break;
      }
    }
  }

  Eigen::MatrixXcd vals;
  BasisTriangle gs_triangle;
  if (spec.kind == BasisKind::GramSchmidt) {
    gs_triangle = basis_triangle(full);
    vals.resize(grid, k_max + 1);
    for (int k = 0; k <= k_max; ++k)
      for (int j = 0; j < grid; ++j)
        vals(j, k) = gs_triangle.evaluate(k, pts[j]);
  } else {
    vals = basis_node_values(full, pts);
  }
  BasisTriangle t =
      spec.kind == BasisKind::GramSchmidt ? gs_triangle : basis_triangle(full);

  std::vector<RegularityRow> rows;
  rows.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    RegularityRow row;
    row.k = k;
    row.leading_times_cap = std::pow(std::abs(t.leading(k)), 1.0 / k) * cap;
    row.sup_norm = vals.col(k).cwiseAbs().maxCoeff();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace randpoly
