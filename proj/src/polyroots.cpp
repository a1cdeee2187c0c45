#include "randpoly/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace randpoly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDeflationGuard = 1e-300;  // relative to max |c_j|

// Newton correction P/P' computed through the reversed polynomial for
// |z| > 1, so huge roots never overflow.
Complex newton_ratio(const Eigen::VectorXcd& c, const Eigen::VectorXcd& rev,
                     Complex z) {
  const int n = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = c[n], dp = 0.0;
    for (int j = n - 1; j >= 0; --j) {
      dp = dp * z + p;
      p = p * z + c[j];
    }
    if (dp == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    return p / dp;
  }
  Complex w = 1.0 / z;
  Complex q = rev[n], dq = 0.0;
  for (int j = n - 1; j >= 0; --j) {
    dq = dq * w + q;
    q = q * w + rev[j];
  }
  // P(z) = z^n Q(w), P'(z) = z^{n-1} (n Q(w) - w Q'(w))
  Complex denom = static_cast<double>(n) * q - w * dq;
  if (denom == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  return z * q / denom;
}

// |P(z)| / sum_j |c_j||z|^j, overflow-free on both sides of |z| = 1.
double relative_residual(const Eigen::VectorXcd& c, const Eigen::VectorXcd& rev,
                         Complex z) {
  const int n = static_cast<int>(c.size()) - 1;
  double az = std::abs(z);
  const Eigen::VectorXcd& coef = az <= 1.0 ? c : rev;
  Complex arg = az <= 1.0 ? z : 1.0 / z;
  double aarg = std::abs(arg);
  Complex p = coef[n];
  double s = std::abs(coef[n]);
  for (int j = n - 1; j >= 0; --j) {
    p = p * arg + coef[j];
    s = s * aarg + std::abs(coef[j]);
  }
  if (s == 0.0) return 0.0;
  return std::abs(p) / s;
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(const Eigen::VectorXcd& coefficients) {
  if (coefficients.size() < 2)
    throw DegeneratePolynomialError("ComplexPolynomial: degree must be >= 1");
  double maxmod = coefficients.cwiseAbs().maxCoeff();
  if (!(maxmod > 0.0))
    throw DegeneratePolynomialError("ComplexPolynomial: zero polynomial");
  Eigen::VectorXcd c = coefficients / maxmod;
  scale_ = maxmod;
  int n = static_cast<int>(c.size()) - 1;
  while (n >= 1 && std::abs(c[n]) <= kDeflationGuard) {
    --n;
    ++deflated_;
  }
  if (n < 1)
    throw DegenerateLeadingCoefficientError(
        "ComplexPolynomial: all non-constant coefficients vanish");
  coeffs_ = c.head(n + 1);
  reversed_ = coeffs_.reverse();
}

std::pair<Complex, Complex> ComplexPolynomial::evaluate(Complex z) const {
  const int n = degree();
  if (std::abs(z) <= 1.0) {
    Complex p = coeffs_[n], dp = 0.0;
    for (int j = n - 1; j >= 0; --j) {
      dp = dp * z + p;
      p = p * z + coeffs_[j];
    }
    return {scale_ * p, scale_ * dp};
  }
  Complex w = 1.0 / z;
  Complex q = reversed_[n], dq = 0.0;
  for (int j = n - 1; j >= 0; --j) {
    dq = dq * w + q;
    q = q * w + reversed_[j];
  }
  Complex zn = std::pow(z, n);
  return {scale_ * zn * q,
          scale_ * zn * w * (static_cast<double>(n) * q - w * dq)};
}

double ComplexPolynomial::residual_scale(Complex z) const {
  const int n = degree();
  double az = std::abs(z);
  double s = 0.0;
  if (az <= 1.0) {
    s = std::abs(coeffs_[n]);
    for (int j = n - 1; j >= 0; --j) s = s * az + std::abs(coeffs_[j]);
  } else {
    double w = 1.0 / az;
    s = std::abs(reversed_[n]);
    for (int j = n - 1; j >= 0; --j) s = s * w + std::abs(reversed_[j]);
    s *= std::pow(az, n);
  }
  return scale_ * s;
}

Eigen::VectorXcd initial_guesses(const ComplexPolynomial& poly) {
  const Eigen::VectorXcd& c = poly.coefficients();
  const int n = poly.degree();
  if (n == 1) {
    Eigen::VectorXcd g(1);
    g[0] = -c[0] / c[1];
    return g;
  }
  // Upper convex hull of (j, log|c_j|); each hull edge contributes one ring
  // of starting points at the edge-slope radius.
  std::vector<int> idx;
  std::vector<double> lv;
  for (int j = 0; j <= n; ++j) {
    double a = std::abs(c[j]);
    if (a > 0.0) {
      idx.push_back(j);
      lv.push_back(std::log(a));
    }
  }
  std::vector<int> hull;  // positions into idx
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (hull.size() >= 2) {
      std::size_t p = hull[hull.size() - 2], q = hull[hull.size() - 1];
      double cross = (static_cast<double>(idx[q]) - idx[p]) * (lv[i] - lv[p]) -
                     (static_cast<double>(idx[i]) - idx[p]) * (lv[q] - lv[p]);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(static_cast<int>(i));
  }
  Eigen::VectorXcd guesses(n);
  int filled = 0;
  const double offset = 0.4008128410190172;  // breaks ring symmetries
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    int j1 = idx[hull[e]], j2 = idx[hull[e + 1]];
    double radius =
        std::exp((lv[hull[e]] - lv[hull[e + 1]]) / (j2 - j1));
    int count = j2 - j1;
    for (int i = 0; i < count && filled < n; ++i) {
      double th = kTwoPi * (static_cast<double>(i) / count +
                            offset * (static_cast<double>(e) + 1.0));
      guesses[filled++] = radius * Complex(std::cos(th), std::sin(th));
    }
  }
  while (filled < n) {  // degenerate hull fallback
    double th = kTwoPi * (filled * offset);
    guesses[filled++] = Complex(std::cos(th), std::sin(th));
  }
  return guesses;
}

RootSet find_roots(const ComplexPolynomial& poly, double tol, int max_iters) {
  const int n = poly.degree();
  const Eigen::VectorXcd& c = poly.coefficients();
  const Eigen::VectorXcd rev = c.reverse();

  RootSet out;
  out.deflated = poly.deflated();
  out.roots = initial_guesses(poly);
  out.residuals.resize(n);

  if (n == 1) {
    out.residuals[0] = relative_residual(c, rev, out.roots[0]);
    out.iterations = 0;
    out.converged = out.residuals[0] <= tol;
    return out;
  }

  std::vector<bool> settled(n, false);
  int it = 0;
  for (; it < max_iters; ++it) {
    int active = 0;
    for (int i = 0; i < n; ++i) {
      if (settled[i]) continue;
      Complex zi = out.roots[i];
      double res = relative_residual(c, rev, zi);
      if (res <= tol) {
        settled[i] = true;
        continue;
      }
      ++active;
      Complex ratio = newton_ratio(c, rev, zi);
      if (ratio == Complex(0.0, 0.0)) {
        // stationary point of P; nudge off it
        out.roots[i] = zi * Complex(1.0 + 1e-8, 1e-8);
        continue;
      }
      Complex sum = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex d = zi - out.roots[j];
        if (d == Complex(0.0, 0.0)) {
          d = Complex(1e-14, 1e-14);
        }
        sum += 1.0 / d;
      }
      Complex denom = 1.0 - ratio * sum;
      Complex dz = denom == Complex(0.0, 0.0) ? ratio : ratio / denom;
      out.roots[i] = zi - dz;
    }
    if (active == 0) break;
  }

  bool all_ok = true;
  for (int i = 0; i < n; ++i) {
    out.residuals[i] = relative_residual(c, rev, out.roots[i]);
    if (out.residuals[i] > tol) all_ok = false;
  }
  out.iterations = it;
  out.converged = all_ok;
  return out;
}

}  // namespace randpoly
