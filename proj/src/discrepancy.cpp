#include "randpoly/discrepancy.hpp"

#include <cmath>
#include <numbers>

namespace randpoly {

ZeroCountingMeasure counting_measure(const RootSet& roots,
                                     bool allow_non_converged) {
  if (!roots.converged && !allow_non_converged)
    throw NonConvergedRootsError(
        "counting_measure: root set did not converge (pass the override to "
        "accept it anyway)");
  ZeroCountingMeasure tau;
  tau.atoms = roots.roots;
  return tau;
}

double measure_of_sector(const ZeroCountingMeasure& tau,
                         const DomainModel& domain, const Sector& sector) {
  if (tau.atoms.size() == 0) return 0.0;
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < tau.atoms.size(); ++i)
    if (sector_contains(domain, sector, tau.atoms[i])) ++count;
  return static_cast<double>(count) / static_cast<double>(tau.atoms.size());
}

DiscrepancyReport sector_discrepancy(const ZeroCountingMeasure& tau,
                                     const DomainModel& domain,
                                     const std::vector<Sector>& sectors) {
  DiscrepancyReport report;
  report.rows.reserve(sectors.size());
  for (const Sector& s : sectors) {
    DiscrepancyRow row;
    row.sector_id = s.id;
    row.tau = measure_of_sector(tau, domain, s);
    row.mu = equilibrium_measure(domain, s);
    row.diff = std::abs(row.tau - row.mu);
    report.sup_discrepancy = std::max(report.sup_discrepancy, row.diff);
    report.rows.push_back(row);
  }
  return report;
}

double catalan_constant() {
  // Cohen-Rodriguez Villegas-Zagier acceleration for alternating series;
  // error ~ (3+sqrt(8))^{-n}.
  const int n = 36;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    double ak = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    s += c * ak;
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

double circle_constant(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("circle_constant: need 0 < r < 1");
  return std::sqrt(2.0 * std::numbers::pi / catalan_constant()) +
         2.0 / (1.0 - r);
}

namespace {

void check_t(double t) {
  if (!(t > 0.0 && t <= 1.0))
    throw std::invalid_argument("bound: moment order t must lie in (0,1]");
}

}  // namespace

double kac_bound(const BoundInputs& in) {
  check_t(in.t);
  double bracket =
      (std::log(in.sum_t_moments) / in.t -
       0.5 * (in.log_moment_first + in.log_moment_last)) /
      static_cast<double>(in.n);
  if (bracket < 0.0)
    throw NegativeBracketError(
        "kac_bound: negative bracket; log-moments E[log|A_0|] + E[log|A_n|] "
        "exceed the fractional-moment term at this degree");
  return circle_constant(in.r) * std::sqrt(bracket);
}

GeneralBound arc_bound(const BoundInputs& in, bool real_interval) {
  check_t(in.t);
  double bracket = (std::log(in.sum_t_moments) / in.t +
                    std::log(in.basis_max_norm / in.leading) -
                    in.log_moment_last) /
                   static_cast<double>(in.n);
  if (bracket < 0.0)
    throw NegativeBracketError(
        "arc_bound: negative bracket; E[log|A_n|] exceeds the moment and "
        "basis terms at this degree");
  GeneralBound out;
  out.constant_known = real_interval;
  out.value = (real_interval ? 8.0 : 1.0) * std::sqrt(bracket);
  return out;
}

GeneralBound disk_bound(const BoundInputs& in) {
  check_t(in.t);
  double bracket =
      (2.0 * std::log(in.sum_t_moments) / in.t +
       std::log(in.basis_max_norm * in.basis_max_norm / in.leading) -
       in.log_moment_at_w) /
      static_cast<double>(in.n);
  if (bracket < 0.0)
    throw NegativeBracketError(
        "disk_bound: negative bracket; E[log|A_n P_n(w)|] exceeds the moment "
        "and basis terms at this degree");
  GeneralBound out;
  out.constant_known = false;
  out.value = std::sqrt(bracket);
  return out;
}

bool lemma44_check(const std::vector<EstimateWithError>& t_moments, double t,
                   const EstimateWithError& sample_log_sum) {
  check_t(t);
  double sum = 0.0, var = 0.0;
  for (const auto& m : t_moments) {
    sum += m.value;
    var += m.standard_error * m.standard_error;
  }
  double rhs = std::log(sum) / t;
  double rhs_se = std::sqrt(var) / (t * sum);
  double combined = std::sqrt(rhs_se * rhs_se + sample_log_sum.standard_error *
                                                    sample_log_sum.standard_error);
  // Deterministic inputs (e.g. unit-modulus coefficients) hit the inequality
  // with equality and zero standard errors; allow summation roundoff.
  double slack = 1e-10 * (1.0 + std::abs(rhs));
  return sample_log_sum.value <= rhs + 3.0 * combined + slack;
}

}  // namespace randpoly
