#include "randpoly/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace randpoly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool kinds_match(DomainKind d, SectorKind s) {
  switch (d) {
    case DomainKind::UnitCircle:
      return s == SectorKind::AnnularSector;
    case DomainKind::ClosedUnitDisk:
      return s == SectorKind::TwoSidedAnnularSector;
    case DomainKind::Interval:
      return s == SectorKind::VerticalStrip;
    case DomainKind::Ellipse:
      return s == SectorKind::ParameterSector;
  }
  return false;
}

void require_match(const DomainModel& domain, const Sector& sector,
                   const char* what) {
  if (!kinds_match(domain.kind, sector.kind)) {
    throw DomainSectorMismatchError(std::string(what) +
                                    ": sector kind does not match domain " +
                                    domain.name());
  }
}

// Angle relative to alpha reduced into [0, 2pi); in-sector iff < beta - alpha.
bool angle_in(double theta, double alpha, double beta) {
  double rel = std::fmod(theta - alpha, kTwoPi);
  if (rel < 0) rel += kTwoPi;
  return rel < beta - alpha;
}

// z + sqrt(z-1)sqrt(z+1), the inverse Joukowski branch with |u| >= 1.
Complex joukowski_exterior(Complex z) {
  Complex u = z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  if (std::abs(u) < 1.0) u = 1.0 / u;  // guard rounding on the cut
  return u;
}

}  // namespace

double DomainModel::capacity() const {
  switch (kind) {
    case DomainKind::UnitCircle:
    case DomainKind::ClosedUnitDisk:
      return 1.0;
    case DomainKind::Interval:
      return (b - a) / 4.0;
    case DomainKind::Ellipse:
      return R / 2.0;
  }
  return 0.0;
}

std::string DomainModel::name() const {
  switch (kind) {
    case DomainKind::UnitCircle:
      return "circle";
    case DomainKind::ClosedUnitDisk:
      return "disk";
    case DomainKind::Interval:
      return "interval(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case DomainKind::Ellipse:
      return "ellipse(" + std::to_string(R) + ")";
  }
  return "?";
}

DomainModel unit_circle() {
  DomainModel d;
  d.kind = DomainKind::UnitCircle;
  return d;
}

DomainModel closed_unit_disk() {
  DomainModel d;
  d.kind = DomainKind::ClosedUnitDisk;
  return d;
}

DomainModel interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval: need a < b");
  DomainModel d;
  d.kind = DomainKind::Interval;
  d.a = a;
  d.b = b;
  return d;
}

DomainModel ellipse(double R) {
  if (!(R > 1.0)) throw std::invalid_argument("ellipse: need R > 1");
  DomainModel d;
  d.kind = DomainKind::Ellipse;
  d.R = R;
  return d;
}

Sector annular_sector(double r, double alpha, double beta) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("annular_sector: need 0 < r < 1");
  if (!(alpha < beta && beta <= alpha + kTwoPi + 1e-12))
    throw std::invalid_argument("annular_sector: need alpha < beta <= alpha+2pi");
  Sector s;
  s.kind = SectorKind::AnnularSector;
  s.r = r;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

Sector two_sided_annular_sector(double r, double alpha, double beta) {
  if (!(r > 1.0))
    throw std::invalid_argument("two_sided_annular_sector: need r > 1");
  if (!(alpha < beta && beta <= alpha + kTwoPi + 1e-12))
    throw std::invalid_argument(
        "two_sided_annular_sector: need alpha < beta <= alpha+2pi");
  Sector s;
  s.kind = SectorKind::TwoSidedAnnularSector;
  s.r = r;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

Sector vertical_strip(double x1, double x2) {
  if (!(x1 < x2)) throw std::invalid_argument("vertical_strip: need x1 < x2");
  Sector s;
  s.kind = SectorKind::VerticalStrip;
  s.x1 = x1;
  s.x2 = x2;
  return s;
}

Sector parameter_sector(double r, double alpha, double beta) {
  if (!(r > 1.0)) throw std::invalid_argument("parameter_sector: need r > 1");
  if (!(alpha < beta && beta <= alpha + kTwoPi + 1e-12))
    throw std::invalid_argument(
        "parameter_sector: need alpha < beta <= alpha+2pi");
  Sector s;
  s.kind = SectorKind::ParameterSector;
  s.r = r;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

std::vector<Sector> equal_measure_partition(const DomainModel& domain, int m,
                                            double r) {
  if (m < 1) throw std::invalid_argument("equal_measure_partition: m >= 1");
  std::vector<Sector> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    Sector s;
    switch (domain.kind) {
      case DomainKind::UnitCircle:
        s = annular_sector(r, kTwoPi * i / m, kTwoPi * (i + 1) / m);
        break;
      case DomainKind::ClosedUnitDisk:
        s = two_sided_annular_sector(r, kTwoPi * i / m, kTwoPi * (i + 1) / m);
        break;
      case DomainKind::Interval: {
        // Equal arcsine mass: boundaries at -cos(pi i/m) pulled to [a,b].
        double mid = 0.5 * (domain.a + domain.b);
        double half = 0.5 * (domain.b - domain.a);
        double lo = mid - half * std::cos(kPi * i / m);
        double hi = mid - half * std::cos(kPi * (i + 1) / m);
        s = vertical_strip(lo, hi);
        break;
      }
      case DomainKind::Ellipse:
        s = parameter_sector(r, kTwoPi * i / m, kTwoPi * (i + 1) / m);
        break;
    }
    s.id = i;
    out.push_back(s);
  }
  return out;
}

double equilibrium_measure(const DomainModel& domain, const Sector& sector) {
  require_match(domain, sector, "equilibrium_measure");
  switch (domain.kind) {
    case DomainKind::UnitCircle:
    case DomainKind::ClosedUnitDisk:
    case DomainKind::Ellipse:
      return (sector.beta - sector.alpha) / kTwoPi;
    case DomainKind::Interval: {
      double mid = 0.5 * (domain.a + domain.b);
      double half = 0.5 * (domain.b - domain.a);
      double s1 = std::clamp((sector.x1 - mid) / half, -1.0, 1.0);
      double s2 = std::clamp((sector.x2 - mid) / half, -1.0, 1.0);
      return (std::asin(s2) - std::asin(s1)) / kPi;
    }
  }
  return 0.0;
}

double green_function(const DomainModel& domain, Complex z) {
  switch (domain.kind) {
    case DomainKind::UnitCircle:
    case DomainKind::ClosedUnitDisk:
      return std::max(0.0, std::log(std::abs(z)));
    case DomainKind::Interval: {
      double mid = 0.5 * (domain.a + domain.b);
      double half = 0.5 * (domain.b - domain.a);
      Complex s = (z - mid) / half;
      return std::max(0.0, std::log(std::abs(joukowski_exterior(s))));
    }
    case DomainKind::Ellipse: {
      Complex u = joukowski_exterior(z);
      return std::max(0.0, std::log(std::abs(u) / domain.R));
    }
  }
  return 0.0;
}

Complex exterior_map(const DomainModel& domain, Complex z) {
  switch (domain.kind) {
    case DomainKind::UnitCircle:
    case DomainKind::ClosedUnitDisk:
      return z;
    case DomainKind::Interval: {
      double mid = 0.5 * (domain.a + domain.b);
      double half = 0.5 * (domain.b - domain.a);
      return joukowski_exterior((z - mid) / half);
    }
    case DomainKind::Ellipse:
      return joukowski_exterior(z) / domain.R;
  }
  return z;
}

bool sector_contains(const DomainModel& domain, const Sector& sector,
                     Complex z) {
  require_match(domain, sector, "sector_contains");
  switch (sector.kind) {
    case SectorKind::AnnularSector: {
      double m = std::abs(z);
      if (!(m >= sector.r && m < 1.0 / sector.r)) return false;
      return angle_in(std::arg(z), sector.alpha, sector.beta);
    }
    case SectorKind::TwoSidedAnnularSector: {
      double m = std::abs(z);
      if (!(m >= 1.0 / sector.r && m < sector.r)) return false;
      return angle_in(std::arg(z), sector.alpha, sector.beta);
    }
    case SectorKind::VerticalStrip:
      return z.real() >= sector.x1 && z.real() < sector.x2;
    case SectorKind::ParameterSector: {
      double mid = 0.0;  // ellipse is centered by construction
      (void)mid;
      Complex u = joukowski_exterior(z);
      double m = std::abs(u);
      if (!(m >= domain.R / sector.r && m < domain.R * sector.r)) return false;
      return angle_in(std::arg(u), sector.alpha, sector.beta);
    }
  }
  return false;
}

}  // namespace randpoly
