#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace randpoly {

using Complex = std::complex<double>;

struct DomainSectorMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class DomainKind { UnitCircle, ClosedUnitDisk, Interval, Ellipse };

/// Canonical compact set with closed-form capacity, equilibrium measure,
/// Green function and exterior conformal map.
struct DomainModel {
  DomainKind kind = DomainKind::UnitCircle;
  double a = -1.0;  // interval endpoints
  double b = 1.0;
  double R = 2.0;   // ellipse parameter, boundary z = (R e^{it} + e^{-it}/R)/2
  Complex interior_point{0.0, 0.0};  // disk-like kinds only

  double capacity() const;
  std::string name() const;
};

DomainModel unit_circle();
DomainModel closed_unit_disk();
DomainModel interval(double a, double b);
DomainModel ellipse(double R);

enum class SectorKind {
  AnnularSector,          // circle: r <= |z| < 1/r, alpha <= arg z < beta  (0 < r < 1)
  TwoSidedAnnularSector,  // disk: 1/r <= |z| < r, alpha <= arg z < beta    (r > 1)
  VerticalStrip,          // interval: x1 <= Re z < x2, unbounded vertically
  ParameterSector,        // ellipse: R/r <= |u(z)| < R r, alpha <= arg u < beta (r > 1)
};

struct Sector {
  SectorKind kind = SectorKind::AnnularSector;
  double r = 0.5;
  double alpha = 0.0;
  double beta = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  int id = 0;
};

Sector annular_sector(double r, double alpha, double beta);
Sector two_sided_annular_sector(double r, double alpha, double beta);
Sector vertical_strip(double x1, double x2);
Sector parameter_sector(double r, double alpha, double beta);

/// Equal-equilibrium-measure partition of the boundary into m cells:
/// equal angular sectors for circle/disk/ellipse, equal-arcsine-mass strips
/// for an interval. Radial extent taken from `r`.
std::vector<Sector> equal_measure_partition(const DomainModel& domain, int m,
                                            double r);

/// mu_E of the sector; exact closed forms.
double equilibrium_measure(const DomainModel& domain, const Sector& sector);

/// Green function of the complement with pole at infinity; 0 on E.
double green_function(const DomainModel& domain, Complex z);

/// Exterior conformal map with |Phi| >= 1 outside E, |Phi| = e^{g_E}.
Complex exterior_map(const DomainModel& domain, Complex z);

/// Half-open membership: lower bounds closed, upper bounds open.
bool sector_contains(const DomainModel& domain, const Sector& sector,
                     Complex z);

}  // namespace randpoly
