#pragma once

// Curved surface areas of hemiellipsoids, ellipsoids, spheroids and spheres
// from Appell F1 and Gauss 2F1 closed forms.

#include <string>
#include <string_view>
#include <vector>

#include "ellipsurf/axes.hpp"
#include "ellipsurf/hyperfn.hpp"

namespace ellipsurf {

/// Which closed form produced an area.
enum class AreaFormula {
  HemiZAppell,                 // z-axis hemiellipsoid, F1 in 1-b^2/a^2, 1-c^2/a^2
  HemiYAppell,                 // y-axis hemiellipsoid, same F1 as the z-axis form
  HemiXAppellDirect,           // x-axis hemiellipsoid, F1 in 1-c^2/b^2, 1-a^2/b^2
  HemiXAppellContinued,        // x-axis hemiellipsoid, difference of two F1 at 1/(1-a^2/b^2)
  EllipsoidAppell,             // twice the z-axis hemiellipsoid
  OblateSeries,                // 4 pi c^2 2F1(2, 1/2; 3/2; 1-c^2/a^2)
  OblateClosed,                // elementary atanh form
  ProlateSeriesDirect,         // 4 pi a^2 2F1(2, 1/2; 3/2; 1-a^2/b^2)
  ProlateSeriesContinued,      // 2F1(2, 3/2; 5/2; b^2/(b^2-a^2)) form
  ProlateClosedAtan,           // elementary atan form, valid for every a > b
  ProlateClosedComplementary,  // pi/2 - atan(1/u) rewriting of the atan form
  ProlateClosedExtended,       // atanh form at b^2/(b^2-a^2), continued to negative argument
  Sphere,
};

std::string_view to_string(AreaFormula formula) noexcept;

/// Branch of the x-axis formula: whether 1 - a^2/b^2 stays inside the unit
/// interval (Direct) or needs the 1/z continuation (Continued).
enum class CaseBranch { None, Direct, Continued };

std::string_view to_string(CaseBranch branch) noexcept;

/// One domain inequality that was checked before evaluating a formula.
struct DomainCheck {
  std::string condition;
  double value;
  bool satisfied;
};

struct AreaResult {
  double area = 0.0;
  /// Absolute error estimate propagated from the series diagnostics.
  double err_estimate = 0.0;
  AreaFormula formula = AreaFormula::Sphere;
  CaseBranch branch = CaseBranch::None;
  /// Diagnostics of the dominant series; terms_used == 0 for elementary forms.
  SeriesValue diagnostics;
  std::vector<DomainCheck> validity;
};

AreaResult hemiellipsoid_area_z(const SemiAxes& axes, const EvalConfig& cfg = {});
AreaResult hemiellipsoid_area_y(const SemiAxes& axes, const EvalConfig& cfg = {});
/// Direct branch when a^2/b^2 <= 2 (the exact boundary is assigned here and
/// flagged), continued branch above.
AreaResult hemiellipsoid_area_x(const SemiAxes& axes, const EvalConfig& cfg = {});
AreaResult hemiellipsoid_area(const SemiAxes& axes, SymmetryAxis axis, const EvalConfig& cfg = {});

AreaResult ellipsoid_area(const SemiAxes& axes, const EvalConfig& cfg = {});

/// Spheroid with equatorial radius a and polar semi-axis c, a > c > 0.
AreaResult oblate_spheroid_area(double a, double c);
AreaResult oblate_spheroid_area_series(double a, double c, const EvalConfig& cfg = {});

/// Spheroid with polar semi-axis a and equatorial radius b, a > b > 0.
AreaResult prolate_spheroid_area(double a, double b);
/// Direct 2F1 form for a^2/b^2 <= 2, continued 2F1 form above.
AreaResult prolate_spheroid_area_series(double a, double b, const EvalConfig& cfg = {});
AreaResult prolate_spheroid_area_complementary(double a, double b);
AreaResult prolate_spheroid_area_extended(double a, double b);

AreaResult sphere_area(double a);

}  // namespace ellipsurf
