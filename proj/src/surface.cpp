#include "ellipsurf/surface.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ellipsurf/appell.hpp"
#include "ellipsurf/errors.hpp"

namespace ellipsurf {

namespace {

constexpr const char* kModule = "surface";
constexpr double kPi = std::numbers::pi;

// Relative half-width of the band around a^2/b^2 = 2 that is flagged.
constexpr double kBoundaryBand = 1e-9;

// 1 - (q/p)^2 without cancellation.
double one_minus_ratio_sq(double q, double p) { return (p - q) * (p + q) / (p * p); }

AreaResult elementary(double area, AreaFormula formula) {
  AreaResult r;
  r.area = area;
  r.formula = formula;
  r.diagnostics = {area, 0, 0.0, true};
  return r;
}

DomainCheck unit_interval_check(std::string condition, double value) {
  return {std::move(condition), value, std::abs(value) < 1.0};
}

// F1 through the dispatcher; at points on the unit circle the double series
// is not convergent and the single series supplies the continued value.
SeriesValue appell_value(const AppellF1Params& p, const EvalConfig& cfg) {
  if (classify(p) == ConvergenceClass::OutsideDomain) {
    return f1_single_series(p, cfg.with_raised_cap(10));
  }
  return f1(p, cfg);
}

AreaResult hemi_major_axis_form(const SemiAxes& axes, const EvalConfig& cfg, AreaFormula formula) {
  cfg.validate();
  if (axes.near_spherical()) {
    AreaResult r = elementary(2.0 * kPi * axes.a() * axes.a(), AreaFormula::Sphere);
    return r;
  }
  const double a = axes.a();
  const double b = axes.b();
  const double c = axes.c();
  const double x = one_minus_ratio_sq(b, a);
  const double y = one_minus_ratio_sq(c, a);
  const SeriesValue f = appell_value({2.0, 0.5, 0.5, 1.5, x, y}, cfg);
  const double prefactor = 2.0 * kPi * (b * b) * (c * c) / (a * a);

  AreaResult r;
  r.area = prefactor * f.value;
  r.err_estimate = prefactor * f.abs_err_estimate;
  r.formula = formula;
  r.diagnostics = f;
  r.validity = {unit_interval_check("|1-b^2/a^2| < 1", x), unit_interval_check("|1-c^2/a^2| < 1", y)};
  return r;
}

}  // namespace

std::string_view to_string(AreaFormula formula) noexcept {
  switch (formula) {
    case AreaFormula::HemiZAppell: return "hemi-z-appell";
    case AreaFormula::HemiYAppell: return "hemi-y-appell";
    case AreaFormula::HemiXAppellDirect: return "hemi-x-appell-direct";
    case AreaFormula::HemiXAppellContinued: return "hemi-x-appell-continued";
    case AreaFormula::EllipsoidAppell: return "ellipsoid-appell";
    case AreaFormula::OblateSeries: return "oblate-2f1";
    case AreaFormula::OblateClosed: return "oblate-atanh";
    case AreaFormula::ProlateSeriesDirect: return "prolate-2f1-direct";
    case AreaFormula::ProlateSeriesContinued: return "prolate-2f1-continued";
    case AreaFormula::ProlateClosedAtan: return "prolate-atan";
    case AreaFormula::ProlateClosedComplementary: return "prolate-atan-complementary";
    case AreaFormula::ProlateClosedExtended: return "prolate-atanh-extended";
    case AreaFormula::Sphere: return "sphere";
  }
  return "sphere";
}

std::string_view to_string(CaseBranch branch) noexcept {
  switch (branch) {
    case CaseBranch::None: return "none";
    case CaseBranch::Direct: return "direct";
    case CaseBranch::Continued: return "continued";
  }
  return "none";
}

AreaResult hemiellipsoid_area_z(const SemiAxes& axes, const EvalConfig& cfg) {
  return hemi_major_axis_form(axes, cfg, AreaFormula::HemiZAppell);
}

AreaResult hemiellipsoid_area_y(const SemiAxes& axes, const EvalConfig& cfg) {
  return hemi_major_axis_form(axes, cfg, AreaFormula::HemiYAppell);
}

AreaResult hemiellipsoid_area_x(const SemiAxes& axes, const EvalConfig& cfg) {
  cfg.validate();
  if (axes.near_spherical()) return elementary(2.0 * kPi * axes.a() * axes.a(), AreaFormula::Sphere);

  const double a = axes.a();
  const double b = axes.b();
  const double c = axes.c();
  const double ratio = (a * a) / (b * b);
  const bool near_boundary = std::abs(ratio - 2.0) <= 2.0 * kBoundaryBand;
  const double x = one_minus_ratio_sq(c, b);

  AreaResult r;
  if (ratio <= 2.0 * (1.0 + kBoundaryBand)) {
    const double y = one_minus_ratio_sq(a, b);
    const SeriesValue f = appell_value({2.0, 0.5, 0.5, 1.5, x, y}, cfg);
    const double prefactor = 2.0 * kPi * (a * a) * (c * c) / (b * b);
    r.area = prefactor * f.value;
    r.err_estimate = prefactor * f.abs_err_estimate;
    r.formula = AreaFormula::HemiXAppellDirect;
    r.branch = CaseBranch::Direct;
    r.diagnostics = f;
    r.validity = {unit_interval_check("|1-c^2/b^2| < 1", x),
                  unit_interval_check("|1-a^2/b^2| < 1", y)};
  } else {
    const double a2_minus_b2 = (a - b) * (a + b);
    const double b2_minus_c2 = (b - c) * (b + c);
    const double shared = -b2_minus_c2 / a2_minus_b2;  // (b^2-c^2)/(b^2-a^2)
    const double x2 = -(b * b) / a2_minus_b2;          // b^2/(b^2-a^2)
    const SeriesValue f_first = appell_value({0.5, 1.5, 0.5, 1.0, x, shared}, cfg);
    const SeriesValue f_second = appell_value({2.0, 1.5, 0.5, 2.5, x2, shared}, cfg);
    const double pre_first = kPi * kPi * (a * a) * (c * c) / (2.0 * b * std::sqrt(a2_minus_b2));
    const double pre_second =
        2.0 * kPi * (a * a) * (b * b) * (c * c) / (3.0 * a2_minus_b2 * a2_minus_b2);
    r.area = pre_first * f_first.value - pre_second * f_second.value;
    r.err_estimate = pre_first * f_first.abs_err_estimate + pre_second * f_second.abs_err_estimate;
    r.formula = AreaFormula::HemiXAppellContinued;
    r.branch = CaseBranch::Continued;
    r.diagnostics = f_first;
    r.diagnostics.terms_used += f_second.terms_used;
    r.diagnostics.converged = f_first.converged && f_second.converged;
    r.validity = {unit_interval_check("|1-c^2/b^2| < 1", x),
                  unit_interval_check("|b^2/(b^2-a^2)| < 1", x2),
                  unit_interval_check("|(b^2-c^2)/(b^2-a^2)| < 1", shared)};
  }
  r.validity.push_back({"a^2/b^2 away from 2 (relative band 1e-9)", ratio, !near_boundary});
  return r;
}

AreaResult hemiellipsoid_area(const SemiAxes& axes, SymmetryAxis axis, const EvalConfig& cfg) {
  switch (axis) {
    case SymmetryAxis::X: return hemiellipsoid_area_x(axes, cfg);
    case SymmetryAxis::Y: return hemiellipsoid_area_y(axes, cfg);
    case SymmetryAxis::Z: return hemiellipsoid_area_z(axes, cfg);
  }
  return hemiellipsoid_area_z(axes, cfg);
}

AreaResult ellipsoid_area(const SemiAxes& axes, const EvalConfig& cfg) {
  AreaResult r = hemiellipsoid_area_z(axes, cfg);
  r.area *= 2.0;
  r.err_estimate *= 2.0;
  if (r.formula != AreaFormula::Sphere) r.formula = AreaFormula::EllipsoidAppell;
  return r;
}

AreaResult oblate_spheroid_area(double a, double c) {
  if (!(c > 0.0) || !(a > c) || !std::isfinite(a)) {
    throw InvalidAxesError(kModule, "oblate spheroid needs a > c > 0");
  }
  const double ecc_sq = one_minus_ratio_sq(c, a);
  return elementary(2.0 * kPi * a * a * (1.0 + (c * c) / (a * a) * atanh_sqrt_ratio(ecc_sq)),
                    AreaFormula::OblateClosed);
}

AreaResult oblate_spheroid_area_series(double a, double c, const EvalConfig& cfg) {
  if (!(c > 0.0) || !(a > c) || !std::isfinite(a)) {
    throw InvalidAxesError(kModule, "oblate spheroid needs a > c > 0");
  }
  const double z = one_minus_ratio_sq(c, a);
  const SeriesValue f = gauss_2f1({2.0, 0.5, 1.5, z}, cfg);
  AreaResult r;
  r.area = 4.0 * kPi * c * c * f.value;
  r.err_estimate = 4.0 * kPi * c * c * f.abs_err_estimate;
  r.formula = AreaFormula::OblateSeries;
  r.diagnostics = f;
  r.validity = {{"0 < 1-c^2/a^2 < 1", z, z > 0.0 && z < 1.0}};
  return r;
}

AreaResult prolate_spheroid_area(double a, double b) {
  if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) {
    throw InvalidAxesError(kModule, "prolate spheroid needs a > b > 0");
  }
  const double u_sq = (a - b) * (a + b) / (b * b);
  return elementary(2.0 * kPi * b * b * (1.0 + (a * a) / (b * b) * atanh_sqrt_ratio(-u_sq)),
                    AreaFormula::ProlateClosedAtan);
}

AreaResult prolate_spheroid_area_series(double a, double b, const EvalConfig& cfg) {
  if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) {
    throw InvalidAxesError(kModule, "prolate spheroid needs a > b > 0");
  }
  const double ratio = (a * a) / (b * b);
  AreaResult r;
  if (ratio <= 2.0) {
    const double z = one_minus_ratio_sq(a, b);
    const SeriesValue f = gauss_2f1({2.0, 0.5, 1.5, z}, cfg);
    r.area = 4.0 * kPi * a * a * f.value;
    r.err_estimate = 4.0 * kPi * a * a * f.abs_err_estimate;
    r.formula = AreaFormula::ProlateSeriesDirect;
    r.branch = CaseBranch::Direct;
    r.diagnostics = f;
    r.validity = {unit_interval_check("|1-a^2/b^2| < 1", z)};
  } else {
    const double a2_minus_b2 = (a - b) * (a + b);
    const double z = -(b * b) / a2_minus_b2;
    const SeriesValue f = gauss_2f1({2.0, 1.5, 2.5, z}, cfg);
    const double scale = 4.0 * kPi * (a * a) * std::pow(b, 4) / (3.0 * a2_minus_b2 * a2_minus_b2);
    r.area = kPi * kPi * a * a * b / std::sqrt(a2_minus_b2) - scale * f.value;
    r.err_estimate = scale * f.abs_err_estimate;
    r.formula = AreaFormula::ProlateSeriesContinued;
    r.branch = CaseBranch::Continued;
    r.diagnostics = f;
    r.validity = {unit_interval_check("|b^2/(b^2-a^2)| < 1", z)};
  }
  return r;
}

AreaResult prolate_spheroid_area_complementary(double a, double b) {
  if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) {
    throw InvalidAxesError(kModule, "prolate spheroid needs a > b > 0");
  }
  const double root = std::sqrt((a - b) * (a + b));
  const double area = 2.0 * kPi * b * b *
                      (1.0 + kPi * a * a / (2.0 * b * root) - a * a * std::atan(b / root) / (b * root));
  return elementary(area, AreaFormula::ProlateClosedComplementary);
}

AreaResult prolate_spheroid_area_extended(double a, double b) {
  if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) {
    throw InvalidAxesError(kModule, "prolate spheroid needs a > b > 0");
  }
  const double a2_minus_b2 = (a - b) * (a + b);
  const double z = -(b * b) / a2_minus_b2;
  const double area = kPi * kPi * a * a * b / std::sqrt(a2_minus_b2) -
                      2.0 * kPi * a * a * b * b / a2_minus_b2 *
                          (-a2_minus_b2 / (a * a) + atanh_sqrt_ratio(z));
  AreaResult r = elementary(area, AreaFormula::ProlateClosedExtended);
  r.validity = {{"b^2/(b^2-a^2) < 1, nonzero", z, z < 1.0 && z != 0.0}};
  return r;
}

AreaResult sphere_area(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidAxesError(kModule, "sphere needs a > 0");
  return elementary(4.0 * kPi * a * a, AreaFormula::Sphere);
}

}  // namespace ellipsurf
