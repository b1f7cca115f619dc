#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "doctest.h"
#include "ellipsurf/errors.hpp"
#include "ellipsurf/oracle.hpp"
#include "ellipsurf/surface.hpp"
#include "support.hpp"

using namespace ellipsurf;
using ellipsurf::testing::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;

// Axes with c = 1 and the other two ratios drawn from [1, 10].
SemiAxes random_axes(std::mt19937& rng) {
  std::uniform_real_distribution<double> ratio(1.0, 10.0);
  return SemiAxes(ratio(rng), ratio(rng), 1.0);
}

}  // namespace

TEST_CASE("SemiAxes sorts and validates") {
  const SemiAxes s(1.0, 3.0, 2.0);
  CHECK(s.a() == 3.0);
  CHECK(s.b() == 2.0);
  CHECK(s.c() == 1.0);
  CHECK(s.permutation() == std::array<int, 3>{1, 2, 0});
  CHECK(s.scaled(2.0).a() == 6.0);
  CHECK(SemiAxes(1.0, 1.0, 1.0 - 1e-14).near_spherical());
  CHECK_FALSE(SemiAxes(1.0, 1.0, 0.999).near_spherical());
  CHECK_THROWS_AS(SemiAxes(1.0, 0.0, 1.0), InvalidAxesError);
  CHECK_THROWS_AS(SemiAxes(-1.0, 1.0, 1.0), InvalidAxesError);
  CHECK_THROWS_AS(SemiAxes(INFINITY, 1.0, 1.0), InvalidAxesError);
  CHECK_THROWS_AS(SemiAxes(NAN, 1.0, 1.0), InvalidAxesError);
  CHECK(to_string(SymmetryAxis::X) == "x");
}

TEST_CASE("hemisphere in every orientation") {
  const SemiAxes unit(1.0, 1.0, 1.0);
  for (SymmetryAxis axis : {SymmetryAxis::X, SymmetryAxis::Y, SymmetryAxis::Z}) {
    const AreaResult r = hemiellipsoid_area(unit, axis);
    CHECK(r.area == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(r.formula == AreaFormula::Sphere);
  }
}

TEST_CASE("z-axis hemiellipsoid") {
  const AreaResult r = hemiellipsoid_area_z(SemiAxes(3.0, 2.0, 1.0));
  CHECK(r.formula == AreaFormula::HemiZAppell);
  CHECK(r.diagnostics.converged);
  CHECK(r.area > 0.0);
  CHECK(r.validity.size() == 2);
  for (const DomainCheck& d : r.validity) CHECK(d.satisfied);
  CHECK(rel_err(r.area, 24.441073151291029848) < 1e-11);
  CHECK(rel_err(r.area, quad_hemi_area(SemiAxes(3.0, 2.0, 1.0), SymmetryAxis::Z).value) < 1e-7);

  const AreaResult flat = hemiellipsoid_area_z(SemiAxes(2.0, 2.0, 1.0));
  CHECK(rel_err(flat.area, 0.5 * oblate_spheroid_area(2.0, 1.0).area) < 1e-12);
  CHECK(rel_err(flat.area, 17.343765406690103254) < 1e-12);
}

TEST_CASE("y-axis hemiellipsoid") {
  const SemiAxes s(3.0, 2.0, 1.0);
  const AreaResult y = hemiellipsoid_area_y(s);
  CHECK(y.formula == AreaFormula::HemiYAppell);
  CHECK(y.area == hemiellipsoid_area_z(s).area);

  const SemiAxes t(2.0, 1.5, 1.0);
  const QuadResult q = quad_hemi_area(t, SymmetryAxis::Y);
  CHECK(rel_err(hemiellipsoid_area_y(t).area, q.value) < 1e-7);
  CHECK(rel_err(hemiellipsoid_area_y(t).area, 13.943221236751290316) < 1e-11);
}

TEST_CASE("x-axis hemiellipsoid, both branches") {
  const SemiAxes direct(1.2, 1.0, 0.9);
  const AreaResult d = hemiellipsoid_area_x(direct);
  CHECK(d.formula == AreaFormula::HemiXAppellDirect);
  CHECK(d.branch == CaseBranch::Direct);
  CHECK(rel_err(d.area, hemiellipsoid_area_z(direct).area) < 1e-8);
  CHECK(rel_err(d.area, 6.6874471600570938364) < 1e-11);

  const SemiAxes continued(2.0, 1.0, 0.8);
  const AreaResult c = hemiellipsoid_area_x(continued);
  CHECK(c.formula == AreaFormula::HemiXAppellContinued);
  CHECK(c.branch == CaseBranch::Continued);
  CHECK(c.diagnostics.converged);
  CHECK(rel_err(c.area, hemiellipsoid_area_z(continued).area) < 1e-8);
  CHECK(rel_err(c.area, 9.5499022223831672193) < 1e-11);
  CHECK(rel_err(c.area, quad_hemi_area(continued, SymmetryAxis::X).value) < 1e-8);
}

TEST_CASE("x-axis hemiellipsoid at and around a^2/b^2 = 2") {
  const double b = 1.0;
  const double c = 0.6;
  const double a_at = std::sqrt(2.0);
  const AreaResult at = hemiellipsoid_area_x(SemiAxes(a_at, b, c));
  CHECK(at.branch == CaseBranch::Direct);
  CHECK(at.diagnostics.converged);
  bool flagged = false;
  for (const DomainCheck& d : at.validity) flagged = flagged || !d.satisfied;
  CHECK(flagged);
  CHECK(rel_err(at.area, hemiellipsoid_area_z(SemiAxes(a_at, b, c)).area) < 1e-9);

  for (double eps : {-1e-6, -1e-10, 1e-10, 1e-6, 1e-3}) {
    const SemiAxes s(a_at * (1.0 + eps), b, c);
    const AreaResult x = hemiellipsoid_area_x(s);
    CHECK(x.diagnostics.converged);
    CHECK(rel_err(x.area, hemiellipsoid_area_z(s).area) < 1e-9);
  }
  // Just past the flagged band the continued branch takes over.
  CHECK(hemiellipsoid_area_x(SemiAxes(a_at * (1.0 + 1e-6), b, c)).branch == CaseBranch::Continued);
}

TEST_CASE("orientation equivalence over random axes") {
  std::mt19937 rng(61);
  for (int i = 0; i < 200; ++i) {
    const SemiAxes s = random_axes(rng);
    const double z = hemiellipsoid_area_z(s).area;
    const double y = hemiellipsoid_area_y(s).area;
    const double x = hemiellipsoid_area_x(s).area;
    CHECK(rel_err(y, z) < 1e-8);
    CHECK(rel_err(x, z) < 1e-8);
    CHECK(rel_err(x, y) < 1e-8);
  }
}

TEST_CASE("every hemi formula matches quadrature") {
  std::mt19937 rng(67);
  for (int i = 0; i < 20; ++i) {
    const SemiAxes s = random_axes(rng);
    for (SymmetryAxis axis : {SymmetryAxis::X, SymmetryAxis::Y, SymmetryAxis::Z}) {
      const double area = hemiellipsoid_area(s, axis).area;
      const QuadResult q = quad_hemi_area(s, axis);
      CHECK(std::abs(area - q.value) <= std::max(1e-6 * area, q.err_bound));
    }
  }
}

TEST_CASE("uniform scaling") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> k(0.01, 100.0);
  for (int i = 0; i < 50; ++i) {
    const SemiAxes s = random_axes(rng);
    const double f = k(rng);
    const SemiAxes t = s.scaled(f);
    CHECK(rel_err(ellipsoid_area(t).area, f * f * ellipsoid_area(s).area) < 1e-12);
    CHECK(rel_err(hemiellipsoid_area_x(t).area, f * f * hemiellipsoid_area_x(s).area) < 1e-12);
  }
}

TEST_CASE("ellipsoid area grows with each semi-axis") {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> step(1e-3, 0.5);
  for (int i = 0; i < 50; ++i) {
    const SemiAxes s = random_axes(rng);
    const double base = ellipsoid_area(s).area;
    const double h = step(rng);
    CHECK(ellipsoid_area(SemiAxes(s.a() + h, s.b(), s.c())).area > base);
    const double hb = std::min(h, s.a() - s.b());
    if (hb > 0.0) CHECK(ellipsoid_area(SemiAxes(s.a(), s.b() + hb, s.c())).area > base);
    const double hc = std::min(h, s.b() - s.c());
    if (hc > 0.0) CHECK(ellipsoid_area(SemiAxes(s.a(), s.b(), s.c() + hc)).area > base);
  }
}

TEST_CASE("ellipsoid is twice the z-axis hemiellipsoid") {
  std::mt19937 rng(79);
  for (int i = 0; i < 50; ++i) {
    const SemiAxes s = random_axes(rng);
    CHECK(ellipsoid_area(s).area == 2.0 * hemiellipsoid_area_z(s).area);
  }
  CHECK(ellipsoid_area(SemiAxes(1, 1, 1)).area == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(ellipsoid_area(SemiAxes(3, 2, 1)).formula == AreaFormula::EllipsoidAppell);
  const SemiAxes t(2.0, 1.5, 1.0);
  CHECK(rel_err(ellipsoid_area(t).area, 2.0 * quad_hemi_area(t, SymmetryAxis::Z).value) < 1e-7);
}

TEST_CASE("degenerate limits") {
  // Exactly at the degenerate point.
  for (double r : {1.1, 2.0, 7.0}) {
    CHECK(rel_err(ellipsoid_area(SemiAxes(r, r, 1.0)).area, oblate_spheroid_area_series(r, 1.0).area) < 1e-9);
    CHECK(rel_err(ellipsoid_area(SemiAxes(r, 1.0, 1.0)).area, prolate_spheroid_area_series(r, 1.0).area) < 1e-9);
  }
  CHECK(rel_err(ellipsoid_area(SemiAxes(2.0, 2.0, 2.0)).area, sphere_area(2.0).area) < 1e-12);

  // At an offset of 1e-4 the area itself differs from its limit at first
  // order; a three-point Richardson extrapolation removes the first two
  // orders and leaves a residual of order 1e-12.
  const double d = 1e-4;
  const auto extrapolate = [d](auto area_at) {
    return 3.0 * area_at(d) - 3.0 * area_at(2.0 * d) + area_at(3.0 * d);
  };
  for (double r : {1.1, 2.0, 7.0}) {
    const double oblate = extrapolate([r](double h) { return ellipsoid_area(SemiAxes(r, r * (1 - h), 1)).area; });
    CHECK(rel_err(oblate, oblate_spheroid_area(r, 1.0).area) < 1e-9);
    const double prolate = extrapolate([r](double h) { return ellipsoid_area(SemiAxes(r, 1, 1 - h)).area; });
    CHECK(rel_err(prolate, prolate_spheroid_area(r, 1.0).area) < 1e-9);
    const double sphere =
        extrapolate([r](double h) { return ellipsoid_area(SemiAxes(r, r * (1 - h), r * (1 - 2 * h))).area; });
    CHECK(rel_err(sphere, sphere_area(r).area) < 1e-9);
  }
  // One-sided differences at the offset are first order in it.
  const double near = ellipsoid_area(SemiAxes(2.0, 2.0 * (1 - d), 1.0)).area;
  CHECK(rel_err(near, oblate_spheroid_area(2.0, 1.0).area) < 1e-3);
}

TEST_CASE("oblate spheroid") {
  const double expected = 2.0 * kPi * 4.0 * (1.0 + std::atanh(std::sqrt(0.75)) / (2.0 * std::sqrt(3.0)));
  const AreaResult r = oblate_spheroid_area(2.0, 1.0);
  CHECK(r.formula == AreaFormula::OblateClosed);
  CHECK(rel_err(r.area, expected) < 1e-15);
  CHECK(rel_err(r.area, 4.0 * kPi * f21_half_two_threehalves(0.75)) < 1e-12);
  CHECK(rel_err(r.area, oblate_spheroid_area_series(2.0, 1.0).area) < 1e-12);
  CHECK(rel_err(oblate_spheroid_area(1.0, 1.0 - 1e-9).area, 4.0 * kPi) < 1e-8);
  CHECK_THROWS_AS(oblate_spheroid_area(1.0, 1.0), InvalidAxesError);
  CHECK_THROWS_AS(oblate_spheroid_area(1.0, 2.0), InvalidAxesError);
  CHECK_THROWS_AS(oblate_spheroid_area_series(2.0, 0.0), InvalidAxesError);
}

TEST_CASE("prolate spheroid") {
  const AreaResult r = prolate_spheroid_area(2.0, 1.0);
  CHECK(r.formula == AreaFormula::ProlateClosedAtan);
  CHECK(rel_err(r.area, 2.0 * kPi * (1.0 + 4.0 * (kPi / 3.0) / std::sqrt(3.0))) < 1e-15);
  CHECK(rel_err(prolate_spheroid_area(3.0, 1.0).area, prolate_spheroid_area_complementary(3.0, 1.0).area) < 1e-12);

  const AreaResult direct = prolate_spheroid_area_series(1.2, 1.0);
  CHECK(direct.formula == AreaFormula::ProlateSeriesDirect);
  CHECK(rel_err(direct.area, 4.0 * kPi * 1.44 * gauss_2f1({2.0, 0.5, 1.5, -0.44}).value) < 1e-15);
  CHECK(rel_err(direct.area, prolate_spheroid_area(1.2, 1.0).area) < 1e-10);

  const AreaResult continued = prolate_spheroid_area_series(3.0, 1.0);
  CHECK(continued.formula == AreaFormula::ProlateSeriesContinued);
  CHECK(rel_err(continued.area, prolate_spheroid_area(3.0, 1.0).area) < 1e-10);

  for (double a : {1.05, 1.3, 2.0, 4.0, 10.0}) {
    CHECK(rel_err(prolate_spheroid_area_extended(a, 1.0).area, prolate_spheroid_area(a, 1.0).area) < 1e-9);
  }
  CHECK_THROWS_AS(prolate_spheroid_area(1.0, 1.0), InvalidAxesError);
  CHECK_THROWS_AS(prolate_spheroid_area_series(0.5, 1.0), InvalidAxesError);
  CHECK_THROWS_AS(prolate_spheroid_area_complementary(1.0, 2.0), InvalidAxesError);
  CHECK_THROWS_AS(prolate_spheroid_area_extended(1.0, 1.0), InvalidAxesError);
}

TEST_CASE("sphere") {
  CHECK(sphere_area(1.0).area == 4.0 * kPi);
  CHECK(sphere_area(2.0).area == 16.0 * kPi);
  CHECK(rel_err(sphere_area(1.0).area, ellipsoid_area(SemiAxes(1, 1, 1)).area) < 1e-12);
  CHECK_THROWS_AS(sphere_area(0.0), InvalidAxesError);
  CHECK_THROWS_AS(sphere_area(-1.0), InvalidAxesError);
  CHECK_THROWS_AS(sphere_area(NAN), InvalidAxesError);
}

TEST_CASE("formula tags") {
  CHECK(to_string(AreaFormula::HemiXAppellContinued) == "hemi-x-appell-continued");
  CHECK(to_string(AreaFormula::Sphere) == "sphere");
  CHECK(to_string(CaseBranch::Direct) == "direct");
}

TEST_CASE("areas are deterministic across threads") {
  const SemiAxes s(5.0, 1.3, 0.7);
  const double ref_x = hemiellipsoid_area_x(s).area;
  const double ref_z = hemiellipsoid_area_z(s).area;
  std::vector<int> mismatches(4, 0);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < mismatches.size(); ++t) {
    workers.emplace_back([&, t] {
      for (int rep = 0; rep < 20; ++rep) {
        if (hemiellipsoid_area_x(s).area != ref_x) ++mismatches[t];
        if (hemiellipsoid_area_z(s).area != ref_z) ++mismatches[t];
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int m : mismatches) CHECK(m == 0);
}
