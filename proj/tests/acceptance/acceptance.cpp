// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/support.hpp"
#include "ellipsurf/appell.hpp"
#include "ellipsurf/cli.hpp"
#include "ellipsurf/oracle.hpp"
#include "ellipsurf/surface.hpp"
#include "json.hpp"

using namespace ellipsurf;
using ellipsurf::testing::f1_brute_force;
using ellipsurf::testing::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  double worst = 0.0;  // worst observed discrepancy, in the metric of the criterion
  std::string note;

  void observe(double discrepancy, double tolerance) {
    if (!(discrepancy <= tolerance)) ok = false;
    if (std::isnan(discrepancy) || discrepancy > worst) worst = discrepancy;
  }
};

int failures = 0;

void criterion(const char* name, double budget_ms, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = ms <= budget_ms;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %-34s worst=%.3e  %s  time=%.3f ms (budget %.0f ms)%s\n", pass ? "PASS" : "FAIL", name,
              o.worst, o.note.c_str(), ms, budget_ms, in_time ? "" : " over budget");
  std::fflush(stdout);
}

// c = 1, the other two axes drawn from [1, 10].
SemiAxes random_axes(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ratio(1.0, 10.0);
  return SemiAxes(ratio(rng), ratio(rng), 1.0);
}

}  // namespace

int main() {
  criterion("sphere-exactness", 1.0, [] {
    Outcome o;
    for (double r : {0.1, 1.0, 10.0}) {
      std::ostringstream out, err;
      char arg[32];
      std::snprintf(arg, sizeof arg, "%.17g", r);
      const int code = run_cli({"area", "--shape", "sphere", "--a", arg}, out, err);
      if (code != kExitOk) o.ok = false;
      const double v = nlohmann::json::parse(out.str())["value"].get<double>();
      o.observe(rel_err(v, 4.0 * kPi * r * r), 1e-14);
    }
    o.note = "rel, r in {0.1, 1, 10}";
    return o;
  });

  criterion("oblate-closed-vs-series", 100.0, [] {
    Outcome o;
    for (int k = 1; k <= 20; ++k) {
      const double a = 1.0 + 9.0 * k / 20.0;
      o.observe(rel_err(oblate_spheroid_area(a, 1.0).area, oblate_spheroid_area_series(a, 1.0).area), 1e-11);
    }
    o.note = "rel, 20 values a/c in (1, 10]";
    return o;
  });

  criterion("prolate-closed-vs-series", 500.0, [] {
    Outcome o;
    Outcome complementary;
    for (int k = 1; k <= 20; ++k) {
      // a^2/b^2 < 2
      const double a1 = 1.0 + (std::sqrt(2.0) - 1.0) * k / 21.0;
      const AreaResult s1 = prolate_spheroid_area_series(a1, 1.0);
      if (s1.formula != AreaFormula::ProlateSeriesDirect) o.ok = false;
      o.observe(rel_err(prolate_spheroid_area(a1, 1.0).area, s1.area), 1e-10);
      // a^2/b^2 > 2
      const double a2 = std::sqrt(2.0) + (10.0 - std::sqrt(2.0)) * k / 20.0;
      const AreaResult s2 = prolate_spheroid_area_series(a2, 1.0);
      if (s2.formula != AreaFormula::ProlateSeriesContinued) o.ok = false;
      o.observe(rel_err(prolate_spheroid_area(a2, 1.0).area, s2.area), 1e-10);
      complementary.observe(
          rel_err(prolate_spheroid_area(a2, 1.0).area, prolate_spheroid_area_complementary(a2, 1.0).area), 1e-12);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "rel, 20 per regime; atan vs complementary %.3e (tol 1e-12)", complementary.worst);
    o.note = buf;
    o.ok = o.ok && complementary.ok;
    return o;
  });

  criterion("hemi-formula-equivalence", 30000.0, [] {
    Outcome o;
    std::mt19937_64 rng(2024);
    int direct = 0, continued = 0;
    for (int i = 0; i < 200; ++i) {
      const SemiAxes s = random_axes(rng);
      const double z = hemiellipsoid_area_z(s).area;
      const double y = hemiellipsoid_area_y(s).area;
      const AreaResult x = hemiellipsoid_area_x(s);
      (x.branch == CaseBranch::Continued ? continued : direct)++;
      o.observe(rel_err(y, z), 1e-8);
      o.observe(rel_err(x.area, z), 1e-8);
      o.observe(rel_err(x.area, y), 1e-8);
    }
    if (direct == 0 || continued == 0) o.ok = false;
    o.note = "rel, 200 axes (" + std::to_string(direct) + " direct, " + std::to_string(continued) + " continued)";
    return o;
  });

  criterion("hemi-formula-vs-quadrature", 60000.0, [] {
    Outcome o;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const SemiAxes s = random_axes(rng);
      const double area = hemiellipsoid_area_z(s).area;
      const QuadResult q = quad_hemi_area(s, SymmetryAxis::Z);
      const double allowed = std::max(1e-6 * area, q.err_bound);
      o.observe(std::abs(area - q.value) / allowed, 1.0);
    }
    o.note = "|diff| / max(1e-6 area, err_bound), 50 axes";
    return o;
  });

  criterion("definite-integral-identities", 10000.0, [] {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> len(0.2, 5.0);
    std::uniform_real_distribution<double> expo(-0.9, 0.9);
    for (int i = 0; i < 100; ++i) {
      const double u = len(rng), v = len(rng), s = expo(rng);
      for (const ThetaIntegralParams p : {ThetaIntegralParams{std::max(u, v), std::min(u, v), s},
                                          ThetaIntegralParams{std::min(u, v), std::max(u, v), s}}) {
        const QuadResult q = quad_theta_integral(p);
        const SeriesValue c = theta_integral_closed(p);
        o.observe(std::abs(q.value - c.value) / std::max(1e-8, q.err_bound + c.abs_err_estimate), 1.0);
      }
    }
    for (double s : {-0.9, -0.5, 0.0, 0.3, 0.5, 0.9}) {
      const QuadResult q = quad_radial_integral(s);
      const double diff = std::abs(q.value - radial_integral_closed(s));
      o.observe(q.err_bound > 0.0 ? diff / q.err_bound : (diff == 0.0 ? 0.0 : INFINITY), 1.0);
    }
    o.note = "|diff| / bound; 100 angular samples x 2 orderings, 6 radial";
    return o;
  });

  criterion("continuation-below-minus-one", 1000.0, [] {
    Outcome o;
    for (double z : {-1.5, -3.0, -10.0, -100.0}) {
      const SeriesValue c = gauss_2f1_continued({0.5, 2.0, 1.5, z});
      const double u = std::sqrt(-z);
      const double closed = 0.5 * (1.0 / (1.0 - z) + std::atan(u) / u);
      o.observe(rel_err(c.value, closed), 1e-9);
      o.observe(rel_err(c.value, euler_2f1_oracle({2.0, 0.5, 1.5, z}).value), 1e-9);
    }
    o.note = "rel vs atan form and Euler integral";
    return o;
  });

  criterion("appell-cross-validation", 30000.0, [] {
    Outcome o;
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> arg(-0.8, 0.8);
    const auto param = [&] { return 3.0 * (1.0 - unit(rng)); };  // (0, 3]
    for (int i = 0; i < 500; ++i) {
      const double a = param(), b = param(), c = param(), d = param();
      const double x = arg(rng), y = arg(rng);
      const double brute = static_cast<double>(f1_brute_force(a, b, c, d, x, y));
      const SeriesValue dbl = f1_double_series({a, b, c, d, x, y});
      const SeriesValue sgl = f1_single_series({a, b, c, d, x, y});
      if (!dbl.converged || !sgl.converged) o.ok = false;
      o.observe(rel_err(dbl.value, brute), 1e-10);
      o.observe(rel_err(sgl.value, brute), 1e-10);
      o.observe(rel_err(dbl.value, sgl.value), 1e-10);
    }
    o.note = "rel, 500 parameter sets, brute force m,n <= 200";
    return o;
  });

  criterion("extended-prolate-form", 1000.0, [] {
    Outcome o;
    int below = 0, above = 0;
    for (int k = 1; k <= 10; ++k) {
      // b^2/(b^2-a^2) < -1 for 1 < a^2/b^2 < 2, in (-1, 0) beyond.
      const double a_low = std::sqrt(1.0 + 0.999 * k / 10.0);
      const double a_high = std::sqrt(2.0 + 98.0 * k / 10.0);
      for (double a : {a_low, a_high}) {
        const double z = 1.0 / (1.0 - a * a);
        (z < -1.0 ? below : above)++;
        o.observe(rel_err(prolate_spheroid_area_extended(a, 1.0).area, prolate_spheroid_area(a, 1.0).area), 1e-9);
      }
    }
    if (below != 10 || above != 10) o.ok = false;
    o.note = "rel, 10 samples with argument < -1, 10 in (-1, 0)";
    return o;
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASSED" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
