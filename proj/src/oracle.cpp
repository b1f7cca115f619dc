#include "ellipsurf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipsurf/errors.hpp"

namespace ellipsurf {

namespace {

constexpr const char* kModule = "oracle";
constexpr double kHalfPi = 0.5 * std::numbers::pi;

QuadResult combine(const QuadResult& x, const QuadResult& y) {
  return {x.value + y.value, x.err_bound + y.err_bound, x.panels_used + y.panels_used,
          x.converged && y.converged};
}

// int_0^1 t^{p-1} (1-t)^{q-1} g(t) dt, split at 1/2. On a half whose
// endpoint exponent is below zero the substitution t = u^{1/p} (or
// 1 - t = v^{1/q}) turns the singular weight into the constant 1/p (1/q).
template <typename G>
QuadResult beta_weighted_integral(double p, double q, G g, const QuadratureSpec& spec) {
  const QuadratureSpec half_spec = spec.tightened(0.5);

  QuadResult left;
  if (p < 1.0) {
    left = integrate(
        [&](double u) {
          const double t = std::pow(u, 1.0 / p);
          return std::pow(1.0 - t, q - 1.0) * g(t) / p;
        },
        0.0, std::pow(0.5, p), half_spec);
  } else {
    left = integrate([&](double t) { return std::pow(t, p - 1.0) * std::pow(1.0 - t, q - 1.0) * g(t); },
                     0.0, 0.5, half_spec);
  }

  QuadResult right;
  if (q < 1.0) {
    right = integrate(
        [&](double v) {
          const double t = 1.0 - std::pow(v, 1.0 / q);
          return std::pow(t, p - 1.0) * g(t) / q;
        },
        0.0, std::pow(0.5, q), half_spec);
  } else {
    right = integrate([&](double t) { return std::pow(t, p - 1.0) * std::pow(1.0 - t, q - 1.0) * g(t); },
                      0.5, 1.0, half_spec);
  }
  return combine(left, right);
}

}  // namespace

QuadResult quad_hemi_area(const SemiAxes& axes, SymmetryAxis axis, const QuadratureSpec& spec) {
  spec.validate();
  // (p, q) span the base plane, h is the height along the symmetry axis.
  double p = axes.a();
  double q = axes.b();
  double h = axes.c();
  if (axis == SymmetryAxis::Y) {
    q = axes.c();
    h = axes.b();
  } else if (axis == SymmetryAxis::X) {
    p = axes.b();
    q = axes.c();
    h = axes.a();
  }

  const QuadratureSpec inner_spec = spec.tightened(0.1);
  double worst_inner_err = 0.0;
  bool inner_converged = true;
  auto slice = [&](double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double tilt = h * h * (ct * ct / (p * p) + st * st / (q * q));
    const QuadResult r = integrate(
        [tilt](double phi) {
          const double s = std::sin(phi);
          const double c = std::cos(phi);
          return s * std::sqrt(c * c + tilt * s * s);
        },
        0.0, kHalfPi, inner_spec);
    worst_inner_err = std::max(worst_inner_err, r.err_bound);
    inner_converged = inner_converged && r.converged;
    return r.value;
  };
  const QuadResult outer = integrate(slice, 0.0, kHalfPi, spec);

  // Four symmetric quadrants of the base disc.
  const double scale = 4.0 * p * q;
  return {scale * outer.value, scale * (outer.err_bound + kHalfPi * worst_inner_err),
          outer.panels_used, outer.converged && inner_converged};
}

QuadResult quad_theta_integral(const ThetaIntegralParams& p, const QuadratureSpec& spec) {
  if (!(p.beta > 0.0) || !(p.lambda > 0.0)) {
    throw DomainError(kModule, "angular integral needs beta > 0 and lambda > 0");
  }
  const double inv_b2 = 1.0 / (p.beta * p.beta);
  const double inv_l2 = 1.0 / (p.lambda * p.lambda);
  QuadResult r = integrate(
      [&](double t) {
        const double c = std::cos(t);
        const double s = std::sin(t);
        return std::pow(c * c * inv_b2 + s * s * inv_l2, p.s);
      },
      0.0, kHalfPi, spec.tightened(0.25));
  r.value *= 4.0;
  r.err_bound *= 4.0;
  return r;
}

SeriesValue theta_integral_closed(const ThetaIntegralParams& p, const EvalConfig& cfg) {
  if (!(p.beta > 0.0) || !(p.lambda > 0.0)) {
    throw DomainError(kModule, "angular integral needs beta > 0 and lambda > 0");
  }
  const double big = std::max(p.beta, p.lambda);
  const double small = std::min(p.beta, p.lambda);
  const double z = (big - small) * (big + small) / (big * big);
  SeriesValue f = gauss_2f1({0.5, 1.0 + p.s, 1.0, z}, cfg);
  const double prefactor = 2.0 * std::numbers::pi * small / std::pow(big, 1.0 + 2.0 * p.s);
  f.value *= prefactor;
  f.abs_err_estimate *= prefactor;
  return f;
}

double radial_integral_closed(double s) {
  if (!(std::abs(s) < 1.0)) throw DomainError(kModule, "radial integral needs |s| < 1");
  return 0.5 * std::exp(ln_gamma(1.0 + s) + ln_gamma(1.0 - s));
}

QuadResult quad_radial_integral(double s, const QuadratureSpec& spec) {
  spec.validate();
  if (!(std::abs(s) < 1.0)) throw DomainError(kModule, "radial integral needs |s| < 1");
  // t = r^2: (1/2) int_0^1 t^s (1-t)^{-s} dt.
  QuadResult r = beta_weighted_integral(1.0 + s, 1.0 - s, [](double) { return 1.0; }, spec);
  r.value *= 0.5;
  r.err_bound *= 0.5;
  return r;
}

double sin_cos_moment(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError(kModule, "sine-cosine moment needs alpha > -1 and beta > -1");
  }
  const double log_value = ln_gamma(0.5 * (alpha + 1.0)) + ln_gamma(0.5 * (beta + 1.0)) -
                           ln_gamma(0.5 * (alpha + beta + 2.0));
  return 0.5 * std::exp(log_value);
}

QuadResult euler_2f1_oracle(const Gauss2F1Params& p, const QuadratureSpec& spec) {
  spec.validate();
  if (!(p.b > 0.0) || !(p.c > p.b) || !(p.z < 1.0)) {
    throw DomainError(kModule, "Euler integral needs c > b > 0 and z < 1");
  }
  QuadResult r = beta_weighted_integral(
      p.b, p.c - p.b, [&](double t) { return std::pow(1.0 - p.z * t, -p.a); }, spec);
  const double norm = std::exp(ln_gamma(p.c) - ln_gamma(p.b) - ln_gamma(p.c - p.b));
  r.value *= norm;
  r.err_bound *= norm;
  return r;
}

}  // namespace ellipsurf
