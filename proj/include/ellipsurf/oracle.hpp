#pragma once

// Independent numerical checks for the closed forms: adaptive quadrature of
// the surface integrals and of the auxiliary definite integrals, Gamma
// expressions for the radial and sine-cosine moments, and an Euler-integral
// evaluation of 2F1.
//
// Nothing here calls the Appell or surface code, so agreement between the
// two is a genuine cross-check.

#include "ellipsurf/axes.hpp"
#include "ellipsurf/hyperfn.hpp"
#include "ellipsurf/quadrature.hpp"

namespace ellipsurf {

/// Parameters of the angular integral
///   int_{-pi}^{pi} (cos^2 t / beta^2 + sin^2 t / lambda^2)^s dt.
struct ThetaIntegralParams {
  double beta;
  double lambda;
  double s;
};

/// Curved area of the hemiellipsoid over the plane normal to `axis`, by
/// nested quadrature of the projected-area integral. The radial variable is
/// substituted r = sin(phi), which turns the integrand into the smooth
///   sin(phi) sqrt(cos^2 phi + h^2 sin^2 phi (cos^2 t/p^2 + sin^2 t/q^2)).
QuadResult quad_hemi_area(const SemiAxes& axes, SymmetryAxis axis, const QuadratureSpec& spec = {});

QuadResult quad_theta_integral(const ThetaIntegralParams& p, const QuadratureSpec& spec = {});

/// Hypergeometric closed form of the angular integral, with the 2F1
/// argument 1 - min^2/max^2 of beta and lambda so that it lies in [0, 1).
SeriesValue theta_integral_closed(const ThetaIntegralParams& p, const EvalConfig& cfg = {});

/// int_0^1 r^{2s+1} / (1 - r^2)^s dr = Gamma(1+s) Gamma(1-s) / 2 for |s| < 1.
double radial_integral_closed(double s);

/// The radial integral by quadrature after t = r^2, with power substitutions
/// that absorb the endpoint singularities.
QuadResult quad_radial_integral(double s, const QuadratureSpec& spec = {});

/// int_0^{pi/2} sin^alpha t cos^beta t dt for alpha, beta > -1.
double sin_cos_moment(double alpha, double beta);

/// 2F1(a, b; c; z) from its Euler integral; requires c > b > 0 and z < 1.
QuadResult euler_2f1_oracle(const Gauss2F1Params& p, const QuadratureSpec& spec = {});

}  // namespace ellipsurf
