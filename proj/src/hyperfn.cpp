#include "ellipsurf/hyperfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "ellipsurf/errors.hpp"
#include "series.hpp"

namespace ellipsurf {

namespace {

constexpr const char* kModule = "hyperfn";

// Lanczos approximation, g = 7, nine coefficients (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Valid for x >= 1/2.
double lanczos_ln_gamma(double x) {
  x -= 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (x + static_cast<double>(i));
  }
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(series);
}

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  // r in [-1, 1]; fold into [-1/2, 1/2].
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

std::string describe(const Gauss2F1Params& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(a=" << p.a << ", b=" << p.b << ", c=" << p.c << ", z=" << p.z << ")";
  return os.str();
}

void require_valid_lower(const Gauss2F1Params& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) || !std::isfinite(p.z)) {
    throw DomainError(kModule, "2F1 parameters must be finite " + describe(p));
  }
  if (is_nonpositive_integer(p.c)) {
    throw DomainError(kModule, "2F1 lower parameter c is zero or a negative integer " + describe(p));
  }
}

// Degree of the terminating polynomial, or -1 when the series is infinite.
long terminating_degree(const Gauss2F1Params& p) {
  long degree = -1;
  for (double upper : {p.a, p.b}) {
    if (is_nonpositive_integer(upper)) {
      const long m = static_cast<long>(-upper);
      degree = degree < 0 ? m : std::min(degree, m);
    }
  }
  return degree;
}

SeriesValue sum_power_series(const Gauss2F1Params& p, const EvalConfig& cfg) {
  const long degree = terminating_degree(p);
  if (degree >= 0) {
    double term = 1.0;
    double sum = 1.0;
    for (long n = 0; n < degree; ++n) {
      const double dn = static_cast<double>(n);
      term *= (p.a + dn) * (p.b + dn) * p.z / ((p.c + dn) * (dn + 1.0));
      sum += term;
    }
    return {sum, static_cast<std::size_t>(degree + 1), 0.0, true};
  }

  detail::SeriesAccumulator acc(cfg);
  double term = 1.0;
  acc.add(term, 1.0);
  for (std::size_t n = 0; !acc.exhausted(); ++n) {
    const double dn = static_cast<double>(n);
    term *= (p.a + dn) * (p.b + dn) * p.z / ((p.c + dn) * (dn + 1.0));
    const double next_ratio =
        std::abs((p.a + dn + 1.0) * (p.b + dn + 1.0) * p.z / ((p.c + dn + 1.0) * (dn + 2.0)));
    if (acc.add(term, std::max(next_ratio, std::abs(p.z)))) break;
  }
  return acc.result();
}

// Pfaff: 2F1(a,b;c;z) = (1-z)^{-b} 2F1(c-a, b; c; z/(z-1)). The parameter
// with the larger magnitude is the one replaced by c minus itself.
SeriesValue pfaff(const Gauss2F1Params& p, const EvalConfig& cfg) {
  const bool replace_a = std::abs(p.a) >= std::abs(p.b);
  const double kept = replace_a ? p.b : p.a;
  const double replaced = replace_a ? p.a : p.b;
  const double w = p.z / (p.z - 1.0);
  SeriesValue inner = sum_power_series({p.c - replaced, kept, p.c, w}, cfg);
  const double scale = std::pow(1.0 - p.z, -kept);
  inner.value *= scale;
  inner.abs_err_estimate *= std::abs(scale);
  return inner;
}

// 2F1 for z in [-1, 1) with the Pfaff transform on the left half.
SeriesValue sum_near_origin(const Gauss2F1Params& p, const EvalConfig& cfg) {
  if (terminating_degree(p) < 0 && p.z < -0.5) return pfaff(p, cfg);
  return sum_power_series(p, cfg);
}

}  // namespace

void EvalConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError(kModule, "rel_tol must lie in (0, 1)");
  }
  if (max_terms < 1 || consec_small < 1) {
    throw DomainError(kModule, "max_terms and consec_small must be at least 1");
  }
}

EvalConfig EvalConfig::with_raised_cap(std::size_t factor) const {
  EvalConfig raised = *this;
  raised.max_terms *= factor;
  return raised;
}

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

double ln_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError(kModule, "Gamma has a pole at " + std::to_string(x));
  }
  if (!(x > 0.0)) {
    throw DomainError(kModule, "ln_gamma requires x > 0; use gamma_signed for negative x");
  }
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum on x >= 1/2.
    return std::log(std::numbers::pi / sin_pi(x)) - lanczos_ln_gamma(1.0 - x);
  }
  return lanczos_ln_gamma(x);
}

SignedLogGamma gamma_signed(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError(kModule, "Gamma has a pole at " + std::to_string(x));
  }
  if (!std::isfinite(x)) throw DomainError(kModule, "gamma_signed requires a finite argument");
  if (x > 0.0) return {ln_gamma(x), 1};
  // Gamma(x) Gamma(1-x) = pi / sin(pi x), with Gamma(1-x) > 0.
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi / std::abs(s)) - ln_gamma(1.0 - x), s > 0.0 ? 1 : -1};
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const SignedLogGamma g = gamma_signed(x);
  return g.sign * std::exp(-g.log_abs);
}

double pochhammer(double x, std::size_t n) noexcept {
  double product = 1.0;
  for (std::size_t k = 0; k < n; ++k) product *= x + static_cast<double>(k);
  return product;
}

SeriesValue gauss_2f1_series(const Gauss2F1Params& p, const EvalConfig& cfg) {
  cfg.validate();
  require_valid_lower(p);
  if (terminating_degree(p) < 0 && !(std::abs(p.z) < 1.0)) {
    throw DomainError(kModule, "2F1 power series needs |z| < 1 " + describe(p));
  }
  return sum_power_series(p, cfg);
}

SeriesValue gauss_2f1_continued(const Gauss2F1Params& p, const EvalConfig& cfg) {
  cfg.validate();
  require_valid_lower(p);
  if (!(p.z < -1.0)) {
    throw DomainError(kModule, "2F1 continuation needs z < -1 " + describe(p));
  }
  const double diff = p.a - p.b;
  if (diff == std::floor(diff)) {
    throw DegenerateContinuationError(kModule, "a - b is an integer " + describe(p));
  }

  const double w = 1.0 / p.z;
  const double log_minus_z = std::log(-p.z);
  const SignedLogGamma gc = gamma_signed(p.c);

  // One of the two symmetric terms: Gamma(c) Gamma(v-u) / (Gamma(v) Gamma(c-u))
  // (-z)^{-u} 2F1(u, 1+u-c; 1+u-v; 1/z).
  auto branch = [&](double u, double v) -> SeriesValue {
    const double rg = reciprocal_gamma(v) * reciprocal_gamma(p.c - u);
    if (rg == 0.0) return {0.0, 0, 0.0, true};
    const SignedLogGamma gvu = gamma_signed(v - u);
    const double prefactor =
        gc.sign * gvu.sign * std::exp(gc.log_abs + gvu.log_abs - u * log_minus_z) * rg;
    SeriesValue inner = sum_near_origin({u, 1.0 + u - p.c, 1.0 + u - v, w}, cfg);
    inner.value *= prefactor;
    inner.abs_err_estimate *= std::abs(prefactor);
    return inner;
  };

  const SeriesValue first = branch(p.a, p.b);
  const SeriesValue second = branch(p.b, p.a);
  return {first.value + second.value, first.terms_used + second.terms_used,
          first.abs_err_estimate + second.abs_err_estimate, first.converged && second.converged};
}

SeriesValue gauss_2f1(const Gauss2F1Params& p, const EvalConfig& cfg) {
  cfg.validate();
  require_valid_lower(p);
  if (p.z == 0.0) return {1.0, 1, 0.0, true};
  if (terminating_degree(p) >= 0) return sum_power_series(p, cfg);
  if (p.z >= 1.0) {
    throw DomainError(kModule, "2F1 is not real-analytic at z >= 1 " + describe(p));
  }
  if (p.z > 0.999) {
    throw DomainError(kModule, "2F1 series too close to z = 1 (limit 0.999) " + describe(p));
  }
  if (p.z < -1.0) return gauss_2f1_continued(p, cfg);
  return sum_near_origin(p, p.z > 0.9 ? cfg.with_raised_cap(10) : cfg);
}

double atanh_sqrt_ratio(double z) {
  if (!(z < 1.0)) throw DomainError(kModule, "atanh(sqrt(z))/sqrt(z) needs z < 1");
  if (z == 0.0) return 1.0;
  if (z > 0.0) {
    const double r = std::sqrt(z);
    return std::atanh(r) / r;
  }
  const double r = std::sqrt(-z);
  return std::atan(r) / r;
}

double f21_half_two_threehalves(double z) {
  if (!(z < 1.0)) throw DomainError(kModule, "2F1(1/2,2;3/2;z) closed form needs z < 1");
  if (z == 0.0) return 1.0;
  return 0.5 * (1.0 / (1.0 - z) + atanh_sqrt_ratio(z));
}

double f21_threehalves_two_fivehalves(double z) {
  if (!(z < 1.0)) throw DomainError(kModule, "2F1(3/2,2;5/2;z) closed form needs z < 1");
  if (z == 0.0) return 1.0;
  if (std::abs(z) < 0.05) {
    // 1/(1-z) - atanh(sqrt z)/sqrt z = sum_{k>=1} 2k z^k / (2k+1); dividing
    // out z removes the cancellation near the removable singularity.
    double sum = 0.0;
    double power = 1.0;
    for (int k = 1; k <= 24; ++k) {
      sum += k * power / (2.0 * k + 1.0);
      power *= z;
    }
    return 3.0 * sum;
  }
  return 1.5 / z * (1.0 / (1.0 - z) - atanh_sqrt_ratio(z));
}

SeriesValue meijer_g2222(double a1, double a2, double b1, double b2, double z,
                         const EvalConfig& cfg) {
  if (!(z > 0.0) || !(std::abs(1.0 - z) < 1.0)) {
    throw DomainError(kModule, "G^{2,2}_{2,2} reduction needs 0 < z < 2");
  }
  const double lower = 2.0 - a1 - a2 + b1 + b2;
  if (is_nonpositive_integer(lower)) {
    throw DomainError(kModule, "G^{2,2}_{2,2} reduction needs 2-a1-a2+b1+b2 off the poles");
  }
  const double u1 = 1.0 - a1 + b1;
  const double u2 = 1.0 - a1 + b2;
  const double u3 = 1.0 - a2 + b1;
  const double u4 = 1.0 - a2 + b2;
  double log_abs = 0.0;
  int sign = 1;
  for (double u : {u1, u2, u3, u4}) {
    const SignedLogGamma g = gamma_signed(u);
    log_abs += g.log_abs;
    sign *= g.sign;
  }
  const SignedLogGamma gl = gamma_signed(lower);
  log_abs -= gl.log_abs;
  sign *= gl.sign;
  const double prefactor = sign * std::exp(log_abs + b1 * std::log(z));
  SeriesValue f = gauss_2f1({u1, u3, lower, 1.0 - z}, cfg);
  f.value *= prefactor;
  f.abs_err_estimate *= std::abs(prefactor);
  return f;
}

}  // namespace ellipsurf
