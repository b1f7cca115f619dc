#include "ellipsurf/appell.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellipsurf/errors.hpp"
#include "series.hpp"

namespace ellipsurf {

namespace {

constexpr const char* kModule = "appell";

std::string describe(const AppellF1Params& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(a=" << p.a << ", b=" << p.b << ", c=" << p.c << ", d=" << p.d << ", x=" << p.x
     << ", y=" << p.y << ")";
  return os.str();
}

bool all_finite(const AppellF1Params& p) {
  return std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.c) && std::isfinite(p.d) &&
         std::isfinite(p.x) && std::isfinite(p.y);
}

bool is_integer(double v) { return v == std::floor(v); }

// Highest diagonal carrying a nonzero term, when the double series is finite.
std::optional<long> polynomial_degree(const AppellF1Params& p) {
  std::optional<long> degree;
  if (is_nonpositive_integer(p.a)) degree = static_cast<long>(-p.a);
  if (is_nonpositive_integer(p.b) && is_nonpositive_integer(p.c)) {
    const long bc = static_cast<long>(-p.b - p.c);
    degree = degree ? std::min(*degree, bc) : bc;
  }
  return degree;
}

// Rate at which a 2F1 argument is effectively summed once the dispatcher has
// applied its transformations.
double effective_rate(double z) {
  if (z < -1.0) return effective_rate(1.0 / z);
  if (z < -0.5) return std::abs(z / (z - 1.0));
  return std::abs(z);
}

// One orientation of the single series: the outer sum runs over `outer`
// with Pochhammer parameter `outer_param`, the inner 2F1 is
// 2F1(a + m, inner_param; d + m; inner).
struct Orientation {
  double outer;
  double outer_param;
  double inner;
  double inner_param;
  double score;
};

std::optional<Orientation> make_orientation(const AppellF1Params& p, double outer,
                                            double outer_param, double inner,
                                            double inner_param, bool allow_boundary) {
  const bool outer_terminates = is_nonpositive_integer(p.a) || is_nonpositive_integer(outer_param);
  const bool outer_ok =
      outer_terminates || std::abs(outer) < 1.0 || (allow_boundary && std::abs(outer) <= 1.0);
  if (!outer_ok) return std::nullopt;

  const bool inner_terminates = is_nonpositive_integer(p.a) || is_nonpositive_integer(inner_param);
  if (!inner_terminates) {
    if (!(inner <= 0.999)) return std::nullopt;
    if (inner < -1.0 && is_integer(p.a - inner_param)) return std::nullopt;
  }
  const double outer_rate = outer_terminates ? 0.0 : std::abs(outer);
  const double inner_rate = inner_terminates ? 0.0 : effective_rate(inner);
  return Orientation{outer, outer_param, inner, inner_param, std::max(outer_rate, inner_rate)};
}

// Picks the orientation with the faster combined rate; ties go to the one
// whose outer argument is larger in magnitude.
std::optional<Orientation> choose_orientation(const AppellF1Params& p, bool allow_boundary) {
  const auto over_x = make_orientation(p, p.x, p.b, p.y, p.c, allow_boundary);
  const auto over_y = make_orientation(p, p.y, p.c, p.x, p.b, allow_boundary);
  if (!over_x) return over_y;
  if (!over_y) return over_x;
  constexpr double kTie = 1e-12;
  if (over_x->score < over_y->score - kTie) return over_x;
  if (over_y->score < over_x->score - kTie) return over_y;
  return std::abs(p.x) >= std::abs(p.y) ? over_x : over_y;
}

SeriesValue sum_single(const AppellF1Params& p, const Orientation& o, const EvalConfig& cfg) {
  detail::SeriesAccumulator acc(cfg);
  bool inner_converged = true;
  double coef = 1.0;
  for (std::size_t m = 0; !acc.exhausted(); ++m) {
    const double dm = static_cast<double>(m);
    double term = 0.0;
    if (coef != 0.0) {
      const SeriesValue inner = gauss_2f1({p.a + dm, o.inner_param, p.d + dm, o.inner}, cfg);
      inner_converged = inner_converged && inner.converged;
      term = coef * inner.value;
    }
    const double ratio = (p.a + dm) * (o.outer_param + dm) * o.outer / ((p.d + dm) * (dm + 1.0));
    if (acc.add(term, coef == 0.0 ? 0.0 : std::abs(ratio))) break;
    coef *= ratio;
  }
  SeriesValue result = acc.result();
  result.converged = result.converged && inner_converged;
  return result;
}

SeriesValue sum_single_checked(const AppellF1Params& p, const EvalConfig& cfg,
                               bool allow_boundary) {
  cfg.validate();
  if (!all_finite(p)) throw DomainError(kModule, "F1 parameters must be finite " + describe(p));
  if (is_nonpositive_integer(p.d)) {
    throw DomainError(kModule, "F1 lower parameter d is zero or a negative integer " + describe(p));
  }
  const auto orientation = choose_orientation(p, allow_boundary);
  if (!orientation) {
    throw DomainError(kModule, "no valid single-series orientation for F1 " + describe(p));
  }
  return sum_single(p, *orientation, cfg);
}

}  // namespace

std::string_view to_string(ConvergenceClass cls) noexcept {
  switch (cls) {
    case ConvergenceClass::Polynomial: return "Polynomial";
    case ConvergenceClass::ConvergentInterior: return "ConvergentInterior";
    case ConvergenceClass::AbsolutelyConvergentBoundary: return "AbsolutelyConvergentBoundary";
    case ConvergenceClass::ConditionallyConvergentBoundary:
      return "ConditionallyConvergentBoundary";
    case ConvergenceClass::OutsideDomain: return "OutsideDomain";
  }
  return "OutsideDomain";
}

ConvergenceClass classify(const AppellF1Params& p) noexcept {
  if (!all_finite(p) || is_nonpositive_integer(p.d)) return ConvergenceClass::OutsideDomain;
  if (polynomial_degree(p)) return ConvergenceClass::Polynomial;

  const double ax = std::abs(p.x);
  const double ay = std::abs(p.y);
  if (ax < 1.0 && ay < 1.0) return ConvergenceClass::ConvergentInterior;
  if (std::max(ax, ay) != 1.0) return ConvergenceClass::OutsideDomain;

  const double ab = p.a + p.b - p.d;
  const double ac = p.a + p.c - p.d;
  const double abc = p.a + p.b + p.c - p.d;
  if (ab < 0.0 && ac < 0.0 && abc < 0.0) return ConvergenceClass::AbsolutelyConvergentBoundary;
  if (p.x != 1.0 && p.y != 1.0 && ab < 1.0 && ac < 1.0 && abc < 2.0) {
    return ConvergenceClass::ConditionallyConvergentBoundary;
  }
  return ConvergenceClass::OutsideDomain;
}

SeriesValue f1_double_series(const AppellF1Params& p, const EvalConfig& cfg) {
  cfg.validate();
  const ConvergenceClass cls = classify(p);
  if (cls != ConvergenceClass::Polynomial && cls != ConvergenceClass::ConvergentInterior) {
    throw DomainError(kModule, "double series needs a polynomial or interior point, got " +
                                   std::string(to_string(cls)) + " " + describe(p));
  }

  // Diagonal s is A_s * sum_{m+n=s} B_m C_n with A_s = (a)_s/(d)_s,
  // B_m = (b)_m x^m / m!, C_n = (c)_n y^n / n!.
  std::vector<double> bx{1.0};
  std::vector<double> cy{1.0};
  double diag_scale = 1.0;
  auto diagonal = [&](std::size_t s) {
    if (s > 0) {
      const double prev = static_cast<double>(s - 1);
      diag_scale *= (p.a + prev) / (p.d + prev);
      bx.push_back(bx.back() * (p.b + prev) * p.x / (prev + 1.0));
      cy.push_back(cy.back() * (p.c + prev) * p.y / (prev + 1.0));
    }
    if (diag_scale == 0.0) return 0.0;
    double conv = 0.0;
    for (std::size_t m = 0; m <= s; ++m) conv += bx[m] * cy[s - m];
    return diag_scale * conv;
  };

  if (const auto degree = polynomial_degree(p)) {
    double sum = 0.0;
    for (long s = 0; s <= *degree; ++s) sum += diagonal(static_cast<std::size_t>(s));
    return {sum, static_cast<std::size_t>(*degree + 1), 0.0, true};
  }

  detail::SeriesAccumulator acc(cfg);
  const double rate = std::max(std::abs(p.x), std::abs(p.y));
  for (std::size_t s = 0; !acc.exhausted(); ++s) {
    const double ds = static_cast<double>(s);
    const double growth = std::abs((p.a + ds) * (p.b + p.c + ds) / ((p.d + ds) * (ds + 1.0)));
    if (acc.add(diagonal(s), growth * rate)) break;
  }
  return acc.result();
}

SeriesValue f1_single_series(const AppellF1Params& p, const EvalConfig& cfg) {
  return sum_single_checked(p, cfg, false);
}

SeriesValue f1(const AppellF1Params& p, const EvalConfig& cfg) {
  cfg.validate();
  switch (classify(p)) {
    case ConvergenceClass::OutsideDomain:
      throw DomainError(kModule, "F1 double series does not converge at " + describe(p));
    case ConvergenceClass::Polynomial:
      return f1_double_series(p, cfg);
    case ConvergenceClass::ConvergentInterior: {
      const double ax = std::abs(p.x);
      const double ay = std::abs(p.y);
      if (std::min(ax, ay) <= 0.5) return f1_single_series(p, cfg);
      const auto orientation = choose_orientation(p, false);
      if (orientation && orientation->score < std::max(ax, ay)) {
        return sum_single(p, *orientation, cfg);
      }
      return f1_double_series(p, cfg);
    }
    case ConvergenceClass::AbsolutelyConvergentBoundary:
    case ConvergenceClass::ConditionallyConvergentBoundary:
      return sum_single_checked(p, cfg.with_raised_cap(10), true);
  }
  throw DomainError(kModule, "unreachable convergence class");
}

}  // namespace ellipsurf
