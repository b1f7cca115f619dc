#include "ellipsurf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "ellipsurf/errors.hpp"

namespace ellipsurf {

namespace {

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kMaxPanels = 20000;
constexpr double kRoundingFloor = 50.0 * std::numeric_limits<double>::epsilon();

struct Panel {
  double lo;
  double hi;
  double value;
  double err;
  int depth;
};

Panel apply_rule(const std::function<double(double)>& f, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  double kronrod_abs = kKronrodWeights[7] * std::abs(fc);
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double left = f(center - dx);
    const double right = f(center + dx);
    kronrod += kKronrodWeights[i] * (left + right);
    kronrod_abs += kKronrodWeights[i] * (std::abs(left) + std::abs(right));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (left + right);
  }
  kronrod *= half;
  gauss *= half;
  kronrod_abs *= std::abs(half);
  // The rule difference cannot see rounding in the sums themselves.
  const double rounding = kRoundingFloor * kronrod_abs;
  return {lo, hi, kronrod, std::max(std::abs(kronrod - gauss), rounding), depth};
}

struct LargerError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.lo > y.lo;
  }
};

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_depth < 1) {
    throw DomainError("oracle", "quadrature needs abs_tol > 0, rel_tol > 0 and max_depth >= 1");
  }
  if (nodes_per_panel != 15) {
    throw DomainError("oracle", "only the 15-node Gauss-Kronrod rule is available");
  }
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec s = *this;
  s.abs_tol *= factor;
  s.rel_tol *= factor;
  return s;
}

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureSpec& spec) {
  spec.validate();
  if (lo == hi) return {0.0, 0.0, 0, true};

  std::priority_queue<Panel, std::vector<Panel>, LargerError> splittable;
  std::vector<Panel> frozen;
  Panel first = apply_rule(f, lo, hi, 0);
  double total = first.value;
  double total_err = first.err;
  splittable.push(first);
  int panels = 1;
  bool converged = false;

  while (true) {
    if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
      converged = true;
      break;
    }
    if (splittable.empty() || static_cast<std::size_t>(panels) >= kMaxPanels) break;
    Panel worst = splittable.top();
    splittable.pop();
    if (worst.depth >= spec.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = apply_rule(f, worst.lo, mid, worst.depth + 1);
    const Panel right = apply_rule(f, mid, worst.hi, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    splittable.push(left);
    splittable.push(right);
    ++panels;
  }

  std::vector<Panel> all = std::move(frozen);
  while (!splittable.empty()) {
    all.push_back(splittable.top());
    splittable.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  QuadResult result;
  for (const Panel& p : all) {
    result.value += p.value;
    result.err_bound += p.err;
  }
  result.panels_used = panels;
  result.converged =
      converged || result.err_bound <= std::max(spec.abs_tol, spec.rel_tol * std::abs(result.value));
  return result;
}

}  // namespace ellipsurf
