#pragma once

// Globally adaptive 7/15-point Gauss-Kronrod quadrature on finite intervals.

#include <cstddef>
#include <functional>

namespace ellipsurf {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  /// Maximum number of bisections applied to any single panel.
  int max_depth = 30;
  /// Node count of the fixed rule. Only the 15-point Kronrod rule is built in.
  int nodes_per_panel = 15;

  /// Throws DomainError if a field is out of range.
  void validate() const;
  QuadratureSpec tightened(double factor) const;
};

struct QuadResult {
  double value = 0.0;
  /// Sum over panels of max(|Kronrod - Gauss|, 50 eps * integral of |f|).
  double err_bound = 0.0;
  int panels_used = 0;
  bool converged = false;
};

/// Integrates f over [lo, hi]. The panel with the largest error estimate is
/// bisected until the summed estimate meets max(abs_tol, rel_tol |value|),
/// or no panel may be split further. The final value is summed left to
/// right, so the result depends only on f, the interval and the spec.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureSpec& spec = {});

}  // namespace ellipsurf
