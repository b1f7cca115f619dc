#pragma once

// Appell's first double hypergeometric function
//
//   F1(a; b, c; d; x, y) = sum_{m,n>=0} (a)_{m+n} (b)_m (c)_n x^m y^n
//                                       / ((d)_{m+n} m! n!)
//
// evaluated either by diagonal blocks of the double series or as a single
// series whose terms carry a Gauss 2F1 in the other variable.

#include <string_view>

#include "ellipsurf/hyperfn.hpp"

namespace ellipsurf {

struct AppellF1Params {
  double a;
  double b;
  double c;
  double d;
  double x;
  double y;
};

enum class ConvergenceClass {
  Polynomial,
  ConvergentInterior,
  AbsolutelyConvergentBoundary,
  ConditionallyConvergentBoundary,
  OutsideDomain,
};

std::string_view to_string(ConvergenceClass cls) noexcept;

/// Where the double series converges, from the parameters and arguments
/// alone. Parameter sets with d on a pole are OutsideDomain.
ConvergenceClass classify(const AppellF1Params& p) noexcept;

/// Double series summed along diagonals m + n = s. `terms_used` counts
/// diagonal blocks. Accepts Polynomial and ConvergentInterior inputs only.
SeriesValue f1_double_series(const AppellF1Params& p, const EvalConfig& cfg = {});

/// Single series over one variable with an inner 2F1 in the other; the
/// orientation is picked automatically. The inner 2F1 may use the
/// continuation to arguments below -1.
SeriesValue f1_single_series(const AppellF1Params& p, const EvalConfig& cfg = {});

/// Dispatcher over the two summation methods by convergence class.
SeriesValue f1(const AppellF1Params& p, const EvalConfig& cfg = {});

}  // namespace ellipsurf
