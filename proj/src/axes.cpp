#include "ellipsurf/axes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ellipsurf/errors.hpp"

namespace ellipsurf {

SemiAxes::SemiAxes(double first, double second, double third) {
  const std::array<double, 3> raw{first, second, third};
  for (double v : raw) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw InvalidAxesError("surface", "semi-axes must be finite and positive, got " +
                                            std::to_string(v));
    }
  }
  permutation_ = {0, 1, 2};
  std::stable_sort(permutation_.begin(), permutation_.end(),
                   [&](int i, int j) { return raw[i] > raw[j]; });
  for (int i = 0; i < 3; ++i) sorted_[i] = raw[permutation_[i]];
}

SemiAxes SemiAxes::scaled(double factor) const {
  return SemiAxes(sorted_[0] * factor, sorted_[1] * factor, sorted_[2] * factor);
}

bool SemiAxes::near_spherical(double tol) const noexcept {
  return sorted_[2] / sorted_[0] >= 1.0 - tol;
}

std::string_view to_string(SymmetryAxis axis) noexcept {
  switch (axis) {
    case SymmetryAxis::X: return "x";
    case SymmetryAxis::Y: return "y";
    case SymmetryAxis::Z: return "z";
  }
  return "z";
}

}  // namespace ellipsurf
