#pragma once

#include <array>
#include <string_view>

namespace ellipsurf {

/// Semi-axes of an ellipsoid. Accepted in any order and stored sorted so
/// that a() >= b() >= c() > 0; permutation()[i] is the position in the
/// constructor arguments of the i-th sorted axis.
class SemiAxes {
 public:
  /// Throws InvalidAxesError unless all three lengths are finite and > 0.
  SemiAxes(double first, double second, double third);

  double a() const noexcept { return sorted_[0]; }
  double b() const noexcept { return sorted_[1]; }
  double c() const noexcept { return sorted_[2]; }
  const std::array<int, 3>& permutation() const noexcept { return permutation_; }

  SemiAxes scaled(double factor) const;
  /// True when every axis ratio is within `tol` of 1.
  bool near_spherical(double tol = 1e-12) const noexcept;

 private:
  std::array<double, 3> sorted_{};
  std::array<int, 3> permutation_{};
};

/// Coordinate axis along which a hemiellipsoid's symmetry axis points.
enum class SymmetryAxis { X, Y, Z };

std::string_view to_string(SymmetryAxis axis) noexcept;

}  // namespace ellipsurf
