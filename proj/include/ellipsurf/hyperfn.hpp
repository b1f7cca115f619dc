#pragma once

// Scalar special-function kernel: log-gamma with sign, Pochhammer symbols,
// the Gauss hypergeometric function 2F1 on the real line, two elementary
// closed forms of 2F1, and the G^{2,2}_{2,2} Meijer function through its
// 2F1 reduction.

#include <cstddef>

namespace ellipsurf {

/// Stopping policy shared by every series summation in the library.
struct EvalConfig {
  double rel_tol = 1e-12;
  std::size_t max_terms = 100000;
  /// Number of consecutive negligible terms required before a series is
  /// declared converged.
  std::size_t consec_small = 3;

  /// Throws DomainError if a field is out of range.
  void validate() const;
  /// Same policy with the term cap multiplied by `factor`.
  EvalConfig with_raised_cap(std::size_t factor) const;
};

/// A series value together with how it was obtained.
struct SeriesValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  /// Magnitude of the last accepted term (zero for exact finite sums).
  double abs_err_estimate = 0.0;
  bool converged = false;
};

struct Gauss2F1Params {
  double a;
  double b;
  double c;
  double z;
};

/// ln|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs;
  int sign;
};

bool is_nonpositive_integer(double x) noexcept;

/// ln Gamma(x) for x > 0. Non-positive integers raise PoleError, other
/// negative arguments raise DomainError (use gamma_signed).
double ln_gamma(double x);

/// ln|Gamma(x)| and sign for any real x that is not a pole; negative
/// arguments go through the reflection formula.
SignedLogGamma gamma_signed(double x);

/// 1/Gamma(x), zero at the poles.
double reciprocal_gamma(double x);

/// Rising factorial x(x+1)...(x+n-1) by direct product; 1 for n = 0.
double pochhammer(double x, std::size_t n) noexcept;

/// Power series of 2F1. Requires |z| < 1 unless a or b is a non-positive
/// integer, in which case the finite polynomial is summed exactly.
SeriesValue gauss_2f1_series(const Gauss2F1Params& p, const EvalConfig& cfg = {});

/// Two-term continuation of 2F1 to z < -1 with inner series at 1/z.
/// Requires a - b not an integer (DegenerateContinuationError otherwise).
SeriesValue gauss_2f1_continued(const Gauss2F1Params& p, const EvalConfig& cfg = {});

/// 2F1 on z < 1. Routes to the power series, to the Pfaff transform for
/// z in [-1, -1/2), or to the 1/z continuation for z < -1.
SeriesValue gauss_2f1(const Gauss2F1Params& p, const EvalConfig& cfg = {});

/// atanh(sqrt(z))/sqrt(z) continued to z <= 0 as atan(sqrt(-z))/sqrt(-z),
/// equal to 1 at z = 0. Defined for z < 1.
double atanh_sqrt_ratio(double z);

/// 2F1(1/2, 2; 3/2; z) in closed form, z < 1.
double f21_half_two_threehalves(double z);

/// 2F1(3/2, 2; 5/2; z) in closed form, z < 1.
double f21_threehalves_two_fivehalves(double z);

/// G^{2,2}_{2,2}(z | a1, a2; b1, b2) for 0 < z < 2 via its reduction to
/// Gamma factors times z^{b1} times 2F1 at 1 - z.
SeriesValue meijer_g2222(double a1, double a2, double b1, double b2, double z,
                         const EvalConfig& cfg = {});

}  // namespace ellipsurf
