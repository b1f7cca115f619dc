#pragma once

#include <algorithm>
#include <cmath>

namespace ellipsurf::testing {

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// Appell F1 as the plain double sum over m, n <= limit in long double.
inline long double f1_brute_force(double a, double b, double c, double d, double x, double y,
                                  int limit = 200) {
  long double sum = 0.0L;
  long double row = 1.0L;  // term (m, 0)
  for (int m = 0; m <= limit; ++m) {
    if (m > 0) {
      const long double k = m - 1;
      row *= (a + k) * (b + k) * static_cast<long double>(x) / ((d + k) * (k + 1.0L));
    }
    long double term = row;
    for (int n = 0; n <= limit; ++n) {
      if (n > 0) {
        const long double k = n - 1;
        term *= (a + m + k) * (c + k) * static_cast<long double>(y) / ((d + m + k) * (k + 1.0L));
      }
      sum += term;
    }
  }
  return sum;
}

}  // namespace ellipsurf::testing
