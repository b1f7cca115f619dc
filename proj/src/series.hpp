#pragma once

// Internal: compensated accumulation with the shared stopping rule.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "ellipsurf/hyperfn.hpp"

namespace ellipsurf::detail {

/// Sums terms with Neumaier compensation and declares convergence once
/// `consec_small` consecutive terms satisfy |t| <= rel_tol * max(|sum|, 1).
/// The caller supplies `tail_ratio`, a bound on the ratio of the following
/// terms; a term only counts as small when that ratio is below one, and then
/// its geometric tail |t| / (1 - ratio) has to pass the same test.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const EvalConfig& cfg) : cfg_(cfg) {}

  /// Returns true once converged.
  bool add(double term, double tail_ratio) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
    ++terms_;
    last_ = std::abs(term);
    const double scale = std::max(std::abs(sum_ + comp_), 1.0);
    const double tail = tail_ratio > 0.0 ? last_ / (1.0 - tail_ratio) : last_;
    if (tail_ratio < 1.0 && tail <= cfg_.rel_tol * scale) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    converged_ = small_run_ >= cfg_.consec_small;
    return converged_;
  }

  bool exhausted() const { return terms_ >= cfg_.max_terms; }
  bool converged() const { return converged_; }
  double sum() const { return sum_ + comp_; }
  std::size_t terms() const { return terms_; }

  SeriesValue result() const { return {sum(), terms_, last_, converged_}; }

 private:
  EvalConfig cfg_;
  double sum_ = 0.0;
  double comp_ = 0.0;
  double last_ = 0.0;
  std::size_t terms_ = 0;
  std::size_t small_run_ = 0;
  bool converged_ = false;
};

}  // namespace ellipsurf::detail
