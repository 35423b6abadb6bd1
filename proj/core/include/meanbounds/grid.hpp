#pragma once

#include <vector>

namespace meanbounds {

/// Sampling grid on (1, t_max] for limit and inequality checks.
///
/// `near_count` points are spaced linearly over (1, near_hi] to resolve
/// the t -> 1 limits; `far_count` points are spaced geometrically over
/// (far_lo, t_max] to cover the tail. Points with |t - 1| < exclusion are
/// dropped: strict double-precision comparisons degenerate to 0/0 noise
/// inside that band.
struct GridSpec {
  int near_count = 128;
  double near_hi = 1.01;
  int far_count = 512;
  double far_lo = 1.01;
  double t_max = 1e8;
  double exclusion = 1e-8;

  /// Sorted, deduplicated sample points. Throws std::invalid_argument on
  /// nonsensical parameters (counts < 0, t_max <= 1, ...).
  std::vector<double> points() const;

  static GridSpec bounds_default() { return {}; }

  static GridSpec lemma_default() {
    GridSpec g;
    g.far_lo = 1.0;  // geometric points anchored at 1: t_k = t_max^(k/far_count)
    return g;
  }
};

}  // namespace meanbounds
