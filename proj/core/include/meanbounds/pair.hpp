#pragma once

#include <cmath>
#include <stdexcept>

namespace meanbounds {

/// An ordered pair of strictly positive, finite reals.
///
/// Every mean in this library is symmetric in (a, b), so construction
/// imposes no ordering; it only rejects nonpositive or non-finite values.
class PositivePair {
 public:
  PositivePair(double a, double b) : a_(a), b_(b) {
    if (!(std::isfinite(a) && a > 0.0))
      throw std::domain_error("PositivePair: a must be positive and finite");
    if (!(std::isfinite(b) && b > 0.0))
      throw std::domain_error("PositivePair: b must be positive and finite");
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double min() const { return a_ < b_ ? a_ : b_; }
  double max() const { return a_ < b_ ? b_ : a_; }

 private:
  double a_;
  double b_;
};

}  // namespace meanbounds
