#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "meanbounds/grid.hpp"

namespace meanbounds::lemmas {

/// Interval with a verified sign change: f(lo) and f(hi) carry strictly
/// opposite signs and hi - lo <= the requested width.
struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
  double width;  // hi - lo
};

/// Outcome of checking that a function keeps one sign across a grid.
struct SignReport {
  std::string function_id;
  std::vector<double> grid;
  double min_abs_value;    // smallest |f| seen; margin tracking
  int sign;                // +1 or -1, taken from the first sample
  std::size_t violations;  // samples with the opposite sign or exactly zero
};

/// The degree-6 polynomial with pi-dependent coefficients whose unique
/// sign change in (1, inf) drives every Seiffert-mean bound here:
///   (pi^2-pi-4) t^6 - 2pi(5-pi) t^5 - 3pi(5-pi) t^4 - 4(5pi-pi^2-2) t^3
///   - 3pi(5-pi) t^2 - 2pi(5-pi) t + (pi^2-pi-4).
/// The coefficient list is palindromic, so t^6 f1(1/t) = f1(t).
double f1_eval(double t);

/// k-th derivative of f1 for k in 0..5; k = 0 is f1_eval itself.
/// Throws std::invalid_argument for k outside 0..5.
double f1_derivative(int k, double t);

/// Brackets, in order, the unique sign change in (1, inf) of f1^(4),
/// f1''', f1'', f1' and f1 itself. Each bracket is narrowed by bisection
/// to width <= width_tol after a doubling search from t = 1; the doubling
/// search throws std::runtime_error if no sign change appears below the
/// ceiling t = 1e6. The five abscissae are strictly increasing.
std::array<RootBracket, 5> find_derivative_cascade(double width_tol = 1e-12);

/// f_c(t) = (t^4-1)/[c t^4 + (2-c) t^3 + (2-c) t + c] - 2 arctan((t-1)/(t+1))
/// for c in (0,1), t >= 1. f_c(1) = 0; f_c(t) -> 1/c - pi/2 as t -> inf.
///
/// Internally the rational part is rewritten in x = (t-1)/(t+1) (the two
/// branches agree identically) and for x < 0.01 the difference is expanded
/// as a series in x, since both branches approach 2x and the direct
/// subtraction loses the O(x^3) result in rounding noise.
double fc_eval(double c, double t);

/// Numerator polynomial of f_c': degree 8, palindromic,
///   (2-2c^2-c) t^8 - 4c(2-c) t^7 + 2c(2-c) t^6 + 4c^2 t^5
///   - 2(4c^2-5c+2) t^4 + 4c^2 t^3 + 2c(2-c) t^2 - 4c(2-c) t + 2-2c^2-c,
/// satisfying f_c'(t) = gc(t) / ((t^2+1)[c t^4+(2-c) t^3+(2-c) t+c]^2).
double gc_eval(double c, double t);

/// g(t) = (t^2+1)[(t+1) sqrt(t^2+1) - 2 sqrt(2) t] / [(t^2+t+1)(t-1)^2],
/// strictly increasing from (1, inf) onto (sqrt(2)/2, 1); g(1) returns the
/// limit sqrt(2)/2. Evaluated through the substitution
/// u = (t+1)/sqrt(t^2+1), whose pole-cancelled form is regular at t = 1
/// where the defining quotient is 0/0.
double g_eval(double t);

/// h(u) = 2(u - sqrt(2) u^2 + sqrt(2)) / (-u^4 + u^2 + 2) on (1, sqrt(2)),
/// the image of g under t = tan x, u = sin x + cos x. Evaluated with the
/// common (u - sqrt(2)) factor of numerator and denominator cancelled.
double h_eval(double u);

/// h'(u) < 0 throughout (1, sqrt(2)).
double h_prime(double u);

/// Samples fn over the grid and reports sign uniformity. Fewer than two
/// grid points throw std::invalid_argument.
SignReport verify_sign(std::string function_id, const std::function<double(double)>& fn,
                       std::span<const double> grid);

/// Registry flavor: function_id in {"f1", "fc:4/9", "fc:2/pi"}.
SignReport verify_sign(const std::string& function_id,
                       const GridSpec& grid = GridSpec::lemma_default());

}  // namespace meanbounds::lemmas
