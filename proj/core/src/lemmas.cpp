#include "meanbounds/lemmas.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace meanbounds::lemmas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// f1 coefficients, ascending powers. Palindromic.
constexpr std::array<double, 7> kF1Coeffs = {
    kPi * kPi - kPi - 4.0,        -2.0 * kPi * (5.0 - kPi),
    -3.0 * kPi * (5.0 - kPi),     -4.0 * (5.0 * kPi - kPi * kPi - 2.0),
    -3.0 * kPi * (5.0 - kPi),     -2.0 * kPi * (5.0 - kPi),
    kPi * kPi - kPi - 4.0,
};

double horner(std::span<const double> coeffs, double t) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Coefficients of the k-th derivative of f1, ascending powers.
std::vector<double> f1_deriv_coeffs(int k) {
  std::vector<double> cs(kF1Coeffs.begin(), kF1Coeffs.end());
  for (int d = 0; d < k; ++d) {
    for (std::size_t i = 1; i < cs.size(); ++i) cs[i - 1] = cs[i] * static_cast<double>(i);
    cs.pop_back();
  }
  return cs;
}

constexpr double kSearchCeiling = 1e6;

RootBracket bracket_sign_change(const std::function<double(double)>& fn, double width_tol) {
  double lo = 1.0;
  double f_lo = fn(lo);
  double hi = 2.0;
  double f_hi = fn(hi);
  while ((f_hi < 0.0) == (f_lo < 0.0)) {
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    if (hi > kSearchCeiling)
      throw std::runtime_error("bracket_sign_change: no sign change below t = 1e6");
    f_hi = fn(hi);
  }
  while (hi - lo > width_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval below double spacing
    const double f_mid = fn(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  // An exact zero at a bisection midpoint would land on the hi side; nudge
  // past it so the endpoint signs stay strictly opposite.
  while (f_hi == 0.0) {
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    f_hi = fn(hi);
  }
  return {lo, hi, f_lo, f_hi, hi - lo};
}

}  // namespace

double f1_eval(double t) { return horner(kF1Coeffs, t); }

double f1_derivative(int k, double t) {
  if (k < 0 || k > 5) throw std::invalid_argument("f1_derivative: k must lie in 0..5");
  if (k == 0) return f1_eval(t);
  return horner(f1_deriv_coeffs(k), t);
}

std::array<RootBracket, 5> find_derivative_cascade(double width_tol) {
  std::array<RootBracket, 5> out{};
  for (int i = 0; i < 5; ++i) {
    const int k = 4 - i;  // f1^(4) first, f1 itself last
    out[static_cast<std::size_t>(i)] =
        bracket_sign_change([k](double t) { return f1_derivative(k, t); }, width_tol);
  }
  return out;
}

double fc_eval(double c, double t) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("fc_eval: c must lie in (0,1)");
  if (!(t >= 1.0)) throw std::invalid_argument("fc_eval: t must be >= 1");
  const double x = (t - 1.0) / (t + 1.0);
  const double x2 = x * x;
  if (x < 0.01) {
    const double d2 = 4.0 / 3.0 - 3.0 * c;
    const double d4 = (9.0 * c - 4.0) * c + 4.0 / 5.0;
    const double d6 = ((-27.0 * c + 15.0) * c - 7.0) * c + 8.0 / 7.0;
    const double d8 = (((81.0 * c - 54.0) * c + 34.0) * c - 8.0) * c + 8.0 / 9.0;
    return 2.0 * x * (x2 * (d2 + x2 * (d4 + x2 * (d6 + x2 * d8))));
  }
  const double rational =
      2.0 * x * (1.0 + x2) / (1.0 + 3.0 * c * x2 + (c - 1.0) * x2 * x2);
  return rational - 2.0 * std::atan(x);
}

double gc_eval(double c, double t) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("gc_eval: c must lie in (0,1)");
  const double e0 = 2.0 - 2.0 * c * c - c;
  const double e1 = -4.0 * c * (2.0 - c);
  const double e2 = 2.0 * c * (2.0 - c);
  const double e3 = 4.0 * c * c;
  const double e4 = -2.0 * ((4.0 * c - 5.0) * c + 2.0);
  const std::array<double, 9> coeffs = {e0, e1, e2, e3, e4, e3, e2, e1, e0};
  return horner(coeffs, t);
}

double g_eval(double t) {
  if (!(t >= 1.0)) throw std::invalid_argument("g_eval: t must be >= 1");
  // u = sin(atan t) + cos(atan t) = (t+1)/sqrt(t^2+1), computed through 1/t
  // so t^2 never overflows; g(t) = h(u) with the (u - sqrt(2)) pole factors
  // cancelled. Regular on all of [1, inf), including the 0/0 point t = 1.
  const double inv = 1.0 / t;
  const double u = (1.0 + inv) / std::sqrt(1.0 + inv * inv);
  return kSqrt2 * (2.0 * u + kSqrt2) / ((u + kSqrt2) * (u * u + 1.0));
}

double h_eval(double u) {
  if (!(u > 1.0 && u < kSqrt2)) throw std::invalid_argument("h_eval: u must lie in (1, sqrt 2)");
  return kSqrt2 * (2.0 * u + kSqrt2) / ((u + kSqrt2) * (u * u + 1.0));
}

double h_prime(double u) {
  if (!(u > 1.0 && u < kSqrt2))
    throw std::invalid_argument("h_prime: u must lie in (1, sqrt 2)");
  const double cubic = ((u + 5.0 * kSqrt2 / 4.0) * u + 1.0) * u - kSqrt2 / 4.0;
  const double up = u + kSqrt2;
  const double u21 = u * u + 1.0;
  return -4.0 * kSqrt2 * cubic / (up * up * u21 * u21);
}

SignReport verify_sign(std::string function_id, const std::function<double(double)>& fn,
                       std::span<const double> grid) {
  if (grid.size() < 2)
    throw std::invalid_argument("verify_sign: grid must contain at least 2 points");
  SignReport report;
  report.function_id = std::move(function_id);
  report.grid.assign(grid.begin(), grid.end());
  report.min_abs_value = std::numeric_limits<double>::infinity();
  report.sign = 0;
  report.violations = 0;
  for (double t : grid) {
    const double v = fn(t);
    report.min_abs_value = std::min(report.min_abs_value, std::abs(v));
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (report.sign == 0) report.sign = s;
    if (s == 0 || s != report.sign) ++report.violations;
  }
  return report;
}

SignReport verify_sign(const std::string& function_id, const GridSpec& grid) {
  const std::vector<double> pts = grid.points();
  if (function_id == "f1")
    return verify_sign(function_id, [](double t) { return f1_eval(t); }, pts);
  if (function_id == "fc:4/9")
    return verify_sign(function_id, [](double t) { return fc_eval(4.0 / 9.0, t); }, pts);
  if (function_id == "fc:2/pi")
    return verify_sign(function_id, [](double t) { return fc_eval(2.0 / kPi, t); }, pts);
  throw std::invalid_argument("verify_sign: unknown function id '" + function_id + "'");
}

}  // namespace meanbounds::lemmas
