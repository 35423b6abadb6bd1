#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "golden_values.hpp"
#include "meanbounds/lemmas.hpp"
#include "testing.hpp"

namespace lemmas = meanbounds::lemmas;
using meanbounds::GridSpec;
using testing_util::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Literal transcriptions used as the independent second route.

double fc_direct(double c, double t) {
  const double num = t * t * t * t - 1.0;
  const double den = c * t * t * t * t + (2.0 - c) * t * t * t + (2.0 - c) * t + c;
  return num / den - 2.0 * std::atan((t - 1.0) / (t + 1.0));
}

double g_direct(double t) {
  const double t2 = t * t;
  return (t2 + 1.0) * ((t + 1.0) * std::sqrt(t2 + 1.0) - 2.0 * kSqrt2 * t) /
         ((t2 + t + 1.0) * (t - 1.0) * (t - 1.0));
}

double h_direct(double u) {
  return 2.0 * (u - kSqrt2 * u * u + kSqrt2) / (-(u * u * u * u) + u * u + 2.0);
}

double h_prime_expanded(double u) {
  const double num = -4.0 * kSqrt2 * std::pow(u, 5) + 6.0 * std::pow(u, 4) +
                     8.0 * kSqrt2 * u * u * u - 2.0 * u * u - 12.0 * kSqrt2 * u + 4.0;
  const double den = -(u * u * u * u) + u * u + 2.0;
  return num / (den * den);
}

double h_prime_factored(double u) {
  const double den = -(u * u * u * u) + u * u + 2.0;
  const double cubic = u * u * u + 5.0 * kSqrt2 / 4.0 * u * u + u - kSqrt2 / 4.0;
  return -4.0 * kSqrt2 * (u - kSqrt2) * (u - kSqrt2) / (den * den) * cubic;
}

}  // namespace

TEST_CASE("f1 signs and closed forms at t = 1") {
  CHECK(rel_err(lemmas::f1_eval(1.0), -8.0 * kPi * (9.0 - 2.0 * kPi)) < 1e-12);
  CHECK(rel_err(lemmas::f1_eval(1.0), golden::kF1At1) < 1e-14);
  CHECK(lemmas::f1_eval(1.0) < 0.0);

  CHECK(rel_err(lemmas::f1_derivative(1, 1.0), -24.0 * kPi * (9.0 - 2.0 * kPi)) < 1e-12);
  CHECK(rel_err(lemmas::f1_derivative(2, 1.0), -8.0 * (70.0 * kPi + 9.0 - 17.0 * kPi * kPi)) <
        1e-12);
  CHECK(rel_err(lemmas::f1_derivative(3, 1.0), -48.0 * (25.0 * kPi + 9.0 - 7.0 * kPi * kPi)) <
        1e-12);
  CHECK(rel_err(lemmas::f1_derivative(4, 1.0), -96.0 * (20.0 * kPi + 15.0 - 7.0 * kPi * kPi)) <
        1e-12);
  CHECK(rel_err(lemmas::f1_derivative(5, 1.0), 960.0 * (kPi + 1.0) * (kPi - 3.0)) < 1e-10);
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(lemmas::f1_derivative(k, 1.0) < 0.0);
  }

  CHECK(rel_err(lemmas::f1_derivative(1, 1.0), golden::kF1PrimeAt1) < 1e-14);
  CHECK(rel_err(lemmas::f1_derivative(2, 1.0), golden::kF1D2At1) < 1e-14);
  CHECK(rel_err(lemmas::f1_derivative(3, 1.0), golden::kF1D3At1) < 1e-14);
  CHECK(rel_err(lemmas::f1_derivative(4, 1.0), golden::kF1D4At1) < 1e-14);
  CHECK(rel_err(lemmas::f1_derivative(5, 1.0), golden::kF1D5At1) < 1e-14);
}

TEST_CASE("f1 fifth derivative stays positive past t = 1") {
  for (double t : {1.0, 1.5, 2.0, 10.0, 1e3, 1e6}) {
    CAPTURE(t);
    CHECK(lemmas::f1_derivative(5, t) > 0.0);
    CHECK(lemmas::f1_derivative(5, t) >= 960.0 * (kPi + 1.0) * (kPi - 3.0) * 0.999999);
  }
}

TEST_CASE("f1 coefficients are palindromic: t^6 f1(1/t) = f1(t)") {
  for (double t : {1.5, 2.0, 3.7, 10.0, 42.0}) {
    const double lhs = std::pow(t, 6) * lemmas::f1_eval(1.0 / t);
    CAPTURE(t);
    CHECK(rel_err(lhs, lemmas::f1_eval(t)) < 1e-12);
  }
}

TEST_CASE("f1_derivative degree 0 is f1_eval and k is range-checked") {
  CHECK(lemmas::f1_derivative(0, 2.75) == lemmas::f1_eval(2.75));
  CHECK_THROWS_AS(lemmas::f1_derivative(-1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::f1_derivative(6, 2.0), std::invalid_argument);
}

TEST_CASE("derivative cascade brackets the five roots in order") {
  const auto brackets = lemmas::find_derivative_cascade();
  const double roots[] = {golden::kLambda1, golden::kLambda2, golden::kLambda3,
                          golden::kLambda4, golden::kLambda0};
  double prev_hi = 1.0;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const auto& b = brackets[i];
    CAPTURE(i);
    CHECK(b.lo < b.hi);
    CHECK(b.width == b.hi - b.lo);
    CHECK(b.width <= 1e-12);
    CHECK(std::signbit(b.f_lo) != std::signbit(b.f_hi));
    CHECK(b.f_lo < 0.0);  // each function starts negative at t = 1
    CHECK(b.f_hi > 0.0);
    CHECK(b.lo > prev_hi);  // lambda1 < lambda2 < lambda3 < lambda4 < lambda0
    prev_hi = b.hi;
    const double mid = 0.5 * (b.lo + b.hi);
    CHECK(rel_err(mid, roots[i]) < 1e-10);
  }
  CHECK(brackets[0].lo > 1.0);
}

TEST_CASE("lambda0 bracket matches the extended-precision root to 10 digits") {
  const auto brackets = lemmas::find_derivative_cascade();
  const auto& b0 = brackets[4];
  CHECK(b0.lo <= golden::kLambda0);
  CHECK(golden::kLambda0 <= b0.hi);
  CHECK(rel_err(0.5 * (b0.lo + b0.hi), golden::kLambda0) < 1e-10);
  CHECK(lemmas::f1_eval(b0.lo) < 0.0);
  CHECK(lemmas::f1_eval(b0.hi) > 0.0);
}

TEST_CASE("fc vanishes at t = 1 and honors its domain") {
  for (double c : {0.1, 4.0 / 9.0, 2.0 / kPi, 0.9}) {
    CAPTURE(c);
    CHECK(lemmas::fc_eval(c, 1.0) == 0.0);
  }
  CHECK_THROWS_AS(lemmas::fc_eval(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::fc_eval(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::fc_eval(-0.3, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::fc_eval(0.5, 0.999), std::invalid_argument);
}

TEST_CASE("fc matches the oracle and the literal formula") {
  CHECK(lemmas::fc_eval(4.0 / 9.0, 2.0) > 0.0);
  CHECK(lemmas::fc_eval(2.0 / kPi, 2.0) < 0.0);
  CHECK(rel_err(lemmas::fc_eval(4.0 / 9.0, 2.0), golden::kFc49_2) < 5e-13);
  CHECK(rel_err(lemmas::fc_eval(2.0 / kPi, 2.0), golden::kFc2pi_2) < 5e-13);
  // series region; the oracle evaluated the exact-c function, so the double
  // rounding of c itself dominates the comparison
  CHECK(rel_err(lemmas::fc_eval(4.0 / 9.0, 1.001), golden::kFc49_1p001) < 1e-8);
  CHECK(rel_err(lemmas::fc_eval(2.0 / kPi, 1.001), golden::kFc2pi_1p001) < 1e-8);

  for (double c : {0.3, 4.0 / 9.0, 2.0 / kPi, 0.7}) {
    for (double t : {1.5, 2.0, 10.0}) {
      CAPTURE(c);
      CAPTURE(t);
      CHECK(rel_err(lemmas::fc_eval(c, t), fc_direct(c, t)) < 1e-12);
    }
  }
}

TEST_CASE("fc limits at infinity") {
  // (2.9): f_c -> 1/c - pi/2; for c = 2/pi the limit is 0
  CHECK(rel_err(lemmas::fc_eval(0.3, 1e8), 1.0 / 0.3 - kPi / 2.0) < 1e-6);
  CHECK(std::abs(lemmas::fc_eval(2.0 / kPi, 1e8)) < 1e-6);
}

TEST_CASE("f_{2/pi} decreases to its minimum at lambda0 then increases") {
  const double c = 2.0 / kPi;
  CHECK(rel_err(lemmas::fc_eval(c, golden::kLambda0), golden::kFc2piMin) < 1e-12);

  std::vector<double> left;
  for (int i = 0; i <= 150; ++i)
    left.push_back(1.0 + std::pow(10.0, -3.0 + 3.6 * i / 150.0));  // 1.001 .. ~4.98
  double prev = lemmas::fc_eval(c, left.front());
  for (std::size_t i = 1; i < left.size(); ++i) {
    const double v = lemmas::fc_eval(c, left[i]);
    CAPTURE(left[i]);
    CHECK(v < prev);
    prev = v;
  }

  std::vector<double> right;
  for (int i = 0; i <= 150; ++i)
    right.push_back((golden::kLambda0 + 0.01) * std::pow(1e6 / (golden::kLambda0 + 0.01),
                                                         static_cast<double>(i) / 150.0));
  prev = lemmas::fc_eval(c, right.front());
  for (std::size_t i = 1; i < right.size(); ++i) {
    const double v = lemmas::fc_eval(c, right[i]);
    CAPTURE(right[i]);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("gc factorization identities (2.12) and (2.14)") {
  auto rhs_49 = [](double t) {
    return 2.0 / 81.0 * std::pow(t - 1.0, 4) *
           (47.0 * std::pow(t, 4) + 76.0 * t * t * t + 78.0 * t * t + 76.0 * t + 47.0);
  };
  auto rhs_2pi = [](double t) {
    return 2.0 * (t - 1.0) * (t - 1.0) / (kPi * kPi) * lemmas::f1_eval(t);
  };
  for (double t : {1.5, 2.0, 10.0}) {
    CAPTURE(t);
    CHECK(rel_err(lemmas::gc_eval(4.0 / 9.0, t), rhs_49(t)) < 1e-12);
    CHECK(rel_err(lemmas::gc_eval(2.0 / kPi, t), rhs_2pi(t)) < 1e-12);
  }
  std::mt19937_64 gen(0x5EED);
  std::uniform_real_distribution<double> dist(1.0, 100.0);
  for (int i = 0; i < 100; ++i) {
    const double t = dist(gen);
    CAPTURE(t);
    CHECK(rel_err(lemmas::gc_eval(4.0 / 9.0, t), rhs_49(t)) < 1e-12);
    CHECK(rel_err(lemmas::gc_eval(2.0 / kPi, t), rhs_2pi(t)) < 1e-12);
  }
  CHECK(std::abs(lemmas::gc_eval(4.0 / 9.0, 1.0)) < 1e-14);  // (t-1)^4 factor
}

TEST_CASE("gc is the derivative numerator of fc (2.10)") {
  for (double c : {0.3, 4.0 / 9.0, 2.0 / kPi}) {
    for (double t : {1.2, 1.5, 2.0, 3.0, 5.0, 10.0}) {
      const double h = 1e-6 * t;
      const double numeric = (lemmas::fc_eval(c, t + h) - lemmas::fc_eval(c, t - h)) / (2.0 * h);
      const double den = c * std::pow(t, 4) + (2.0 - c) * t * t * t + (2.0 - c) * t + c;
      const double closed = lemmas::gc_eval(c, t) / ((t * t + 1.0) * den * den);
      CAPTURE(c);
      CAPTURE(t);
      CHECK(rel_err(numeric, closed) < 1e-6);
    }
  }
}

TEST_CASE("g limits, golden values and dual-route agreement") {
  CHECK(lemmas::g_eval(1.0) == doctest::Approx(kSqrt2 / 2.0).epsilon(1e-15));
  CHECK(std::abs(lemmas::g_eval(1.0 + 1e-8) - kSqrt2 / 2.0) < 1e-12);
  CHECK(std::abs(lemmas::g_eval(1e12) - 1.0) < 1e-11);
  CHECK(rel_err(lemmas::g_eval(2.0), golden::kG_2) < 1e-14);
  CHECK(rel_err(lemmas::g_eval(10.0), golden::kG_10) < 1e-14);
  CHECK_THROWS_AS(lemmas::g_eval(0.99), std::invalid_argument);

  // literal (2.15) quotient agrees wherever it is itself well conditioned
  for (int i = 0; i <= 20; ++i) {
    const double t = 1.1 * std::pow(1e6 / 1.1, i / 20.0);
    CAPTURE(t);
    CHECK(rel_err(lemmas::g_eval(t), g_direct(t)) < 1e-12);
  }
}

TEST_CASE("g increases strictly from sqrt2/2 to 1") {
  std::vector<double> ts;
  for (int i = 0; i < 1000; ++i)
    ts.push_back(1.0 + std::pow(10.0, -4.0 + 10.0 * i / 999.0));  // 1+1e-4 .. 1e6
  double prev = 0.0;
  for (double t : ts) {
    const double v = lemmas::g_eval(t);
    CAPTURE(t);
    CHECK(v > kSqrt2 / 2.0);
    CHECK(v < 1.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("h matches its literal form and the golden values") {
  CHECK(rel_err(lemmas::h_eval(1.2), golden::kH_1p2) < 1e-14);
  CHECK(rel_err(lemmas::h_prime(1.2), golden::kHPrime_1p2) < 1e-13);
  for (double u : {1.05, 1.2, 1.4}) {
    CAPTURE(u);
    CHECK(rel_err(lemmas::h_eval(u), h_direct(u)) < 1e-12);
  }
  CHECK_THROWS_AS(lemmas::h_eval(1.0), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::h_eval(kSqrt2), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::h_eval(0.9), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::h_eval(1.5), std::invalid_argument);
  CHECK_THROWS_AS(lemmas::h_prime(1.0), std::invalid_argument);
}

TEST_CASE("h' is negative and matches both written forms of (2.18)") {
  CHECK(lemmas::h_prime(1.2) < 0.0);
  for (double u : {1.1, 1.3, 1.4}) {
    CAPTURE(u);
    CHECK(rel_err(lemmas::h_prime(u), h_prime_expanded(u)) < 1e-12);
    CHECK(rel_err(lemmas::h_prime(u), h_prime_factored(u)) < 1e-12);
  }
  for (int i = 0; i < 1000; ++i) {
    const double u = (1.0 + 1e-9) + (kSqrt2 - 2e-9 - 1.0) * i / 999.0;
    CAPTURE(u);
    CHECK(lemmas::h_prime(u) < 0.0);
  }
}

TEST_CASE("g/h substitution consistency at random x in (pi/4, pi/2)") {
  std::mt19937_64 gen(0x5AB5);
  std::uniform_real_distribution<double> dist(kPi / 4.0 + 0.01, kPi / 2.0 - 0.01);
  for (int i = 0; i < 20; ++i) {
    const double x = dist(gen);
    const double t = std::tan(x);
    const double u = std::sin(x) + std::cos(x);
    CAPTURE(x);
    CHECK(rel_err(lemmas::h_eval(u), lemmas::g_eval(t)) < 1e-12);
  }
}

TEST_CASE("sign verification over the default grid") {
  const auto pos = lemmas::verify_sign("fc:4/9");
  CHECK(pos.sign == 1);
  CHECK(pos.violations == 0);
  CHECK(pos.min_abs_value > 0.0);
  CHECK(pos.grid.size() == 640);

  const auto neg = lemmas::verify_sign("fc:2/pi");
  CHECK(neg.sign == -1);
  CHECK(neg.violations == 0);
  CHECK(neg.min_abs_value > 0.0);

  CHECK_THROWS_AS(lemmas::verify_sign("nope"), std::invalid_argument);
}

TEST_CASE("f1 is negative up to lambda0 and changes sign beyond") {
  std::vector<double> below;
  for (int i = 0; i <= 200; ++i)
    below.push_back(1.0 + (golden::kLambda0 - 1e-3 - 1.0) * i / 200.0);
  const auto rep =
      lemmas::verify_sign("f1 below lambda0", [](double t) { return lemmas::f1_eval(t); },
                          below);
  CHECK(rep.sign == -1);
  CHECK(rep.violations == 0);

  const auto full = lemmas::verify_sign("f1");
  CHECK(full.violations > 0);  // the default grid straddles lambda0
}

TEST_CASE("verify_sign rejects degenerate grids") {
  const std::vector<double> one = {2.0};
  CHECK_THROWS_AS(
      lemmas::verify_sign("f1", [](double t) { return lemmas::f1_eval(t); }, one),
      std::invalid_argument);
}
