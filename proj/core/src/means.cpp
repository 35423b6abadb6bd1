#include "meanbounds/means.hpp"

#include <cmath>
#include <stdexcept>

namespace meanbounds {
namespace {

// Half-diagonal coordinates of a sorted pair. Working with halves keeps
// hi + lo representable even when both inputs sit near DBL_MAX.
struct Split {
  double lo;
  double hi;
  double x;    // (hi - lo)/(hi + lo), in [0, 1)
  double avg;  // (hi + lo)/2
};

Split split(const PositivePair& p) {
  const double lo = p.min();
  const double hi = p.max();
  const double hh = 0.5 * hi;
  const double hl = 0.5 * lo;
  return {lo, hi, (hh - hl) / (hh + hl), hh + hl};
}

// Below this value of x = (a-b)/(a+b) the difference quotients are 0/0
// noise in doubles and the series evaluators take over.
constexpr double kSeriesBand = 1e-4;

// x/atan(x) - 1; truncation < 1e-25 for |x| <= 1e-4.
double atan_ratio_m1(double x2) {
  return x2 * (1.0 / 3.0 +
               x2 * (-4.0 / 45.0 + x2 * (44.0 / 945.0 + x2 * (-428.0 / 14175.0))));
}

// x/asinh(x) - 1.
double asinh_ratio_m1(double x2) {
  return x2 * (1.0 / 6.0 + x2 * (-17.0 / 360.0 + x2 * (367.0 / 15120.0)));
}

// x/atanh(x) - 1.
double atanh_ratio_m1(double x2) {
  return -x2 * (1.0 / 3.0 +
                x2 * (4.0 / 45.0 + x2 * (44.0 / 945.0 + x2 * (428.0 / 14175.0))));
}

// log I((1+x)A, (1-x)A) - log A = -(x^2/6 + x^4/20 + x^6/42 + ...).
double identric_exponent_series(double x2) {
  return -x2 * (1.0 / 6.0 + x2 * (1.0 / 20.0 + x2 * (1.0 / 42.0)));
}

double harmonic_impl(const Split& s) { return 2.0 * s.lo / (1.0 + s.lo / s.hi); }

double geometric_impl(const Split& s) { return std::sqrt(s.lo) * std::sqrt(s.hi); }

double logarithmic_impl(const Split& s) {
  if (s.x < kSeriesBand) return s.avg * (1.0 + atanh_ratio_m1(s.x * s.x));
  if (s.x < 0.5) return (s.hi - s.lo) / (2.0 * std::atanh(s.x));
  // Far from the diagonal atanh(x) would amplify the rounding of 1 - x;
  // log(hi/lo) >= log 3 has no cancellation there.
  const double q = s.hi / s.lo;
  const double log_ratio = std::isfinite(q) ? std::log(q) : std::log(s.hi) - std::log(s.lo);
  return (s.hi - s.lo) / log_ratio;
}

double identric_impl(const Split& s) {
  if (s.x < kSeriesBand) return s.avg * std::exp(identric_exponent_series(s.x * s.x));
  const double va = s.hi / s.avg;  // in (1, 2)
  const double vb = s.lo / s.avg;  // in (0, 1)
  const double span = (s.hi - s.lo) / s.avg;
  return s.avg * std::exp((va * std::log(va) - vb * std::log(vb)) / span - 1.0);
}

double seiffert_impl(const Split& s) {
  if (s.x < kSeriesBand) return s.avg * (1.0 + atan_ratio_m1(s.x * s.x));
  return (s.hi - s.lo) / (2.0 * std::atan(s.x));
}

double neuman_sandor_impl(const Split& s) {
  if (s.x < kSeriesBand) return s.avg * (1.0 + asinh_ratio_m1(s.x * s.x));
  return (s.hi - s.lo) / (2.0 * std::asinh(s.x));
}

double quadratic_impl(const Split& s) {
  if (s.hi > 1e150 || s.hi < 1e-150) {
    const double r = s.lo / s.hi;
    return s.hi * std::sqrt(0.5 * (1.0 + r * r));
  }
  return std::sqrt(0.5 * (s.lo * s.lo + s.hi * s.hi));
}

double contraharmonic_first_impl(const Split& s) {
  const double r = s.lo / s.hi;
  return s.hi * ((1.0 + r * r) / (1.0 + r));
}

double contraharmonic_second_impl(const Split& s) {
  const double r = s.lo / s.hi;
  return s.hi * ((1.0 + r * r * r) / (1.0 + r * r));
}

}  // namespace

double harmonic(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return harmonic_impl(split(p));
}

double geometric(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return geometric_impl(split(p));
}

double logarithmic(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return logarithmic_impl(split(p));
}

double identric(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return identric_impl(split(p));
}

double arithmetic(const PositivePair& p) { return 0.5 * p.a() + 0.5 * p.b(); }

double seiffert(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return seiffert_impl(split(p));
}

double neuman_sandor(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return neuman_sandor_impl(split(p));
}

double quadratic(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return quadratic_impl(split(p));
}

double contraharmonic_first(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return contraharmonic_first_impl(split(p));
}

double contraharmonic_second(const PositivePair& p) {
  if (p.a() == p.b()) return p.a();
  return contraharmonic_second_impl(split(p));
}

double power_mean(double p, const PositivePair& pair) {
  if (pair.a() == pair.b()) return pair.a();
  if (std::abs(p) < 1e-8) return geometric(pair);
  if (p == 1.0) return arithmetic(pair);
  if (p == -1.0) return harmonic(pair);
  if (p == 2.0) return quadratic(pair);
  const Split s = split(pair);
  // Factoring out hi (p > 0) or lo (p < 0) keeps every intermediate in
  // [0, 1] x the returned magnitude, so no overflow for any p.
  if (p > 0.0) {
    const double rp = std::pow(s.lo / s.hi, p);
    return s.hi * std::pow(0.5 * (1.0 + rp), 1.0 / p);
  }
  const double q = -p;
  const double rq = std::pow(s.lo / s.hi, q);
  return s.lo * std::pow(2.0 / (1.0 + rq), 1.0 / q);
}

double mean_value(MeanKind kind, const PositivePair& pair) {
  switch (kind.family()) {
    case MeanFamily::harmonic: return harmonic(pair);
    case MeanFamily::geometric: return geometric(pair);
    case MeanFamily::logarithmic: return logarithmic(pair);
    case MeanFamily::identric: return identric(pair);
    case MeanFamily::arithmetic: return arithmetic(pair);
    case MeanFamily::seiffert: return seiffert(pair);
    case MeanFamily::neuman_sandor: return neuman_sandor(pair);
    case MeanFamily::quadratic: return quadratic(pair);
    case MeanFamily::contraharmonic_first: return contraharmonic_first(pair);
    case MeanFamily::contraharmonic_second: return contraharmonic_second(pair);
    case MeanFamily::power: return power_mean(kind.exponent(), pair);
  }
  throw std::invalid_argument("mean_value: unknown mean kind");
}

}  // namespace meanbounds
