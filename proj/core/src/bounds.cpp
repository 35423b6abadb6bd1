#include "meanbounds/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meanbounds::bounds {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double x_of(double t) { return (t - 1.0) / (t + 1.0); }

// Excess of a mean M over H at (t,1), divided by A(t,1) x^2 where
// x = (t-1)/(t+1):  psi_M(x) = (M/A - (1 - x^2)) / x^2.  In these units
// R(t) = psi_M(x) (t^2+1) / (2 (t^2+t+1)), which is regular at t = 1.

// psi for the Seiffert mean: (x/atan(x) - 1 + x^2)/x^2. The numerator
// cancels to O(x^2) of itself, so a series takes over below x = 0.03.
double psi_seiffert(double x) {
  const double x2 = x * x;
  if (x < 0.03) {
    return 4.0 / 3.0 +
           x2 * (-4.0 / 45.0 +
                 x2 * (44.0 / 945.0 +
                       x2 * (-428.0 / 14175.0 + x2 * (10196.0 / 467775.0))));
  }
  return (x / std::atan(x) - 1.0 + x2) / x2;
}

// psi for the quadratic mean, rationalized exactly: no series needed.
double psi_quadratic(double x) {
  const double x2 = x * x;
  return (3.0 - x2) / (std::sqrt(1.0 + x2) + 1.0 - x2);
}

// (x/asinh(x) - 1)/x^2, the Neuman-Sandor excess over A in units of A x^2.
double phi_neuman_sandor(double x) {
  const double x2 = x * x;
  if (x < 0.03) {
    return 1.0 / 6.0 +
           x2 * (-17.0 / 360.0 + x2 * (367.0 / 15120.0 + x2 * (-27859.0 / 1814400.0)));
  }
  return (x / std::asinh(x) - 1.0) / x2;
}

double regular_factor(double t) {
  return (t * t + 1.0) / (2.0 * (t * t + t + 1.0));
}

// D(t,1) - H(t,1) = (t-1)^2 (t^2+t+1) / ((t^2+1)(t+1)), cancellation-free.
double d_minus_h(double t) {
  const double tm1 = t - 1.0;
  return tm1 * tm1 * (t * t + t + 1.0) / ((t * t + 1.0) * (t + 1.0));
}

// Q(t,1) - A(t,1) = A x^2 / (sqrt(1+x^2) + 1), rationalized.
double q_minus_a(double t) {
  const double x = x_of(t);
  const double x2 = x * x;
  return 0.5 * (t + 1.0) * x2 / (std::sqrt(1.0 + x2) + 1.0);
}

// C(t,1) - A(t,1) = A x^2 exactly.
double c_minus_a(double t) {
  const double x = x_of(t);
  return 0.5 * (t + 1.0) * x * x;
}

double ratio_ns_over_q(double t) {
  const double x = x_of(t);
  return phi_neuman_sandor(x) * (std::sqrt(1.0 + x * x) + 1.0);
}

double ratio_ns_over_c(double t) { return phi_neuman_sandor(x_of(t)); }

// Stable ratio/scale pair for the certified (target, lower, upper)
// triples; nullptr entries mean "fall back to direct mean arithmetic".
struct StableRoute {
  double (*ratio_fn)(double);
  double (*scale_fn)(double);
};

double ratio_t(double t) { return psi_seiffert(x_of(t)) * regular_factor(t); }
double ratio_q(double t) { return psi_quadratic(x_of(t)) * regular_factor(t); }
double ratio_c(double t) { return (t * t + 1.0) / (t * t + t + 1.0); }

StableRoute stable_route(const ConvexBoundQuery& q) {
  const MeanFamily lo = q.lower.family();
  const MeanFamily up = q.upper.family();
  const MeanFamily tg = q.target.family();
  if (lo == MeanFamily::harmonic && up == MeanFamily::contraharmonic_second) {
    if (tg == MeanFamily::seiffert) return {&ratio_t, &d_minus_h};
    if (tg == MeanFamily::quadratic) return {&ratio_q, &d_minus_h};
    if (tg == MeanFamily::contraharmonic_first) return {&ratio_c, &d_minus_h};
  }
  if (lo == MeanFamily::arithmetic && tg == MeanFamily::neuman_sandor) {
    if (up == MeanFamily::quadratic) return {&ratio_ns_over_q, &q_minus_a};
    if (up == MeanFamily::contraharmonic_first) return {&ratio_ns_over_c, &c_minus_a};
  }
  return {nullptr, nullptr};
}

double ns_log_sqrt2p1() { return std::log(1.0 + kSqrt2); }

}  // namespace

double mean_at(MeanKind kind, double t) { return mean_value(kind, PositivePair(t, 1.0)); }

double ratio(MeanKind target, double t) {
  if (!(t > 1.0)) throw std::invalid_argument("ratio: t must exceed 1");
  switch (target.family()) {
    case MeanFamily::seiffert: return ratio_t(t);
    case MeanFamily::quadratic: return ratio_q(t);
    case MeanFamily::contraharmonic_first: return ratio_c(t);
    default: break;
  }
  return (mean_at(target, t) - mean_at(MeanKind::harmonic(), t)) / d_minus_h(t);
}

std::pair<double, double> ratio_limits(MeanKind target) {
  switch (target.family()) {
    case MeanFamily::seiffert: return {4.0 / 9.0, 2.0 / std::numbers::pi};
    case MeanFamily::quadratic: return {0.5, kSqrt2 / 2.0};
    case MeanFamily::contraharmonic_first: return {2.0 / 3.0, 1.0};
    default:
      throw std::invalid_argument("ratio_limits: no closed-form limits for target " +
                                  target.name());
  }
}

std::pair<double, double> estimate_sharp_constants(MeanKind target, const GridSpec& grid) {
  const std::vector<double> pts = grid.points();
  if (pts.empty()) throw std::invalid_argument("estimate_sharp_constants: empty grid");
  double inf = std::numeric_limits<double>::infinity();
  double sup = -inf;
  for (double t : pts) {
    const double r = ratio(target, t);
    inf = std::min(inf, r);
    sup = std::max(sup, r);
  }
  return {inf, sup};
}

BoundCertificate verify_double_inequality(const ConvexBoundQuery& query, const GridSpec& grid) {
  if (!(query.alpha >= 0.0 && query.alpha <= query.beta && query.beta <= 1.0))
    throw std::invalid_argument("verify_double_inequality: need 0 <= alpha <= beta <= 1");
  const std::vector<double> pts = grid.points();
  if (pts.empty()) throw std::invalid_argument("verify_double_inequality: empty grid");

  const StableRoute route = stable_route(query);
  BoundCertificate cert{.query = query};
  cert.grid_size = pts.size();
  cert.worst_lower_margin = std::numeric_limits<double>::infinity();
  cert.worst_upper_margin = std::numeric_limits<double>::infinity();
  cert.first_violation_t = std::numeric_limits<double>::quiet_NaN();

  for (double t : pts) {
    double lower_margin;
    double upper_margin;
    if (route.ratio_fn != nullptr) {
      const double r = route.ratio_fn(t);
      const double scale = route.scale_fn(t);
      lower_margin = scale * (r - query.alpha);
      upper_margin = scale * (query.beta - r);
    } else {
      const double m = mean_at(query.target, t);
      const double lo = mean_at(query.lower, t);
      const double up = mean_at(query.upper, t);
      lower_margin = m - (query.alpha * up + (1.0 - query.alpha) * lo);
      upper_margin = (query.beta * up + (1.0 - query.beta) * lo) - m;
    }
    if (lower_margin < cert.worst_lower_margin) {
      cert.worst_lower_margin = lower_margin;
      cert.worst_lower_t = t;
    }
    if (upper_margin < cert.worst_upper_margin) {
      cert.worst_upper_margin = upper_margin;
      cert.worst_upper_t = t;
    }
    if (lower_margin <= 0.0 || upper_margin <= 0.0) {
      if (cert.violations == 0) cert.first_violation_t = t;
      ++cert.violations;
    }
  }
  cert.pass = cert.violations == 0;
  return cert;
}

RatioProfile ratio_profile(MeanKind target, const GridSpec& grid) {
  const auto [lim1, liminf] = ratio_limits(target);
  RatioProfile profile{.target = target, .samples = {}, .limit_at_one = lim1,
                       .limit_at_infinity = liminf};
  for (double t : grid.points()) profile.samples.emplace_back(t, ratio(target, t));
  return profile;
}

std::vector<ScanRow> scan(MeanKind target, const GridSpec& grid) {
  const auto [alpha, beta] = ratio_limits(target);
  std::vector<ScanRow> rows;
  for (double t : grid.points()) {
    const double r = ratio(target, t);
    const double scale = d_minus_h(t);
    rows.push_back({t, r, scale * (r - alpha), scale * (beta - r)});
  }
  return rows;
}

double difference_form(double c, const PositivePair& pair) {
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("difference_form: c must lie in (0,1)");
  const double t = mean_value(MeanKind::seiffert(), pair);
  const double d = mean_value(MeanKind::contraharmonic_second(), pair);
  const double h = mean_value(MeanKind::harmonic(), pair);
  return t - (c * d + (1.0 - c) * h);
}

ConvexBoundQuery named_query(std::string_view id) {
  if (id == "3.1") {
    return {MeanKind::seiffert(), MeanKind::harmonic(), MeanKind::contraharmonic_second(),
            4.0 / 9.0, 2.0 / std::numbers::pi};
  }
  if (id == "3.2") {
    return {MeanKind::quadratic(), MeanKind::harmonic(), MeanKind::contraharmonic_second(),
            0.5, kSqrt2 / 2.0};
  }
  if (id == "3.3") {
    return {MeanKind::contraharmonic_first(), MeanKind::harmonic(),
            MeanKind::contraharmonic_second(), 2.0 / 3.0, 1.0};
  }
  if (id == "ns-q") {
    const double l = ns_log_sqrt2p1();
    return {MeanKind::neuman_sandor(), MeanKind::arithmetic(), MeanKind::quadratic(),
            (1.0 - l) / ((kSqrt2 - 1.0) * l), 1.0 / 3.0};
  }
  if (id == "ns-c") {
    const double l = ns_log_sqrt2p1();
    return {MeanKind::neuman_sandor(), MeanKind::arithmetic(),
            MeanKind::contraharmonic_first(), (1.0 - l) / l, 1.0 / 6.0};
  }
  throw std::invalid_argument("named_query: unknown id '" + std::string(id) + "'");
}

const std::vector<std::string>& named_query_ids() {
  static const std::vector<std::string> ids = {"3.1", "3.2", "3.3", "ns-q", "ns-c"};
  return ids;
}

}  // namespace meanbounds::bounds
