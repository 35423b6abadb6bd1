#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "meanbounds/grid.hpp"
#include "meanbounds/mean_kind.hpp"
#include "meanbounds/means.hpp"

namespace meanbounds::bounds {

/// A double inequality alpha*U + (1-alpha)*Lo < M < beta*U + (1-beta)*Lo
/// to be certified over a grid of ratios t = a/b.
struct ConvexBoundQuery {
  MeanKind target;  // the sandwiched mean M
  MeanKind lower;   // Lo
  MeanKind upper;   // U
  double alpha;
  double beta;
};

/// Sampled values of a mean-difference ratio R(t) over t > 1 together
/// with its two boundary limits.
struct RatioProfile {
  MeanKind target;
  std::vector<std::pair<double, double>> samples;  // (t, R(t))
  double limit_at_one;
  double limit_at_infinity;
};

/// Grid certificate for a ConvexBoundQuery: per-sample margins reduced to
/// their worst cases. pass holds iff every margin is strictly positive.
struct BoundCertificate {
  ConvexBoundQuery query;
  std::size_t grid_size = 0;
  double worst_lower_margin = 0.0;  // min over t of M - [alpha U + (1-alpha) Lo]
  double worst_upper_margin = 0.0;  // min over t of [beta U + (1-beta) Lo] - M
  double worst_lower_t = 0.0;
  double worst_upper_t = 0.0;
  std::size_t violations = 0;
  double first_violation_t = 0.0;  // NaN when violations == 0
  bool pass = false;
};

/// One scan output row; margins refer to the target's sharp constants.
struct ScanRow {
  double t;
  double ratio;
  double lower_margin;
  double upper_margin;
};

/// Mean evaluated on the normalized pair (t, 1). All means are
/// homogeneous of degree 1, so this loses no generality.
double mean_at(MeanKind kind, double t);

/// R(t) = (M(t,1) - H(t,1)) / (D(t,1) - H(t,1)) for t > 1, where M is the
/// target, H the harmonic and D the second contraharmonic mean.
///
/// The Seiffert, quadratic and first-contraharmonic targets use closed
/// stable forms that stay accurate all the way into the t -> 1 limit;
/// any other target is evaluated by direct mean arithmetic (accurate only
/// away from the diagonal).
double ratio(MeanKind target, double t);

/// Closed-form (t -> 1, t -> inf) limits of R: Seiffert (4/9, 2/pi),
/// quadratic (1/2, sqrt(2)/2), first contraharmonic (2/3, 1). Throws
/// std::invalid_argument for other targets.
std::pair<double, double> ratio_limits(MeanKind target);

/// Infimum and supremum of R over the grid samples. For the three
/// supported targets these converge to ratio_limits as the grid extends.
std::pair<double, double> estimate_sharp_constants(MeanKind target, const GridSpec& grid);

/// Certifies the query over the grid. Margins are evaluated through the
/// identity M - [aU + (1-a)Lo] = (U - Lo)(R - a) with stable R and U - Lo
/// for the certified (lower, upper, target) triples; near t = 1 a literal
/// subtraction of the convex combinations could not resolve their signs.
BoundCertificate verify_double_inequality(const ConvexBoundQuery& query, const GridSpec& grid);

RatioProfile ratio_profile(MeanKind target, const GridSpec& grid);

/// Scan rows for the target over the grid, margins taken against the
/// target's sharp constants.
std::vector<ScanRow> scan(MeanKind target, const GridSpec& grid);

/// T(a,b) - [c D(a,b) + (1-c) H(a,b)] for c in (0,1), evaluated directly
/// from the means. Vanishes on the diagonal; its sign for a != b equals
/// the sign of f_c(max/min).
double difference_form(double c, const PositivePair& pair);

/// Registered queries: "3.1", "3.2", "3.3" (the theorems with their sharp
/// constants) and "ns-q", "ns-c" (the Neuman--Sandor cross-checks against
/// (A, Q) and (A, C), constants recomputed from their closed forms).
ConvexBoundQuery named_query(std::string_view id);
const std::vector<std::string>& named_query_ids();

}  // namespace meanbounds::bounds
