#pragma once

#include "meanbounds/mean_kind.hpp"
#include "meanbounds/pair.hpp"

namespace meanbounds {

/// Evaluates the selected mean of the pair.
///
/// Every mean is symmetric, homogeneous of degree 1, lies between
/// min(a, b) and max(a, b) (strictly for a != b), and returns a exactly
/// when a == b (the diagonal is defined by its limit).
double mean_value(MeanKind kind, const PositivePair& pair);

double harmonic(const PositivePair& pair);               // 2ab/(a+b)
double geometric(const PositivePair& pair);              // sqrt(ab)
double logarithmic(const PositivePair& pair);            // (a-b)/(log a - log b)
double identric(const PositivePair& pair);               // (1/e)(a^a/b^b)^(1/(a-b))
double arithmetic(const PositivePair& pair);             // (a+b)/2
double neuman_sandor(const PositivePair& pair);          // (a-b)/(2 asinh((a-b)/(a+b)))
double quadratic(const PositivePair& pair);              // sqrt((a^2+b^2)/2)
double contraharmonic_first(const PositivePair& pair);   // (a^2+b^2)/(a+b)
double contraharmonic_second(const PositivePair& pair);  // (a^3+b^3)/(a^2+b^2)

/// Seiffert mean (a-b)/(2 arctan((a-b)/(a+b))).
///
/// For x = (a-b)/(a+b) with |x| < 1e-4 the 0/0 quotient is replaced by a
/// truncated even series of x/arctan(x) whose truncation error is below
/// 1e-25, so the result tracks the exact value to ~1 ulp across the band.
double seiffert(const PositivePair& pair);

/// p-th power mean ((a^p + b^p)/2)^(1/p).
///
/// |p| < 1e-8 evaluates the p -> 0 limit sqrt(ab) instead, avoiding the
/// catastrophic cancellation of the direct form; p in {-1, 1, 2} uses the
/// closed-form harmonic/arithmetic/quadratic paths so those identities
/// hold exactly. Monotone nondecreasing in p and continuous across p = 0.
double power_mean(double p, const PositivePair& pair);

}  // namespace meanbounds
