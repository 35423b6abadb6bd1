#pragma once

#include <span>
#include <string>
#include <vector>

#include "meanbounds/bounds.hpp"
#include "meanbounds/grid.hpp"
#include "meanbounds/lemmas.hpp"

namespace meanbounds::report {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Fixed 17-significant-digit representation for human-facing tables.
std::string format_double_17(double v);

/// Certificate document: {query, grid, margins, verdict, worst_points, ...}.
std::string json_certificate(const bounds::BoundCertificate& cert, const GridSpec& grid,
                             int indent = 2);

/// RatioProfile document: {target, limit_at_one, limit_at_infinity, samples}.
std::string json_profile(const bounds::RatioProfile& profile, int indent = 2);

std::string json_sign_report(const lemmas::SignReport& report, int indent = 2);

/// Cascade document: the five brackets keyed lambda1..lambda4, lambda0.
std::string json_cascade(std::span<const lemmas::RootBracket> brackets, int indent = 2);

/// CSV with header "t,ratio,lower_margin,upper_margin".
std::string csv_scan(const std::vector<bounds::ScanRow>& rows);

}  // namespace meanbounds::report
