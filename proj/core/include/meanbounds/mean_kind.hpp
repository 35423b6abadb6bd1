#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace meanbounds {

enum class MeanFamily : std::uint8_t {
  harmonic,
  geometric,
  logarithmic,
  identric,
  arithmetic,
  seiffert,
  neuman_sandor,
  quadratic,
  contraharmonic_first,
  contraharmonic_second,
  power,
};

/// Selector for a bivariate mean. All families are parameter-free except
/// `power`, which carries its exponent p (p = 0 evaluates as the geometric
/// mean, the p -> 0 limit).
class MeanKind {
 public:
  static constexpr MeanKind harmonic() { return MeanKind(MeanFamily::harmonic); }
  static constexpr MeanKind geometric() { return MeanKind(MeanFamily::geometric); }
  static constexpr MeanKind logarithmic() { return MeanKind(MeanFamily::logarithmic); }
  static constexpr MeanKind identric() { return MeanKind(MeanFamily::identric); }
  static constexpr MeanKind arithmetic() { return MeanKind(MeanFamily::arithmetic); }
  static constexpr MeanKind seiffert() { return MeanKind(MeanFamily::seiffert); }
  static constexpr MeanKind neuman_sandor() { return MeanKind(MeanFamily::neuman_sandor); }
  static constexpr MeanKind quadratic() { return MeanKind(MeanFamily::quadratic); }
  static constexpr MeanKind contraharmonic_first() {
    return MeanKind(MeanFamily::contraharmonic_first);
  }
  static constexpr MeanKind contraharmonic_second() {
    return MeanKind(MeanFamily::contraharmonic_second);
  }
  static constexpr MeanKind power(double p) { return MeanKind(MeanFamily::power, p); }

  constexpr MeanFamily family() const { return family_; }

  /// Exponent of a power mean; meaningless for other families.
  constexpr double exponent() const { return exponent_; }

  /// Short name: H, G, L, I, A, T, NS, Q, C, D, or M<p> for power means.
  std::string name() const;

  /// Inverse of name(); accepts the short names (case-sensitive) and the
  /// power-mean spelling M<p> (e.g. "M2", "M-1", "M0.5").
  static std::optional<MeanKind> parse(std::string_view text);

  friend constexpr bool operator==(const MeanKind&, const MeanKind&) = default;

 private:
  constexpr explicit MeanKind(MeanFamily f, double p = 0.0) : family_(f), exponent_(p) {}

  MeanFamily family_;
  double exponent_;
};

}  // namespace meanbounds
