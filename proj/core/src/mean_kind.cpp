#include "meanbounds/mean_kind.hpp"

#include <charconv>
#include <cstdio>

namespace meanbounds {

std::string MeanKind::name() const {
  switch (family_) {
    case MeanFamily::harmonic: return "H";
    case MeanFamily::geometric: return "G";
    case MeanFamily::logarithmic: return "L";
    case MeanFamily::identric: return "I";
    case MeanFamily::arithmetic: return "A";
    case MeanFamily::seiffert: return "T";
    case MeanFamily::neuman_sandor: return "NS";
    case MeanFamily::quadratic: return "Q";
    case MeanFamily::contraharmonic_first: return "C";
    case MeanFamily::contraharmonic_second: return "D";
    case MeanFamily::power: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "M%.17g", exponent_);
      return buf;
    }
  }
  return "?";
}

std::optional<MeanKind> MeanKind::parse(std::string_view text) {
  if (text == "H") return harmonic();
  if (text == "G") return geometric();
  if (text == "L") return logarithmic();
  if (text == "I") return identric();
  if (text == "A") return arithmetic();
  if (text == "T") return seiffert();
  if (text == "NS") return neuman_sandor();
  if (text == "Q") return quadratic();
  if (text == "C") return contraharmonic_first();
  if (text == "D") return contraharmonic_second();
  if (text.size() > 1 && text.front() == 'M') {
    double p = 0.0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) return power(p);
  }
  return std::nullopt;
}

}  // namespace meanbounds
