#include "meanbounds/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meanbounds {

std::vector<double> GridSpec::points() const {
  if (near_count < 0 || far_count < 0)
    throw std::invalid_argument("GridSpec: point counts must be nonnegative");
  if (near_count + far_count == 0)
    throw std::invalid_argument("GridSpec: grid must contain at least one point");
  if (!(near_hi > 1.0)) throw std::invalid_argument("GridSpec: near_hi must exceed 1");
  if (!(far_lo >= 1.0)) throw std::invalid_argument("GridSpec: far_lo must be >= 1");
  if (!(t_max > far_lo)) throw std::invalid_argument("GridSpec: t_max must exceed far_lo");
  if (!(exclusion >= 0.0)) throw std::invalid_argument("GridSpec: exclusion must be >= 0");

  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(near_count + far_count));
  for (int j = 1; j <= near_count; ++j)
    pts.push_back(1.0 + (near_hi - 1.0) * static_cast<double>(j) / near_count);
  const double span = t_max / far_lo;
  for (int k = 1; k <= far_count; ++k)
    pts.push_back(far_lo * std::pow(span, static_cast<double>(k) / far_count));

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::erase_if(pts, [this](double t) { return t - 1.0 < exclusion; });
  return pts;
}

}  // namespace meanbounds
