#pragma once

#include <algorithm>
#include <cmath>

namespace negapoly::testing {

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

/// |got - want| relative to max(1, |want|).
inline double mixed_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace negapoly::testing
