#pragma once

#include <cstddef>
#include <vector>

namespace orlicz {

/// Log-spaced sampling window on the positive t-axis.
struct GridSpec {
  double lo = 1e-8;
  double hi = 1e8;
  std::size_t n = 512;

  /// Default window with the density taken from ORLICZ_GRID_DENSITY when set.
  static GridSpec standard();

  /// Same window with `factor` times as many points.
  GridSpec refined(std::size_t factor) const;

  std::vector<double> points() const;

  /// Throws DomainError unless 0 < lo < hi and n >= 2.
  void check() const;
};

}  // namespace orlicz
