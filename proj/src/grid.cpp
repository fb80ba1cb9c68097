#include "orlicz/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "orlicz/errors.hpp"

namespace orlicz {

GridSpec GridSpec::standard() {
  GridSpec grid;
  if (const char* env = std::getenv("ORLICZ_GRID_DENSITY")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 2) grid.n = static_cast<std::size_t>(n);
  }
  return grid;
}

GridSpec GridSpec::refined(std::size_t factor) const {
  GridSpec out = *this;
  out.n = (n - 1) * factor + 1;
  return out;
}

std::vector<double> GridSpec::points() const {
  check();
  std::vector<double> out(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(n - 1);
    out[i] = std::exp(a + (b - a) * u);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

void GridSpec::check() const {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi) || n < 2) {
    throw DomainError("grid needs 0 < lo < hi < inf and at least 2 points (got lo=" +
                      std::to_string(lo) + ", hi=" + std::to_string(hi) +
                      ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace orlicz
