#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace orlicz {

struct QuadratureOptions {
  double rel_tol = 1e-11;
  double abs_tol = 0.0;
  std::size_t max_panels = 4000;
  int max_shells = 40;                  // decades [10^{k-1}, 10^k] on each side
  double divergence_threshold = 1e8;    // partial integrals above this must be settling
  int growth_shells = 3;                // consecutive non-decaying shells => divergent
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool divergent = false;
  std::size_t evaluations = 0;
};

using ScalarFn = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b], split first at the given breakpoints.
QuadratureResult integrate_interval(const ScalarFn& f, double a, double b,
                                    const std::vector<double>& breakpoints = {},
                                    const QuadratureOptions& options = {});

/// Integral over R: [-1, 1] directly, then decade shells on both sides mapped by
/// x = cot(phi), stopped by geometric tail extrapolation or flagged divergent when
/// the shell contributions stop decaying.
QuadratureResult integrate_real_line(const ScalarFn& f, const std::vector<double>& breakpoints = {},
                                     const QuadratureOptions& options = {});

}  // namespace orlicz
