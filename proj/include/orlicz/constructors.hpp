#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/young_function.hpp"

namespace orlicz {

/// Named knots and coefficients of a spliced construction, in insertion order.
struct ConstructorParams {
  std::string construction;
  std::vector<std::pair<std::string, double>> entries;

  void set(const std::string& name, double value);
  /// Throws std::out_of_range for unknown names.
  double get(const std::string& name) const;
  bool has(const std::string& name) const;
};

struct Construction {
  YoungFunction phi;
  ConstructorParams params;
};

/// 1/2 t^2 | t - 1/2 | 1/4 t^2 + 1/2 with knots 1 and 2.
YoungFunction example_item3();
/// 3/2 t^2 | t^3 + 1/2 | 3 t^2 - 7/2 with knots 1 and 2.
YoungFunction example_item4();
std::vector<YoungFunction> make_example_splices();

/// c1/r1 t^r1 | t^r2/r2 + d1 | c2/r1 t^r1 + d2 with knots a < b.
Construction make_equivalent_power_family(double r1, double r2, double a, double b);

/// Phi_{gamma,delta}, equivalent to t^p, with q = p1 and p = p2.
/// Requires 1 < p1 < p < p2 and 1 < r1 < p1 < p2 < r2; throws Infeasible otherwise.
Construction construct_target_exponents(double p1, double p, double p2, double r1, double r2);

/// Phi_{alpha,beta} for explicit knots (no targeting).
Construction power_core_splice(double p, double r1, double r2, double alpha, double beta);

/// Psi_{alpha,beta} built on a general base, widened until q < p1 and p > p2.
Construction construct_widened(const YoungFunction& base, double p1, double p2, double r1,
                               double r2);

/// Psi_{alpha,beta} for explicit knots.
Construction widened_splice(const YoungFunction& base, double r1, double r2, double alpha,
                            double beta);

/// Psi_n: base rescaled below 1/n and above n, pure power t^r in between.
/// r defaults to the midpoint of the g-limits. Throws LimitsRequired without them.
Construction construct_epsilon_tight(const YoungFunction& base, std::optional<double> r,
                                     double n);

/// max(0, p_psi - p, q - q_psi) where q, p are the g-limits of the base.
double epsilon_gap(const YoungFunction& base, const YoungFunction& psi);

}  // namespace orlicz
