#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/young_function.hpp"

namespace orlicz {

struct LebesgueExponents {
  double q = 1.0;
  double p = 1.0;  // +inf when the ratio escapes past the ceiling
  double t_q = 1.0;  // where the infimum was found (0 or inf for limits)
  double t_p = 1.0;
  bool p_infinite() const;
};

/// q = inf g, p = sup g over the grid, refined with Brent's method around the
/// grid extremum and widened by the end limits of g when those exist.
/// Throws NonStrict for forms that vanish near 0.
LebesgueExponents lebesgue_exponents(const YoungFunction& phi,
                                     const GridSpec& grid = GridSpec::standard(),
                                     double ceiling = 1e6);

struct LimitPair {
  std::optional<double> at_zero;
  std::optional<double> at_infinity;
};

/// Limits of g at 0+ and at infinity; absent when the sampled sequence
/// does not settle (divergence or oscillation).
LimitPair limit_exponents_g(const YoungFunction& phi);

struct RLimits {
  double r0 = 0.0;
  double r_inf = 0.0;
  double epsilon = 0.1;
  /// Smallest sampled K with t^{r_inf - eps} < Phi(t) < t^{r_inf + eps} for all sampled t >= K.
  std::optional<double> k_epsilon;
};

/// Limits of r at 0+ and infinity. Throws Delta2Required when p is infinite.
RLimits limit_exponents_r(const YoungFunction& phi, double epsilon = 0.1);

struct Delta2Verdict {
  bool holds = false;
  double constant = 0.0;        // sup Phi(2t)/Phi(t) when holds
  double counterexample = 0.0;  // a t with Phi(2t)/Phi(t) > ceiling otherwise
};

Delta2Verdict delta2_check(const YoungFunction& phi,
                           const GridSpec& grid = GridSpec::standard(),
                           double ceiling = 1e6);

struct ExponentReport {
  LebesgueExponents lebesgue;
  LimitPair g_limits;
  std::optional<RLimits> r_limits;  // absent without the Delta_2 condition
  Delta2Verdict delta2;
  GridSpec grid;
  std::size_t refinement_depth = 0;
};

ExponentReport exponent_report(const YoungFunction& phi,
                               const GridSpec& grid = GridSpec::standard());

struct InequalityViolation {
  std::string check;
  double scale;
  double t;
  double lhs;  // logarithms of both sides
  double rhs;
};

/// c^p Phi(t) <= Phi(ct) <= c^q Phi(t) for c in [0,1] and
/// C^q Phi(t) <= Phi(Ct) <= C^p Phi(t) for C >= 1, compared in log space.
std::vector<InequalityViolation> scaling_inequality_check(
    const YoungFunction& phi, const std::vector<std::pair<double, double>>& samples,
    const LebesgueExponents& exponents, double tolerance = 1e-9);

/// Power bounds for Psi = Phi / Phi(1), its derivative and its inverse.
std::vector<InequalityViolation> normalized_bounds_check(
    const YoungFunction& phi, const GridSpec& grid = GridSpec::standard(),
    double tolerance = 1e-9);

}  // namespace orlicz
