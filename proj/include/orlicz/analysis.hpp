#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/exponents.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/integrand.hpp"
#include "orlicz/young_function.hpp"

namespace orlicz {

enum class ScanVerdict { Finite, DivergingAtZero, DivergingAtInfinity, DivergingAtBoth };

std::string to_string(ScanVerdict v);

struct EquivalenceReport {
  double c_scan = 1.0;  // grid sup of max(Phi/Psi, Psi/Phi)
  double t_at_max = 1.0;
  ScanVerdict bounded = ScanVerdict::Finite;
  std::optional<double> c1_derivative;  // set when both p are finite and the scan is finite
};

/// Grid scan of the ratio Phi/Psi with a trend test over the last two decades
/// at each end. Symmetric in (phi, psi).
EquivalenceReport equivalence_scan(const YoungFunction& phi, const YoungFunction& psi,
                                   const GridSpec& grid = GridSpec::standard());

struct DerivativeEquivalence {
  double c1 = 1.0;
  bool holds = true;
  double worst = 1.0;  // grid sup of max(Phi'/Psi', Psi'/Phi')
  double t_worst = 1.0;
};

/// C1 = max(C p_phi / q_psi, C p_psi / q_phi), then checks C1^{-1} Psi' <= Phi' <= C1 Psi'
/// on the grid. holds = false signals that c was not an equivalence constant.
DerivativeEquivalence derivative_equivalence_constant(const YoungFunction& phi,
                                                      const YoungFunction& psi, double c,
                                                      const GridSpec& grid = GridSpec::standard());

struct ClassExponents {
  double p_class;
  double q_class;
};

/// (max, min) of the g-limits. Throws LimitsRequired when either is absent.
ClassExponents class_exponents(const YoungFunction& phi);

struct MultiplicativityReport {
  std::optional<double> sub_c;    // sup Phi(ab) / (Phi(a) Phi(b)) when bounded
  std::optional<double> super_c;  // inf of the same ratio when bounded away from 0
  bool is_pure_power = false;
  std::optional<double> detected_p;
};

/// Scans the (a, b) grid (default 64 x 64 on [1e-4, 1e4]^2) and an expanded window to
/// decide boundedness; pure-power detection uses p = Phi'(1) / Phi(1).
MultiplicativityReport multiplicativity_scan(const YoungFunction& phi,
                                             const GridSpec& grid2d = {1e-4, 1e4, 64});

enum class Direction { Sub, Super };

struct ModularBoundViolation {
  std::size_t index;
  std::string witness;
  double modular;
  double bound;  // c Phi(||f||_Phi)
};

/// rho(f) <= c Phi(||f||) (sub) or >= (super) for each witness, 1e-6 relative.
std::vector<ModularBoundViolation> modular_norm_multiplicativity_check(
    const YoungFunction& phi, double c, Direction direction,
    const std::vector<Integrand>& witnesses);

struct InclusionSandwich {
  std::string kind;  // "baseline", "class", "log"
  double q_min, q_max;
  double p_min, p_max;
  bool open;  // open exponent ranges q in (q_min, q_max), p in (p_min, p_max)
};

struct InclusionReport {
  std::string label;
  LebesgueExponents exponents;
  std::optional<ClassExponents> class_exponents;
  double r0 = 0.0;
  double r_inf = 0.0;
  std::vector<InclusionSandwich> sandwiches;

  std::string text() const;
  std::string csv() const;
};

/// L^p cap L^q within L^Phi within L^p + L^q for the baseline, class and log ranges.
/// Throws Delta2Required without a finite p and DomainError when q <= 1.
InclusionReport inclusion_report(const YoungFunction& phi);

enum class CombineKind { WeightedSum, PointwiseMax };

/// alpha phi1 + beta phi2, or max(phi1, phi2).
YoungFunction combine_equivalent(const YoungFunction& phi1, const YoungFunction& phi2,
                                 CombineKind kind, double alpha = 1.0, double beta = 1.0);

}  // namespace orlicz
