#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/exponents.hpp"
#include "orlicz/integrand.hpp"
#include "orlicz/quadrature.hpp"
#include "orlicz/young_function.hpp"

namespace orlicz {

struct ModularValue {
  double value = 0.0;  // +inf on a divergence verdict
  double error = 0.0;
  bool divergent = false;
  std::size_t evaluations = 0;
};

/// rho_Phi(f / lambda) = integral of Phi(|f| / lambda) over R or R^2.
/// Throws QuadratureFailure when the error estimate exceeds 1e-6 relative.
ModularValue modular_scaled(const Integrand& f, const YoungFunction& phi, double lambda,
                            const QuadratureOptions& options = {});

/// rho_Phi(f); +inf when the integral diverges.
double modular(const Integrand& f, const YoungFunction& phi);

/// Closed-form modular of f / lambda from known moments, for t^p or t^q + t^p.
/// Throws DomainError for other forms or missing moments.
double modular_from_moments(const std::vector<std::pair<double, double>>& moments,
                            const YoungFunction& phi, double lambda);

/// Integral of |f|^r by quadrature.
double lebesgue_moment(const Integrand& f, double r);

struct NormResult {
  double modular = 0.0;
  double norm = 0.0;
  double lower = 0.0;  // bracket from the exponent power bounds
  double upper = 0.0;
  double quadrature_error = 0.0;
  std::size_t iterations = 0;  // modular evaluations
  bool divergent = false;
};

using ScaledModular = std::function<ModularValue(double lambda)>;

/// Solves rho(lambda) = 1 by TOMS 748 inside the power-bound bracket.
/// Returns norm = inf when rho(1) diverges; throws ZeroFunction when rho(1) = 0.
NormResult luxemburg_from_modular(const ScaledModular& rho, const LebesgueExponents& exponents,
                                  double rel_tol = 1e-10);

NormResult luxemburg_norm(const Integrand& f, const YoungFunction& phi, double rel_tol = 1e-10);

/// Norm from known moments (closed-form modular).
NormResult luxemburg_norm_from_moments(const std::vector<std::pair<double, double>>& moments,
                                       const YoungFunction& phi, double rel_tol = 1e-10);

/// Positive root of a / lambda^q + b / lambda^p = 1. Cardano for (q, p) = (2, 3),
/// safeguarded Newton otherwise.
double power_sum_norm_closed_form(double a, double b, double q, double p);

enum class Trichotomy { NormAboveOne = 1, NormBelowOne = 2, NormEqualsOne = 3 };

struct TrichotomyVerdict {
  Trichotomy which = Trichotomy::NormEqualsOne;
  double norm = 0.0;
  double modular = 0.0;
  bool ordering_holds = false;
  bool power_bounds_hold = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

TrichotomyVerdict classify_trichotomy(double norm, double modular, const LebesgueExponents& e,
                                      double tolerance = 1e-9);
TrichotomyVerdict trichotomy_check(const Integrand& f, const YoungFunction& phi,
                                   double tolerance = 1e-9);

}  // namespace orlicz
