#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/integrand.hpp"
#include "orlicz/young_function.hpp"

namespace orlicz {

struct MixedOptions {
  double inner_tol = 1e-8;
  double outer_tol = 1e-4;
  /// Profile samples are taken at y = 0 and y = +-t for t on this grid.
  GridSpec profile_grid{1e-2, 1e2, 9};
};

struct MixedNormResult {
  std::vector<std::pair<double, double>> profile;  // (y, inner norm)
  double norm = 0.0;
  bool divergent = false;
  std::optional<double> l11;  // set when phi is t + t^2
  std::optional<double> l21;
  std::size_t inner_solves = 0;
};

/// ||f||_{Phi,Phi}: the Luxemburg norm in y of y -> ||f(., y)||_Phi.
/// Throws InnerFailure naming the section when an inner norm cannot be computed.
MixedNormResult mixed_norm(const Integrand& f, const YoungFunction& phi,
                           const MixedOptions& options = {});

/// Norm with the L^p norm in x inside and the L^q norm in y outside.
double mixed_lebesgue_norm(const Integrand& f, double p, double q);

struct GaussianFamilyValues {
  double phi_norm;  // ||f_n||_1 + ||f_n||_2
  double l21_norm;
};

/// Closed forms for f_n(x, y) = exp(-n x^2 + 2 sqrt(n-1) x y - y^2).
GaussianFamilyValues gaussian_family_values(int n);

/// pi^{3/4} / 2^{1/4}
double gaussian_l21_constant();

struct PartialSums {
  double phi_norm_bound;  // (pi + sqrt(pi/2)) * sum_{n=2}^N n^{-5/4}
  double l21_partial;     // C * sum_{n=2}^N 1/n
};

PartialSums counterexample_partial_sums(long long N);

/// sum_{n=2}^{N} n^{-5/4} f_n
Integrand counterexample_truncation(int N);

struct ProfilesGH {
  std::vector<std::pair<double, double>> g;  // (y, Phi(||f(., y)||_Phi))
  std::vector<std::pair<double, double>> h;  // (y, integral of Phi(|f(x, y)|) dx)
  bool g_integrable = true;
  bool h_integrable = true;
  double g_integral = 0.0;
  double h_integral = 0.0;
  bool plain_norm_finite = true;
  bool mixed_norm_finite = true;
  bool equivalences_hold() const {
    return h_integrable == plain_norm_finite && g_integrable == mixed_norm_finite;
  }
};

ProfilesGH profiles_G_H(const Integrand& f, const YoungFunction& phi,
                        const MixedOptions& options = {});

}  // namespace orlicz
