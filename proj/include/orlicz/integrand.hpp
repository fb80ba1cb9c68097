#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

enum class IntegrandKind { Zero, CauchyPower, GaussQuad, Indicator, Separable, FiniteSum };

/// Test function on R (dim 1) or R^2 (dim 2) from a fixed catalog.
class Integrand {
 public:
  static Integrand zero(int dim = 1);
  /// (1 + x^2)^{-s}
  static Integrand cauchy_power(double s);
  /// exp(-n x^2 + 2 sqrt(n-1) x y - y^2), n >= 1
  static Integrand gauss_quad(double n);
  /// height h on [offset, offset + m] (dim 1) or on the square of area m with corner (offset, offset)
  static Integrand indicator(double measure, double height, int dim = 1, double offset = 0.0);
  /// g(x) h(y)
  static Integrand separable(const Integrand& g, const Integrand& h);
  /// sum of w_i f_i over same-dimension terms
  static Integrand finite_sum(std::vector<std::pair<double, Integrand>> terms);

  /// c f
  Integrand scaled(double c) const;
  /// Attaches closed-form moments (r, integral of |f|^r).
  Integrand with_moments(std::vector<std::pair<double, double>> moments) const;

  int dim() const { return dim_; }
  IntegrandKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  const std::vector<std::pair<double, Integrand>>& terms() const { return terms_; }
  const std::vector<std::pair<double, double>>& known_moments() const { return moments_; }
  std::optional<double> known_moment(double r) const;

  double operator()(double x) const;
  double operator()(double x, double y) const;

  /// Points where f may jump or has a narrow feature (dim 1, or the y axis in dim 2).
  std::vector<double> breakpoints() const;
  /// x-breakpoints of the section f(., y) in dim 2.
  std::vector<double> section_breakpoints(double y) const;

  bool is_identically_zero() const;

  std::string label() const;

 private:
  Integrand() = default;

  IntegrandKind kind_ = IntegrandKind::Zero;
  int dim_ = 1;
  std::vector<double> params_;
  std::vector<std::pair<double, Integrand>> terms_;
  std::vector<std::pair<double, double>> moments_;
};

/// Two disjoint indicators (heights h and h/2) with integral |f|^2 = a and
/// integral |f|^3 = b. Needs a, b > 0.
Integrand two_moment_witness(double a, double b);

}  // namespace orlicz
