#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "orlicz/grid.hpp"

namespace orlicz {

enum class CatalogKind {
  Power,          // t^p
  PowerSum,       // t^q + t^p
  PowerLog,       // t^n ln^m(1 + t)
  PowerExp,       // t^n e^t
  PowerLogShift,  // t^2 ln(2 + t)
  ExpMinusOne,    // e^t - 1
  FlatOrigin,     // e^{-1/t} on (0, 1/2), e^{-2}(4t - 1) beyond
  Dual23,         // t^2 on [0, 1], 2 t^{3/2} - 1 beyond
};

struct FunctionForm;

/// Immutable handle to a Young function Phi: [0, inf) -> [0, inf).
///
/// Copies share the underlying representation. Every member is const and
/// thread-safe. Derivatives are right derivatives unless stated otherwise.
class YoungFunction {
 public:
  static YoungFunction catalog(CatalogKind kind, std::vector<double> params = {});
  static YoungFunction power(double p);
  static YoungFunction power_sum(double q, double p);
  static YoungFunction power_log(double n, double m);
  static YoungFunction power_exp(double n);
  static YoungFunction power_log_shift();
  static YoungFunction exp_minus_one();
  static YoungFunction flat_origin();
  static YoungFunction dual_23();

  /// Psi(t) = Phi(t) / Phi(1).
  static YoungFunction normalized(const YoungFunction& base);
  static YoungFunction weighted_sum(const YoungFunction& first, double w1,
                                    const YoungFunction& second, double w2);
  static YoungFunction pointwise_max(const YoungFunction& first,
                                     const YoungFunction& second);

  /// Wraps an already-checked representation. Prefer the named factories.
  static YoungFunction from_form(FunctionForm form);

  const FunctionForm& form() const { return *form_; }

  double operator()(double t) const;
  double derivative(double t) const;
  double left_derivative(double t) const;

  /// Solves Phi(t) = y. Closed form for pure powers, bisection otherwise.
  double inverse(double y) const;

  /// ln Phi(e^s), evaluated without forming e^s where that would overflow.
  double log_value(double s) const;

  /// g_Phi(e^s) = t Phi'(t) / Phi(t) at t = e^s, in the same overflow-safe way.
  double log_ratio(double s) const;

  /// False when Phi vanishes on a neighbourhood of 0 (numerically).
  bool is_strict() const;

  /// Points where Phi may fail to be smooth, sorted and deduplicated.
  std::vector<double> kinks() const;

  /// Short human-readable name.
  std::string label() const;

 private:
  explicit YoungFunction(std::shared_ptr<const FunctionForm> form)
      : form_(std::move(form)) {}

  std::shared_ptr<const FunctionForm> form_;
};

struct CatalogForm {
  CatalogKind kind;
  std::vector<double> params;
};

/// coef * t^exponent + offset.
struct PowerPiece {
  double coef;
  double exponent;
  double offset;
};

/// coef * base(t) + offset.
struct BasePiece {
  YoungFunction base;
  double coef;
  double offset;
};

/// Piece active on the half-open interval (lo, hi]; the first segment also covers t = 0.
struct Segment {
  double lo;
  double hi;
  std::variant<PowerPiece, BasePiece> piece;
};

struct PiecewiseSplice {
  std::vector<Segment> segments;
};

/// base(t) / divisor, where divisor = base(1) for the normalized variant.
struct Scaled {
  YoungFunction base;
  double divisor;
};

enum class CombineMode { WeightedSum, PointwiseMax };

struct Combination {
  CombineMode mode;
  YoungFunction first;
  YoungFunction second;
  double w1 = 1.0;
  double w2 = 1.0;
};

struct FunctionForm {
  std::variant<CatalogForm, PiecewiseSplice, Scaled, Combination> alternatives;
};

/// Builds a splice. Throws DomainError unless the segments tile [0, inf)
/// in increasing order and every piece has a positive coefficient.
YoungFunction make_splice(std::vector<Segment> segments);

/// t Phi'(t) / Phi(t). Throws DomainError when t <= 0 or Phi(t) = 0.
double g_ratio(const YoungFunction& phi, double t);

/// ln(Phi(t) / Phi(1)) / ln t. Throws DomainError at t = 1.
double r_exponent(const YoungFunction& phi, double t);

struct AxiomViolation {
  enum class Kind { Origin, Monotonicity, Convexity, KnotValue, KnotDerivative };
  Kind kind;
  double t;       // location (knot, or left grid point)
  double excess;  // relative size of the violation
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool valid() const { return violations.empty(); }
  std::size_t count(AxiomViolation::Kind kind) const;
};

/// Checks Phi(0) = 0, monotonicity, convexity and splice knot matching.
/// The grid must have at least 100 points.
ValidationReport validate(const YoungFunction& phi,
                          const GridSpec& grid = GridSpec::standard(),
                          double knot_tolerance = 1e-9);

const char* to_string(AxiomViolation::Kind kind);

}  // namespace orlicz
