#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integral of transform(|f|) over R^dim.
ModularValue integrate_profile(const Integrand& f, const std::function<double(double)>& transform,
                               const QuadratureOptions& options) {
  ModularValue out;
  if (f.is_identically_zero()) return out;

  if (f.dim() == 1) {
    const auto r = integrate_real_line([&](double x) { return transform(std::abs(f(x))); },
                                       f.breakpoints(), options);
    out.value = r.divergent ? kInf : r.value;
    out.error = r.error;
    out.divergent = r.divergent;
    out.evaluations = r.evaluations;
    return out;
  }

  double inner_rel_error = 0.0;
  bool inner_divergent = false;
  auto inner = [&](double y) {
    if (inner_divergent) return kInf;
    const auto r = integrate_real_line([&](double x) { return transform(std::abs(f(x, y))); },
                                       f.section_breakpoints(y), options);
    out.evaluations += r.evaluations;
    if (r.divergent) {
      inner_divergent = true;
      return kInf;
    }
    if (r.value != 0.0) inner_rel_error = std::max(inner_rel_error, r.error / std::abs(r.value));
    return r.value;
  };
  QuadratureOptions outer_options = options;
  outer_options.rel_tol = std::max(options.rel_tol, 1e-10);
  const auto r = integrate_real_line(inner, f.breakpoints(), outer_options);
  out.divergent = r.divergent || inner_divergent;
  out.value = out.divergent ? kInf : r.value;
  out.error = r.error + inner_rel_error * std::abs(r.value);
  out.evaluations += r.evaluations;
  return out;
}

void check_quadrature(const ModularValue& m) {
  if (m.divergent) return;
  if (m.error > 1e-6 * std::max(std::abs(m.value), 1e-300) && m.error > 1e-300) {
    std::ostringstream os;
    os << "quadrature error estimate " << m.error << " exceeds 1e-6 relative of " << m.value;
    throw QuadratureFailure(os.str());
  }
}

double moment_or_throw(const std::vector<std::pair<double, double>>& moments, double r) {
  for (const auto& [e, v] : moments) {
    if (std::abs(e - r) <= 1e-12 * r) return v;
  }
  std::ostringstream os;
  os << "missing moment of order " << r;
  throw DomainError(os.str());
}

bool exceeds(double smaller, double larger, double tolerance) {
  return smaller > larger * (1.0 + tolerance) + tolerance * 1e-300;
}

}  // namespace

ModularValue modular_scaled(const Integrand& f, const YoungFunction& phi, double lambda,
                            const QuadratureOptions& options) {
  if (!(lambda > 0.0)) throw DomainError("modular scale lambda must be positive");
  const ModularValue m = integrate_profile(f, [&](double v) { return phi(v / lambda); }, options);
  check_quadrature(m);
  return m;
}

double modular(const Integrand& f, const YoungFunction& phi) {
  return modular_scaled(f, phi, 1.0).value;
}

double modular_from_moments(const std::vector<std::pair<double, double>>& moments,
                            const YoungFunction& phi, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("modular scale lambda must be positive");
  const auto* c = std::get_if<CatalogForm>(&phi.form().alternatives);
  if (c && c->kind == CatalogKind::Power) {
    const double p = c->params[0];
    return moment_or_throw(moments, p) / std::pow(lambda, p);
  }
  if (c && c->kind == CatalogKind::PowerSum) {
    const double q = c->params[0];
    const double p = c->params[1];
    return moment_or_throw(moments, q) / std::pow(lambda, q) +
           moment_or_throw(moments, p) / std::pow(lambda, p);
  }
  throw DomainError("moment shortcut needs power or power_sum, got " + phi.label());
}

double lebesgue_moment(const Integrand& f, double r) {
  if (!(r > 0.0)) throw DomainError("moment order must be positive");
  const ModularValue m =
      integrate_profile(f, [r](double v) { return v == 0.0 ? 0.0 : std::pow(v, r); }, {});
  check_quadrature(m);
  return m.value;
}

NormResult luxemburg_from_modular(const ScaledModular& rho, const LebesgueExponents& exponents,
                                  double rel_tol) {
  if (exponents.p_infinite()) throw Delta2Required("Luxemburg solver needs a finite p");
  NormResult out;
  const ModularValue at_one = rho(1.0);
  out.modular = at_one.value;
  if (at_one.divergent) {
    out.divergent = true;
    out.norm = out.lower = out.upper = kInf;
    return out;
  }
  if (at_one.value == 0.0) throw ZeroFunction("the Luxemburg norm of the zero function is 0");

  const double r = at_one.value;
  const double q = exponents.q;
  const double p = exponents.p;
  out.lower = r < 1.0 ? std::pow(r, 1.0 / q) : std::pow(r, 1.0 / p);
  out.upper = r < 1.0 ? std::pow(r, 1.0 / p) : std::pow(r, 1.0 / q);

  std::size_t calls = 0;
  double last_error = at_one.error;
  auto excess = [&](double lambda) {
    ++calls;
    const ModularValue m = rho(lambda);
    last_error = m.error;
    return m.divergent ? kInf : m.value - 1.0;
  };

  double a = out.lower * (1.0 - 1e-6);
  double b = out.upper * (1.0 + 1e-6);
  double fa = excess(a);
  double fb = excess(b);
  for (int i = 0; i < 200 && fa < 0.0; ++i) fa = excess(a *= 0.5);
  for (int i = 0; i < 200 && fb > 0.0; ++i) fb = excess(b *= 2.0);
  if (fa == 0.0 || fb == 0.0) {
    out.norm = fa == 0.0 ? a : b;
    out.iterations = calls;
    out.quadrature_error = last_error;
    return out;
  }
  const int bits = std::clamp(static_cast<int>(std::ceil(1.0 - std::log2(rel_tol))) + 2, 8, 52);
  boost::math::tools::eps_tolerance<double> tol(bits);
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(excess, a, b, fa, fb, tol, max_iter);
  out.norm = 0.5 * (lo + hi);
  out.iterations = calls;
  out.quadrature_error = last_error;
  return out;
}

NormResult luxemburg_norm(const Integrand& f, const YoungFunction& phi, double rel_tol) {
  if (f.is_identically_zero()) throw ZeroFunction("the Luxemburg norm of the zero function is 0");
  const LebesgueExponents e = lebesgue_exponents(phi);
  return luxemburg_from_modular(
      [&](double lambda) { return modular_scaled(f, phi, lambda); }, e, rel_tol);
}

NormResult luxemburg_norm_from_moments(const std::vector<std::pair<double, double>>& moments,
                                       const YoungFunction& phi, double rel_tol) {
  const LebesgueExponents e = lebesgue_exponents(phi);
  return luxemburg_from_modular(
      [&](double lambda) {
        ModularValue m;
        m.value = modular_from_moments(moments, phi, lambda);
        return m;
      },
      e, rel_tol);
}

double power_sum_norm_closed_form(double a, double b, double q, double p) {
  if (!(q >= 1.0) || !(p > q)) throw DomainError("closed form needs 1 <= q < p");
  if (!(a >= 0.0) || !(b >= 0.0) || (a == 0.0 && b == 0.0) || !std::isfinite(a) ||
      !std::isfinite(b)) {
    throw DomainError("closed form needs finite moments a, b >= 0, not both zero");
  }
  if (a == 0.0) return std::pow(b, 1.0 / p);
  if (b == 0.0) return std::pow(a, 1.0 / q);

  if (q == 2.0 && p == 3.0) {
    // lambda^3 - a lambda - b = 0
    const double disc = b * b / 4.0 - a * a * a / 27.0;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      return std::cbrt(b / 2.0 + root) + std::cbrt(b / 2.0 - root);
    }
    const double m = 2.0 * std::sqrt(a / 3.0);
    const double theta = std::acos(3.0 * b / (a * m)) / 3.0;
    return m * std::cos(theta);
  }

  auto f = [=](double x) {
    const double v = a * std::pow(x, -q) + b * std::pow(x, -p) - 1.0;
    const double d = -q * a * std::pow(x, -q - 1.0) - p * b * std::pow(x, -p - 1.0);
    return std::pair{v, d};
  };
  double lo = 1.0;
  double hi = 1.0;
  while (f(lo).first < 0.0) lo *= 0.5;
  while (f(hi).first > 0.0) hi *= 2.0;
  std::uintmax_t iters = 200;
  return boost::math::tools::newton_raphson_iterate(f, 0.5 * (lo + hi), lo, hi, 50, iters);
}

TrichotomyVerdict classify_trichotomy(double norm, double rho, const LebesgueExponents& e,
                                      double tolerance) {
  TrichotomyVerdict v;
  v.norm = norm;
  v.modular = rho;
  const double q = e.q;
  const double p = e.p;
  if (std::abs(norm - 1.0) <= tolerance) {
    v.which = Trichotomy::NormEqualsOne;
    v.ordering_holds = std::abs(rho - 1.0) <= tolerance * std::max(1.0, p);
    v.power_bounds_hold = v.ordering_holds;
  } else if (norm > 1.0) {
    v.which = Trichotomy::NormAboveOne;
    v.ordering_holds = !exceeds(norm, rho, tolerance);
    v.power_bounds_hold = !exceeds(std::pow(norm, q), rho, tolerance) &&
                          !exceeds(rho, std::pow(norm, p), tolerance);
  } else {
    v.which = Trichotomy::NormBelowOne;
    v.ordering_holds = !exceeds(rho, norm, tolerance);
    v.power_bounds_hold = !exceeds(std::pow(norm, p), rho, tolerance) &&
                          !exceeds(rho, std::pow(norm, q), tolerance);
  }
  if (!v.ordering_holds) v.failures.push_back("norm/modular ordering");
  if (!v.power_bounds_hold) v.failures.push_back("power bounds");
  return v;
}

TrichotomyVerdict trichotomy_check(const Integrand& f, const YoungFunction& phi, double tolerance) {
  const LebesgueExponents e = lebesgue_exponents(phi);
  const NormResult n = luxemburg_norm(f, phi);
  if (n.divergent) {
    TrichotomyVerdict v;
    v.norm = v.modular = kInf;
    v.failures.push_back("divergent modular");
    return v;
  }
  return classify_trichotomy(n.norm, n.modular, e, tolerance);
}

}  // namespace orlicz
