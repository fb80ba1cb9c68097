#include "orlicz/mixed.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "orlicz/errors.hpp"
#include "orlicz/exponents.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

ModularValue to_modular(const QuadratureResult& r) {
  ModularValue m;
  m.divergent = r.divergent;
  m.value = r.divergent ? kInf : r.value;
  m.error = r.error;
  m.evaluations = r.evaluations;
  return m;
}

// ||f(., y)||_Phi; 0 for an empty section, inf when the section modular diverges.
class SectionNorms {
 public:
  SectionNorms(const Integrand& f, const YoungFunction& phi, double tol)
      : f_(f), phi_(phi), e_(lebesgue_exponents(phi)), tol_(tol) {}

  double operator()(double y) {
    const auto hit = memo_.find(y);
    if (hit != memo_.end()) return hit->second;
    const double v = solve(y);
    memo_.emplace(y, v);
    return v;
  }

  std::size_t solves() const { return memo_.size(); }
  const LebesgueExponents& exponents() const { return e_; }

 private:
  double solve(double y) const {
    const auto bps = f_.section_breakpoints(y);
    auto rho = [&](double lambda) {
      return to_modular(integrate_real_line(
          [&](double x) { return phi_(std::abs(f_(x, y)) / lambda); }, bps));
    };
    try {
      if (rho(1.0).value == 0.0) return 0.0;
      const NormResult n = luxemburg_from_modular(rho, e_, tol_);
      return n.divergent ? kInf : n.norm;
    } catch (const InnerFailure&) {
      throw;
    } catch (const DomainError& err) {
      throw InnerFailure(err.what(), y);
    }
  }

  const Integrand& f_;
  const YoungFunction& phi_;
  LebesgueExponents e_;
  double tol_;
  std::map<double, double> memo_;
};

std::vector<double> profile_points(const GridSpec& grid) {
  grid.check();
  std::vector<double> ys{0.0};
  for (double t : grid.points()) {
    ys.push_back(t);
    ys.push_back(-t);
  }
  std::sort(ys.begin(), ys.end());
  return ys;
}

bool is_linear_plus_square(const YoungFunction& phi) {
  const auto* c = std::get_if<CatalogForm>(&phi.form().alternatives);
  return c && c->kind == CatalogKind::PowerSum && c->params[0] == 1.0 && c->params[1] == 2.0;
}

}  // namespace

MixedNormResult mixed_norm(const Integrand& f, const YoungFunction& phi,
                           const MixedOptions& options) {
  if (f.dim() != 2) throw DomainError("mixed norms need a two-dimensional integrand");
  MixedNormResult out;
  const auto ys = profile_points(options.profile_grid);
  if (f.is_identically_zero()) {
    for (double y : ys) out.profile.emplace_back(y, 0.0);
    return out;
  }

  SectionNorms h(f, phi, options.inner_tol);
  if (h.exponents().p_infinite()) throw Delta2Required("mixed norm needs a finite p");
  QuadratureOptions outer;
  outer.rel_tol = std::min(1e-8, options.outer_tol * 1e-3);
  auto rho = [&](double lambda) {
    return to_modular(integrate_real_line([&](double y) { return phi(h(y) / lambda); },
                                          f.breakpoints(), outer));
  };
  if (rho(1.0).value == 0.0) {
    out.norm = 0.0;
  } else {
    const NormResult n = luxemburg_from_modular(rho, h.exponents(), options.outer_tol * 1e-2);
    out.norm = n.norm;
    out.divergent = n.divergent;
  }
  for (double y : ys) out.profile.emplace_back(y, h(y));
  out.inner_solves = h.solves();

  if (is_linear_plus_square(phi)) {
    out.l11 = mixed_lebesgue_norm(f, 1.0, 1.0);
    out.l21 = mixed_lebesgue_norm(f, 2.0, 1.0);
  }
  return out;
}

double mixed_lebesgue_norm(const Integrand& f, double p, double q) {
  if (f.dim() != 2) throw DomainError("mixed norms need a two-dimensional integrand");
  if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("mixed Lebesgue exponents must be >= 1");
  if (f.is_identically_zero()) return 0.0;
  auto inner = [&](double y) {
    const auto r = integrate_real_line([&](double x) { return std::pow(std::abs(f(x, y)), p); },
                                       f.section_breakpoints(y));
    return r.divergent ? kInf : std::pow(r.value, 1.0 / p);
  };
  QuadratureOptions outer;
  outer.rel_tol = 1e-10;
  const auto r =
      integrate_real_line([&](double y) { return std::pow(inner(y), q); }, f.breakpoints(), outer);
  return r.divergent ? kInf : std::pow(r.value, 1.0 / q);
}

double gaussian_l21_constant() { return std::pow(kPi, 0.75) / std::pow(2.0, 0.25); }

GaussianFamilyValues gaussian_family_values(int n) {
  if (n < 2) throw DomainError("gaussian family needs n >= 2");
  return {kPi + std::sqrt(kPi / 2.0), gaussian_l21_constant() * std::pow(n, 0.25)};
}

PartialSums counterexample_partial_sums(long long N) {
  if (N < 2) throw DomainError("partial sums need N >= 2");
  double s54 = 0.0;
  double s1 = 0.0;
  // Summed from the small terms up to limit rounding.
  for (long long n = N; n >= 2; --n) {
    const double d = static_cast<double>(n);
    s54 += std::pow(d, -1.25);
    s1 += 1.0 / d;
  }
  return {(kPi + std::sqrt(kPi / 2.0)) * s54, gaussian_l21_constant() * s1};
}

Integrand counterexample_truncation(int N) {
  if (N < 2) throw DomainError("truncation needs N >= 2");
  std::vector<std::pair<double, Integrand>> terms;
  for (int n = 2; n <= N; ++n) terms.emplace_back(std::pow(n, -1.25), Integrand::gauss_quad(n));
  return Integrand::finite_sum(std::move(terms));
}

ProfilesGH profiles_G_H(const Integrand& f, const YoungFunction& phi,
                        const MixedOptions& options) {
  if (f.dim() != 2) throw DomainError("profiles need a two-dimensional integrand");
  ProfilesGH out;
  const auto ys = profile_points(options.profile_grid);
  if (f.is_identically_zero()) {
    for (double y : ys) {
      out.g.emplace_back(y, 0.0);
      out.h.emplace_back(y, 0.0);
    }
    return out;
  }

  SectionNorms norms(f, phi, options.inner_tol);
  auto G = [&](double y) { return phi(norms(y)); };
  auto H = [&](double y) {
    const auto r = integrate_real_line([&](double x) { return phi(std::abs(f(x, y))); },
                                       f.section_breakpoints(y));
    return r.divergent ? kInf : r.value;
  };
  for (double y : ys) {
    out.g.emplace_back(y, G(y));
    out.h.emplace_back(y, H(y));
  }
  QuadratureOptions opts;
  opts.rel_tol = 1e-8;
  const auto gi = integrate_real_line(G, f.breakpoints(), opts);
  const auto hi = integrate_real_line(H, f.breakpoints(), opts);
  out.g_integrable = !gi.divergent;
  out.h_integrable = !hi.divergent;
  out.g_integral = gi.divergent ? kInf : gi.value;
  out.h_integral = hi.divergent ? kInf : hi.value;

  out.plain_norm_finite = !luxemburg_norm(f, phi, 1e-8).divergent;
  out.mixed_norm_finite = !mixed_norm(f, phi, options).divergent;
  return out;
}

}  // namespace orlicz
