#include "orlicz/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/norms.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_gap(const YoungFunction& phi, const YoungFunction& psi, double s) {
  const double d = phi.log_value(s) - psi.log_value(s);
  return std::isnan(d) ? kInf : std::abs(d);
}

// True when |ln Phi - ln Psi| keeps growing over the two decades ending at s_end,
// going outward (direction -1 towards 0, +1 towards infinity).
bool diverging_end(const YoungFunction& phi, const YoungFunction& psi, double s_end,
                   double direction) {
  const double decade = std::log(10.0);
  const double s1 = s_end - 2.0 * direction * decade;
  const double s2 = s_end - direction * decade;
  const double l1 = log_gap(phi, psi, s1);
  const double l2 = log_gap(phi, psi, s2);
  const double l3 = log_gap(phi, psi, s_end);
  if (std::isinf(l3)) return true;
  constexpr int kSteps = 40;
  double prev = l1;
  for (int i = 1; i <= kSteps; ++i) {
    const double l = log_gap(phi, psi, s1 + (s_end - s1) * i / kSteps);
    if (l < prev - 1e-12) return false;
    prev = l;
  }
  const double first = l2 - l1;
  const double second = l3 - l2;
  // A gap settling to a constant loses most of its growth per decade; ln ln t does not.
  return first > 1e-3 && second > 1e-3 && second >= 0.5 * first;
}

}  // namespace

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::Finite: return "finite";
    case ScanVerdict::DivergingAtZero: return "diverging at 0";
    case ScanVerdict::DivergingAtInfinity: return "diverging at infinity";
    case ScanVerdict::DivergingAtBoth: return "diverging at 0 and infinity";
  }
  return "?";
}

EquivalenceReport equivalence_scan(const YoungFunction& phi, const YoungFunction& psi,
                                   const GridSpec& grid) {
  grid.check();
  EquivalenceReport out;
  double worst = 0.0;
  for (double t : grid.points()) {
    const double l = log_gap(phi, psi, std::log(t));
    if (l > worst) {
      worst = l;
      out.t_at_max = t;
    }
  }
  out.c_scan = std::exp(worst);
  const bool at_zero = diverging_end(phi, psi, std::log(grid.lo), -1.0);
  const bool at_inf = diverging_end(phi, psi, std::log(grid.hi), 1.0);
  out.bounded = at_zero && at_inf ? ScanVerdict::DivergingAtBoth
                : at_zero        ? ScanVerdict::DivergingAtZero
                : at_inf         ? ScanVerdict::DivergingAtInfinity
                                 : ScanVerdict::Finite;
  if (out.bounded == ScanVerdict::Finite) {
    try {
      out.c1_derivative = derivative_equivalence_constant(phi, psi, out.c_scan, grid).c1;
    } catch (const DomainError&) {
      // exponents unavailable (non-strict or without Delta_2)
    }
  }
  return out;
}

DerivativeEquivalence derivative_equivalence_constant(const YoungFunction& phi,
                                                      const YoungFunction& psi, double c,
                                                      const GridSpec& grid) {
  if (!(c >= 1.0)) throw DomainError("equivalence constant must be >= 1");
  const auto ep = lebesgue_exponents(phi, grid);
  const auto es = lebesgue_exponents(psi, grid);
  if (ep.p_infinite() || es.p_infinite()) {
    throw Delta2Required("derivative equivalence needs finite p for both functions");
  }
  DerivativeEquivalence out;
  out.c1 = std::max(c * ep.p / es.q, c * es.p / ep.q);
  double worst = 0.0;
  for (double t : grid.points()) {
    const double s = std::log(t);
    // ln Phi'(t) = ln g(t) + ln Phi(t) - ln t
    const double d = std::log(phi.log_ratio(s)) + phi.log_value(s) - std::log(psi.log_ratio(s)) -
                     psi.log_value(s);
    if (std::abs(d) > worst) {
      worst = std::abs(d);
      out.t_worst = t;
    }
  }
  out.worst = std::exp(worst);
  out.holds = out.worst <= out.c1 * (1.0 + 1e-9);
  return out;
}

ClassExponents class_exponents(const YoungFunction& phi) {
  const LimitPair g = limit_exponents_g(phi);
  if (!g.at_zero || !g.at_infinity) {
    throw LimitsRequired("class exponents need both limits of t Phi'(t) / Phi(t) for " +
                         phi.label());
  }
  return {std::max(*g.at_zero, *g.at_infinity), std::min(*g.at_zero, *g.at_infinity)};
}

MultiplicativityReport multiplicativity_scan(const YoungFunction& phi, const GridSpec& grid2d) {
  grid2d.check();
  auto extremes = [&phi](const GridSpec& g) {
    std::vector<double> s;
    for (double t : g.points()) s.push_back(std::log(t));
    std::vector<double> lv;
    for (double x : s) lv.push_back(phi.log_value(x));
    double hi = -kInf;
    double lo = kInf;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        const double r = phi.log_value(s[i] + s[j]) - lv[i] - lv[j];
        if (std::isnan(r)) return std::pair{kInf, -kInf};
        hi = std::max(hi, r);
        lo = std::min(lo, r);
      }
    }
    return std::pair{hi, lo};
  };
  // Same spacing, twice the log-width.
  const double span = std::log(grid2d.hi / grid2d.lo);
  const GridSpec wide{grid2d.lo / std::exp(span / 2.0), grid2d.hi * std::exp(span / 2.0),
                      2 * grid2d.n - 1};

  MultiplicativityReport out;
  const auto [sup_base, inf_base] = extremes(grid2d);
  const auto [sup_wide, inf_wide] = extremes(wide);
  if (std::isfinite(sup_wide) && sup_wide - sup_base <= 0.01) out.sub_c = std::exp(sup_wide);
  if (std::isfinite(inf_wide) && inf_base - inf_wide <= 0.01) out.super_c = std::exp(inf_wide);

  const double phi1 = phi(1.0);
  if (phi1 > 0.0 && std::isfinite(phi1)) {
    const double p = phi.derivative(1.0) / phi1;
    const double l1 = std::log(phi1);
    bool pure = std::isfinite(p);
    for (double t : GridSpec::standard().points()) {
      if (!pure) break;
      const double s = std::log(t);
      pure = std::abs(std::expm1(phi.log_value(s) - l1 - p * s)) <= 1e-9;
    }
    out.is_pure_power = pure;
    if (pure) out.detected_p = p;
  }
  return out;
}

std::vector<ModularBoundViolation> modular_norm_multiplicativity_check(
    const YoungFunction& phi, double c, Direction direction,
    const std::vector<Integrand>& witnesses) {
  std::vector<ModularBoundViolation> out;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const Integrand& f = witnesses[i];
    const NormResult n = luxemburg_norm(f, phi);
    const double rho = n.modular;
    const double bound = c * phi(n.norm);
    const bool ok = direction == Direction::Sub ? rho <= bound * (1.0 + 1e-6)
                                                : rho >= bound * (1.0 - 1e-6);
    if (!ok) out.push_back({i, f.label(), rho, bound});
  }
  return out;
}

std::string InclusionReport::text() const {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "inclusions for " << label << "\n";
  for (const auto& s : sandwiches) {
    if (!s.open) {
      os << "  " << s.kind << ": L^" << s.p_min << " cap L^" << s.q_min << " in L^Phi in L^"
         << s.p_min << " + L^" << s.q_min << "\n";
    } else {
      os << "  " << s.kind << ": L^p cap L^q in L^Phi in L^p + L^q for p in (" << s.p_min
         << ", inf), q in (" << s.q_min << ", " << s.q_max << ")\n";
    }
  }
  return os.str();
}

std::string InclusionReport::csv() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "sandwich,q_min,q_max,p_min,p_max,open\n";
  for (const auto& s : sandwiches) {
    os << s.kind << "," << s.q_min << "," << s.q_max << "," << s.p_min << "," << s.p_max << ","
       << (s.open ? 1 : 0) << "\n";
  }
  return os.str();
}

InclusionReport inclusion_report(const YoungFunction& phi) {
  const Delta2Verdict d2 = delta2_check(phi);
  if (!d2.holds) throw Delta2Required("inclusions need the Delta_2 condition for " + phi.label());
  InclusionReport out;
  out.label = phi.label();
  out.exponents = lebesgue_exponents(phi);
  if (out.exponents.p_infinite()) throw Delta2Required("inclusions need a finite p");
  if (!(out.exponents.q > 1.0)) throw DomainError("inclusions need q > 1");
  const RLimits r = limit_exponents_r(phi);
  out.r0 = r.r0;
  out.r_inf = r.r_inf;

  const double q = out.exponents.q;
  const double p = out.exponents.p;
  out.sandwiches.push_back({"baseline", q, q, p, p, false});
  try {
    out.class_exponents = class_exponents(phi);
    out.sandwiches.push_back({"class", 1.0, out.class_exponents->q_class,
                              out.class_exponents->p_class, kInf, true});
  } catch (const LimitsRequired&) {
    // no g-limits: the class ranges are not available
  }
  out.sandwiches.push_back(
      {"log", 1.0, std::min(r.r0, r.r_inf), std::max(r.r0, r.r_inf), kInf, true});
  return out;
}

YoungFunction combine_equivalent(const YoungFunction& phi1, const YoungFunction& phi2,
                                 CombineKind kind, double alpha, double beta) {
  if (kind == CombineKind::PointwiseMax) return YoungFunction::pointwise_max(phi1, phi2);
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("weighted sum needs alpha, beta > 0");
  return YoungFunction::weighted_sum(phi1, alpha, phi2, beta);
}

}  // namespace orlicz
