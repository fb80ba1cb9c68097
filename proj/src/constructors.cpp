#include "orlicz/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

#include "orlicz/errors.hpp"
#include "orlicz/exponents.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Segment power_segment(double lo, double hi, double c, double r, double d) {
  return Segment{lo, hi, PowerPiece{c / r, r, d}};
}

Segment base_segment(double lo, double hi, const YoungFunction& base, double coef, double d) {
  return Segment{lo, hi, BasePiece{base, coef, d}};
}

void feasible(bool ok, const std::string& what) {
  if (!ok) throw Infeasible(what);
}

double g_of(const YoungFunction& phi, double t) { return phi.log_ratio(std::log(t)); }

// Bisection for a monotone scalar equation on [lo, hi].
std::optional<double> bracket_root(const std::function<double(double)>& f, double lo, double hi) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi) || flo * fhi > 0.0) return std::nullopt;
  boost::math::tools::eps_tolerance<double> tol(50);
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol, iters);
  return 0.5 * (a + b);
}

}  // namespace

void ConstructorParams::set(const std::string& name, double value) {
  for (auto& [key, v] : entries) {
    if (key == name) {
      v = value;
      return;
    }
  }
  entries.emplace_back(name, value);
}

double ConstructorParams::get(const std::string& name) const {
  for (const auto& [key, v] : entries) {
    if (key == name) return v;
  }
  throw std::out_of_range("no constructor parameter named " + name);
}

bool ConstructorParams::has(const std::string& name) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&name](const auto& e) { return e.first == name; });
}

YoungFunction example_item3() {
  return make_splice({
      Segment{0.0, 1.0, PowerPiece{0.5, 2.0, 0.0}},
      Segment{1.0, 2.0, PowerPiece{1.0, 1.0, -0.5}},
      Segment{2.0, kInf, PowerPiece{0.25, 2.0, 0.5}},
  });
}

YoungFunction example_item4() {
  return make_splice({
      Segment{0.0, 1.0, PowerPiece{1.5, 2.0, 0.0}},
      Segment{1.0, 2.0, PowerPiece{1.0, 3.0, 0.5}},
      Segment{2.0, kInf, PowerPiece{3.0, 2.0, -3.5}},
  });
}

std::vector<YoungFunction> make_example_splices() { return {example_item3(), example_item4()}; }

Construction make_equivalent_power_family(double r1, double r2, double a, double b) {
  feasible(r1 > 1.0 && r2 > 1.0, "equivalent family needs r1, r2 > 1");
  feasible(r1 != r2, "equivalent family needs r1 != r2");
  feasible(a > 1.0 && b > a && std::isfinite(b), "equivalent family needs 1 < a < b < inf");
  const double c1 = std::pow(a, r2 - r1);
  const double d1 = (1.0 / r1 - 1.0 / r2) * std::pow(a, r2);
  const double c2 = std::pow(b, r2 - r1);
  const double d2 = (1.0 / r1 - 1.0 / r2) * (std::pow(a, r2) - std::pow(b, r2));

  Construction out{make_splice({
                       power_segment(0.0, a, c1, r1, 0.0),
                       power_segment(a, b, 1.0, r2, d1),
                       power_segment(b, kInf, c2, r1, d2),
                   }),
                   {}};
  auto& p = out.params;
  p.construction = "equivalent-family";
  p.set("r1", r1);
  p.set("r2", r2);
  p.set("a", a);
  p.set("b", b);
  p.set("c1", c1);
  p.set("d1", d1);
  p.set("c2", c2);
  p.set("d2", d2);
  p.set("k1", std::pow(a, r2) * (r2 / r1 - 1.0));
  p.set("k2", std::pow(b, r1) * (1.0 - std::pow(a / b, r2)) * (r1 / r2 - 1.0));
  return out;
}

Construction power_core_splice(double p, double r1, double r2, double alpha, double beta) {
  feasible(p > 1.0 && r1 > 1.0 && r2 > 1.0, "exponents must exceed 1");
  feasible(alpha > 1.0 && beta > alpha && std::isfinite(beta), "knots need 1 < alpha < beta");
  const double c1 = 1.0;
  const double c2 = std::pow(alpha, r1 - r2);
  const double c3 = std::pow(alpha, r1 - r2) * std::pow(beta, r2 - p);
  const double d1 = 1.0 / p - 1.0 / r1;
  const double d2 = std::pow(alpha, r1) * (1.0 / r1 - 1.0 / r2) + d1;
  const double d3 = c2 * std::pow(beta, r2) * (1.0 / r2 - 1.0 / p) + d2;
  const double k = r1 * d1;
  const double c_alpha = (1.0 / r1 - 1.0 / r2) + std::pow(alpha, -r1) * d1;
  const double l_alpha = r2 * std::pow(alpha, r2) * c_alpha;
  const double m = p * std::pow(beta, p) *
                   ((1.0 / r2 - 1.0 / p) + std::pow(alpha / beta, r2) * c_alpha);

  Construction out{make_splice({
                       power_segment(0.0, 1.0, 1.0, p, 0.0),
                       power_segment(1.0, alpha, c1, r1, d1),
                       power_segment(alpha, beta, c2, r2, d2),
                       power_segment(beta, kInf, c3, p, d3),
                   }),
                   {}};
  auto& ps = out.params;
  ps.construction = "power-core";
  ps.set("p", p);
  ps.set("r1", r1);
  ps.set("r2", r2);
  ps.set("alpha", alpha);
  ps.set("beta", beta);
  ps.set("c1", c1);
  ps.set("c2", c2);
  ps.set("c3", c3);
  ps.set("d1", d1);
  ps.set("d2", d2);
  ps.set("d3", d3);
  ps.set("k", k);
  ps.set("l_alpha", l_alpha);
  ps.set("m_alpha_beta", m);
  return out;
}

Construction construct_target_exponents(double p1, double p, double p2, double r1, double r2) {
  feasible(1.0 < p1 && p1 < p && p < p2 && std::isfinite(p2),
           "target exponents need 1 < p1 < p < p2 < inf");
  feasible(1.0 < r1 && r1 < p1, "target exponents need 1 < r1 < p1");
  feasible(r2 > p2 && std::isfinite(r2), "target exponents need r2 > p2");

  const double d1 = 1.0 / p - 1.0 / r1;
  const double k = r1 * d1;

  // p1 = r1 / (1 + k gamma^{-r1})
  double gamma = std::pow((r1 / p1 - 1.0) / k, -1.0 / r1);
  if (!std::isfinite(gamma) || gamma <= 1.0) {
    auto h = [&](double a) { return r1 / (1.0 + k * std::pow(a, -r1)) - p1; };
    const auto root = bracket_root(h, 1.0 + 1e-6, 1e8);
    feasible(root.has_value(), "no gamma > 1 reaches q = p1");
    gamma = *root;
  }
  feasible(gamma > 1.0, "solved gamma is not above 1");

  auto l_of = [&](double a) {
    return r2 * std::pow(a, r2) * ((1.0 / r1 - 1.0 / r2) + std::pow(a, -r1) * d1);
  };
  const double l_gamma = l_of(gamma);
  // p2 = r2 / (1 + l_gamma delta^{-r2})
  double delta = std::pow((r2 / p2 - 1.0) / l_gamma, -1.0 / r2);
  if (!std::isfinite(delta) || delta <= gamma) {
    auto f = [&](double b) { return r2 / (1.0 + l_gamma * std::pow(b, -r2)) - p2; };
    const auto root = bracket_root(f, gamma * (1.0 + 1e-6), 1e8);
    feasible(root.has_value(), "no delta > gamma reaches p = p2");
    delta = *root;
  }
  feasible(delta > gamma, "solved delta is not above gamma");

  Construction out = power_core_splice(p, r1, r2, gamma, delta);
  out.params.construction = "target";
  out.params.set("p1", p1);
  out.params.set("p2", p2);
  out.params.set("gamma", gamma);
  out.params.set("delta", delta);
  return out;
}

Construction widened_splice(const YoungFunction& base, double r1, double r2, double alpha,
                            double beta) {
  feasible(r1 > 1.0 && r2 > r1, "widening needs 1 < r1 < r2");
  feasible(alpha > 1.0 && beta > alpha && std::isfinite(beta), "knots need 1 < alpha < beta");
  const double g1 = g_of(base, 1.0);
  const double g_beta = g_of(base, beta);
  const double c1 = 1.0;
  const double c2 = std::pow(alpha, r1 - r2);
  const double c3 = std::pow(alpha, r1 - r2) * std::pow(beta, r2 - 1.0);
  const double d1 = 1.0 / g1 - 1.0 / r1;
  const double d2 = std::pow(alpha, r1) * (1.0 / r1 - 1.0 / r2) + d1;
  const double d3 = c2 * std::pow(beta, r2) * (1.0 / r2 - 1.0 / g_beta) + d2;
  const double k = r1 * d1;
  const double c_alpha = (1.0 / r1 - 1.0 / r2) + std::pow(alpha, -r1) * d1;
  const double l_alpha = r2 * std::pow(alpha, r2) * c_alpha;
  const double d_beta = base.derivative(beta);
  const double m = beta * d_beta *
                   ((1.0 / r2 - 1.0 / g_beta) + std::pow(alpha / beta, r2) * c_alpha);

  Construction out{make_splice({
                       base_segment(0.0, 1.0, base, 1.0 / base.derivative(1.0), 0.0),
                       power_segment(1.0, alpha, c1, r1, d1),
                       power_segment(alpha, beta, c2, r2, d2),
                       base_segment(beta, kInf, base, c3 / d_beta, d3),
                   }),
                   {}};
  auto& ps = out.params;
  ps.construction = "widened";
  ps.set("r1", r1);
  ps.set("r2", r2);
  ps.set("alpha", alpha);
  ps.set("beta", beta);
  ps.set("c1", c1);
  ps.set("c2", c2);
  ps.set("c3", c3);
  ps.set("d1", d1);
  ps.set("d2", d2);
  ps.set("d3", d3);
  ps.set("k", k);
  ps.set("l_alpha", l_alpha);
  ps.set("m_alpha_beta", m);
  return out;
}

Construction construct_widened(const YoungFunction& base, double p1, double p2, double r1,
                               double r2) {
  const LebesgueExponents e = lebesgue_exponents(base);
  feasible(1.0 < p1 && p1 < e.q, "widening needs 1 < p1 < q of the base");
  feasible(!e.p_infinite() && e.p < p2 && std::isfinite(p2), "widening needs p of the base < p2 < inf");
  feasible(1.0 < r1 && r1 < p1, "widening needs 1 < r1 < p1");
  feasible(r2 > p2 && std::isfinite(r2), "widening needs r2 > p2");

  constexpr int kMaxDoublings = 60;
  double alpha = 2.0;
  double beta = 2.0 * alpha;
  Construction current = widened_splice(base, r1, r2, alpha, beta);
  LebesgueExponents m = lebesgue_exponents(current.phi);
  int steps = 0;
  while (!(m.q < p1)) {
    if (++steps > kMaxDoublings) throw NonConvergence("alpha doubling did not push q below p1");
    alpha *= 2.0;
    beta = 2.0 * alpha;
    current = widened_splice(base, r1, r2, alpha, beta);
    m = lebesgue_exponents(current.phi);
  }
  steps = 0;
  while (!(m.p > p2)) {
    if (++steps > kMaxDoublings) throw NonConvergence("beta doubling did not push p above p2");
    beta *= 2.0;
    current = widened_splice(base, r1, r2, alpha, beta);
    m = lebesgue_exponents(current.phi);
  }
  current.params.set("p1", p1);
  current.params.set("p2", p2);
  current.params.set("q_measured", m.q);
  current.params.set("p_measured", m.p);
  return current;
}

Construction construct_epsilon_tight(const YoungFunction& base, std::optional<double> r_opt,
                                     double n) {
  if (!(n > 1.0) || !std::isfinite(n)) throw DomainError("epsilon-tight splice needs n > 1");
  const LimitPair limits = limit_exponents_g(base);
  if (!limits.at_zero || !limits.at_infinity) {
    throw LimitsRequired("the g-limits of " + base.label() + " at 0 and infinity must exist");
  }
  const double q = std::min(*limits.at_zero, *limits.at_infinity);
  const double p = std::max(*limits.at_zero, *limits.at_infinity);
  const double r = r_opt.value_or(0.5 * (q + p));
  feasible(r >= q - 1e-9 && r <= p + 1e-9, "epsilon-tight splice needs q <= r <= p");

  const double lo = 1.0 / n;
  const double g_lo = g_of(base, lo);
  const double g_hi = g_of(base, n);
  const double a = std::pow(n, r - 1.0);
  const double b = (1.0 / g_lo - 1.0 / r) / n;
  const double c = std::pow(n, 2.0 * r - 2.0);
  const double d = std::pow(n, 2.0 * r - 1.0) * (1.0 / r - 1.0 / g_hi) + b;
  const double k_n = std::pow(n, -r) * (r / g_lo - 1.0);
  const double l_n = base(n) * ((g_hi / r - 1.0) +
                                std::pow(n, -2.0 * r) * (g_hi / g_lo - g_hi / r));

  Construction out{make_splice({
                       base_segment(0.0, lo, base, 1.0 / base.derivative(lo), 0.0),
                       Segment{lo, n, PowerPiece{a / r, r, b}},
                       base_segment(n, kInf, base, c / base.derivative(n), d),
                   }),
                   {}};
  auto& ps = out.params;
  ps.construction = "epsilon-tight";
  ps.set("n", n);
  ps.set("r", r);
  ps.set("q", q);
  ps.set("p", p);
  ps.set("a", a);
  ps.set("b", b);
  ps.set("c", c);
  ps.set("d", d);
  ps.set("k_n", k_n);
  ps.set("l_n", l_n);
  return out;
}

double epsilon_gap(const YoungFunction& base, const YoungFunction& psi) {
  const LimitPair limits = limit_exponents_g(base);
  if (!limits.at_zero || !limits.at_infinity) {
    throw LimitsRequired("the g-limits of " + base.label() + " at 0 and infinity must exist");
  }
  const double q = std::min(*limits.at_zero, *limits.at_infinity);
  const double p = std::max(*limits.at_zero, *limits.at_infinity);
  const LebesgueExponents e = lebesgue_exponents(psi);
  return std::max({0.0, e.p - p, q - e.q});
}

}  // namespace orlicz
