#include "orlicz/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLimitSteps = 40;
constexpr double kCauchy = 1e-4;

// s_j = ±ln(10) 2^j, i.e. t = 10^{±2^j}.
double schedule(int j, int side) { return side * std::log(10.0) * std::ldexp(1.0, j); }

double aitken(double a0, double a1, double a2) {
  const double d1 = a1 - a0;
  const double d2 = a2 - a1;
  const double denom = d2 - d1;
  const double scale = std::max({std::abs(a0), std::abs(a1), std::abs(a2), 1.0});
  if (std::abs(denom) < 1e-13 * scale) return a2;
  const double est = a2 - d2 * d2 / denom;
  // Reject extrapolations that leave the hull of the last two terms by a lot.
  if (!std::isfinite(est) || std::abs(est - a2) > 10.0 * std::abs(d2) + 1e-15 * scale) return a2;
  return est;
}

std::optional<double> settle(const std::function<double(int)>& term) {
  std::vector<double> vals;
  double prev = 0.0;
  int passes = 0;
  for (int j = 0; j <= kLimitSteps; ++j) {
    const double v = term(j);
    if (!std::isfinite(v)) return std::nullopt;
    vals.push_back(v);
    if (j < 2) continue;
    const double est = aitken(vals[j - 2], vals[j - 1], vals[j]);
    if (j >= 3) {
      const bool close = std::abs(est - prev) <= kCauchy * std::max(1.0, std::abs(est)) &&
                         std::abs(vals[j] - vals[j - 1]) <= 0.5 * std::max(1.0, std::abs(v));
      passes = close ? passes + 1 : 0;
      if (passes >= 2) return est;
    }
    prev = est;
  }
  return std::nullopt;
}

double left_g(const YoungFunction& phi, double t) {
  const double v = phi(t);
  if (!(v > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return t * phi.left_derivative(t) / v;
}

bool violates(double smaller, double larger, double tolerance) {
  return smaller > larger + tolerance * std::max({1.0, std::abs(smaller), std::abs(larger)});
}

}  // namespace

bool LebesgueExponents::p_infinite() const { return std::isinf(p); }

LebesgueExponents lebesgue_exponents(const YoungFunction& phi, const GridSpec& grid,
                                     double ceiling) {
  if (!phi.is_strict()) throw NonStrict("exponents need a strict Young function (" + phi.label() + ")");
  grid.check();
  const auto ts = grid.points();
  std::vector<double> ss(ts.size());
  std::vector<double> gs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ss[i] = std::log(ts[i]);
    gs[i] = phi.log_ratio(ss[i]);
  }

  LebesgueExponents out;
  const auto [min_it, max_it] = std::minmax_element(gs.begin(), gs.end());
  const std::size_t imin = static_cast<std::size_t>(min_it - gs.begin());
  const std::size_t imax = static_cast<std::size_t>(max_it - gs.begin());
  out.q = gs[imin];
  out.t_q = ts[imin];
  out.p = gs[imax];
  out.t_p = ts[imax];

  auto consider = [&out](double g, double t) {
    if (!std::isfinite(g)) return;
    if (g < out.q) {
      out.q = g;
      out.t_q = t;
    }
    if (g > out.p) {
      out.p = g;
      out.t_p = t;
    }
  };

  for (double k : phi.kinks()) {
    if (k < grid.lo || k > grid.hi) continue;
    consider(phi.log_ratio(std::log(k)), k);
    consider(left_g(phi, k), k);
  }

  const int bits = 40;
  auto refine = [&](std::size_t i, int sign) {
    const double a = ss[i == 0 ? 0 : i - 1];
    const double b = ss[std::min(i + 1, ss.size() - 1)];
    if (!(b > a)) return;
    auto f = [&phi, sign](double s) { return sign * phi.log_ratio(s); };
    const auto [s_best, f_best] = boost::math::tools::brent_find_minima(f, a, b, bits);
    consider(sign * f_best, std::exp(s_best));
  };
  refine(imin, 1);
  refine(imax, -1);

  const std::size_t n = gs.size();
  const bool top_escapes = gs[n - 1] > ceiling && gs[n - 1] > gs[n - 2];
  const bool bottom_escapes = gs[0] > ceiling && gs[0] > gs[1];
  if (top_escapes || bottom_escapes || !std::isfinite(out.p)) {
    out.p = kInf;
    out.t_p = top_escapes || !bottom_escapes ? kInf : 0.0;
  }

  const LimitPair limits = limit_exponents_g(phi);
  if (limits.at_zero) consider(*limits.at_zero, 0.0);
  if (limits.at_infinity) consider(*limits.at_infinity, kInf);
  out.q = std::max(out.q, 1.0);
  return out;
}

LimitPair limit_exponents_g(const YoungFunction& phi) {
  LimitPair out;
  out.at_zero = settle([&phi](int j) { return phi.log_ratio(schedule(j, -1)); });
  out.at_infinity = settle([&phi](int j) { return phi.log_ratio(schedule(j, 1)); });
  return out;
}

RLimits limit_exponents_r(const YoungFunction& phi, double epsilon) {
  const LebesgueExponents e = lebesgue_exponents(phi);
  if (e.p_infinite()) {
    throw Delta2Required("r-limits need the Delta_2 condition; p is infinite for " + phi.label());
  }
  // Secant slopes of ln Phi between consecutive schedule points share the limit
  // of r but drop the ln Phi(1) / ln t term, so they settle geometrically.
  auto slope = [&phi](int j, int side) {
    const double a = schedule(j, side);
    const double b = schedule(j + 1, side);
    return (phi.log_value(b) - phi.log_value(a)) / (b - a);
  };
  const auto r0 = settle([&](int j) { return slope(j, -1); });
  const auto r_inf = settle([&](int j) { return slope(j, 1); });
  if (!r0 || !r_inf) throw NonConvergence("r-limit sequence did not settle for " + phi.label());

  RLimits out;
  out.r0 = *r0;
  out.r_inf = *r_inf;
  out.epsilon = epsilon;

  std::vector<double> samples;
  const GridSpec grid = GridSpec::standard();
  for (double t : grid.points()) {
    if (t > 1.0) samples.push_back(std::log(t));
  }
  for (int j = 4; j <= 12; ++j) samples.push_back(schedule(j, 1));
  std::sort(samples.begin(), samples.end());
  std::optional<double> k;
  for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
    const double s = *it;
    const double lv = phi.log_value(s);
    const bool inside = (out.r_inf - epsilon) * s < lv && lv < (out.r_inf + epsilon) * s;
    if (!inside) break;
    k = std::exp(s);
  }
  out.k_epsilon = k;
  return out;
}

Delta2Verdict delta2_check(const YoungFunction& phi, const GridSpec& grid, double ceiling) {
  grid.check();
  Delta2Verdict out;
  out.holds = true;
  const double ln2 = std::log(2.0);
  const double log_ceiling = std::log(ceiling);
  double best_sup = -kInf;
  double witness = 0.0;
  double witness_distance = kInf;
  for (double t : grid.points()) {
    const double s = std::log(t);
    const double a = phi.log_value(s);
    const double b = phi.log_value(s + ln2);
    if (a == -kInf && b == -kInf) continue;
    const double lr = b - a;
    if (lr > log_ceiling || !std::isfinite(lr)) {
      out.holds = false;
      // Report the violating point closest to t = 1.
      if (std::abs(s) < witness_distance) {
        witness_distance = std::abs(s);
        witness = t;
      }
      continue;
    }
    best_sup = std::max(best_sup, lr);
  }
  if (out.holds) {
    out.constant = std::exp(best_sup);
  } else {
    out.counterexample = witness;
  }
  return out;
}

ExponentReport exponent_report(const YoungFunction& phi, const GridSpec& grid) {
  ExponentReport out;
  out.grid = grid;
  out.lebesgue = lebesgue_exponents(phi, grid);
  out.g_limits = limit_exponents_g(phi);
  out.delta2 = delta2_check(phi, grid);
  if (!out.lebesgue.p_infinite()) out.r_limits = limit_exponents_r(phi);
  return out;
}

std::vector<InequalityViolation> scaling_inequality_check(
    const YoungFunction& phi, const std::vector<std::pair<double, double>>& samples,
    const LebesgueExponents& exponents, double tolerance) {
  std::vector<InequalityViolation> out;
  const double q = exponents.q;
  const double p = exponents.p;
  for (const auto& [c, t] : samples) {
    if (!(c >= 0.0) || !(t >= 0.0)) throw DomainError("scaling samples need c >= 0 and t >= 0");
    if (c == 0.0 || t == 0.0) {
      if (phi(0.0) != 0.0) out.push_back({"origin", c, t, phi(0.0), 0.0});
      continue;
    }
    const double lc = std::log(c);
    const double base = phi.log_value(std::log(t));
    const double mid = phi.log_value(lc + std::log(t));
    if (base == -kInf) continue;
    // For c <= 1 the weaker power is p; for c >= 1 it is q.
    const double low_exp = c <= 1.0 ? p : q;
    const double high_exp = c <= 1.0 ? q : p;
    const std::string tag = c <= 1.0 ? "c<=1" : "C>=1";
    if (std::isfinite(low_exp)) {
      const double lower = low_exp * lc + base;
      if (violates(lower, mid, tolerance)) out.push_back({tag + " lower", c, t, lower, mid});
    }
    if (std::isfinite(high_exp)) {
      const double upper = high_exp * lc + base;
      if (violates(mid, upper, tolerance)) out.push_back({tag + " upper", c, t, mid, upper});
    }
  }
  return out;
}

std::vector<InequalityViolation> normalized_bounds_check(const YoungFunction& phi,
                                                         const GridSpec& grid,
                                                         double tolerance) {
  const LebesgueExponents e = lebesgue_exponents(phi, grid);
  if (e.p_infinite()) throw Delta2Required("normalized bounds need a finite p");
  const YoungFunction psi = YoungFunction::normalized(phi);
  const double q = e.q;
  const double p = e.p;
  std::vector<InequalityViolation> out;
  auto check = [&](const char* name, double t, double smaller, double larger) {
    if (violates(smaller, larger, tolerance)) out.push_back({name, 1.0, t, smaller, larger});
  };
  for (double t : grid.points()) {
    const double s = std::log(t);
    const bool small = t <= 1.0;

    const double lv = psi.log_value(s);
    check("psi lower", t, (small ? p : q) * s, lv);
    check("psi upper", t, lv, (small ? q : p) * s);

    const double ld = std::log(psi.derivative(t));
    check("psi' lower", t, std::log(q) + ((small ? p : q) - 1.0) * s, ld);
    check("psi' upper", t, ld, std::log(p) + ((small ? q : p) - 1.0) * s);

    const double li = std::log(psi.inverse(t));
    check("psi^-1 lower", t, s / (small ? q : p), li);
    check("psi^-1 upper", t, li, s / (small ? p : q));
  }
  return out;
}

}  // namespace orlicz
