#include "orlicz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace orlicz {
namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// Kronrod 15 and embedded Gauss 7 sums on [lo, hi]; error is |K - G| with no
// magnitude floor, so narrow panels of a large integrand still converge.
std::pair<double, double> kronrod_panel(const ScalarFn& f, double lo, double hi) {
  using K = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  static const auto& kx = K::abscissa();
  static const auto& kw = K::weights();
  static const auto& gx = G::abscissa();
  static const auto& gw = G::weights();
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double k = 0.0;
  double g = 0.0;
  for (std::size_t i = 0; i < kx.size(); ++i) {
    const double v = kx[i] == 0.0 ? f(c) : f(c - h * kx[i]) + f(c + h * kx[i]);
    k += kw[i] * v;
    for (std::size_t j = 0; j < gx.size(); ++j) {
      if (gx[j] == kx[i]) g += gw[j] * v;
    }
  }
  return {h * k, std::abs(h * (k - g))};
}

}  // namespace

QuadratureResult integrate_interval(const ScalarFn& f, double a, double b,
                                    const std::vector<double>& breakpoints,
                                    const QuadratureOptions& options) {
  QuadratureResult out;
  if (!(b > a)) return out;

  bool bad = false;
  auto rule = [&](double lo, double hi) {
    double err = 0.0;
    double v = 0.0;
    try {
      std::tie(v, err) = kronrod_panel(f, lo, hi);
    } catch (const std::exception&) {
      bad = true;
    }
    out.evaluations += 15;
    if (!std::isfinite(v) || !std::isfinite(err)) bad = true;
    return Panel{lo, hi, v, err};
  };

  std::vector<double> cuts{a};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> heap;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) heap.push(rule(cuts[i], cuts[i + 1]));
  if (bad) {
    out.divergent = true;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }

  auto totals = [&heap]() {
    auto copy = heap;
    double v = 0.0;
    double e = 0.0;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
    return std::pair{v, e};
  };

  auto [value, error] = totals();
  std::vector<Panel> finished;
  while (!heap.empty() && error > std::max(options.abs_tol, options.rel_tol * std::abs(value)) &&
         heap.size() + finished.size() < options.max_panels) {
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      finished.push_back(worst);  // cannot split further
      continue;
    }
    const Panel left = rule(worst.a, mid);
    const Panel right = rule(mid, worst.b);
    if (bad) {
      out.divergent = true;
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  double v = 0.0;
  double e = 0.0;
  for (const Panel& p : finished) {
    v += p.value;
    e += p.error;
  }
  const auto [hv, he] = totals();
  out.value = v + hv;
  out.error = e + he;
  return out;
}

QuadratureResult integrate_real_line(const ScalarFn& f, const std::vector<double>& breakpoints,
                                     const QuadratureOptions& options) {
  QuadratureResult out = integrate_interval(f, -1.0, 1.0, breakpoints, options);
  if (out.divergent) return out;

  auto diverge = [&out]() {
    out.divergent = true;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  };

  auto shell = [&](int k, double sign, double running) {
    const double phi_lo = std::atan(std::pow(10.0, -k));
    const double phi_hi = std::atan(std::pow(10.0, -(k - 1)));
    std::vector<double> mapped;
    for (double x : breakpoints) {
      const double u = sign * x;
      if (u > std::pow(10.0, k - 1) && u < std::pow(10.0, k)) mapped.push_back(std::atan(1.0 / u));
    }
    auto g = [&f, sign](double phi) {
      const double s = std::sin(phi);
      return f(sign * std::cos(phi) / s) / (s * s);
    };
    QuadratureOptions opts = options;
    opts.abs_tol = std::max(options.abs_tol, 0.1 * options.rel_tol * std::abs(running));
    return integrate_interval(g, phi_lo, phi_hi, mapped, opts);
  };

  // Shells up to the outermost breakpoint may hold bounded features such as long
  // indicator plateaus; the decay tests only start past them.
  double extent = 1.0;
  for (double x : breakpoints) extent = std::max(extent, std::abs(x));
  const int feature_shells = static_cast<int>(std::ceil(std::log10(extent)));

  double prev = std::numeric_limits<double>::quiet_NaN();
  double prev_ratio = std::numeric_limits<double>::quiet_NaN();
  double last_ratio = std::numeric_limits<double>::quiet_NaN();
  double penultimate = std::numeric_limits<double>::quiet_NaN();
  int growing = 0;
  for (int k = 1; k <= options.max_shells; ++k) {
    const QuadratureResult pos = shell(k, 1.0, out.value);
    const QuadratureResult neg = shell(k, -1.0, out.value);
    out.evaluations += pos.evaluations + neg.evaluations;
    if (pos.divergent || neg.divergent) return diverge();
    const double inc = pos.value + neg.value;
    out.value += inc;
    out.error += pos.error + neg.error;
    if (!std::isfinite(out.value)) return diverge();

    const double mag = std::abs(inc);
    const double tol = std::max(options.abs_tol, options.rel_tol * std::abs(out.value));
    if (k <= feature_shells) {
      prev = mag;
      continue;
    }
    if (k >= 2 && prev == 0.0 && mag == 0.0) return out;
    if (k >= 2 && prev > 0.0) {
      const double r = mag / prev;
      last_ratio = r;
      growing = r >= 0.99 ? growing + 1 : 0;
      if (growing >= options.growth_shells) return diverge();
      if (std::abs(out.value) > options.divergence_threshold && r >= 0.9) return diverge();
      if (r < 0.99) {
        const double tail = mag * r / (1.0 - r);
        const double sign = inc < 0.0 ? -1.0 : 1.0;
        if (tail <= tol) {
          out.value += sign * tail;
          out.error += tail;
          return out;
        }
        // A power-law tail gives a constant shell ratio; extrapolate once it has settled.
        if (std::isfinite(prev_ratio) && std::abs(r - prev_ratio) <= 1e-10 * r) {
          out.value += sign * tail;
          out.error += tail * 1e-10 / (1.0 - r);
          return out;
        }
      }
      penultimate = prev_ratio;
      prev_ratio = r;
    } else {
      prev_ratio = std::numeric_limits<double>::quiet_NaN();
    }
    prev = mag;
  }
  // Out of shells: extrapolate if still decaying, otherwise call it divergent.
  if (std::isfinite(last_ratio) && last_ratio < 0.99) {
    const double tail = prev * last_ratio / (1.0 - last_ratio);
    out.value += tail;
    const double drift = std::isfinite(penultimate) ? std::abs(last_ratio - penultimate) : 1.0;
    out.error += tail * std::min(1.0, drift / ((1.0 - last_ratio) * (1.0 - last_ratio)));
    return out;
  }
  if (prev == 0.0) return out;
  return diverge();
}

}  // namespace orlicz
