#include "orlicz/young_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ln(1 + e^x)
double softplus(double x) {
  if (x > 0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// 1 / (1 + e^{-x})
double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  if (hi == kInf) return kInf;
  return hi + std::log1p(std::exp(lo - hi));
}

// ln(ln(1 + e^s))
double log_log1p_exp(double s) {
  if (s > 36.0) return std::log(s + std::log1p(std::exp(-s)));
  if (s < -36.0) return s + std::log1p(-0.5 * std::exp(s));
  return std::log(std::log1p(std::exp(s)));
}

// ln(ln(2 + e^s))
double log_log2p_exp(double s) {
  const double inner =
      s > 0 ? s + std::log1p(2.0 * std::exp(-s)) : std::log(2.0) + std::log1p(0.5 * std::exp(s));
  return std::log(inner);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

std::size_t expected_params(CatalogKind kind) {
  switch (kind) {
    case CatalogKind::Power:
    case CatalogKind::PowerExp:
      return 1;
    case CatalogKind::PowerSum:
    case CatalogKind::PowerLog:
      return 2;
    default:
      return 0;
  }
}

const char* catalog_name(CatalogKind kind) {
  switch (kind) {
    case CatalogKind::Power: return "power";
    case CatalogKind::PowerSum: return "power_sum";
    case CatalogKind::PowerLog: return "power_log";
    case CatalogKind::PowerExp: return "power_exp";
    case CatalogKind::PowerLogShift: return "power_log_shift";
    case CatalogKind::ExpMinusOne: return "exp_minus_one";
    case CatalogKind::FlatOrigin: return "flat_origin";
    case CatalogKind::Dual23: return "dual_23";
  }
  return "?";
}

void check_catalog(const CatalogForm& c) {
  const auto& p = c.params;
  require(p.size() == expected_params(c.kind),
          std::string(catalog_name(c.kind)) + ": expected " +
              std::to_string(expected_params(c.kind)) + " parameter(s), got " +
              std::to_string(p.size()));
  for (double v : p) require(std::isfinite(v), "catalog parameters must be finite");
  switch (c.kind) {
    case CatalogKind::Power:
      require(p[0] >= 1.0, "power: exponent p must be >= 1 for convexity");
      break;
    case CatalogKind::PowerSum:
      require(p[0] >= 1.0 && p[1] >= 1.0, "power_sum: exponents must be >= 1");
      break;
    case CatalogKind::PowerLog:
      require(p[0] >= 1.0, "power_log: n must be >= 1");
      require(p[1] >= 0.0, "power_log: m must be >= 0");
      break;
    case CatalogKind::PowerExp:
      require(p[0] >= 1.0, "power_exp: n must be >= 1");
      break;
    default:
      break;
  }
}

// ---------------------------------------------------------------- catalog

double catalog_value(const CatalogForm& c, double t) {
  const auto& p = c.params;
  switch (c.kind) {
    case CatalogKind::Power:
      return std::pow(t, p[0]);
    case CatalogKind::PowerSum:
      return std::pow(t, p[0]) + std::pow(t, p[1]);
    case CatalogKind::PowerLog:
      if (t == 0.0) return 0.0;
      return std::pow(t, p[0]) * std::pow(std::log1p(t), p[1]);
    case CatalogKind::PowerExp:
      return std::pow(t, p[0]) * std::exp(t);
    case CatalogKind::PowerLogShift:
      return t * t * std::log(2.0 + t);
    case CatalogKind::ExpMinusOne:
      return std::expm1(t);
    case CatalogKind::FlatOrigin:
      if (t == 0.0) return 0.0;
      if (t < 0.5) return std::exp(-1.0 / t);
      return std::exp(-2.0) * (4.0 * t - 1.0);
    case CatalogKind::Dual23:
      if (t <= 1.0) return t * t;
      return 2.0 * std::pow(t, 1.5) - 1.0;
  }
  return 0.0;
}

// Right derivative for t > 0; `left` selects the left derivative at kinks.
double catalog_derivative(const CatalogForm& c, double t, bool left) {
  const auto& p = c.params;
  switch (c.kind) {
    case CatalogKind::Power:
      return p[0] * std::pow(t, p[0] - 1.0);
    case CatalogKind::PowerSum:
      return p[0] * std::pow(t, p[0] - 1.0) + p[1] * std::pow(t, p[1] - 1.0);
    case CatalogKind::PowerLog: {
      const double n = p[0];
      const double m = p[1];
      const double l = std::log1p(t);
      double d = n * std::pow(t, n - 1.0) * std::pow(l, m);
      if (m != 0.0) d += m * std::pow(t, n) * std::pow(l, m - 1.0) / (1.0 + t);
      return d;
    }
    case CatalogKind::PowerExp:
      return (p[0] * std::pow(t, p[0] - 1.0) + std::pow(t, p[0])) * std::exp(t);
    case CatalogKind::PowerLogShift:
      return 2.0 * t * std::log(2.0 + t) + t * t / (2.0 + t);
    case CatalogKind::ExpMinusOne:
      return std::exp(t);
    case CatalogKind::FlatOrigin:
      if (t < 0.5 || (left && t == 0.5)) return std::exp(-1.0 / t) / (t * t);
      return 4.0 * std::exp(-2.0);
    case CatalogKind::Dual23:
      if (t < 1.0 || (left && t == 1.0)) return 2.0 * t;
      return 3.0 * std::sqrt(t);
  }
  return 0.0;
}

double catalog_log_value(const CatalogForm& c, double s) {
  const auto& p = c.params;
  switch (c.kind) {
    case CatalogKind::Power:
      return p[0] * s;
    case CatalogKind::PowerSum: {
      const double lo = std::min(p[0], p[1]);
      const double hi = std::max(p[0], p[1]);
      return lo * s + softplus((hi - lo) * s);
    }
    case CatalogKind::PowerLog:
      return p[0] * s + (p[1] == 0.0 ? 0.0 : p[1] * log_log1p_exp(s));
    case CatalogKind::PowerExp:
      return p[0] * s + std::exp(s);
    case CatalogKind::PowerLogShift:
      return 2.0 * s + log_log2p_exp(s);
    case CatalogKind::ExpMinusOne: {
      const double t = std::exp(s);
      if (t < 1.0) return s + std::log(std::expm1(t) / t);
      return t + std::log(-std::expm1(-t));
    }
    case CatalogKind::FlatOrigin:
      if (s < -std::log(2.0)) return -std::exp(-s);
      return -2.0 + std::log(4.0 * std::exp(s) - 1.0);
    case CatalogKind::Dual23:
      if (s <= 0.0) return 2.0 * s;
      return 1.5 * s + std::log(2.0) + std::log1p(-0.5 * std::exp(-1.5 * s));
  }
  return 0.0;
}

double catalog_log_ratio(const CatalogForm& c, double s) {
  const auto& p = c.params;
  switch (c.kind) {
    case CatalogKind::Power:
      return p[0];
    case CatalogKind::PowerSum: {
      const double lo = std::min(p[0], p[1]);
      const double hi = std::max(p[0], p[1]);
      return lo + (hi - lo) * sigmoid((hi - lo) * s);
    }
    case CatalogKind::PowerLog: {
      if (p[1] == 0.0) return p[0];
      // t / ((1 + t) ln(1 + t))
      double u;
      if (s > 36.0) {
        u = sigmoid(s) / (s + std::log1p(std::exp(-s)));
      } else if (s < -36.0) {
        u = 1.0 - 0.5 * std::exp(s);
      } else {
        const double t = std::exp(s);
        u = t / ((1.0 + t) * std::log1p(t));
      }
      return p[0] + p[1] * u;
    }
    case CatalogKind::PowerExp:
      return p[0] + std::exp(s);
    case CatalogKind::PowerLogShift: {
      // 2 + t / ((2 + t) ln(2 + t))
      const double frac = 1.0 / (1.0 + 2.0 * std::exp(-s));
      return 2.0 + frac / std::exp(log_log2p_exp(s));
    }
    case CatalogKind::ExpMinusOne: {
      const double t = std::exp(s);
      if (t == 0.0) return 1.0;
      return t / -std::expm1(-t);
    }
    case CatalogKind::FlatOrigin:
      if (s < -std::log(2.0)) return std::exp(-s);
      {
        const double t = std::exp(s);
        return 4.0 * t / (4.0 * t - 1.0);
      }
    case CatalogKind::Dual23:
      if (s < 0.0) return 2.0;
      return 1.5 / (1.0 - 0.5 * std::exp(-1.5 * s));
  }
  return 0.0;
}

// ----------------------------------------------------------------- pieces

double piece_value(const std::variant<PowerPiece, BasePiece>& piece, double t) {
  return std::visit(Overloaded{
                        [t](const PowerPiece& pp) {
                          return pp.coef * std::pow(t, pp.exponent) + pp.offset;
                        },
                        [t](const BasePiece& bp) { return bp.coef * bp.base(t) + bp.offset; },
                    },
                    piece);
}

double piece_derivative(const std::variant<PowerPiece, BasePiece>& piece, double t, bool left) {
  return std::visit(Overloaded{
                        [t](const PowerPiece& pp) {
                          return pp.coef * pp.exponent * std::pow(t, pp.exponent - 1.0);
                        },
                        [t, left](const BasePiece& bp) {
                          return bp.coef * (left ? bp.base.left_derivative(t) : bp.base.derivative(t));
                        },
                    },
                    piece);
}

// Returns (ln value, g) of a piece at t = e^s.
std::pair<double, double> piece_log(const std::variant<PowerPiece, BasePiece>& piece, double s) {
  double term_log = 0.0;
  double term_ratio = 0.0;
  double offset = 0.0;
  std::visit(Overloaded{
                 [&](const PowerPiece& pp) {
                   term_log = std::log(pp.coef) + pp.exponent * s;
                   term_ratio = pp.exponent;
                   offset = pp.offset;
                 },
                 [&](const BasePiece& bp) {
                   term_log = std::log(bp.coef) + bp.base.log_value(s);
                   term_ratio = bp.base.log_ratio(s);
                   offset = bp.offset;
                 },
             },
             piece);
  if (offset == 0.0) return {term_log, term_ratio};
  const double x = offset * std::exp(-term_log);
  if (std::isfinite(x) && x > -1.0) {
    return {term_log + std::log1p(x), term_ratio / (1.0 + x)};
  }
  const double term = std::exp(term_log);
  const double value = term + offset;
  return {std::log(std::max(value, 0.0)), term_ratio * term / value};
}

std::size_t segment_for_value(const PiecewiseSplice& sp, double t) {
  for (std::size_t i = 0; i < sp.segments.size(); ++i) {
    if (t <= sp.segments[i].hi) return i;
  }
  return sp.segments.size() - 1;
}

std::size_t segment_for_right(const PiecewiseSplice& sp, double t) {
  for (std::size_t i = 0; i < sp.segments.size(); ++i) {
    if (t < sp.segments[i].hi) return i;
  }
  return sp.segments.size() - 1;
}

std::size_t segment_for_right_log(const PiecewiseSplice& sp, double s) {
  for (std::size_t i = 0; i < sp.segments.size(); ++i) {
    if (s < std::log(sp.segments[i].hi)) return i;
  }
  return sp.segments.size() - 1;
}

double combine_value(const Combination& c, double a, double b) {
  if (c.mode == CombineMode::WeightedSum) return c.w1 * a + c.w2 * b;
  return std::max(a, b);
}

std::shared_ptr<const FunctionForm> wrap(FunctionForm form) {
  return std::make_shared<const FunctionForm>(std::move(form));
}

}  // namespace

// ============================================================== factories

YoungFunction YoungFunction::catalog(CatalogKind kind, std::vector<double> params) {
  CatalogForm c{kind, std::move(params)};
  check_catalog(c);
  return YoungFunction(wrap(FunctionForm{std::move(c)}));
}

YoungFunction YoungFunction::power(double p) { return catalog(CatalogKind::Power, {p}); }
YoungFunction YoungFunction::power_sum(double q, double p) {
  return catalog(CatalogKind::PowerSum, {q, p});
}
YoungFunction YoungFunction::power_log(double n, double m) {
  return catalog(CatalogKind::PowerLog, {n, m});
}
YoungFunction YoungFunction::power_exp(double n) { return catalog(CatalogKind::PowerExp, {n}); }
YoungFunction YoungFunction::power_log_shift() { return catalog(CatalogKind::PowerLogShift); }
YoungFunction YoungFunction::exp_minus_one() { return catalog(CatalogKind::ExpMinusOne); }
YoungFunction YoungFunction::flat_origin() { return catalog(CatalogKind::FlatOrigin); }
YoungFunction YoungFunction::dual_23() { return catalog(CatalogKind::Dual23); }

YoungFunction YoungFunction::normalized(const YoungFunction& base) {
  const double at_one = base(1.0);
  require(at_one > 0.0 && std::isfinite(at_one), "normalization needs 0 < Phi(1) < inf");
  return YoungFunction(wrap(FunctionForm{Scaled{base, at_one}}));
}

YoungFunction YoungFunction::weighted_sum(const YoungFunction& first, double w1,
                                          const YoungFunction& second, double w2) {
  require(w1 > 0.0 && w2 > 0.0, "weighted sum needs positive weights");
  return YoungFunction(
      wrap(FunctionForm{Combination{CombineMode::WeightedSum, first, second, w1, w2}}));
}

YoungFunction YoungFunction::pointwise_max(const YoungFunction& first,
                                           const YoungFunction& second) {
  return YoungFunction(
      wrap(FunctionForm{Combination{CombineMode::PointwiseMax, first, second, 1.0, 1.0}}));
}

YoungFunction YoungFunction::from_form(FunctionForm form) {
  std::visit(Overloaded{
                 [](const CatalogForm& c) { check_catalog(c); },
                 [](const PiecewiseSplice& sp) {
                   require(!sp.segments.empty(), "splice needs at least one segment");
                   require(sp.segments.front().lo == 0.0, "splice must start at t = 0");
                   require(sp.segments.back().hi == kInf, "splice must extend to infinity");
                   for (std::size_t i = 0; i < sp.segments.size(); ++i) {
                     const Segment& seg = sp.segments[i];
                     require(seg.lo < seg.hi, "splice knots must be strictly increasing");
                     if (i > 0) {
                       require(seg.lo == sp.segments[i - 1].hi,
                               "splice segments must be contiguous");
                     }
                     std::visit(Overloaded{
                                    [](const PowerPiece& pp) {
                                      require(pp.coef > 0.0, "power piece needs coef > 0");
                                      require(pp.exponent >= 1.0,
                                              "power piece needs exponent >= 1");
                                      require(std::isfinite(pp.offset),
                                              "power piece offset must be finite");
                                    },
                                    [](const BasePiece& bp) {
                                      require(bp.coef > 0.0, "base piece needs coef > 0");
                                      require(std::isfinite(bp.offset),
                                              "base piece offset must be finite");
                                    },
                                },
                                seg.piece);
                   }
                 },
                 [](const Scaled& sc) {
                   require(sc.divisor > 0.0 && std::isfinite(sc.divisor),
                           "scale divisor must be positive");
                 },
                 [](const Combination& c) {
                   if (c.mode == CombineMode::WeightedSum) {
                     require(c.w1 > 0.0 && c.w2 > 0.0, "weighted sum needs positive weights");
                   }
                 },
             },
             form.alternatives);
  return YoungFunction(wrap(std::move(form)));
}

YoungFunction make_splice(std::vector<Segment> segments) {
  return YoungFunction::from_form(FunctionForm{PiecewiseSplice{std::move(segments)}});
}

// ============================================================= evaluation

double YoungFunction::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("Phi(t) needs t >= 0");
  return std::visit(Overloaded{
                        [t](const CatalogForm& c) { return catalog_value(c, t); },
                        [t](const PiecewiseSplice& sp) {
                          return piece_value(sp.segments[segment_for_value(sp, t)].piece, t);
                        },
                        [t](const Scaled& sc) { return sc.base(t) / sc.divisor; },
                        [t](const Combination& c) {
                          return combine_value(c, c.first(t), c.second(t));
                        },
                    },
                    form_->alternatives);
}

namespace {

double derivative_impl(const FunctionForm& form, double t, bool left) {
  return std::visit(
      Overloaded{
          [t, left](const CatalogForm& c) { return catalog_derivative(c, t, left); },
          [t, left](const PiecewiseSplice& sp) {
            const std::size_t i = left ? segment_for_value(sp, t) : segment_for_right(sp, t);
            return piece_derivative(sp.segments[i].piece, t, left);
          },
          [t, left](const Scaled& sc) {
            return (left ? sc.base.left_derivative(t) : sc.base.derivative(t)) / sc.divisor;
          },
          [t, left](const Combination& c) {
            const double d1 = left ? c.first.left_derivative(t) : c.first.derivative(t);
            const double d2 = left ? c.second.left_derivative(t) : c.second.derivative(t);
            if (c.mode == CombineMode::WeightedSum) return c.w1 * d1 + c.w2 * d2;
            const double a = c.first(t);
            const double b = c.second(t);
            if (a > b) return d1;
            if (b > a) return d2;
            return left ? std::min(d1, d2) : std::max(d1, d2);
          },
      },
      form.alternatives);
}

}  // namespace

double YoungFunction::derivative(double t) const {
  if (!(t > 0.0)) throw DomainError("Phi'(t) needs t > 0");
  return derivative_impl(*form_, t, false);
}

double YoungFunction::left_derivative(double t) const {
  if (!(t > 0.0)) throw DomainError("Phi'(t) needs t > 0");
  return derivative_impl(*form_, t, true);
}

double YoungFunction::log_value(double s) const {
  if (std::isnan(s)) throw DomainError("log_value needs a number");
  return std::visit(
      Overloaded{
          [s](const CatalogForm& c) { return catalog_log_value(c, s); },
          [s](const PiecewiseSplice& sp) {
            std::size_t i = 0;
            while (i + 1 < sp.segments.size() && s > std::log(sp.segments[i].hi)) ++i;
            return piece_log(sp.segments[i].piece, s).first;
          },
          [s](const Scaled& sc) { return sc.base.log_value(s) - std::log(sc.divisor); },
          [s](const Combination& c) {
            const double a = c.first.log_value(s);
            const double b = c.second.log_value(s);
            if (c.mode == CombineMode::WeightedSum) {
              return log_add_exp(std::log(c.w1) + a, std::log(c.w2) + b);
            }
            return std::max(a, b);
          },
      },
      form_->alternatives);
}

double YoungFunction::log_ratio(double s) const {
  if (std::isnan(s)) throw DomainError("log_ratio needs a number");
  return std::visit(
      Overloaded{
          [s](const CatalogForm& c) { return catalog_log_ratio(c, s); },
          [s](const PiecewiseSplice& sp) {
            return piece_log(sp.segments[segment_for_right_log(sp, s)].piece, s).second;
          },
          [s](const Scaled& sc) { return sc.base.log_ratio(s); },
          [s](const Combination& c) {
            const double a = c.first.log_value(s);
            const double b = c.second.log_value(s);
            const double ga = c.first.log_ratio(s);
            const double gb = c.second.log_ratio(s);
            if (c.mode == CombineMode::WeightedSum) {
              // Weighted average of the two ratios with weights w_i Phi_i.
              const double la = std::log(c.w1) + a;
              const double lb = std::log(c.w2) + b;
              const double share = sigmoid(la - lb);
              return share * ga + (1.0 - share) * gb;
            }
            if (a > b) return ga;
            if (b > a) return gb;
            return std::max(ga, gb);
          },
      },
      form_->alternatives);
}

bool YoungFunction::is_strict() const {
  return std::visit(Overloaded{
                        [](const CatalogForm& c) { return c.kind != CatalogKind::FlatOrigin; },
                        [](const PiecewiseSplice& sp) {
                          return std::visit(Overloaded{
                                                [](const PowerPiece&) { return true; },
                                                [](const BasePiece& bp) {
                                                  return bp.base.is_strict();
                                                },
                                            },
                                            sp.segments.front().piece);
                        },
                        [](const Scaled& sc) { return sc.base.is_strict(); },
                        [](const Combination& c) {
                          if (c.mode == CombineMode::WeightedSum) {
                            return c.first.is_strict() || c.second.is_strict();
                          }
                          return c.first.is_strict() || c.second.is_strict();
                        },
                    },
                    form_->alternatives);
}

std::vector<double> YoungFunction::kinks() const {
  std::vector<double> out;
  std::visit(Overloaded{
                 [&](const CatalogForm& c) {
                   if (c.kind == CatalogKind::Dual23) out.push_back(1.0);
                   if (c.kind == CatalogKind::FlatOrigin) out.push_back(0.5);
                 },
                 [&](const PiecewiseSplice& sp) {
                   for (const Segment& seg : sp.segments) {
                     if (seg.lo > 0.0) out.push_back(seg.lo);
                     if (const auto* bp = std::get_if<BasePiece>(&seg.piece)) {
                       for (double k : bp->base.kinks()) {
                         if (k > seg.lo && k < seg.hi) out.push_back(k);
                       }
                     }
                   }
                 },
                 [&](const Scaled& sc) { out = sc.base.kinks(); },
                 [&](const Combination& c) {
                   out = c.first.kinks();
                   const auto more = c.second.kinks();
                   out.insert(out.end(), more.begin(), more.end());
                 },
             },
             form_->alternatives);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string YoungFunction::label() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const CatalogForm& c) {
                   os << catalog_name(c.kind);
                   if (!c.params.empty()) {
                     os << '(';
                     for (std::size_t i = 0; i < c.params.size(); ++i) {
                       os << (i ? "," : "") << c.params[i];
                     }
                     os << ')';
                   }
                 },
                 [&](const PiecewiseSplice& sp) { os << "splice[" << sp.segments.size() << "]"; },
                 [&](const Scaled& sc) { os << "normalized(" << sc.base.label() << ")"; },
                 [&](const Combination& c) {
                   os << (c.mode == CombineMode::WeightedSum ? "sum(" : "max(")
                      << c.first.label() << "," << c.second.label() << ")";
                 },
             },
             form_->alternatives);
  return os.str();
}

double YoungFunction::inverse(double y) const {
  if (!(y >= 0.0)) throw DomainError("Phi^{-1}(y) needs y >= 0");
  if (y == 0.0) {
    if (!is_strict()) throw NonInvertible("Phi vanishes on a neighbourhood of 0; Phi^{-1}(0) is not unique");
    return 0.0;
  }
  if (const auto* c = std::get_if<CatalogForm>(&form_->alternatives);
      c && c->kind == CatalogKind::Power) {
    return std::pow(y, 1.0 / c->params[0]);
  }
  if (const auto* sc = std::get_if<Scaled>(&form_->alternatives)) {
    if (const auto* c = std::get_if<CatalogForm>(&sc->base.form().alternatives);
        c && c->kind == CatalogKind::Power) {
      return std::pow(y * sc->divisor, 1.0 / c->params[0]);
    }
  }

  const YoungFunction& phi = *this;
  double lo = 0.0;
  double hi = 1.0;
  if (phi(hi) < y) {
    while (phi(hi) < y) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw NonInvertible("Phi^{-1}(y): y beyond the range of Phi");
    }
  } else {
    double probe = 1.0;
    while (probe > 1e-300 && phi(probe) >= y) {
      hi = probe;
      probe *= 0.5;
    }
    lo = phi(probe) < y ? probe : 0.0;
  }
  for (int it = 0; it < 2000 && hi - lo > 0.0; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (phi(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double f_lo = phi(lo);
  const double f_hi = phi(hi);
  if (f_lo == f_hi && f_lo != y) throw NonInvertible("Phi^{-1}(y): Phi is flat near the solution");
  return std::abs(f_lo - y) < std::abs(f_hi - y) ? lo : hi;
}

// ======================================================== free functions

double g_ratio(const YoungFunction& phi, double t) {
  if (!(t > 0.0)) throw DomainError("g_Phi(t) needs t > 0");
  const double value = phi(t);
  if (value == 0.0) throw DomainError("g_Phi(t) is undefined where Phi(t) = 0");
  return t * phi.derivative(t) / value;
}

double r_exponent(const YoungFunction& phi, double t) {
  if (!(t > 0.0)) throw DomainError("r_Phi(t) needs t > 0");
  if (t == 1.0) throw DomainError("r_Phi(t) is undefined at t = 1");
  const double s = std::log(t);
  const double lv = phi.log_value(s);
  if (lv == -kInf) throw DomainError("r_Phi(t) is undefined where Phi(t) = 0");
  return (lv - phi.log_value(0.0)) / s;
}

std::size_t ValidationReport::count(AxiomViolation::Kind kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [kind](const auto& v) { return v.kind == kind; }));
}

const char* to_string(AxiomViolation::Kind kind) {
  switch (kind) {
    case AxiomViolation::Kind::Origin: return "origin";
    case AxiomViolation::Kind::Monotonicity: return "monotonicity";
    case AxiomViolation::Kind::Convexity: return "convexity";
    case AxiomViolation::Kind::KnotValue: return "knot-C0";
    case AxiomViolation::Kind::KnotDerivative: return "knot-C1";
  }
  return "?";
}

namespace {

double relative_gap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

ValidationReport validate(const YoungFunction& phi, const GridSpec& grid, double knot_tolerance) {
  grid.check();
  if (grid.n < 100) throw DomainError("validate needs a grid with at least 100 points");
  using Kind = AxiomViolation::Kind;
  ValidationReport report;
  constexpr double kTol = 1e-10;

  if (const double origin = phi(0.0); origin != 0.0) {
    report.violations.push_back({Kind::Origin, 0.0, std::abs(origin), "Phi(0) != 0"});
  }

  const auto ts = grid.points();
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = phi(ts[i]);

  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (!std::isfinite(vs[i + 1])) continue;
    if (vs[i + 1] < vs[i] * (1.0 - kTol)) {
      report.violations.push_back({Kind::Monotonicity, ts[i], relative_gap(vs[i], vs[i + 1]),
                                   "Phi decreases between consecutive grid points"});
    }
    // Convexity with Phi(0) = 0 makes Phi(t)/t non-decreasing.
    if (vs[i + 1] / ts[i + 1] < (vs[i] / ts[i]) * (1.0 - kTol)) {
      report.violations.push_back({Kind::Convexity, ts[i],
                                   relative_gap(vs[i] / ts[i], vs[i + 1] / ts[i + 1]),
                                   "Phi(t)/t decreases"});
    }
  }

  constexpr double kThetas[] = {0.25, 0.5, 0.75};
  for (std::size_t stride = 1; stride < ts.size(); stride *= 2) {
    for (std::size_t i = 0; i + stride < ts.size(); ++i) {
      const std::size_t j = i + stride;
      if (!std::isfinite(vs[j])) continue;
      for (double theta : kThetas) {
        const double mid = theta * ts[i] + (1.0 - theta) * ts[j];
        const double lhs = phi(mid);
        const double rhs = theta * vs[i] + (1.0 - theta) * vs[j];
        if (lhs > rhs * (1.0 + kTol) + 1e-300) {
          report.violations.push_back(
              {Kind::Convexity, ts[i], relative_gap(lhs, rhs), "chord lies below Phi"});
        }
      }
    }
  }

  if (const auto* sp = std::get_if<PiecewiseSplice>(&phi.form().alternatives)) {
    for (std::size_t i = 0; i + 1 < sp->segments.size(); ++i) {
      const double knot = sp->segments[i].hi;
      const auto& left = sp->segments[i].piece;
      const auto& right = sp->segments[i + 1].piece;
      const double vl = piece_value(left, knot);
      const double vr = piece_value(right, knot);
      if (const double gap = relative_gap(vl, vr); gap > knot_tolerance) {
        std::ostringstream os;
        os << "value jumps from " << vl << " to " << vr;
        report.violations.push_back({Kind::KnotValue, knot, gap, os.str()});
      }
      const double dl = piece_derivative(left, knot, true);
      const double dr = piece_derivative(right, knot, false);
      if (const double gap = relative_gap(dl, dr); gap > knot_tolerance) {
        std::ostringstream os;
        os << "derivative jumps from " << dl << " to " << dr;
        report.violations.push_back({Kind::KnotDerivative, knot, gap, os.str()});
      }
    }
  }
  return report;
}

}  // namespace orlicz
