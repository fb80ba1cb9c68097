#include "orlicz/integrand.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Integrand Integrand::zero(int dim) {
  require(dim == 1 || dim == 2, "integrands live on R or R^2");
  Integrand f;
  f.kind_ = IntegrandKind::Zero;
  f.dim_ = dim;
  return f;
}

Integrand Integrand::cauchy_power(double s) {
  require(s > 0.0 && std::isfinite(s), "cauchy_power needs s > 0");
  Integrand f;
  f.kind_ = IntegrandKind::CauchyPower;
  f.params_ = {s};
  return f;
}

Integrand Integrand::gauss_quad(double n) {
  require(n >= 1.0 && std::isfinite(n), "gauss_quad needs n >= 1");
  Integrand f;
  f.kind_ = IntegrandKind::GaussQuad;
  f.dim_ = 2;
  f.params_ = {n};
  return f;
}

Integrand Integrand::indicator(double measure, double height, int dim, double offset) {
  require(measure > 0.0 && std::isfinite(measure), "indicator needs measure > 0");
  require(height > 0.0 && std::isfinite(height), "indicator needs height > 0");
  require(dim == 1 || dim == 2, "integrands live on R or R^2");
  require(std::isfinite(offset), "indicator offset must be finite");
  Integrand f;
  f.kind_ = IntegrandKind::Indicator;
  f.dim_ = dim;
  f.params_ = {measure, height, offset};
  return f;
}

Integrand Integrand::separable(const Integrand& g, const Integrand& h) {
  require(g.dim() == 1 && h.dim() == 1, "separable needs two one-dimensional factors");
  Integrand f;
  f.kind_ = IntegrandKind::Separable;
  f.dim_ = 2;
  f.terms_ = {{1.0, g}, {1.0, h}};
  return f;
}

Integrand Integrand::finite_sum(std::vector<std::pair<double, Integrand>> terms) {
  require(!terms.empty(), "finite sum needs at least one term");
  const int dim = terms.front().second.dim();
  for (const auto& [w, t] : terms) {
    require(std::isfinite(w), "finite sum weights must be finite");
    require(t.dim() == dim, "finite sum terms must share a dimension");
  }
  Integrand f;
  f.kind_ = IntegrandKind::FiniteSum;
  f.dim_ = dim;
  f.terms_ = std::move(terms);
  return f;
}

Integrand Integrand::scaled(double c) const {
  require(std::isfinite(c), "scale must be finite");
  Integrand out = finite_sum({{c, *this}});
  for (const auto& [r, v] : moments_) out.moments_.emplace_back(r, std::pow(std::abs(c), r) * v);
  return out;
}

Integrand Integrand::with_moments(std::vector<std::pair<double, double>> moments) const {
  for (const auto& [r, v] : moments) {
    require(r > 0.0 && v >= 0.0 && std::isfinite(v), "moments need r > 0 and finite values >= 0");
  }
  Integrand out = *this;
  out.moments_ = std::move(moments);
  return out;
}

std::optional<double> Integrand::known_moment(double r) const {
  for (const auto& [e, v] : moments_) {
    if (e == r) return v;
  }
  return std::nullopt;
}

double Integrand::operator()(double x) const {
  if (dim_ != 1) throw DomainError("a two-dimensional integrand needs (x, y)");
  switch (kind_) {
    case IntegrandKind::Zero:
      return 0.0;
    case IntegrandKind::CauchyPower:
      return std::pow(1.0 + x * x, -params_[0]);
    case IntegrandKind::Indicator:
      return (x >= params_[2] && x <= params_[2] + params_[0]) ? params_[1] : 0.0;
    case IntegrandKind::FiniteSum: {
      double sum = 0.0;
      for (const auto& [w, t] : terms_) sum += w * t(x);
      return sum;
    }
    default:
      throw DomainError("integrand kind is not one-dimensional");
  }
}

double Integrand::operator()(double x, double y) const {
  if (dim_ != 2) throw DomainError("a one-dimensional integrand takes a single argument");
  switch (kind_) {
    case IntegrandKind::Zero:
      return 0.0;
    case IntegrandKind::GaussQuad: {
      const double n = params_[0];
      return std::exp(-n * x * x + 2.0 * std::sqrt(n - 1.0) * x * y - y * y);
    }
    case IntegrandKind::Indicator: {
      const double lo = params_[2];
      const double hi = lo + std::sqrt(params_[0]);
      return (x >= lo && x <= hi && y >= lo && y <= hi) ? params_[1] : 0.0;
    }
    case IntegrandKind::Separable:
      return terms_[0].second(x) * terms_[1].second(y);
    case IntegrandKind::FiniteSum: {
      double sum = 0.0;
      for (const auto& [w, t] : terms_) sum += w * t(x, y);
      return sum;
    }
    default:
      throw DomainError("integrand kind is not two-dimensional");
  }
}

std::vector<double> Integrand::breakpoints() const {
  std::vector<double> out;
  switch (kind_) {
    case IntegrandKind::Indicator: {
      const double side = dim_ == 1 ? params_[0] : std::sqrt(params_[0]);
      out = {params_[2], params_[2] + side};
      break;
    }
    case IntegrandKind::Separable:
      out = terms_[1].second.breakpoints();
      break;
    case IntegrandKind::FiniteSum:
      for (const auto& [w, t] : terms_) {
        const auto more = t.breakpoints();
        out.insert(out.end(), more.begin(), more.end());
      }
      break;
    default:
      break;
  }
  sort_unique(out);
  return out;
}

std::vector<double> Integrand::section_breakpoints(double y) const {
  if (dim_ != 2) throw DomainError("sections exist only for two-dimensional integrands");
  std::vector<double> out;
  switch (kind_) {
    case IntegrandKind::GaussQuad: {
      // The section is a Gaussian centred at sqrt(n-1) y / n with width 1/sqrt(n).
      const double n = params_[0];
      const double centre = std::sqrt(n - 1.0) * y / n;
      const double w = 1.0 / std::sqrt(n);
      for (double k : {-8.0, -3.0, -1.0, 0.0, 1.0, 3.0, 8.0}) out.push_back(centre + k * w);
      break;
    }
    case IntegrandKind::Indicator:
      out = breakpoints();
      break;
    case IntegrandKind::Separable:
      out = terms_[0].second.breakpoints();
      break;
    case IntegrandKind::FiniteSum:
      for (const auto& [w, t] : terms_) {
        const auto more = t.section_breakpoints(y);
        out.insert(out.end(), more.begin(), more.end());
      }
      break;
    default:
      break;
  }
  sort_unique(out);
  return out;
}

bool Integrand::is_identically_zero() const {
  switch (kind_) {
    case IntegrandKind::Zero:
      return true;
    case IntegrandKind::Separable:
      return terms_[0].second.is_identically_zero() || terms_[1].second.is_identically_zero();
    case IntegrandKind::FiniteSum:
      return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
        return term.first == 0.0 || term.second.is_identically_zero();
      });
    default:
      return false;
  }
}

std::string Integrand::label() const {
  std::ostringstream os;
  switch (kind_) {
    case IntegrandKind::Zero:
      os << (dim_ == 1 ? "zero" : "zero2");
      break;
    case IntegrandKind::CauchyPower:
      os << "cauchy_power(" << params_[0] << ")";
      break;
    case IntegrandKind::GaussQuad:
      os << "gauss_quad(" << params_[0] << ")";
      break;
    case IntegrandKind::Indicator:
      os << (dim_ == 1 ? "indicator(" : "indicator2(") << params_[0] << "," << params_[1] << ","
         << params_[2] << ")";
      break;
    case IntegrandKind::Separable:
      os << "separable(" << terms_[0].second.label() << "," << terms_[1].second.label() << ")";
      break;
    case IntegrandKind::FiniteSum:
      os << "sum(";
      for (std::size_t i = 0; i < terms_.size(); ++i) {
        os << (i ? "," : "") << terms_[i].first << "," << terms_[i].second.label();
      }
      os << ")";
      break;
  }
  return os.str();
}

Integrand two_moment_witness(double a, double b) {
  require(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b),
          "two-moment witness needs a, b > 0");
  // Heights h and h/2 on measures m1, m2:
  //   h^2 (m1 + m2/4) = a,  h^3 (m1 + m2/8) = b,  feasible for b/a <= h <= 2b/a.
  const double h = (b / a <= 1.0 && 1.0 <= 2.0 * b / a) ? 1.0 : 1.5 * b / a;
  const double a1 = a / (h * h);
  const double b1 = b / (h * h * h);
  const double m1 = 2.0 * b1 - a1;
  const double m2 = 8.0 * (a1 - b1);
  std::vector<std::pair<double, Integrand>> terms;
  double offset = 0.0;
  if (m1 > 0.0) {
    terms.emplace_back(1.0, Integrand::indicator(m1, h, 1, offset));
    offset += m1 + 1.0;
  }
  if (m2 > 0.0) terms.emplace_back(1.0, Integrand::indicator(m2, 0.5 * h, 1, offset));
  return Integrand::finite_sum(std::move(terms)).with_moments({{2.0, a}, {3.0, b}});
}

}  // namespace orlicz
