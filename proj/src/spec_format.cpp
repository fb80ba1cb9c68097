#include "orlicz/spec_format.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr std::array<std::pair<const char*, CatalogKind>, 8> kCatalogNames{{
    {"power", CatalogKind::Power},
    {"power_sum", CatalogKind::PowerSum},
    {"power_log", CatalogKind::PowerLog},
    {"power_exp", CatalogKind::PowerExp},
    {"power_log_shift", CatalogKind::PowerLogShift},
    {"exp_minus_one", CatalogKind::ExpMinusOne},
    {"flat_origin", CatalogKind::FlatOrigin},
    {"dual_23", CatalogKind::Dual23},
}};

const char* catalog_spec_name(CatalogKind kind) {
  for (const auto& [name, k] : kCatalogNames) {
    if (k == kind) return name;
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view src, const SpecEnvironment& env) : src_(src), env_(env) {}

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= src_.size();
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' but the input ended");
      fail(std::string("expected '") + c + "' but found '" + src_[pos_] + "'");
    }
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(src_[start]))) {
      pos_ = start;
      fail("expected a name");
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  double number() {
    skip();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                                 src_[end] == '.' || src_[end] == '+' || src_[end] == '-')) {
      ++end;
    }
    const std::string token(src_.substr(start, end - start));
    if (token == "inf" || token == "+inf") {
      pos_ = end;
      return INFINITY;
    }
    if (token == "-inf") {
      pos_ = end;
      return -INFINITY;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty() ||
        !std::isfinite(value)) {
      fail("expected a number");
    }
    pos_ = end;
    return value;
  }

  YoungFunction function() {
    skip();
    const std::size_t start = pos_;
    const std::string name = ident();
    if (name == "catalog") return catalog();
    if (name == "splice") return splice();
    if (name == "scaled") {
      expect('(');
      const YoungFunction base = function();
      expect(',');
      const double divisor = number();
      expect(')');
      if (!(divisor > 0.0)) fail("scaled divisor must be positive", start);
      return YoungFunction::from_form(FunctionForm{Scaled{base, divisor}});
    }
    if (name == "normalized") {
      expect('(');
      const YoungFunction base = function();
      expect(')');
      return YoungFunction::normalized(base);
    }
    if (name == "sum") {
      expect('(');
      const double w1 = number();
      expect(',');
      const YoungFunction a = function();
      expect(',');
      const double w2 = number();
      expect(',');
      const YoungFunction b = function();
      expect(')');
      return YoungFunction::weighted_sum(a, w1, b, w2);
    }
    if (name == "max") {
      expect('(');
      const YoungFunction a = function();
      expect(',');
      const YoungFunction b = function();
      expect(')');
      return YoungFunction::pointwise_max(a, b);
    }
    const auto hit = env_.find(name);
    if (hit != env_.end()) return hit->second;
    fail("unknown function '" + name + "'", start);
  }

  Integrand integrand() {
    skip();
    const std::size_t start = pos_;
    const std::string name = ident();
    if (name == "zero") return Integrand::zero(1);
    if (name == "zero2") return Integrand::zero(2);
    if (name == "cauchy_power" || name == "gauss_quad") {
      expect('(');
      const double v = number();
      expect(')');
      return name == "cauchy_power" ? Integrand::cauchy_power(v) : Integrand::gauss_quad(v);
    }
    if (name == "indicator" || name == "indicator2") {
      expect('(');
      const double m = number();
      expect(',');
      const double h = number();
      double o = 0.0;
      if (accept(',')) o = number();
      expect(')');
      return Integrand::indicator(m, h, name == "indicator" ? 1 : 2, o);
    }
    if (name == "separable") {
      expect('(');
      const Integrand g = integrand();
      expect(',');
      const Integrand h = integrand();
      expect(')');
      return Integrand::separable(g, h);
    }
    if (name == "sum") {
      expect('(');
      std::vector<std::pair<double, Integrand>> terms;
      do {
        const double w = number();
        expect(',');
        terms.emplace_back(w, integrand());
      } while (accept(','));
      expect(')');
      return Integrand::finite_sum(std::move(terms));
    }
    if (name == "witness") {
      expect('(');
      const double a = number();
      expect(',');
      const double b = number();
      expect(')');
      return two_moment_witness(a, b);
    }
    fail("unknown integrand '" + name + "'", start);
  }

  SpecEnvironment file() {
    SpecEnvironment env;
    while (!at_end()) {
      const std::size_t start = pos_;
      const std::string name = ident();
      if (env.count(name)) fail("'" + name + "' is defined twice", start);
      expect('=');
      Parser inner(src_, env);
      inner.pos_ = pos_;
      YoungFunction phi = inner.function();
      pos_ = inner.pos_;
      env.emplace(name, std::move(phi));
    }
    return env;
  }

 private:
  YoungFunction catalog() {
    expect('(');
    skip();
    const std::size_t at = pos_;
    const std::string name = ident();
    std::vector<double> params;
    while (accept(',')) params.push_back(number());
    expect(')');
    for (const auto& [n, kind] : kCatalogNames) {
      if (name == n) return YoungFunction::catalog(kind, params);
    }
    fail("unknown catalog entry '" + name + "'", at);
  }

  YoungFunction splice() {
    expect('(');
    std::vector<Segment> segments;
    std::vector<std::size_t> starts;
    do {
      skip();
      starts.push_back(pos_);
      segments.push_back(segment());
    } while (accept(','));
    expect(')');

    for (std::size_t i = 0; i < segments.size(); ++i) {
      const Segment& s = segments[i];
      if (!(s.lo < s.hi)) fail("segment interval must have lo < hi", starts[i]);
      if (i == 0 && s.lo != 0.0) fail("the first segment must start at 0", starts[i]);
      if (i > 0 && s.lo != segments[i - 1].hi) {
        fail("segment must start where the previous one ends (" +
                 format_number(segments[i - 1].hi) + ")",
             starts[i]);
      }
    }
    if (segments.back().hi != INFINITY) fail("the last segment must end at inf", starts.back());
    return make_splice(std::move(segments));
  }

  Segment segment() {
    expect('[');
    expect('(');
    const double lo = number();
    expect(',');
    const double hi = number();
    expect(')');
    expect(':');
    skip();
    const std::size_t at = pos_;
    const std::string kind = ident();
    Segment s{lo, hi, PowerPiece{1.0, 1.0, 0.0}};
    expect('(');
    if (kind == "power") {
      const double a = number();
      expect(',');
      const double r = number();
      expect(',');
      const double d = number();
      s.piece = PowerPiece{a, r, d};
    } else if (kind == "base") {
      const YoungFunction base = function();
      expect(',');
      const double c = number();
      expect(',');
      const double d = number();
      s.piece = BasePiece{base, c, d};
    } else {
      fail("unknown piece '" + kind + "' (expected power or base)", at);
    }
    expect(')');
    expect(']');
    return s;
  }

  std::string_view src_;
  const SpecEnvironment& env_;
  std::size_t pos_ = 0;
};

void require_axioms(const YoungFunction& phi) {
  const ValidationReport report = validate(phi);
  std::ostringstream os;
  bool bad = false;
  for (const auto& v : report.violations) {
    if (v.kind == AxiomViolation::Kind::KnotDerivative) continue;
    os << (bad ? "; " : "") << to_string(v.kind) << " at t = " << v.t << ": " << v.detail;
    bad = true;
  }
  if (bad) throw DomainError("not a Young function: " + os.str());
}

void render_into(std::ostringstream& os, const YoungFunction& phi);

void render_segment(std::ostringstream& os, const Segment& s) {
  os << "[(" << format_number(s.lo) << ", " << format_number(s.hi) << "): ";
  if (const auto* p = std::get_if<PowerPiece>(&s.piece)) {
    os << "power(" << format_number(p->coef) << ", " << format_number(p->exponent) << ", "
       << format_number(p->offset) << ")";
  } else {
    const auto& b = std::get<BasePiece>(s.piece);
    os << "base(";
    render_into(os, b.base);
    os << ", " << format_number(b.coef) << ", " << format_number(b.offset) << ")";
  }
  os << "]";
}

void render_into(std::ostringstream& os, const YoungFunction& phi) {
  const auto& alt = phi.form().alternatives;
  if (const auto* c = std::get_if<CatalogForm>(&alt)) {
    os << "catalog(" << catalog_spec_name(c->kind);
    for (double p : c->params) os << ", " << format_number(p);
    os << ")";
  } else if (const auto* s = std::get_if<PiecewiseSplice>(&alt)) {
    os << "splice(";
    for (std::size_t i = 0; i < s->segments.size(); ++i) {
      if (i) os << ", ";
      render_segment(os, s->segments[i]);
    }
    os << ")";
  } else if (const auto* sc = std::get_if<Scaled>(&alt)) {
    os << "scaled(";
    render_into(os, sc->base);
    os << ", " << format_number(sc->divisor) << ")";
  } else {
    const auto& m = std::get<Combination>(alt);
    if (m.mode == CombineMode::WeightedSum) {
      os << "sum(" << format_number(m.w1) << ", ";
      render_into(os, m.first);
      os << ", " << format_number(m.w2) << ", ";
      render_into(os, m.second);
      os << ")";
    } else {
      os << "max(";
      render_into(os, m.first);
      os << ", ";
      render_into(os, m.second);
      os << ")";
    }
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

YoungFunction parse_function(std::string_view text, const SpecEnvironment& env) {
  Parser p(text, env);
  YoungFunction phi = p.function();
  if (!p.at_end()) p.fail("unexpected trailing input");
  require_axioms(phi);
  return phi;
}

SpecEnvironment parse_function_file(std::string_view text) {
  const SpecEnvironment none;
  Parser p(text, none);
  SpecEnvironment env = p.file();
  for (const auto& [name, phi] : env) require_axioms(phi);
  return env;
}

Integrand parse_integrand(std::string_view text) {
  const SpecEnvironment none;
  Parser p(text, none);
  Integrand f = p.integrand();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return f;
}

std::string render(const YoungFunction& phi) {
  std::ostringstream os;
  render_into(os, phi);
  return os.str();
}

std::string render(const Integrand& f) {
  const auto& p = f.params();
  switch (f.kind()) {
    case IntegrandKind::Zero:
      return f.dim() == 1 ? "zero" : "zero2";
    case IntegrandKind::CauchyPower:
      return "cauchy_power(" + format_number(p[0]) + ")";
    case IntegrandKind::GaussQuad:
      return "gauss_quad(" + format_number(p[0]) + ")";
    case IntegrandKind::Indicator:
      return std::string(f.dim() == 1 ? "indicator(" : "indicator2(") + format_number(p[0]) +
             ", " + format_number(p[1]) + ", " + format_number(p[2]) + ")";
    case IntegrandKind::Separable:
      return "separable(" + render(f.terms()[0].second) + ", " + render(f.terms()[1].second) +
             ")";
    case IntegrandKind::FiniteSum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ", ";
        out += format_number(f.terms()[i].first) + ", " + render(f.terms()[i].second);
      }
      return out + ")";
    }
  }
  return "";
}

}  // namespace orlicz
