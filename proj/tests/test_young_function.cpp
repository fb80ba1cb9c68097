#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "orlicz/constructors.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/young_function.hpp"

using namespace orlicz;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

std::vector<YoungFunction> catalog_forms() {
  return {
      YoungFunction::power(1.0),        YoungFunction::power(2.0),
      YoungFunction::power(3.5),        YoungFunction::power_sum(2, 3),
      YoungFunction::power_sum(1, 2),   YoungFunction::power_log(1, 1),
      YoungFunction::power_log(2, 1),   YoungFunction::power_log(2, 2),
      YoungFunction::power_exp(1),      YoungFunction::power_log_shift(),
      YoungFunction::exp_minus_one(),   YoungFunction::dual_23(),
      example_item3(),                  example_item4(),
  };
}

double central_difference(const YoungFunction& phi, double t) {
  const double h = 1e-6 * t;
  return (phi(t + h) - phi(t - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("catalog values") {
  CHECK(YoungFunction::power(2)(3.0) == doctest::Approx(9.0));
  CHECK(YoungFunction::power_sum(2, 3)(1.0) == doctest::Approx(2.0));
  CHECK(YoungFunction::power_log(2, 1)(1.0) == doctest::Approx(std::log(2.0)));
  CHECK(YoungFunction::power_exp(1)(1.0) == doctest::Approx(std::exp(1.0)));
  CHECK(YoungFunction::power_log_shift()(2.0) == doctest::Approx(4.0 * std::log(4.0)));
  CHECK(YoungFunction::exp_minus_one()(1.0) == doctest::Approx(std::exp(1.0) - 1.0));
  CHECK(YoungFunction::flat_origin()(0.25) == doctest::Approx(std::exp(-4.0)));
  CHECK(YoungFunction::flat_origin()(1.0) == doctest::Approx(3.0 * std::exp(-2.0)));
  CHECK(YoungFunction::dual_23()(4.0) == doctest::Approx(15.0));
  for (const auto& phi : catalog_forms()) CHECK(phi(0.0) == 0.0);
}

TEST_CASE("item3 splice") {
  const auto phi = example_item3();
  CHECK(phi(1.5) == doctest::Approx(1.0));
  CHECK(phi.derivative(1.5) == doctest::Approx(1.0));
  for (double t : {1.1, 1.5, 1.9, 2.0}) {
    CHECK(g_ratio(phi, t) == doctest::Approx(1.0 / (1.0 - 1.0 / (2.0 * t))).epsilon(1e-12));
  }
  CHECK(g_ratio(phi, 0.3) == doctest::Approx(2.0));
  CHECK(g_ratio(phi, 5.0) == doctest::Approx(2.0 / (1.0 + 2.0 / 25.0)).epsilon(1e-12));
}

TEST_CASE("right derivative at knots") {
  const auto dual = YoungFunction::dual_23();
  CHECK(dual.derivative(1.0) == doctest::Approx(3.0));
  CHECK(dual.left_derivative(1.0) == doctest::Approx(2.0));
  const auto item3 = example_item3();
  CHECK(item3.derivative(2.0) == doctest::Approx(1.0));
  CHECK(item3.left_derivative(2.0) == doctest::Approx(1.0));
}

TEST_CASE("derivative agrees with central differences") {
  for (const auto& phi : catalog_forms()) {
    CAPTURE(phi.label());
    CHECK(phi.derivative(2.0) == doctest::Approx(central_difference(phi, 2.0)).epsilon(1e-6));
  }
}

TEST_CASE("property: derivative matches finite differences on the grid away from knots") {
  const auto grid = GridSpec{1e-3, 1e3, 200};
  for (const auto& phi : catalog_forms()) {
    CAPTURE(phi.label());
    const auto knots = phi.kinks();
    for (double t : grid.points()) {
      bool near = false;
      for (double k : knots) near = near || std::abs(t - k) < 1e-3;
      if (near || phi(t) > 1e250) continue;
      CAPTURE(t);
      CHECK(phi.derivative(t) == doctest::Approx(central_difference(phi, t)).epsilon(1e-6));
    }
  }
}

TEST_CASE("inverse") {
  CHECK(YoungFunction::power(2).inverse(9.0) == doctest::Approx(3.0));
  CHECK(YoungFunction::power_sum(2, 3).inverse(2.0) == doctest::Approx(1.0));
  CHECK(YoungFunction::power(2).inverse(0.0) == 0.0);
  CHECK_THROWS_AS(YoungFunction::flat_origin().inverse(0.0), NonInvertible);
  CHECK_THROWS_AS(YoungFunction::power(2).inverse(-1.0), DomainError);
}

TEST_CASE("property: inverse undoes eval on strict forms") {
  const auto grid = GridSpec{1e-6, 1e6, 150};
  for (const auto& phi : catalog_forms()) {
    CAPTURE(phi.label());
    for (double t : grid.points()) {
      const double y = phi(t);
      if (!std::isfinite(y) || y == 0.0 || y > 1e300) continue;
      CAPTURE(t);
      CHECK(phi.inverse(y) == doctest::Approx(t).epsilon(1e-9));
      CHECK(std::abs(phi(phi.inverse(y)) - y) <= 1e-12 * std::max(1.0, y) + 1e-15 * y * 1e3);
    }
  }
}

TEST_CASE("scaled variant divides by Phi(1)") {
  const auto base = YoungFunction::power_log(2, 1);
  const auto psi = YoungFunction::normalized(base);
  for (double t : {1e-3, 0.5, 1.0, 7.0, 1e4}) CHECK(psi(t) == base(t) / base(1.0));
  CHECK(psi(1.0) == 1.0);
}

TEST_CASE("log-space evaluation agrees with direct evaluation") {
  for (const auto& phi : catalog_forms()) {
    CAPTURE(phi.label());
    for (double t : {1e-4, 0.3, 1.0, 1.7, 2.0, 3.0, 50.0}) {
      CAPTURE(t);
      CHECK(phi.log_value(std::log(t)) == doctest::Approx(std::log(phi(t))).epsilon(1e-12));
      CHECK(phi.log_ratio(std::log(t)) == doctest::Approx(g_ratio(phi, t)).epsilon(1e-9));
    }
  }
  // Far beyond the double range of Phi itself.
  CHECK(YoungFunction::power_exp(1).log_ratio(std::log(1e10)) == doctest::Approx(1.0 + 1e10));
  CHECK(YoungFunction::power_log(2, 1).log_value(1e6) ==
        doctest::Approx(2e6 + std::log(1e6)).epsilon(1e-12));
}

TEST_CASE("g diverges like 1/t for the flat-origin form") {
  const auto phi = YoungFunction::flat_origin();
  for (double t : {0.1, 0.05, 0.02}) CHECK(g_ratio(phi, t) == doctest::Approx(1.0 / t));
  CHECK_FALSE(phi.is_strict());
  CHECK_THROWS_AS(g_ratio(phi, 1e-4), DomainError);
}

TEST_CASE("r exponent") {
  CHECK(r_exponent(YoungFunction::power(2.5), 10.0) == doctest::Approx(2.5));
  const auto pl = YoungFunction::power_log(2, 1);
  CHECK(std::abs(r_exponent(pl, 1e-6) - 3.0) < 0.05);
  // Direct oracle: r = 2 + ln(ln(1+t)/ln 2)/ln t, which is still 0.18 above 2 at t = 1e8.
  const auto oracle = [](double t) {
    return 2.0 + std::log(std::log1p(t) / std::log(2.0)) / std::log(t);
  };
  CHECK(r_exponent(pl, 1e8) == doctest::Approx(oracle(1e8)).epsilon(1e-12));
  CHECK(r_exponent(pl, 1e-6) == doctest::Approx(oracle(1e-6)).epsilon(1e-9));
  CHECK(std::abs(pl.log_value(1e4) / 1e4 - 2.0) < 0.002);
  CHECK_THROWS_AS(r_exponent(pl, 1.0), DomainError);
}

TEST_CASE("validate") {
  CHECK(validate(example_item3()).valid());
  CHECK(validate(example_item4()).valid());
  for (const auto& phi : catalog_forms()) {
    CAPTURE(phi.label());
    CHECK(validate(phi).valid());
  }

  const auto broken = make_splice({
      Segment{0.0, 1.0, PowerPiece{0.5, 2.0, 0.0}},
      Segment{1.0, 2.0, PowerPiece{1.0, 1.0, -0.5 + 0.1}},
      Segment{2.0, kInf, PowerPiece{0.25, 2.0, 0.5}},
  });
  const auto report = validate(broken);
  CHECK_FALSE(report.valid());
  CHECK(report.count(AxiomViolation::Kind::KnotValue) >= 1);
  bool at_knot = false;
  for (const auto& v : report.violations) {
    at_knot = at_knot || (v.kind == AxiomViolation::Kind::KnotValue && v.t == 1.0);
  }
  CHECK(at_knot);

  const auto concave = make_splice({
      Segment{0.0, 1.0, PowerPiece{1.0, 2.0, 0.0}},
      Segment{1.0, kInf, PowerPiece{1.0, 1.0, 0.0}},
  });
  CHECK(validate(concave).count(AxiomViolation::Kind::KnotDerivative) == 1);
  CHECK(validate(concave).count(AxiomViolation::Kind::Convexity) > 0);

  CHECK_THROWS_AS(validate(example_item3(), GridSpec{1e-3, 1e3, 50}), DomainError);
}

TEST_CASE("construction rejects invalid parameters") {
  CHECK_THROWS_AS(YoungFunction::power(0.5), DomainError);
  CHECK_THROWS_AS(YoungFunction::power_sum(0.5, 2), DomainError);
  CHECK_THROWS_AS(YoungFunction::catalog(CatalogKind::PowerLog, {2}), DomainError);
  CHECK_THROWS_AS(YoungFunction::power(2)(-1.0), DomainError);
  CHECK_THROWS_AS(YoungFunction::power(2).derivative(0.0), DomainError);
  CHECK_THROWS_AS(make_splice({Segment{0.0, 1.0, PowerPiece{1.0, 2.0, 0.0}}}), DomainError);
  CHECK_THROWS_AS(make_splice({Segment{0.0, 2.0, PowerPiece{1.0, 2.0, 0.0}},
                               Segment{1.0, kInf, PowerPiece{1.0, 2.0, 0.0}}}),
                  DomainError);
}

TEST_CASE("property: Phi(t)/t is non-decreasing") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> log_t(std::log(1e-6), std::log(1e6));
  for (const auto& phi : catalog_forms()) {
    CAPTURE(phi.label());
    for (int i = 0; i < 300; ++i) {
      double a = std::exp(log_t(rng));
      double b = std::exp(log_t(rng));
      if (a > b) std::swap(a, b);
      const double la = phi.log_value(std::log(a)) - std::log(a);
      const double lb = phi.log_value(std::log(b)) - std::log(b);
      CHECK(la <= lb + 1e-12 * std::max(1.0, std::abs(lb)));
    }
  }
}

TEST_CASE("combinations") {
  const auto mx = YoungFunction::pointwise_max(YoungFunction::power(2), YoungFunction::power(3));
  CHECK(mx(0.5) == doctest::Approx(0.25));
  CHECK(mx(2.0) == doctest::Approx(8.0));
  const auto sum = YoungFunction::weighted_sum(YoungFunction::power(2), 1.0,
                                               YoungFunction::power(3), 2.0);
  CHECK(sum(2.0) == doctest::Approx(20.0));
  CHECK(sum.derivative(2.0) == doctest::Approx(4.0 + 24.0));
  CHECK(sum.log_ratio(std::log(2.0)) == doctest::Approx(g_ratio(sum, 2.0)));
  CHECK(validate(mx).valid());
}
