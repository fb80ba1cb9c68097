#include <cmath>
#include <random>

#include "doctest.h"
#include "orlicz/constructors.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/exponents.hpp"

using namespace orlicz;

namespace {

std::size_t knot_mismatches(const YoungFunction& phi) {
  const auto r = validate(phi);
  return r.count(AxiomViolation::Kind::KnotValue) + r.count(AxiomViolation::Kind::KnotDerivative);
}

// Grid sup of max(a/b, b/a), computed in log space.
double two_sided_ratio(const YoungFunction& a, const YoungFunction& b) {
  double worst = 0.0;
  for (double t : GridSpec{}.points()) {
    const double s = std::log(t);
    worst = std::max(worst, std::abs(a.log_value(s) - b.log_value(s)));
  }
  return std::exp(worst);
}

}  // namespace

TEST_CASE("example splices") {
  const auto splices = make_example_splices();
  REQUIRE(splices.size() == 2);
  for (const auto& s : splices) CHECK(validate(s).valid());
  const auto e3 = lebesgue_exponents(splices[0]);
  CHECK(e3.q == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(e3.p == doctest::Approx(2.0).epsilon(1e-9));
  const auto e4 = lebesgue_exponents(splices[1]);
  CHECK(e4.q == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(e4.p == doctest::Approx(48.0 / 17.0).epsilon(1e-9));
}

TEST_CASE("equivalent power family") {
  auto c = make_equivalent_power_family(2, 4, 2, 100);
  CHECK(knot_mismatches(c.phi) == 0);
  auto e = lebesgue_exponents(c.phi);
  CHECK(std::abs(e.q - 2.0) < 1e-6);
  CHECK(e.p > 3.9);
  CHECK(e.p < 4.0);
  CHECK(std::isfinite(two_sided_ratio(c.phi, YoungFunction::power(2))));

  c = make_equivalent_power_family(4, 2, 2, 100);
  e = lebesgue_exponents(c.phi);
  CHECK(std::abs(e.p - 4.0) < 1e-6);
  CHECK(e.q > 2.0);
  CHECK(e.q < 2.1);

  // The displayed piecewise ratio on (a, b].
  const double k1 = c.params.get("k1");
  for (double t : {3.0, 10.0, 80.0}) {
    CHECK(g_ratio(c.phi, t) == doctest::Approx(2.0 / (1.0 + k1 * std::pow(t, -2.0))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(make_equivalent_power_family(2, 2, 2, 100), Infeasible);
  CHECK_THROWS_AS(make_equivalent_power_family(2, 4, 100, 2), Infeasible);
}

TEST_CASE("target exponents") {
  const auto c = construct_target_exponents(1.5, 2, 3, 1.2, 4);
  const auto e = lebesgue_exponents(c.phi);
  CHECK(std::abs(e.q - 1.5) < 1e-6);
  CHECK(std::abs(e.p - 3.0) < 1e-6);
  CHECK(knot_mismatches(c.phi) == 0);
  CHECK(c.params.get("k") < 0.0);
  CHECK(c.params.get("l_alpha") > 0.0);
  CHECK(c.params.get("c2") ==
        doctest::Approx(std::pow(c.params.get("gamma"), 1.2 - 4.0)).epsilon(1e-15));

  // Piecewise ratio against the displayed closed forms.
  const double gamma = c.params.get("gamma");
  const double delta = c.params.get("delta");
  const double k = c.params.get("k");
  const double l = c.params.get("l_alpha");
  const double m = c.params.get("m_alpha_beta");
  const double t1 = 0.5 * (1.0 + gamma);
  const double t2 = 0.5 * (gamma + delta);
  const double t3 = 2.0 * delta;
  CHECK(g_ratio(c.phi, t1) == doctest::Approx(1.2 / (1.0 + k * std::pow(t1, -1.2))).epsilon(1e-12));
  CHECK(g_ratio(c.phi, t2) == doctest::Approx(4.0 / (1.0 + l * std::pow(t2, -4.0))).epsilon(1e-12));
  CHECK(g_ratio(c.phi, t3) == doctest::Approx(2.0 / (1.0 + m * std::pow(t3, -2.0))).epsilon(1e-12));

  CHECK_THROWS_AS(construct_target_exponents(2, 2, 2, 1.2, 4), Infeasible);
  CHECK_THROWS_AS(construct_target_exponents(1.5, 2, 3, 1.6, 4), Infeasible);
}

TEST_CASE("property: random feasible target tuples are hit") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 20; ++i) {
    const double p1 = 1.2 + 1.5 * u(rng);
    const double p = p1 + 0.1 + 1.5 * u(rng);
    const double p2 = p + 0.1 + 1.5 * u(rng);
    const double r1 = 1.0 + (p1 - 1.0) * u(rng);
    const double r2 = p2 + 0.2 + 2.0 * u(rng);
    CAPTURE(p1);
    CAPTURE(p);
    CAPTURE(p2);
    CAPTURE(r1);
    CAPTURE(r2);
    const auto c = construct_target_exponents(p1, p, p2, r1, r2);
    const auto e = lebesgue_exponents(c.phi);
    CHECK(std::abs(e.q - p1) < 1e-5);
    CHECK(std::abs(e.p - p2) < 1e-5);
    CHECK(knot_mismatches(c.phi) == 0);
  }
}

TEST_CASE("widened splice") {
  const auto base = YoungFunction::power_log_shift();
  const auto c = construct_widened(base, 1.5, 3, 1.2, 4);
  const auto e = lebesgue_exponents(c.phi);
  CHECK(e.q < 1.5);
  CHECK(e.p > 3.0);
  CHECK(validate(c.phi).valid());
  CHECK(std::isfinite(two_sided_ratio(c.phi, base)));
  CHECK(c.params.get("k") < 0.0);
  CHECK(c.params.get("l_alpha") > 0.0);
  CHECK_THROWS_AS(construct_widened(base, 2.5, 3, 1.2, 4), Infeasible);
  CHECK_THROWS_AS(construct_widened(YoungFunction::power_exp(1), 0.5, 3, 1.2, 4), Infeasible);
}

TEST_CASE("epsilon-tight splice") {
  const auto base = YoungFunction::power_sum(2, 3);
  const auto c = construct_epsilon_tight(base, 2.5, 1e3);
  const auto e = lebesgue_exponents(c.phi);
  CHECK(e.q > 1.99);
  CHECK(e.q <= 2.0 + 1e-9);
  CHECK(e.p >= 3.0 - 1e-9);
  CHECK(e.p < 3.01);
  CHECK(knot_mismatches(c.phi) == 0);
  const double n = 1e3;
  const double g_lo = g_ratio(base, 1.0 / n);
  CHECK(c.params.get("k_n") ==
        doctest::Approx(std::pow(n, -2.5) * (2.5 / g_lo - 1.0)).epsilon(1e-12));
  CHECK(c.params.get("a") == doctest::Approx(std::pow(n, 1.5)));
  CHECK(c.params.get("c") == doctest::Approx(std::pow(n, 3.0)));

  const auto pure = construct_epsilon_tight(YoungFunction::power(3), 3.0, 50);
  const auto ep = lebesgue_exponents(pure.phi);
  CHECK(ep.q == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(ep.p == doctest::Approx(3.0).epsilon(1e-9));

  CHECK_THROWS_AS(construct_epsilon_tight(YoungFunction::power_exp(1), std::nullopt, 10),
                  LimitsRequired);
  CHECK_THROWS_AS(construct_epsilon_tight(base, 3.5, 10), Infeasible);
}

TEST_CASE("property: epsilon gap does not grow when n doubles") {
  for (const auto& base : {YoungFunction::power_sum(2, 3), example_item4()}) {
    CAPTURE(base.label());
    double previous = std::numeric_limits<double>::infinity();
    for (double n : {10.0, 20.0, 40.0, 80.0}) {
      const auto c = construct_epsilon_tight(base, std::nullopt, n);
      const double eps = epsilon_gap(base, c.phi);
      CHECK(eps <= previous + 1e-9);
      previous = eps;
    }
  }
}
