#include <cmath>
#include <random>

#include "doctest.h"
#include "orlicz/constructors.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/exponents.hpp"

using namespace orlicz;

namespace {

// Independent oracle: g for t^2 + t^3 written out by hand.
double g_power_sum_23(double t) { return (2 * t * t + 3 * t * t * t) / (t * t + t * t * t); }

std::vector<YoungFunction> finite_p_forms() {
  return {YoungFunction::power(2),        YoungFunction::power(1.5),
          YoungFunction::power_sum(2, 3), YoungFunction::power_log(1, 1),
          YoungFunction::power_log(2, 1), YoungFunction::power_log(2, 2),
          YoungFunction::power_log_shift(), YoungFunction::dual_23(),
          example_item3(),                example_item4()};
}

}  // namespace

TEST_CASE("lebesgue exponents of the catalog") {
  for (double p : {1.0, 2.0, 3.7}) {
    const auto e = lebesgue_exponents(YoungFunction::power(p));
    CHECK(e.q == doctest::Approx(p).epsilon(1e-12));
    CHECK(e.p == doctest::Approx(p).epsilon(1e-12));
  }
  auto e = lebesgue_exponents(example_item3());
  CHECK(std::abs(e.q - 4.0 / 3.0) < 1e-6);
  CHECK(std::abs(e.p - 2.0) < 1e-6);
  e = lebesgue_exponents(example_item4());
  CHECK(std::abs(e.q - 2.0) < 1e-6);
  CHECK(std::abs(e.p - 48.0 / 17.0) < 1e-6);
  e = lebesgue_exponents(YoungFunction::power_log(2, 1));
  CHECK(std::abs(e.q - 2.0) < 1e-6);
  CHECK(std::abs(e.p - 3.0) < 1e-6);
  e = lebesgue_exponents(YoungFunction::power_exp(1));
  CHECK(std::abs(e.q - 1.0) < 1e-6);
  CHECK(e.p_infinite());
  e = lebesgue_exponents(YoungFunction::dual_23());
  CHECK(std::abs(e.q - 1.5) < 1e-6);
  CHECK(std::abs(e.p - 3.0) < 1e-6);
  CHECK_THROWS_AS(lebesgue_exponents(YoungFunction::flat_origin()), NonStrict);
}

TEST_CASE("property: grid refinement does not move the exponents") {
  const GridSpec grid;
  for (const auto& phi : finite_p_forms()) {
    CAPTURE(phi.label());
    const auto base = lebesgue_exponents(phi, grid);
    for (std::size_t f : {2u, 4u}) {
      const auto fine = lebesgue_exponents(phi, grid.refined(f));
      CHECK(std::abs(fine.q - base.q) < 1e-6);
      CHECK(std::abs(fine.p - base.p) < 1e-6);
    }
    CHECK(base.q >= 1.0);
    CHECK(base.q <= base.p);
  }
}

TEST_CASE("normalized variant keeps its exponents") {
  for (const auto& phi : finite_p_forms()) {
    CAPTURE(phi.label());
    const auto a = lebesgue_exponents(phi);
    const auto b = lebesgue_exponents(YoungFunction::normalized(phi));
    CHECK(std::abs(a.q - b.q) <= 1e-12 * a.q);
    CHECK(std::abs(a.p - b.p) <= 1e-12 * a.p);
  }
}

TEST_CASE("g limits") {
  auto l = limit_exponents_g(YoungFunction::power_sum(2, 3));
  REQUIRE(l.at_zero);
  REQUIRE(l.at_infinity);
  CHECK(*l.at_zero == doctest::Approx(g_power_sum_23(1e-12)).epsilon(1e-9));
  CHECK(*l.at_infinity == doctest::Approx(g_power_sum_23(1e12)).epsilon(1e-9));
  l = limit_exponents_g(YoungFunction::power_log_shift());
  REQUIRE(l.at_zero);
  REQUIRE(l.at_infinity);
  CHECK(*l.at_zero == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(*l.at_infinity == doctest::Approx(2.0).epsilon(1e-6));
  l = limit_exponents_g(YoungFunction::power(2.5));
  CHECK(*l.at_zero == 2.5);
  CHECK(*l.at_infinity == 2.5);
  l = limit_exponents_g(YoungFunction::power_exp(1));
  CHECK(l.at_zero);
  CHECK_FALSE(l.at_infinity);
}

TEST_CASE("r limits") {
  auto r = limit_exponents_r(YoungFunction::power(3));
  CHECK(r.r0 == doctest::Approx(3.0));
  CHECK(r.r_inf == doctest::Approx(3.0));
  r = limit_exponents_r(YoungFunction::power_log(2, 1));
  CHECK(std::abs(r.r0 - 3.0) < 1e-3);
  CHECK(std::abs(r.r_inf - 2.0) < 1e-3);
  REQUIRE(r.k_epsilon);
  // Direct check of the sandwich beyond K.
  const auto phi = YoungFunction::power_log(2, 1);
  for (double t : {*r.k_epsilon * 2.0, *r.k_epsilon * 1e3}) {
    CHECK(std::pow(t, 1.9) < phi(t));
    CHECK(phi(t) < std::pow(t, 2.1));
  }
  r = limit_exponents_r(YoungFunction::power_log_shift());
  CHECK(std::abs(r.r0 - 2.0) < 1e-3);
  CHECK(std::abs(r.r_inf - 2.0) < 1e-3);
  CHECK_THROWS_AS(limit_exponents_r(YoungFunction::power_exp(1)), Delta2Required);
}

TEST_CASE("property: r-limits agree with g-limits when those exist") {
  for (const auto& phi : finite_p_forms()) {
    CAPTURE(phi.label());
    const auto g = limit_exponents_g(phi);
    if (!g.at_zero || !g.at_infinity) continue;
    const auto r = limit_exponents_r(phi);
    CHECK(std::abs(r.r0 - *g.at_zero) < 1e-3);
    CHECK(std::abs(r.r_inf - *g.at_infinity) < 1e-3);
    const auto e = lebesgue_exponents(phi);
    CHECK(r.r0 >= e.q - 1e-9);
    CHECK(r.r_inf <= e.p + 1e-9);
  }
}

TEST_CASE("delta2") {
  for (double p : {1.0, 2.0, 3.0}) {
    const auto d = delta2_check(YoungFunction::power(p));
    CHECK(d.holds);
    CHECK(d.constant == doctest::Approx(std::pow(2.0, p)));
  }
  auto d = delta2_check(YoungFunction::power_exp(1));
  CHECK_FALSE(d.holds);
  CHECK(2.0 * std::exp(d.counterexample) > 1e6);
  d = delta2_check(YoungFunction::flat_origin());
  CHECK_FALSE(d.holds);
  CHECK(d.counterexample < 0.05);
  const auto phi = YoungFunction::flat_origin();
  CHECK(phi(2 * d.counterexample) / phi(d.counterexample) > 1e6);
}

TEST_CASE("property: scaling inequalities hold on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> big(1.0, 10.0);
  std::uniform_real_distribution<double> log_t(std::log(1e-4), std::log(1e4));
  for (const auto& phi : finite_p_forms()) {
    CAPTURE(phi.label());
    const auto e = lebesgue_exponents(phi);
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 200; ++i) samples.emplace_back(unit(rng), std::exp(log_t(rng)));
    for (int i = 0; i < 200; ++i) samples.emplace_back(big(rng), std::exp(log_t(rng)));
    const auto v = scaling_inequality_check(phi, samples, e);
    CHECK(v.empty());
  }
}

TEST_CASE("scaling inequalities are equalities for pure powers") {
  const auto phi = YoungFunction::power(2.5);
  const auto e = lebesgue_exponents(phi);
  for (double c : {0.1, 0.5, 3.0}) {
    CHECK(phi(c * 2.0) == doctest::Approx(std::pow(c, e.q) * phi(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("scaling check reports a deliberately wrong exponent") {
  const auto phi = YoungFunction::power_sum(2, 3);
  LebesgueExponents wrong;
  wrong.q = 2.2;
  wrong.p = 3.0;
  const auto v = scaling_inequality_check(phi, {{0.5, 1e-3}, {2.0, 1e-3}}, wrong);
  CHECK_FALSE(v.empty());
}

TEST_CASE("normalized bounds") {
  for (const auto& phi : finite_p_forms()) {
    CAPTURE(phi.label());
    const auto v = normalized_bounds_check(phi, GridSpec{1e-8, 1e8, 256});
    CHECK(v.empty());
    if (!v.empty()) CAPTURE(v.front().check);
  }
  CHECK_THROWS_AS(normalized_bounds_check(YoungFunction::power_exp(1)), Delta2Required);
}

TEST_CASE("exponent report") {
  const auto rep = exponent_report(YoungFunction::power_log(2, 1));
  CHECK(rep.delta2.holds);
  REQUIRE(rep.r_limits);
  CHECK(rep.lebesgue.q <= rep.r_limits->r_inf + 1e-9);
  CHECK(rep.r_limits->r0 <= rep.lebesgue.p + 1e-9);
  const auto exp_rep = exponent_report(YoungFunction::power_exp(1));
  CHECK_FALSE(exp_rep.delta2.holds);
  CHECK_FALSE(exp_rep.r_limits);
}
