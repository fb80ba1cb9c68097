#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orlicz/analysis.hpp"
#include "orlicz/constructors.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/norms.hpp"

using namespace orlicz;

namespace {

std::vector<YoungFunction> catalog_forms() {
  return {YoungFunction::power(1),          YoungFunction::power(2),
          YoungFunction::power(3.5),        YoungFunction::power_sum(2, 3),
          YoungFunction::power_log(1, 1),   YoungFunction::power_log(2, 1),
          YoungFunction::power_log(2, 2),   YoungFunction::power_exp(1),
          YoungFunction::power_log_shift(), YoungFunction::exp_minus_one(),
          YoungFunction::flat_origin(),     YoungFunction::dual_23(),
          example_item3(),                  example_item4()};
}

}  // namespace

TEST_CASE("equivalence verdicts") {
  const auto t2 = YoungFunction::power(2);
  CHECK(equivalence_scan(example_item3(), t2).bounded == ScanVerdict::Finite);
  CHECK(equivalence_scan(example_item4(), t2).bounded == ScanVerdict::Finite);
  CHECK(equivalence_scan(YoungFunction::power_log(2, 1), YoungFunction::power_sum(2, 3)).bounded !=
        ScanVerdict::Finite);
  CHECK(equivalence_scan(YoungFunction::flat_origin(), YoungFunction::exp_minus_one()).bounded !=
        ScanVerdict::Finite);
  CHECK(equivalence_scan(t2, YoungFunction::power(3)).bounded == ScanVerdict::DivergingAtBoth);
  CHECK(equivalence_scan(YoungFunction::power_log_shift(), t2).bounded ==
        ScanVerdict::DivergingAtInfinity);

  const auto self = equivalence_scan(example_item4(), example_item4());
  CHECK(self.c_scan == 1.0);
  CHECK(self.bounded == ScanVerdict::Finite);
}

TEST_CASE("equivalence scan is symmetric") {
  const auto forms = catalog_forms();
  for (const auto& a : forms) {
    for (const auto& b : forms) {
      const auto ab = equivalence_scan(a, b);
      const auto ba = equivalence_scan(b, a);
      CHECK(ab.c_scan == ba.c_scan);
      CHECK(ab.bounded == ba.bounded);
      if (ab.bounded == ScanVerdict::Finite) CHECK(ab.c_scan >= 1.0);
    }
  }
}

TEST_CASE("constructor outputs are equivalent to their base") {
  const auto base = YoungFunction::power_log_shift();
  const auto w = construct_widened(base, 1.5, 3, 1.2, 4);
  CHECK(equivalence_scan(w.phi, base).bounded == ScanVerdict::Finite);
  const auto t = construct_target_exponents(1.5, 2, 3, 1.2, 4);
  CHECK(equivalence_scan(t.phi, YoungFunction::power(2)).bounded == ScanVerdict::Finite);
  const auto e = construct_epsilon_tight(YoungFunction::power_sum(2, 3), 2.5, 100);
  CHECK(equivalence_scan(e.phi, YoungFunction::power_sum(2, 3)).bounded == ScanVerdict::Finite);
}

TEST_CASE("derivative equivalence constant") {
  const auto t2 = YoungFunction::power(2);
  const auto same = derivative_equivalence_constant(t2, t2, 1.0);
  CHECK(same.c1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(same.holds);

  const auto item3 = example_item3();
  const auto e = lebesgue_exponents(item3);
  const auto self = derivative_equivalence_constant(item3, item3, 1.0);
  CHECK(self.c1 == doctest::Approx(e.p / e.q).epsilon(1e-12));
  CHECK(self.holds);

  const auto scan = equivalence_scan(item3, t2);
  REQUIRE(scan.c1_derivative.has_value());
  CHECK(derivative_equivalence_constant(item3, t2, scan.c_scan).holds);
  CHECK_FALSE(derivative_equivalence_constant(t2, YoungFunction::power(3), 1.0).holds);
  CHECK_THROWS_AS(derivative_equivalence_constant(t2, YoungFunction::power_exp(1), 1.0),
                  Delta2Required);
}

TEST_CASE("class exponents") {
  auto c = class_exponents(YoungFunction::power_log_shift());
  CHECK(c.p_class == doctest::Approx(2).epsilon(1e-6));
  CHECK(c.q_class == doctest::Approx(2).epsilon(1e-6));
  c = class_exponents(YoungFunction::power_log(2, 1));
  CHECK(c.p_class == doctest::Approx(3).epsilon(1e-6));
  CHECK(c.q_class == doctest::Approx(2).epsilon(1e-6));
  c = class_exponents(YoungFunction::power(2.5));
  CHECK(c.p_class == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(c.q_class == doctest::Approx(2.5).epsilon(1e-9));

  // Invariant under equivalent widenings whose limits exist.
  const auto base = YoungFunction::power_log(2, 1);
  const auto w = construct_widened(base, 1.8, 3.5, 1.2, 4.5).phi;
  const auto cw = class_exponents(w);
  CHECK(std::abs(cw.p_class - 3.0) < 1e-3);
  CHECK(std::abs(cw.q_class - 2.0) < 1e-3);
}

TEST_CASE("r-limits agree on equivalent pairs") {
  const auto t2 = YoungFunction::power(2);
  for (const auto& phi : {example_item3(), example_item4()}) {
    const auto a = limit_exponents_r(phi);
    const auto b = limit_exponents_r(t2);
    CHECK(std::abs(a.r0 - b.r0) < 1e-3);
    CHECK(std::abs(a.r_inf - b.r_inf) < 1e-3);
  }
}

TEST_CASE("multiplicativity scan") {
  for (double p : {1.0, 2.0, 3.5}) {
    const auto r = multiplicativity_scan(YoungFunction::power(p));
    CHECK(r.is_pure_power);
    REQUIRE(r.detected_p.has_value());
    CHECK(std::abs(*r.detected_p - p) < 1e-9);
    REQUIRE(r.sub_c.has_value());
    REQUIRE(r.super_c.has_value());
    CHECK(*r.sub_c == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*r.super_c == doctest::Approx(1.0).epsilon(1e-9));
  }
  const auto ps = multiplicativity_scan(YoungFunction::power_sum(2, 3));
  CHECK_FALSE(ps.is_pure_power);
  REQUIRE(ps.sub_c.has_value());
  CHECK(*ps.sub_c <= 1.0);
  CHECK((!ps.super_c || *ps.super_c < *ps.sub_c));
  CHECK_FALSE(multiplicativity_scan(YoungFunction::power_exp(1)).sub_c.has_value());

  // Pure powers exactly on the catalog.
  for (const auto& phi : catalog_forms()) {
    const auto r = multiplicativity_scan(phi);
    const auto* c = std::get_if<CatalogForm>(&phi.form().alternatives);
    const bool is_power = c && c->kind == CatalogKind::Power;
    CHECK(r.is_pure_power == is_power);
  }
  // A scaled power is still a pure power, with the same p.
  const auto scaled = multiplicativity_scan(YoungFunction::normalized(YoungFunction::power(3)));
  CHECK(scaled.is_pure_power);
}

TEST_CASE("modular bound from submultiplicativity") {
  constexpr double kPi = std::numbers::pi;
  const auto t2 = YoungFunction::power(2);
  const std::vector<Integrand> ws{Integrand::cauchy_power(1), Integrand::indicator(0.3, 2.0),
                                  Integrand::indicator(5.0, 0.1)};
  CHECK(modular_norm_multiplicativity_check(t2, 1.0, Direction::Sub, ws).empty());
  CHECK(modular_norm_multiplicativity_check(t2, 1.0, Direction::Super, ws).empty());

  const auto ps = YoungFunction::power_sum(2, 3);
  const auto sub = multiplicativity_scan(ps).sub_c.value();
  std::vector<Integrand> wit{two_moment_witness(kPi / 2, 1.0)};
  for (double m : {0.2, 1.0, 7.0}) wit.push_back(Integrand::indicator(m, 1.3));
  CHECK(modular_norm_multiplicativity_check(ps, sub, Direction::Sub, wit).empty());
  // rho = 1 + pi/2 against Phi(1.496...) = 5.59
  const auto n = luxemburg_norm(wit[0], ps);
  CHECK(n.modular <= ps(n.norm));
  CHECK(ps(n.norm) == doctest::Approx(5.586).epsilon(1e-3));
}

TEST_CASE("inclusion report") {
  const auto pls = inclusion_report(YoungFunction::power_log_shift());
  REQUIRE(pls.sandwiches.size() == 3);
  CHECK(pls.sandwiches[2].kind == "log");
  CHECK(std::abs(pls.sandwiches[2].p_min - 2.0) < 1e-3);
  CHECK(std::abs(pls.sandwiches[2].q_max - 2.0) < 1e-3);

  const auto pl = inclusion_report(YoungFunction::power_log(2, 1));
  CHECK(std::abs(pl.sandwiches.back().p_min - 3.0) < 1e-3);
  CHECK(std::abs(pl.sandwiches.back().q_max - 2.0) < 1e-3);

  const auto pw = inclusion_report(YoungFunction::power(2.5));
  for (const auto& s : pw.sandwiches) {
    CHECK(s.q_max == doctest::Approx(2.5).epsilon(1e-6));
    CHECK(s.p_min == doctest::Approx(2.5).epsilon(1e-6));
  }
  CHECK(pw.csv().rfind("sandwich,q_min,q_max,p_min,p_max,open\n", 0) == 0);
  CHECK(pw.text().find("baseline") != std::string::npos);
  CHECK_THROWS_AS(inclusion_report(YoungFunction::power_exp(1)), Delta2Required);
  CHECK_THROWS_AS(inclusion_report(YoungFunction::power(1)), DomainError);
}

TEST_CASE("combining equivalent functions") {
  const auto m = combine_equivalent(YoungFunction::power(2), YoungFunction::power(3),
                                    CombineKind::PointwiseMax);
  const auto e = lebesgue_exponents(m);
  CHECK(e.q >= 2.0 - 1e-9);
  CHECK(e.p <= 3.0 + 1e-9);

  const auto phi = YoungFunction::power_log(2, 1);
  const auto tiny = combine_equivalent(phi, YoungFunction::power(2), CombineKind::WeightedSum, 1.0,
                                       1e-30);
  const auto a = lebesgue_exponents(phi);
  const auto b = lebesgue_exponents(tiny);
  CHECK(std::abs(a.q - b.q) < 1e-6);
  CHECK(std::abs(a.p - b.p) < 1e-6);

  const auto mix = combine_equivalent(example_item3(), example_item4(), CombineKind::WeightedSum,
                                      0.5, 2.0);
  CHECK(equivalence_scan(mix, YoungFunction::power(2)).bounded == ScanVerdict::Finite);
  CHECK_THROWS_AS(combine_equivalent(phi, phi, CombineKind::WeightedSum, 0.0, 1.0), DomainError);
}
