#include "orlicz/gallery.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "orlicz/analysis.hpp"
#include "orlicz/constructors.hpp"
#include "orlicz/exponents.hpp"
#include "orlicz/mixed.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/spec_format.hpp"

namespace orlicz {
namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  explicit Recorder(std::vector<GalleryCheck>& out) : out_(out) {}

  void value(const std::string& name, double expected, double actual, double tol) {
    const bool pass = std::isfinite(actual) ? std::abs(actual - expected) <= tol
                                            : actual == expected;
    out_.push_back({name, expected, actual, tol, pass});
  }
  void less(const std::string& name, double bound, double actual) {
    out_.push_back({name, bound, actual, 0.0, actual < bound});
  }
  void greater(const std::string& name, double bound, double actual) {
    out_.push_back({name, bound, actual, 0.0, actual > bound});
  }
  void flag(const std::string& name, bool ok) {
    out_.push_back({name, 1.0, ok ? 1.0 : 0.0, 0.0, ok});
  }
  void count(const std::string& name, std::size_t violations) {
    out_.push_back({name, 0.0, static_cast<double>(violations), 0.0, violations == 0});
  }

 private:
  std::vector<GalleryCheck>& out_;
};

std::vector<YoungFunction> finite_p_catalog() {
  return {YoungFunction::power(1),         YoungFunction::power(2),
          YoungFunction::power(3.7),       YoungFunction::power_sum(2, 3),
          YoungFunction::power_log(1, 1),  YoungFunction::power_log(2, 1),
          YoungFunction::power_log(2, 2),  YoungFunction::power_log_shift(),
          YoungFunction::dual_23(),        example_item3(),
          example_item4()};
}

void exponent_regression(Recorder& rec, std::mt19937_64&) {
  for (double p : {1.0, 2.0, 3.7}) {
    const auto e = lebesgue_exponents(YoungFunction::power(p));
    rec.value("power(" + format_number(p) + ").q", p, e.q, 1e-6);
    rec.value("power(" + format_number(p) + ").p", p, e.p, 1e-6);
  }
  auto e = lebesgue_exponents(example_item3());
  rec.value("item3.q", 4.0 / 3.0, e.q, 1e-6);
  rec.value("item3.p", 2.0, e.p, 1e-6);
  e = lebesgue_exponents(example_item4());
  rec.value("item4.q", 2.0, e.q, 1e-6);
  rec.value("item4.p", 48.0 / 17.0, e.p, 1e-6);
  for (auto [n, m] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {2.0, 2.0}}) {
    e = lebesgue_exponents(YoungFunction::power_log(n, m));
    const std::string name = "power_log(" + format_number(n) + "," + format_number(m) + ")";
    rec.value(name + ".q", n, e.q, 1e-6);
    rec.value(name + ".p", n + m, e.p, 1e-6);
  }
  e = lebesgue_exponents(YoungFunction::power_exp(1));
  rec.value("power_exp(1).q", 1.0, e.q, 1e-6);
  rec.flag("power_exp(1).p_infinite", e.p_infinite());
}

std::size_t knot_mismatches(const YoungFunction& phi) {
  const auto v = validate(phi);
  return v.count(AxiomViolation::Kind::KnotValue) + v.count(AxiomViolation::Kind::KnotDerivative);
}

void constructor_targeting(Recorder& rec, std::mt19937_64& rng) {
  auto hit = [&](const std::string& name, double p1, double p, double p2, double r1, double r2) {
    const auto c = construct_target_exponents(p1, p, p2, r1, r2);
    const auto e = lebesgue_exponents(c.phi);
    rec.value(name + ".q", p1, e.q, 1e-5);
    rec.value(name + ".p", p2, e.p, 1e-5);
    const auto v = validate(c.phi);
    rec.count(name + ".axiom_violations", v.violations.size());
    rec.count(name + ".knot_mismatches", knot_mismatches(c.phi));
  };
  hit("target(1.5,2,3,1.2,4)", 1.5, 2, 3, 1.2, 4);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 20; ++i) {
    const double p1 = 1.2 + 1.5 * u(rng);
    const double p = p1 + 0.1 + 1.5 * u(rng);
    const double p2 = p + 0.1 + 1.5 * u(rng);
    const double r1 = 1.0 + (p1 - 1.0) * u(rng);
    const double r2 = p2 + 0.2 + 2.0 * u(rng);
    hit("random_tuple_" + std::to_string(i), p1, p, p2, r1, r2);
  }
}

void widening(Recorder& rec, std::mt19937_64&) {
  const auto base = YoungFunction::power_log_shift();
  const auto w = construct_widened(base, 1.5, 3, 1.2, 4);
  const auto e = lebesgue_exponents(w.phi);
  rec.less("widened.q", 1.5, e.q);
  rec.greater("widened.p", 3.0, e.p);
  rec.flag("widened.equivalent_to_base",
           equivalence_scan(w.phi, base).bounded == ScanVerdict::Finite);
  rec.count("widened.knot_mismatches", knot_mismatches(w.phi));
}

void epsilon_tightening(Recorder& rec, std::mt19937_64&) {
  const auto base = YoungFunction::power_sum(2, 3);
  double previous = INFINITY;
  bool monotone = true;
  double last = 0.0;
  for (double n : {1e2, 1e3, 1e4}) {
    const auto c = construct_epsilon_tight(base, 2.5, n);
    const double eps = epsilon_gap(base, c.phi);
    rec.value("epsilon(" + format_number(n) + ")", 0.0, eps, 0.02);
    monotone = monotone && eps <= previous + 1e-9;
    previous = eps;
    last = eps;
  }
  rec.flag("epsilon_non_increasing", monotone);
  rec.less("epsilon(1e4)", 0.02, last);
}

void norm_values(Recorder& rec, std::mt19937_64&) {
  const double closed = power_sum_norm_closed_form(kPi / 2, 1.0, 2, 3);
  rec.value("cardano_closed_form", 1.49603, closed, 1e-4);
  const auto phi = YoungFunction::power_sum(2, 3);
  const auto f = two_moment_witness(kPi / 2, 1.0);
  const auto n = luxemburg_norm(f, phi);
  rec.value("luxemburg_vs_closed_form", closed, n.norm, 1e-8);
  const auto v = trichotomy_check(f, phi);
  rec.value("trichotomy_case", 1.0, static_cast<double>(v.which), 0.0);
  rec.value("modular", 1.0 + kPi / 2, v.modular, 1e-9);
  rec.flag("trichotomy_bounds", v.ok());
}

void gaussian_family(Recorder& rec, std::mt19937_64&) {
  for (int n = 2; n <= 10; ++n) {
    const auto f = Integrand::gauss_quad(n);
    const auto closed = gaussian_family_values(n);
    const double sum = lebesgue_moment(f, 1.0) + std::sqrt(lebesgue_moment(f, 2.0));
    rec.value("f_" + std::to_string(n) + ".L1+L2", kPi + std::sqrt(kPi / 2), sum, 1e-4);
    rec.value("f_" + std::to_string(n) + ".L21", closed.l21_norm, mixed_lebesgue_norm(f, 2, 1),
              1e-4);
  }
}

void counterexample_trend(Recorder& rec, std::mt19937_64&) {
  const auto a = counterexample_partial_sums(100);
  const auto b = counterexample_partial_sums(10000);
  rec.less("phi_bound_growth_1e2_to_1e4", 0.03, b.phi_norm_bound / a.phi_norm_bound - 1.0);
  const double target = gaussian_l21_constant() * std::log(100.0);
  rec.value("l21_growth_1e2_to_1e4", target, b.l21_partial - a.l21_partial, 0.01 * target);
}

void property_suites(Recorder& rec, std::mt19937_64& rng) {
  // (a) scaling inequalities
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> big(0.0, std::log(1e3));
  std::uniform_real_distribution<double> log_t(std::log(1e-6), std::log(1e6));
  std::size_t scaling = 0;
  std::size_t normalized = 0;
  for (const auto& phi : finite_p_catalog()) {
    const auto e = lebesgue_exponents(phi);
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 1000; ++i) samples.emplace_back(unit(rng), std::exp(log_t(rng)));
    for (int i = 0; i < 1000; ++i) samples.emplace_back(std::exp(big(rng)), std::exp(log_t(rng)));
    scaling += scaling_inequality_check(phi, samples, e).size();
    normalized += normalized_bounds_check(phi).size();
  }
  rec.count("a.scaling_inequalities", scaling);
  rec.count("b.normalized_bounds", normalized);

  // (c) trichotomy and power bounds on 20 witness/Phi pairs
  const std::vector<YoungFunction> phis{YoungFunction::power_sum(2, 3),
                                        YoungFunction::power_log(2, 1), example_item3(),
                                        YoungFunction::dual_23()};
  std::uniform_real_distribution<double> meas(0.05, 6.0);
  std::size_t tri = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& phi = phis[i % phis.size()];
    Integrand f = Integrand::indicator(meas(rng), meas(rng));
    if (i % 5 == 4) f = Integrand::cauchy_power(0.5 + meas(rng)).scaled(meas(rng));
    if (!trichotomy_check(f, phi).ok()) ++tri;
  }
  rec.count("c.trichotomy", tri);

  // (d) G_f / H_f equivalences
  const auto t_t2 = YoungFunction::power_sum(1, 2);
  const std::vector<std::pair<Integrand, YoungFunction>> cases{
      {Integrand::gauss_quad(3), t_t2},
      {Integrand::gauss_quad(5), YoungFunction::power(2)},
      {Integrand::gauss_quad(2), YoungFunction::power_log(2, 1)},
      {Integrand::separable(Integrand::cauchy_power(1), Integrand::indicator(1, 1)), t_t2},
      {Integrand::separable(Integrand::cauchy_power(0.25), Integrand::indicator(1, 1)),
       YoungFunction::power_sum(2, 3)},
      {counterexample_truncation(5), t_t2},
  };
  MixedOptions opts;
  opts.profile_grid = {0.1, 10, 3};
  std::size_t gh = 0;
  for (const auto& [f, phi] : cases) {
    if (!profiles_G_H(f, phi, opts).equivalences_hold()) ++gh;
  }
  rec.count("d.GH_equivalences", gh);

  // (e) modular bound under the submultiplicativity constant
  const auto ps = YoungFunction::power_sum(2, 3);
  const auto scan = multiplicativity_scan(ps);
  std::vector<Integrand> witnesses{two_moment_witness(kPi / 2, 1.0)};
  for (int i = 0; i < 6; ++i) witnesses.push_back(Integrand::indicator(meas(rng), meas(rng)));
  witnesses.push_back(Integrand::cauchy_power(1.0));
  rec.flag("e.sub_constant_exists", scan.sub_c.has_value());
  rec.count("e.modular_bound",
            modular_norm_multiplicativity_check(ps, scan.sub_c.value_or(1.0), Direction::Sub,
                                                witnesses)
                .size());

  // (f) r-limits against g-limits
  std::size_t mismatched = 0;
  for (const auto& phi : finite_p_catalog()) {
    const auto g = limit_exponents_g(phi);
    const auto r = limit_exponents_r(phi);
    if (g.at_zero && std::abs(*g.at_zero - r.r0) > 1e-3) ++mismatched;
    if (g.at_infinity && std::abs(*g.at_infinity - r.r_inf) > 1e-3) ++mismatched;
  }
  rec.count("f.r_vs_g_limits", mismatched);
}

void equivalence_verdicts(Recorder& rec, std::mt19937_64&) {
  const auto t2 = YoungFunction::power(2);
  auto finite = [](const YoungFunction& a, const YoungFunction& b) {
    return equivalence_scan(a, b).bounded == ScanVerdict::Finite;
  };
  rec.flag("item3~t^2", finite(example_item3(), t2));
  rec.flag("item4~t^2", finite(example_item4(), t2));
  rec.flag("target~t^2", finite(construct_target_exponents(1.5, 2, 3, 1.2, 4).phi, t2));
  const auto base = YoungFunction::power_log_shift();
  rec.flag("widened~base", finite(construct_widened(base, 1.5, 3, 1.2, 4).phi, base));
  const auto ps = YoungFunction::power_sum(2, 3);
  rec.flag("eps_tight~base", finite(construct_epsilon_tight(ps, 2.5, 1e3).phi, ps));
  rec.flag("power_log(2,1)!~power_sum(2,3)", !finite(YoungFunction::power_log(2, 1), ps));
  rec.flag("flat_origin!~exp_minus_one",
           !finite(YoungFunction::flat_origin(), YoungFunction::exp_minus_one()));
  const auto f = Integrand::cauchy_power(0.25);
  const auto under_log = modular_scaled(f, YoungFunction::power_log(2, 1), 1.0);
  rec.flag("cauchy(1/4).modular_finite_under_t2log", !under_log.divergent);
  const auto under_sum = modular_scaled(f, ps, 1.0);
  rec.flag("cauchy(1/4).divergent_under_t2+t3", under_sum.divergent);
}

void pure_power_detection(Recorder& rec, std::mt19937_64&) {
  struct Entry {
    YoungFunction phi;
    std::optional<double> p;
  };
  const std::vector<Entry> entries{
      {YoungFunction::power(1), 1.0},          {YoungFunction::power(2), 2.0},
      {YoungFunction::power(3.7), 3.7},        {YoungFunction::power_sum(2, 3), {}},
      {YoungFunction::power_log(1, 1), {}},    {YoungFunction::power_log(2, 1), {}},
      {YoungFunction::power_log(2, 2), {}},    {YoungFunction::power_exp(1), {}},
      {YoungFunction::power_log_shift(), {}},  {YoungFunction::exp_minus_one(), {}},
      {YoungFunction::flat_origin(), {}},      {YoungFunction::dual_23(), {}},
      {example_item3(), {}},                   {example_item4(), {}},
  };
  for (const auto& [phi, p] : entries) {
    const auto r = multiplicativity_scan(phi);
    rec.flag(phi.label() + ".pure_power_verdict", r.is_pure_power == p.has_value());
    if (p) rec.value(phi.label() + ".detected_p", *p, r.detected_p.value_or(NAN), 1e-9);
  }
}

struct Definition {
  const char* title;
  double budget;
  std::function<void(Recorder&, std::mt19937_64&)> run;
};

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs{
      {"exponent regression", 5.0, exponent_regression},
      {"constructor targeting", 30.0, constructor_targeting},
      {"widening", 10.0, widening},
      {"epsilon tightening", 10.0, epsilon_tightening},
      {"norm values", 2.0, norm_values},
      {"gaussian family", 60.0, gaussian_family},
      {"counterexample trend", 1.0, counterexample_trend},
      {"inequality property suites", 120.0, property_suites},
      {"equivalence verdicts", 10.0, equivalence_verdicts},
      {"pure-power detection", 10.0, pure_power_detection},
  };
  return defs;
}

}  // namespace

double GalleryCheck::abs_err() const {
  if (actual == expected) return 0.0;
  return std::abs(actual - expected);
}

bool CriterionResult::pass() const {
  if (!error.empty() || checks.empty() || seconds >= budget_seconds) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<int> gallery_ids() {
  std::vector<int> ids;
  for (std::size_t i = 0; i < definitions().size(); ++i) ids.push_back(static_cast<int>(i + 1));
  return ids;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const auto& defs = definitions();
  if (id < 1 || id > static_cast<int>(defs.size())) {
    throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
  const Definition& d = defs[id - 1];
  CriterionResult out;
  out.id = id;
  out.title = d.title;
  out.budget_seconds = d.budget;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(id));
  Recorder rec(out.checks);
  const auto start = std::chrono::steady_clock::now();
  try {
    d.run(rec, rng);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string summary_line(const CriterionResult& r, bool verbose) {
  std::ostringstream os;
  os << r.id << " " << (r.pass() ? "PASS" : "FAIL") << " " << r.title << " (" << std::fixed;
  os.precision(2);
  os << r.seconds << " s of " << r.budget_seconds << " s)";
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
  if (failed) os << " " << failed << "/" << r.checks.size() << " checks failed";
  if (!r.error.empty()) os << " error: " << r.error;
  if (verbose || !r.pass()) {
    os.unsetf(std::ios::fixed);
    os.precision(10);
    for (const auto& c : r.checks) {
      if (c.pass && !verbose) continue;
      os << "\n    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": expected " << c.expected
         << ", actual " << c.actual;
      if (c.tolerance > 0.0) os << " (tol " << c.tolerance << ")";
    }
  }
  return os.str();
}

std::string gallery_csv(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  os << "name,expected,actual,abs_err,verdict\n";
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      std::string name = std::to_string(r.id) + ":" + c.name;
      for (char& ch : name) {
        if (ch == ',') ch = ';';
      }
      os << name << "," << format_number(c.expected) << "," << format_number(c.actual) << ","
         << format_number(c.abs_err()) << "," << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    if (!r.error.empty()) os << r.id << ":error,0,1,1,FAIL\n";
    os << r.id << ":runtime_seconds," << format_number(r.budget_seconds) << ","
       << format_number(r.seconds) << ",0," << (r.seconds < r.budget_seconds ? "PASS" : "FAIL")
       << "\n";
  }
  return os.str();
}

}  // namespace orlicz
