#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orlicz/analysis.hpp"
#include "orlicz/constructors.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/exponents.hpp"
#include "orlicz/gallery.hpp"
#include "orlicz/mixed.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/spec_format.hpp"

using namespace orlicz;

namespace {

struct RunConfig {
  std::string phi;
  std::string psi;
  std::string integrand;
  std::string moments;
  std::string grid;
  std::string csv;
  std::string spec_file;
  double tol = 0.0;
  double lambda = 1.0;
  std::uint64_t seed = 20261018;
  std::vector<int> only;
  bool verbose = false;
  // construct
  std::string kind = "target";
  double p1 = 1.5, p = 2.0, p2 = 3.0, r1 = 1.2, r2 = 4.0;
  std::optional<double> r;
  double n = 1e3;
};

std::string fmt(double x) { return format_number(x); }

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : "none"; }

double parse_number(const std::string& s, int column) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || s.find_first_not_of(" \t", used) != std::string::npos) {
    throw ParseError("expected a number, got '" + s + "'", 1, column);
  }
  return v;
}

GridSpec parse_grid(const std::string& text) {
  if (text.empty()) return GridSpec::standard();
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw ParseError("grid must be lo:hi:n", 1, 1);
  GridSpec g;
  g.lo = parse_number(parts[0], 1);
  g.hi = parse_number(parts[1], static_cast<int>(parts[0].size()) + 2);
  const double n = parse_number(parts[2], static_cast<int>(parts[0].size() + parts[1].size()) + 3);
  if (n < 2 || n != std::floor(n)) throw DomainError("grid needs an integer n >= 2");
  g.n = static_cast<std::size_t>(n);
  g.check();
  return g;
}

std::vector<std::pair<double, double>> parse_moments(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  int column = 1;
  for (std::string item; std::getline(ss, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("moment must be r:value", 1, column);
    out.emplace_back(parse_number(item.substr(0, colon), column),
                     parse_number(item.substr(colon + 1), column + static_cast<int>(colon) + 1));
    column += static_cast<int>(item.size()) + 1;
  }
  if (out.empty()) throw ParseError("no moments given", 1, 1);
  return out;
}

SpecEnvironment load_env(const RunConfig& cfg) {
  if (cfg.spec_file.empty()) return {};
  std::ifstream in(cfg.spec_file);
  if (!in) throw DomainError("cannot read spec file " + cfg.spec_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_function_file(buf.str());
}

YoungFunction require_phi(const std::string& text, const char* flag, const SpecEnvironment& env) {
  if (text.empty()) throw DomainError(std::string("missing ") + flag);
  return parse_function(text, env);
}

void write_csv(const std::string& path, const std::string& body) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << body;
}

std::string curve_csv(const std::vector<std::pair<double, double>>& rows) {
  std::ostringstream os;
  os << "t,value\n";
  for (const auto& [t, v] : rows) os << fmt(t) << "," << fmt(v) << "\n";
  return os.str();
}

std::string phi_curve(const YoungFunction& phi, const GridSpec& grid) {
  std::vector<std::pair<double, double>> rows;
  for (double t : grid.points()) rows.emplace_back(t, phi(t));
  return curve_csv(rows);
}

int cmd_exponents(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto phi = require_phi(cfg.phi, "--phi", env);
  const auto grid = parse_grid(cfg.grid);
  const auto rep = exponent_report(phi, grid);
  std::cout << "phi: " << render(phi) << "\n";
  std::cout << "q=" << fmt(rep.lebesgue.q) << " (at t=" << fmt(rep.lebesgue.t_q) << ")\n";
  std::cout << "p=" << fmt(rep.lebesgue.p) << " (at t=" << fmt(rep.lebesgue.t_p) << ")\n";
  std::cout << "g limits: at 0 " << fmt(rep.g_limits.at_zero) << ", at inf "
            << fmt(rep.g_limits.at_infinity) << "\n";
  if (rep.r_limits) {
    std::cout << "r limits: r0=" << fmt(rep.r_limits->r0) << " r_inf=" << fmt(rep.r_limits->r_inf)
              << " K_eps=" << fmt(rep.r_limits->k_epsilon) << " (eps " << fmt(rep.r_limits->epsilon)
              << ")\n";
  }
  if (rep.delta2.holds) {
    std::cout << "delta2: holds, constant " << fmt(rep.delta2.constant) << "\n";
  } else {
    std::cout << "delta2: fails near t=" << fmt(rep.delta2.counterexample) << "\n";
  }
  std::cout << "grid refinements: " << rep.refinement_depth << "\n";
  std::vector<std::pair<double, double>> rows;
  for (double t : grid.points()) rows.emplace_back(t, g_ratio(phi, t));
  write_csv(cfg.csv, curve_csv(rows));
  return 0;
}

void print_norm(const NormResult& n) {
  if (n.divergent) {
    std::cout << "norm=inf (modular diverges for every lambda)\n";
    return;
  }
  std::cout << "norm=" << fmt(n.norm) << "\n";
  std::cout << "modular=" << fmt(n.modular) << "\n";
  std::cout << "bracket=[" << fmt(n.lower) << ", " << fmt(n.upper) << "]\n";
  std::cout << "quadrature_error=" << fmt(n.quadrature_error) << "\n";
  std::cout << "modular_evaluations=" << n.iterations << "\n";
}

int cmd_norm(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto phi = require_phi(cfg.phi, "--phi", env);
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-10;
  if (!cfg.moments.empty()) {
    print_norm(luxemburg_norm_from_moments(parse_moments(cfg.moments), phi, tol));
    return 0;
  }
  if (cfg.integrand.empty()) throw DomainError("norm needs --integrand or --moments");
  const auto f = parse_integrand(cfg.integrand);
  print_norm(luxemburg_norm(f, phi, tol));
  const auto v = trichotomy_check(f, phi);
  std::cout << "trichotomy case " << static_cast<int>(v.which) << (v.ok() ? " (bounds hold)" : "")
            << "\n";
  for (const auto& msg : v.failures) std::cout << "  " << msg << "\n";
  return 0;
}

int cmd_modular(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto phi = require_phi(cfg.phi, "--phi", env);
  if (cfg.lambda <= 0) throw DomainError("--lambda must be positive");
  if (!cfg.moments.empty()) {
    std::cout << "modular=" << fmt(modular_from_moments(parse_moments(cfg.moments), phi, cfg.lambda))
              << "\n";
    return 0;
  }
  if (cfg.integrand.empty()) throw DomainError("modular needs --integrand or --moments");
  QuadratureOptions q;
  if (cfg.tol > 0) q.rel_tol = cfg.tol;
  const auto m = modular_scaled(parse_integrand(cfg.integrand), phi, cfg.lambda, q);
  if (m.divergent) {
    std::cout << "modular=inf (divergent)\n";
  } else {
    std::cout << "modular=" << fmt(m.value) << "\nerror=" << fmt(m.error) << "\n";
  }
  std::cout << "evaluations=" << m.evaluations << "\n";
  return 0;
}

int cmd_mixed(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto phi = require_phi(cfg.phi, "--phi", env);
  if (cfg.integrand.empty()) throw DomainError("mixed-norm needs --integrand");
  MixedOptions opts;
  if (cfg.tol > 0) opts.outer_tol = cfg.tol;
  if (!cfg.grid.empty()) opts.profile_grid = parse_grid(cfg.grid);
  const auto r = mixed_norm(parse_integrand(cfg.integrand), phi, opts);
  std::cout << "mixed_norm=" << (r.divergent ? "inf" : fmt(r.norm)) << "\n";
  if (r.l11) std::cout << "L11=" << fmt(*r.l11) << "\n";
  if (r.l21) std::cout << "L21=" << fmt(*r.l21) << "\n";
  std::cout << "inner_solves=" << r.inner_solves << "\n";
  write_csv(cfg.csv, curve_csv(r.profile));
  return 0;
}

int cmd_construct(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const Construction c = [&] {
    if (cfg.kind == "widened") {
      return construct_widened(require_phi(cfg.phi, "--phi", env), cfg.p1, cfg.p2, cfg.r1, cfg.r2);
    }
    if (cfg.kind == "epsilon") {
      return construct_epsilon_tight(require_phi(cfg.phi, "--phi", env), cfg.r, cfg.n);
    }
    return construct_target_exponents(cfg.p1, cfg.p, cfg.p2, cfg.r1, cfg.r2);
  }();
  std::cout << "# " << c.params.construction << "\n";
  for (const auto& [name, value] : c.params.entries) {
    std::cout << "# " << name << " = " << fmt(value) << "\n";
  }
  std::cout << "constructed = " << render(c.phi) << "\n";
  const auto e = lebesgue_exponents(c.phi);
  std::cout << "# q=" << fmt(e.q) << " p=" << fmt(e.p) << "\n";
  write_csv(cfg.csv, phi_curve(c.phi, parse_grid(cfg.grid)));
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto phi = require_phi(cfg.phi, "--phi", env);
  const auto psi = require_phi(cfg.psi, "--psi", env);
  const auto grid = parse_grid(cfg.grid);
  const auto rep = equivalence_scan(phi, psi, grid);
  std::cout << "scan verdict: " << to_string(rep.bounded) << "\n";
  std::cout << "c_scan=" << fmt(rep.c_scan) << " at t=" << fmt(rep.t_at_max) << "\n";
  if (rep.c1_derivative) std::cout << "c1_derivative=" << fmt(*rep.c1_derivative) << "\n";
  std::vector<std::pair<double, double>> rows;
  for (double t : grid.points()) rows.emplace_back(t, phi(t) / psi(t));
  write_csv(cfg.csv, curve_csv(rows));
  return 0;
}

int cmd_inclusions(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto rep = inclusion_report(require_phi(cfg.phi, "--phi", env));
  std::cout << rep.text();
  write_csv(cfg.csv, rep.csv());
  return 0;
}

int cmd_multiplicativity(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto phi = require_phi(cfg.phi, "--phi", env);
  const auto rep = cfg.grid.empty() ? multiplicativity_scan(phi)
                                    : multiplicativity_scan(phi, parse_grid(cfg.grid));
  std::cout << "submultiplicative constant: " << fmt(rep.sub_c) << "\n";
  std::cout << "supermultiplicative constant: " << fmt(rep.super_c) << "\n";
  std::cout << "pure power: " << (rep.is_pure_power ? "yes, p=" + fmt(rep.detected_p) : "no")
            << "\n";
  return 0;
}

int cmd_gallery(const RunConfig& cfg) {
  const auto ids = cfg.only.empty() ? gallery_ids() : cfg.only;
  std::vector<CriterionResult> results;
  bool all = true;
  for (int id : ids) {
    results.push_back(run_criterion(id, cfg.seed));
    std::cout << summary_line(results.back(), cfg.verbose) << std::endl;
    all = all && results.back().pass();
  }
  write_csv(cfg.csv, gallery_csv(results));
  return all ? 0 : 1;
}

int cmd_validate(const RunConfig& cfg) {
  const auto env = load_env(cfg);
  const auto phi = require_phi(cfg.phi, "--phi", env);
  const auto rep = validate(phi, parse_grid(cfg.grid));
  std::cout << "phi: " << render(phi) << "\n";
  for (const auto& v : rep.violations) {
    std::cout << to_string(v.kind) << " at t=" << fmt(v.t) << " (excess " << fmt(v.excess)
              << "): " << v.detail << "\n";
  }
  std::cout << (rep.valid() ? "valid" : "advisory violations only") << "\n";
  write_csv(cfg.csv, phi_curve(phi, parse_grid(cfg.grid)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young functions and Orlicz norms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto phi_opt = [&](CLI::App* s) { s->add_option("--phi", cfg.phi, "Young function spec"); };
  auto common = [&](CLI::App* s) {
    s->add_option("--spec", cfg.spec_file, "file of name = fn definitions");
    s->add_option("--grid", cfg.grid, "sampling window lo:hi:n");
    s->add_option("--csv", cfg.csv, "CSV output path");
  };
  std::vector<std::pair<CLI::App*, std::function<int(const RunConfig&)>>> commands;
  auto add = [&](const char* name, const char* help, std::function<int(const RunConfig&)> fn) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    commands.emplace_back(s, std::move(fn));
    return s;
  };

  phi_opt(add("exponents", "Lebesgue, limit and r exponents", cmd_exponents));
  for (auto [name, fn] : {std::pair{"norm", cmd_norm}, {"modular", cmd_modular}}) {
    auto* s = add(name, name == std::string("norm") ? "Luxemburg norm" : "modular of lambda f", fn);
    phi_opt(s);
    s->add_option("--integrand", cfg.integrand, "integrand spec");
    s->add_option("--moments", cfg.moments, "r:value list of L^r moments, e.g. 2:1.57,3:1");
    s->add_option("--tol", cfg.tol, "relative tolerance")->check(CLI::PositiveNumber);
    if (name == std::string("modular")) s->add_option("--lambda", cfg.lambda, "scale divisor");
  }
  auto* mixed = add("mixed-norm", "mixed norm on R^2, profile CSV as t=y,value", cmd_mixed);
  phi_opt(mixed);
  mixed->add_option("--integrand", cfg.integrand, "two-variable integrand spec");
  mixed->add_option("--tol", cfg.tol, "outer tolerance")->check(CLI::PositiveNumber);
  auto* construct = add("construct", "build a spliced Young function", cmd_construct);
  phi_opt(construct);
  construct->add_option("--kind", cfg.kind, "target | widened | epsilon")
      ->check(CLI::IsMember({"target", "widened", "epsilon"}));
  construct->add_option("--p1", cfg.p1);
  construct->add_option("--p", cfg.p);
  construct->add_option("--p2", cfg.p2);
  construct->add_option("--r1", cfg.r1);
  construct->add_option("--r2", cfg.r2);
  construct->add_option("--r", cfg.r, "epsilon construction exponent");
  construct->add_option("--n", cfg.n, "epsilon construction index");
  auto* compare = add("compare", "equivalence scan of two functions", cmd_compare);
  phi_opt(compare);
  compare->add_option("--psi", cfg.psi, "second Young function spec");
  phi_opt(add("inclusions", "Lebesgue sandwiches", cmd_inclusions));
  phi_opt(add("multiplicativity", "sub and supermultiplicative constants", cmd_multiplicativity));
  auto* gallery = add("gallery", "acceptance criteria", cmd_gallery);
  gallery->add_option("--only", cfg.only, "criterion ids")->check(CLI::Range(1, 10));
  gallery->add_option("--seed", cfg.seed, "seed for randomized suites");
  gallery->add_flag("-v,--verbose", cfg.verbose);
  phi_opt(add("validate", "axiom check", cmd_validate));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(cfg);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
