// crossbound: certified crossing-number upper bounds for curve systems on
// surfaces, via entropy-balanced families on bipartite ribbon surfaces.
//
// Subcommands: constants, plan, family, verify, sweep.
// Exit codes: 0 success/feasible, 2 infeasible plan, 64 usage error,
//             70 internal certificate violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "crossbound/combinatorics.hpp"
#include "crossbound/curves.hpp"
#include "crossbound/entropy.hpp"
#include "crossbound/planner.hpp"
#include "crossbound/report.hpp"
#include "crossbound/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCertificate = 70;

using crossbound::report::ordered_json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

void emit_json(const ordered_json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

int cmd_constants(double tolerance, const std::string& out_path) {
  namespace rep = crossbound::report;
  const auto sol = crossbound::entropy::solve_entropy_minimum(tolerance);

  ordered_json in;
  in["tolerance"] = rep::real(tolerance);

  ordered_json out;
  out["x0"] = rep::real(sol.x0);
  out["c_star"] = rep::real(sol.c_star);
  out["f_half"] = rep::real(sol.f_half);
  out["residual"] = rep::real(sol.residual);
  out["baseline_bjp"] = rep::real(2.25);
  out["bjp_lower_constant"] = rep::real(1.0 / 257.0);
  ordered_json hier;
  hier["c_star_lt_symmetric"] = sol.c_star < sol.f_half;
  hier["symmetric_lt_bjp"] = sol.f_half < 2.25;
  out["hierarchy"] = std::move(hier);
  out["reduction_vs_bjp"] = rep::real(1.0 - sol.c_star / 2.25);

  emit_json(rep::envelope("constants", std::move(in), std::move(out), 50), out_path);
  return kExitOk;
}

int cmd_plan(long long g, double alpha, double epsilon, const std::string& mode_str, bool search,
             const std::string& out_path) {
  namespace rep = crossbound::report;
  namespace pl = crossbound::planner;
  const pl::Mode mode = mode_str == "symmetric" ? pl::Mode::symmetric : pl::Mode::optimized;

  ordered_json in;
  in["g"] = g;
  in["alpha"] = rep::real(alpha);
  in["epsilon"] = rep::real(epsilon);
  in["mode"] = mode_str;
  in["search"] = search;

  ordered_json out;
  bool feasible = false;
  try {
    const auto r = search ? pl::feasibility_search(g, alpha, epsilon, mode)
                          : pl::build_plan(g, alpha, epsilon, mode);
    out["plan"] = rep::plan_json(r);
    feasible = r.report.bound_valid;
    if (feasible)
      out["bound"] = rep::bound_json(pl::certified_bound(r));
    else
      out["bound"] = nullptr;
  } catch (const crossbound::PlanStructureError& e) {
    out["plan"] = nullptr;
    out["bound"] = nullptr;
    out["error"] = e.what();
  }

  emit_json(rep::envelope("plan", std::move(in), std::move(out), 40), out_path);
  return feasible ? kExitOk : kExitInfeasible;
}

int cmd_family(long long p, long long q, long long k, long long cap, const std::string& out_path) {
  namespace rep = crossbound::report;
  namespace cv = crossbound::curves;
  const cv::FamilySpec spec{p, q, k};
  cv::validate(spec);

  const crossbound::hp::BigInt big_cap = cap;
  const auto size = cv::family_size(spec);
  const auto topo = cv::surface_topology(p, q);
  const auto enumerated = cv::exact_pair_bound_sum(spec, big_cap);
  const auto closed = cv::pair_bound_sum_closed_form(spec);
  if (enumerated != closed)
    throw crossbound::CertificateViolation(
        "family: enumerated pair-bound sum disagrees with the closed form");
  const auto closed_bound = cv::family_crossing_bound(spec);
  if (enumerated > closed_bound)
    throw crossbound::CertificateViolation("family: enumerated pair-bound sum exceeds 4k M^2/(p-1)");

  ordered_json in;
  in["p"] = p;
  in["q"] = q;
  in["k"] = k;
  in["cap"] = cap;

  ordered_json out;
  out["M"] = rep::big_str(size);
  out["euler_characteristic"] = topo.euler_characteristic;
  out["genus"] = topo.genus;
  out["boundary_components"] = topo.boundary_components;
  out["exact_pair_bound_sum"] = rep::big_str(enumerated);
  out["family_crossing_bound"] = rep::big_str(closed_bound);
  out["ratio"] = rep::real(static_cast<double>(crossbound::hp::BigRat(enumerated) /
                                               crossbound::hp::BigRat(closed_bound)));
  out["distinct"] = cv::distinctness_check(spec, big_cap);

  emit_json(rep::envelope("family", std::move(in), std::move(out), 40), out_path);
  return kExitOk;
}

int cmd_verify(const std::string& level, const std::string& out_path) {
  namespace rep = crossbound::report;
  const bool full = level == "full";
  const auto suites = crossbound::verify::run_verification(full);

  ordered_json in;
  in["level"] = level;

  ordered_json out;
  ordered_json rows = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json r;
    r["suite"] = s.name;
    r["cases"] = s.cases;
    r["failures"] = s.failures;
    r["pass"] = s.failures == 0;
    rows.push_back(std::move(r));
  }
  out["suites"] = std::move(rows);
  const bool ok = crossbound::verify::all_passed(suites);
  out["all_passed"] = ok;

  emit_json(rep::envelope("verify", std::move(in), std::move(out), 40), out_path);
  return ok ? kExitOk : kExitCertificate;
}

int cmd_sweep(const std::vector<double>& alphas, const std::vector<long long>& gs, double epsilon,
              const std::string& mode_str, const std::string& format, const std::string& out_path) {
  namespace rep = crossbound::report;
  namespace pl = crossbound::planner;
  const pl::Mode mode = mode_str == "symmetric" ? pl::Mode::symmetric : pl::Mode::optimized;

  std::vector<rep::SweepCell> cells;
  for (double a : alphas) {
    for (long long g : gs) {
      rep::SweepCell cell;
      cell.alpha = a;
      cell.g = g;
      try {
        const auto r = pl::feasibility_search(g, a, epsilon, mode);
        cell.q = r.plan.q;
        cell.k = r.plan.k;
        cell.p = r.plan.p;
        cell.feasible = r.report.bound_valid;
        if (cell.feasible) cell.leading_constant = pl::certified_bound(r).leading_constant;
      } catch (const crossbound::PlanStructureError&) {
        cell.feasible = false;
      }
      cells.push_back(cell);
    }
  }

  const auto sol = crossbound::entropy::solve_entropy_minimum_hp<crossbound::hp::Real50>(
      1e-12, /*verify_global=*/false);
  const double symmetric_constant = static_cast<double>(sol.f_half);

  if (format == "csv") {
    emit(rep::sweep_csv(cells, symmetric_constant), out_path);
    return kExitOk;
  }

  ordered_json in;
  in["alpha"] = ordered_json::array();
  for (double a : alphas) in["alpha"].push_back(rep::real(a));
  in["g"] = gs;
  in["epsilon"] = rep::real(epsilon);
  in["mode"] = mode_str;
  in["format"] = format;

  ordered_json out;
  out["rows"] = rep::sweep_json_rows(cells, symmetric_constant);
  emit_json(rep::envelope("sweep", std::move(in), std::move(out), 40), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified crossing-number upper bounds via entropy-balanced curve families"};
  app.require_subcommand(1);

  // constants
  auto* constants = app.add_subcommand("constants", "optimized constant, minimizer, and baselines");
  double tolerance = 1e-10;
  std::string out_path;
  constants->add_option("--tolerance", tolerance, "absolute tolerance for the minimizer")
      ->check(CLI::Range(1e-15, 1e-3));
  constants->add_option("--out", out_path, "write the report to a file");

  // plan
  auto* plan = app.add_subcommand("plan", "run the parameter chain at one (g, alpha, epsilon)");
  long long g = 0;
  double alpha = 0, epsilon = 0;
  std::string mode = "optimized";
  bool search = true;
  plan->add_option("--g", g, "genus")->required()->check(CLI::Range(3LL, (1LL << 62)));
  plan->add_option("--alpha", alpha, "exponent in m = floor(g^(1+alpha))")
      ->required()
      ->check(CLI::PositiveNumber);
  plan->add_option("--epsilon", epsilon, "slack over the optimal constant")
      ->required()
      ->check(CLI::PositiveNumber);
  plan->add_option("--mode", mode, "ratio choice")->check(CLI::IsMember({"optimized", "symmetric"}));
  plan->add_flag("--search,!--no-search", search, "walk q upward until the bound is valid");
  plan->add_option("--out", out_path, "write the report to a file");

  // family
  auto* family = app.add_subcommand("family", "analyze one curve family (p, q, k)");
  long long fp = 0, fq = 0, fk = 0, cap = 1000000;
  family->add_option("--p", fp, "upper vertices")->required();
  family->add_option("--q", fq, "lower vertices")->required();
  family->add_option("--k", fk, "odd subset size")->required();
  family->add_option("--cap", cap, "enumeration budget")->check(CLI::PositiveNumber);
  family->add_option("--out", out_path, "write the report to a file");

  // verify
  auto* verify = app.add_subcommand("verify", "run the self-verification sweeps");
  std::string level = "quick";
  verify->add_option("--level", level, "sweep ranges")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--out", out_path, "write the report to a file");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid study over (alpha, g)");
  std::vector<double> alphas;
  std::vector<long long> gs;
  double sweep_eps = 0.5;
  std::string sweep_mode = "optimized";
  std::string format = "json";
  sweep->add_option("--alpha", alphas, "alpha values")->required()->delimiter(',');
  sweep->add_option("--g", gs, "genus values")->required()->delimiter(',');
  sweep->add_option("--epsilon", sweep_eps, "slack over the optimal constant")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--mode", sweep_mode, "ratio choice")
      ->check(CLI::IsMember({"optimized", "symmetric"}));
  sweep->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (constants->parsed()) return cmd_constants(tolerance, out_path);
    if (plan->parsed()) return cmd_plan(g, alpha, epsilon, mode, search, out_path);
    if (family->parsed()) return cmd_family(fp, fq, fk, cap, out_path);
    if (verify->parsed()) return cmd_verify(level, out_path);
    if (sweep->parsed()) return cmd_sweep(alphas, gs, sweep_eps, sweep_mode, format, out_path);
  } catch (const crossbound::CertificateViolation& e) {
    std::cerr << "certificate violation: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const crossbound::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCertificate;
  }
  return kExitUsage;
}
