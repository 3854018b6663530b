#pragma once
// Report envelopes and JSON/CSV serialization for the CLI.
//
// Determinism contract: identical inputs produce byte-identical payloads.
// Reals are rounded to 15 significant digits before entering a payload;
// arbitrary-precision integers serialize as decimal strings.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "crossbound/hp.hpp"
#include "crossbound/planner.hpp"
#include "crossbound/version.hpp"

namespace crossbound::report {

using ordered_json = nlohmann::ordered_json;

// Round-trips v through a %.15g rendering so serialized reals carry exactly
// 15 significant digits of information.
inline double round15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

inline std::string format15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

inline ordered_json real(double v) { return round15(v); }

inline std::string big_str(const hp::BigInt& v) { return v.str(); }

inline ordered_json envelope(const std::string& command, ordered_json inputs, ordered_json outputs,
                             unsigned precision_used) {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["outputs"] = std::move(outputs);
  j["tool_version"] = kToolVersion;
  j["precision_used"] = precision_used;
  return j;
}

inline ordered_json side_condition_json(const planner::SideCondition& c) {
  ordered_json j;
  j["name"] = c.name;
  j["inequality"] = c.inequality;
  j["lhs"] = real(c.lhs);
  j["rhs"] = real(c.rhs);
  j["verdict"] = c.verdict;
  return j;
}

inline ordered_json plan_json(const planner::PlanResult& pr) {
  const auto& p = pr.plan;
  ordered_json j;
  j["g"] = p.g;
  j["alpha"] = real(p.alpha);
  j["epsilon"] = real(p.epsilon);
  j["mode"] = planner::mode_name(p.mode);
  j["x"] = real(p.x);
  j["eta"] = real(p.eta);
  j["delta"] = real(p.delta);
  j["q"] = p.q;
  j["q_formula"] = p.q_formula;
  j["k"] = p.k;
  j["p"] = p.p;
  j["m"] = big_str(p.m);
  j["M"] = big_str(p.M);
  j["search_used"] = p.search_used;

  ordered_json rows = ordered_json::array();
  for (const auto& c : pr.report.conditions) rows.push_back(side_condition_json(c));
  j["side_conditions"] = std::move(rows);
  j["overall_feasible"] = pr.report.overall_feasible;
  j["bound_valid"] = pr.report.bound_valid;
  return j;
}

inline ordered_json bound_json(const planner::CertifiedBound& b) {
  ordered_json j;
  j["crossing_bound"] = big_str(b.crossing_bound);
  j["leading_constant"] = real(b.leading_constant);
  j["leading_constant_lower"] = real(b.leading_constant_lower);
  j["chain_constant"] = real(b.chain_constant);
  j["target_constant"] = real(b.target_constant);
  j["baseline_symmetric"] = real(b.baseline_symmetric);
  j["baseline_bjp"] = real(b.baseline_bjp);
  j["bjp_lower_constant"] = real(b.bjp_lower_constant);
  return j;
}

inline constexpr const char* kSweepCsvHeader =
    "alpha,g,feasible,q,k,p,leading_constant,symmetric_constant,bjp_upper,bjp_lower";

struct SweepCell {
  double alpha = 0;
  long long g = 0;
  bool feasible = false;
  long long q = 0, k = 0, p = 0;
  double leading_constant = 0;  // meaningful only when feasible
};

inline std::string sweep_csv(const std::vector<SweepCell>& cells, double symmetric_constant) {
  std::ostringstream os;
  os << kSweepCsvHeader << "\n";
  for (const auto& c : cells) {
    os << format15(c.alpha) << "," << c.g << "," << (c.feasible ? 1 : 0) << "," << c.q << ","
       << c.k << "," << c.p << ",";
    if (c.feasible) os << format15(c.leading_constant);
    os << "," << format15(symmetric_constant) << "," << format15(2.25) << ","
       << format15(1.0 / 257.0) << "\n";
  }
  return os.str();
}

inline ordered_json sweep_json_rows(const std::vector<SweepCell>& cells,
                                    double symmetric_constant) {
  ordered_json rows = ordered_json::array();
  for (const auto& c : cells) {
    ordered_json r;
    r["alpha"] = real(c.alpha);
    r["g"] = c.g;
    r["feasible"] = c.feasible;
    r["q"] = c.q;
    r["k"] = c.k;
    r["p"] = c.p;
    if (c.feasible)
      r["leading_constant"] = real(c.leading_constant);
    else
      r["leading_constant"] = nullptr;
    r["symmetric_constant"] = real(symmetric_constant);
    r["bjp_upper"] = real(2.25);
    r["bjp_lower"] = real(1.0 / 257.0);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace crossbound::report
