#pragma once
// The parameter-selection chain at concrete (g, alpha, epsilon).
//
// Given the target curve count m = floor(g^(1+alpha)), the planner picks the
// subset ratio x, the slack eta, the margin delta, then the family parameters
// (q, k, p), evaluates every side condition with outward rounding, and turns
// a valid plan into a certified integer upper bound
//     Cr(g, m) <= ceil( 4k * m(m-1) * M / ((p-1)(M-1)) ),
// with its leading constant relative to alpha^2 g^(1+2*alpha) (ln g)^2.
//
// Two feasibility notions appear in reports. bound_valid (embedding holds and
// M > m) is what the certified bound needs at a concrete g and gates exit
// codes; overall_feasible additionally requires the asymptotic side
// conditions, which at desk scale typically fail because the underlying
// statement is an asymptotic one.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "crossbound/certified_floor.hpp"
#include "crossbound/curves.hpp"
#include "crossbound/entropy.hpp"
#include "crossbound/errors.hpp"
#include "crossbound/hp.hpp"

namespace crossbound::planner {

using hp::BigInt;
using hp::BigRat;

enum class Mode { optimized, symmetric };

inline const char* mode_name(Mode m) { return m == Mode::optimized ? "optimized" : "symmetric"; }

// Ratio choice: the entropy minimizer x0, or 1/2 in symmetric mode. epsilon
// does not change the choice (x0 is the tightest admissible ratio for every
// epsilon); it is part of the interface for symmetry with the other choosers.
inline hp::Real40 choose_ratio(double /*epsilon*/, Mode mode) {
  if (mode == Mode::symmetric) return hp::Real40(1) / 2;
  const auto sol = entropy::solve_entropy_minimum_hp<hp::Real50>(1e-12, /*verify_global=*/false);
  return hp::Real40(sol.x0);
}

namespace detail {

template <unsigned D>
bool check_eta(const hp::Real<D>& x, const hp::Real<D>& eta, double epsilon) {
  using E = hp::Enclosure<hp::Real<D>>;
  const E ex = E::point(x);
  const E h = entropy::enclose_binary_entropy(ex);
  const E one = E::exact_int(1);
  const E two_x = E::exact_int(2) * ex;
  const E lhs = two_x * enclose_sq(one / h + E::point(eta));
  const E rhs = two_x / (h * h) + E::point(hp::Real<D>(epsilon)) / E::exact_int(4);
  return certified_le(lhs, rhs);
}

template <unsigned D>
bool check_delta(const hp::Real<D>& x, const hp::Real<D>& eta, const hp::Real<D>& delta,
                 double epsilon) {
  using E = hp::Enclosure<hp::Real<D>>;
  const E ex = E::point(x);
  const E ed = E::point(delta);
  const E h = entropy::enclose_binary_entropy(ex);
  const E one = E::exact_int(1);
  const E lhs = (one + ed) * (E::exact_int(2) + E::exact_int(4) * ed) * (ex + ed) *
                enclose_sq(one / h + E::point(eta) + ed);
  const E rhs = E::exact_int(2) * ex * enclose_sq(one / h + E::point(eta)) +
                E::point(hp::Real<D>(epsilon)) / E::exact_int(4);
  return certified_le(lhs, rhs);
}

}  // namespace detail

// Largest eta on a 64-step geometric grid (ratio 255/256) descending from the
// closed-form quadratic boundary that passes the certified inequality
//   2x (1/H(x) + eta)^2 <= 2x/H(x)^2 + epsilon/4.
inline hp::Real40 choose_eta(const hp::Real40& x, double epsilon) {
  using R = hp::Real40;
  using std::sqrt;
  if (!(epsilon > 0)) throw std::domain_error("choose_eta: epsilon must be positive");
  const R h = entropy::binary_entropy(x);
  const R eta_max = sqrt(1 / (h * h) + R(epsilon) / (8 * x)) - 1 / h;
  R eta = eta_max;
  for (int j = 0; j < 64; ++j) {
    if (detail::check_eta<40>(x, eta, epsilon)) return eta;
    eta = eta * 255 / 256;
  }
  throw ConvergenceFailure("choose_eta: no grid point certified");
}

// Largest delta on the halving grid below 1/2 that passes the certified
// printed inequality; larger delta widens the q <= delta*g side condition, so
// first-passing maximizes finite-g feasibility.
inline hp::Real40 choose_delta(const hp::Real40& x, const hp::Real40& eta, double epsilon) {
  using R = hp::Real40;
  if (!(epsilon > 0)) throw std::domain_error("choose_delta: epsilon must be positive");
  for (R d = R(1) / 4; d > R(1e-30); d /= 2) {
    if (detail::check_delta<40>(x, eta, d, epsilon)) return d;
  }
  throw ConvergenceFailure("choose_delta: no halving-grid point certified");
}

struct ConstructionPlan {
  long long g = 0;
  double alpha = 0;
  double epsilon = 0;
  Mode mode = Mode::optimized;
  bool search_used = false;

  double x = 0;
  double eta = 0;
  double delta = 0;
  long long q = 0;
  long long q_formula = 0;  // ceil((1/H(x)+eta) * alpha * ln g)
  long long k = 0;
  long long p = 0;
  BigInt m;  // floor(g^(1+alpha)), certified
  BigInt M;  // (p-1) C(q,k)

  // high-precision carriers for certified downstream arithmetic
  hp::Real40 x_hp, eta_hp, delta_hp;
};

struct SideCondition {
  std::string name;
  std::string inequality;
  double lhs = 0;
  double rhs = 0;
  bool verdict = false;
};

struct SideConditionReport {
  std::vector<SideCondition> conditions;
  bool overall_feasible = false;  // conjunction of every row
  bool bound_valid = false;       // embedding && M > m: what the bound needs
};

struct PlanResult {
  ConstructionPlan plan;
  SideConditionReport report;
};

namespace detail {

struct Choices {
  hp::Real40 x, eta, delta;
};

inline Choices make_choices(Mode mode, double epsilon) {
  Choices c;
  c.x = choose_ratio(epsilon, mode);
  c.eta = choose_eta(c.x, epsilon);
  c.delta = choose_delta(c.x, c.eta, epsilon);
  return c;
}

// Odd integer nearest to t > 0, ties toward the smaller candidate.
inline long long nearest_odd_ties_down(const hp::Real40& t) {
  using std::floor;
  const long long fl = hp::floor_to_bigint(floor(t)).convert_to<long long>();
  const long long lo = (fl % 2 == 0) ? fl - 1 : fl;
  const long long hi = lo + 2;
  const hp::Real40 dlo = t - lo;
  const hp::Real40 dhi = hi - t;
  return dlo <= dhi ? lo : hi;
}

// ceil((1/H(x)+eta) * alpha * ln g) from an enclosure at D digits; nullopt if
// the enclosure straddles an integer.
template <unsigned D>
std::optional<long long> formula_q(const hp::Real40& x40, const hp::Real40& eta40, double alpha,
                                   long long g) {
  using R = hp::Real<D>;
  using E = hp::Enclosure<R>;
  using std::ceil;
  const E h = entropy::enclose_binary_entropy(E::point(R(x40)));
  const E t = (E::exact_int(1) / h + E::point(R(eta40))) * E::point(R(alpha)) *
              enclose_log(E::point(R(g)));
  const BigInt clo = hp::floor_to_bigint(ceil(t.lo));
  const BigInt chi = hp::floor_to_bigint(ceil(t.hi));
  if (clo == chi) return clo.convert_to<long long>();
  return std::nullopt;
}

inline long long certified_formula_q(const Choices& c, double alpha, long long g) {
  if (auto q = formula_q<40>(c.x, c.eta, alpha, g)) return *q;
  if (auto q = formula_q<80>(c.x, c.eta, alpha, g)) return *q;
  // value sits within 1e-75 of an integer; the larger ceiling stays admissible
  using E = hp::Enclosure<hp::Real80>;
  using std::ceil;
  const E h = entropy::enclose_binary_entropy(E::point(hp::Real80(c.x)));
  const E t = (E::exact_int(1) / h + E::point(hp::Real80(c.eta))) *
              E::point(hp::Real80(alpha)) * enclose_log(E::point(hp::Real80(g)));
  return hp::floor_to_bigint(ceil(t.hi)).convert_to<long long>();
}

inline PlanResult plan_at_q(long long g, double alpha, double epsilon, Mode mode,
                            const Choices& c, long long q, long long q_formula, bool search_used,
                            unsigned precision) {
  using R = hp::Real40;
  using E = hp::Enclosure<R>;

  if (q < 2) throw PlanStructureError("plan: q = " + std::to_string(q) + " is below 2");

  ConstructionPlan plan;
  plan.g = g;
  plan.alpha = alpha;
  plan.epsilon = epsilon;
  plan.mode = mode;
  plan.search_used = search_used;
  plan.x_hp = c.x;
  plan.eta_hp = c.eta;
  plan.delta_hp = c.delta;
  plan.x = static_cast<double>(c.x);
  plan.eta = static_cast<double>(c.eta);
  plan.delta = static_cast<double>(c.delta);
  plan.q = q;
  plan.q_formula = q_formula;

  plan.k = nearest_odd_ties_down(c.x * R(q));
  if (plan.k < 1 || plan.k > q)
    throw PlanStructureError("plan: k = " + std::to_string(plan.k) + " falls outside [1, q]");
  plan.p = (2 * g - 2) / (q - 1) + 1;

  const auto mf = certified::power_floor(g, alpha, precision);
  if (mf.certainty != certified::Certainty::certified)
    throw PlanStructureError("plan: floor of g^(1+alpha) stayed ambiguous at maximum precision");
  plan.m = mf.value;
  plan.M = curves::family_size({plan.p, plan.q, plan.k});

  // side conditions; dyadic delta makes most rows exactly decidable
  const BigRat delta_rat(c.delta);
  SideConditionReport rep;
  auto row = [&rep](std::string name, std::string ineq, double lhs, double rhs, bool verdict) {
    rep.conditions.push_back({std::move(name), std::move(ineq), lhs, rhs, verdict});
  };

  const BigRat dg = delta_rat * g;
  row("q_le_delta_g", "q <= delta*g", double(plan.q), static_cast<double>(dg), BigRat(plan.q) <= dg);
  row("p_ge_g_over_q", "p-1 >= g/q", double(plan.p - 1), double(g) / double(q),
      BigInt(plan.p - 1) * q >= g);
  row("M_gt_m", "M > m", static_cast<double>(plan.M), static_cast<double>(plan.m), plan.M > plan.m);
  row("m_ge_inv_delta", "m >= 1/delta", static_cast<double>(plan.m),
      static_cast<double>(BigRat(1) / delta_rat), BigRat(plan.m) * delta_rat >= 1);
  row("q_ge_two_over_delta", "q >= 2/delta", double(plan.q),
      static_cast<double>(BigRat(2) / delta_rat), BigRat(plan.q) * delta_rat >= 2);

  const E log_slack = E::point(c.delta) * E::point(R(alpha)) * enclose_log(E::point(R(g)));
  row("log_slack", "1 <= delta*alpha*ln g", 1.0, static_cast<double>(log_slack.lo),
      log_slack.lo >= 1);

  const auto emb = curves::embedding_check(plan.p, plan.q, g);
  row("embedding", "|p+q-pq| <= 2g-2", double(emb.chi < 0 ? -emb.chi : emb.chi),
      double(2 * g - 2), emb.embeds);

  rep.bound_valid = emb.embeds && plan.M > plan.m;
  rep.overall_feasible = true;
  for (const auto& cond : rep.conditions) rep.overall_feasible = rep.overall_feasible && cond.verdict;

  return {std::move(plan), std::move(rep)};
}

}  // namespace detail

// One pass of the chain with q taken from the ceiling formula.
inline PlanResult build_plan(long long g, double alpha, double epsilon, Mode mode) {
  if (g < 3) throw std::domain_error("build_plan: g must be >= 3");
  if (!(alpha > 0)) throw std::domain_error("build_plan: alpha must be positive");
  if (!(epsilon > 0)) throw std::domain_error("build_plan: epsilon must be positive");
  const auto c = detail::make_choices(mode, epsilon);
  const long long q0 = detail::certified_formula_q(c, alpha, g);
  return detail::plan_at_q(g, alpha, epsilon, mode, c, q0, q0, false);
}

// Finite-g repair of the asymptotic choice: walks q upward from the formula
// value (keeping k, p tied to each q) until the bound-validity conditions
// hold, or q would exceed delta*g. Returns the first valid plan, else the
// formula plan with its failing verdicts.
inline PlanResult feasibility_search(long long g, double alpha, double epsilon, Mode mode) {
  if (g < 3) throw std::domain_error("feasibility_search: g must be >= 3");
  if (!(alpha > 0)) throw std::domain_error("feasibility_search: alpha must be positive");
  if (!(epsilon > 0)) throw std::domain_error("feasibility_search: epsilon must be positive");
  const auto c = detail::make_choices(mode, epsilon);
  const long long q0 = detail::certified_formula_q(c, alpha, g);
  const long long q_cap = hp::floor_rat(BigRat(c.delta) * g).convert_to<long long>();

  for (long long q = std::max<long long>(q0, 2); q <= q_cap; ++q) {
    auto r = detail::plan_at_q(g, alpha, epsilon, mode, c, q, q0, q != q0);
    if (r.report.bound_valid) return r;
  }
  return detail::plan_at_q(g, alpha, epsilon, mode, c, q0, q0, false);
}

struct CertifiedBound {
  BigInt crossing_bound;          // ceil(4k m(m-1) M / ((p-1)(M-1)))
  double leading_constant = 0;    // crossing_bound / (alpha^2 g^(1+2a) ln^2 g), rounded up
  double leading_constant_lower = 0;  // lower end of the same enclosure
  double chain_constant = 0;      // (1+d)(2+4d)(x+d)(1/H+eta+d)^2, rounded up
  double target_constant = 0;     // C* + epsilon
  double baseline_symmetric = 0;  // 1/ln(2)^2
  double baseline_bjp = 2.25;
  double bjp_lower_constant = 1.0 / 257.0;
};

inline CertifiedBound certified_bound(const PlanResult& pr) {
  using R = hp::Real40;
  using E = hp::Enclosure<R>;
  if (!pr.report.bound_valid)
    throw InfeasiblePlan("certified_bound: plan does not satisfy embedding and M > m");
  const auto& p = pr.plan;

  CertifiedBound out;
  const BigRat exact = BigRat(4 * p.k) * p.m * (p.m - 1) * p.M / (BigRat(p.p - 1) * (p.M - 1));
  out.crossing_bound = hp::ceil_rat(exact);

  const E lng = enclose_log(E::point(R(p.g)));
  const E a = E::point(R(p.alpha));
  const E expo = E::exact_int(1) + E::exact_int(2) * a;
  const E denom = (a * a) * enclose_exp(expo * lng) * (lng * lng);
  const E lc = E::of_bigint(out.crossing_bound) / denom;
  out.leading_constant = std::nextafter(static_cast<double>(lc.hi),
                                        std::numeric_limits<double>::infinity());
  out.leading_constant_lower = std::nextafter(static_cast<double>(lc.lo),
                                              -std::numeric_limits<double>::infinity());

  const E ex = E::point(p.x_hp);
  const E ed = E::point(p.delta_hp);
  const E one = E::exact_int(1);
  const E h = entropy::enclose_binary_entropy(ex);
  const E chain = (one + ed) * (E::exact_int(2) + E::exact_int(4) * ed) * (ex + ed) *
                  enclose_sq(one / h + E::point(p.eta_hp) + ed);
  out.chain_constant = std::nextafter(static_cast<double>(chain.hi),
                                      std::numeric_limits<double>::infinity());

  const auto sol = entropy::solve_entropy_minimum_hp<hp::Real50>(1e-12, /*verify_global=*/false);
  out.target_constant = static_cast<double>(sol.c_star) + p.epsilon;
  out.baseline_symmetric = static_cast<double>(sol.f_half);
  return out;
}

struct StudyRow {
  long long g = 0;
  bool feasible = false;  // bound_valid for this g
  long long q = 0;
  long long k = 0;
  long long p = 0;
  double leading_constant = 0;  // meaningful only when feasible
};

struct ConvergenceStudy {
  std::vector<StudyRow> rows;
  double trailing_max = 0;  // max leading constant over the last third of feasible rows
};

inline ConvergenceStudy convergence_study(double alpha, double epsilon,
                                          const std::vector<long long>& g_list, Mode mode) {
  if (g_list.empty()) throw std::invalid_argument("convergence_study: empty g list");
  for (size_t i = 0; i < g_list.size(); ++i) {
    if (g_list[i] < 3) throw std::invalid_argument("convergence_study: every g must be >= 3");
    if (i > 0 && g_list[i] <= g_list[i - 1])
      throw std::invalid_argument("convergence_study: g list must be strictly increasing");
  }

  ConvergenceStudy out;
  std::vector<double> feasible_lcs;
  for (long long g : g_list) {
    const auto r = feasibility_search(g, alpha, epsilon, mode);
    StudyRow row;
    row.g = g;
    row.feasible = r.report.bound_valid;
    row.q = r.plan.q;
    row.k = r.plan.k;
    row.p = r.plan.p;
    if (row.feasible) {
      row.leading_constant = certified_bound(r).leading_constant;
      feasible_lcs.push_back(row.leading_constant);
    }
    out.rows.push_back(row);
  }
  if (!feasible_lcs.empty()) {
    const size_t tail = (feasible_lcs.size() + 2) / 3;
    out.trailing_max = *std::max_element(feasible_lcs.end() - static_cast<long>(tail),
                                         feasible_lcs.end());
  }
  return out;
}

}  // namespace crossbound::planner
