#pragma once
// Self-verification sweeps over every module's identities and certificates.
// Ranges are bounded (quick) or extended (full); each suite reports its case
// and failure counts so the CLI can exit nonzero on any violation.

#include <cmath>
#include <string>
#include <vector>

#include "crossbound/combinatorics.hpp"
#include "crossbound/curves.hpp"
#include "crossbound/entropy.hpp"
#include "crossbound/planner.hpp"

namespace crossbound::verify {

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
};

inline SuiteResult entropy_suite(bool full) {
  SuiteResult out{"entropy-identities", 0, 0};
  const int steps = full ? 9999 : 999;
  for (int i = 1; i <= steps; ++i) {
    const double x = static_cast<double>(i) / (steps + 1);
    ++out.cases;
    if (std::abs(entropy::binary_entropy(x) - entropy::binary_entropy(1 - x)) > 1e-13)
      ++out.failures;
    if (x < 0.5) {
      ++out.cases;
      const double a = entropy::critical_residual(x);
      const double b = entropy::critical_residual_entropy_form(x);
      if ((a > 0) != (b > 0) && std::abs(a) > 1e-12) ++out.failures;
    }
  }
  // derivative against centered differences
  for (double x : {0.1, 0.25, 0.3, 0.45, 0.7}) {
    const double h = 1e-6;
    const double fd = (entropy::binary_entropy(x + h) - entropy::binary_entropy(x - h)) / (2 * h);
    ++out.cases;
    if (std::abs(fd - entropy::entropy_derivative(x)) > 1e-8) ++out.failures;
  }
  return out;
}

inline SuiteResult stirling_suite(bool full) {
  SuiteResult out{"stirling-certificates", 0, 0};
  const long long qmax = full ? 60 : 30;
  for (long long q = 2; q <= qmax; ++q) {
    for (long long k = 1; k <= q - 1; ++k) {
      ++out.cases;
      try {
        const auto cert = combinatorics::entropy_lower_bound(q, k);
        if (hp::BigRat(cert.lower_bound) > hp::BigRat(cert.exact_value)) ++out.failures;
      } catch (const CertificateViolation&) {
        ++out.failures;
      }
    }
  }
  // factorial bracket against the exact factorial
  hp::BigInt fact = 1;
  const long long nmax = full ? 200 : 100;
  for (long long n = 1; n <= nmax; ++n) {
    fact *= n;
    const auto b = combinatorics::factorial_bounds(n);
    ++out.cases;
    if (!(hp::BigRat(b.lower) <= hp::BigRat(fact) && hp::BigRat(fact) <= hp::BigRat(b.upper)))
      ++out.failures;
  }
  return out;
}

inline SuiteResult pair_sum_suite(bool full) {
  SuiteResult out{"pair-bound-sums", 0, 0};
  const long long pmax = full ? 6 : 4;
  const long long qmax = full ? 8 : 6;
  const hp::BigInt cap = 1000000;
  for (long long p = 2; p <= pmax; ++p) {
    for (long long q = 2; q <= qmax; ++q) {
      for (long long k = 1; k <= q; k += 2) {
        const curves::FamilySpec spec{p, q, k};
        ++out.cases;
        const auto enumerated = curves::exact_pair_bound_sum(spec, cap);
        const auto closed = curves::pair_bound_sum_closed_form(spec);
        const auto budget = curves::family_crossing_bound(spec);
        if (enumerated != closed || enumerated > budget) ++out.failures;
      }
    }
  }
  return out;
}

inline SuiteResult planner_suite(bool full) {
  SuiteResult out{"planner-chain", 0, 0};
  std::vector<long long> gs = {1000, 10000};
  if (full) gs.push_back(100000);
  for (long long g : gs) {
    for (auto mode : {planner::Mode::optimized, planner::Mode::symmetric}) {
      const auto r = planner::feasibility_search(g, 0.2, 0.5, mode);
      ++out.cases;
      if (hp::BigInt(r.plan.p - 1) * (r.plan.q - 1) > 2 * g - 2) ++out.failures;
      ++out.cases;
      if (r.plan.k % 2 == 0) ++out.failures;
      if (r.report.bound_valid) {
        const auto b = planner::certified_bound(r);
        // M/(M-1) <= 1 + 1/m, i.e. M*m <= (M-1)(m+1)
        ++out.cases;
        if (r.plan.M * r.plan.m > (r.plan.M - 1) * (r.plan.m + 1)) ++out.failures;
        // relaxed chain: bound <= (1+delta) * 4k/(p-1) * m^2 whenever m >= 1/delta
        ++out.cases;
        const hp::BigRat delta_rat(r.plan.delta_hp);
        if (hp::BigRat(r.plan.m) * delta_rat >= 1) {
          const hp::BigRat relaxed =
              (1 + delta_rat) * 4 * r.plan.k * hp::BigRat(r.plan.m) * r.plan.m / (r.plan.p - 1);
          if (hp::BigRat(b.crossing_bound) > relaxed) ++out.failures;
        }
        // eta/delta inequalities re-verified at doubled precision
        ++out.cases;
        if (!planner::detail::check_eta<80>(hp::Real80(r.plan.x_hp), hp::Real80(r.plan.eta_hp),
                                            r.plan.epsilon))
          ++out.failures;
        ++out.cases;
        if (!planner::detail::check_delta<80>(hp::Real80(r.plan.x_hp), hp::Real80(r.plan.eta_hp),
                                              hp::Real80(r.plan.delta_hp), r.plan.epsilon))
          ++out.failures;
      }
    }
  }
  return out;
}

inline std::vector<SuiteResult> run_verification(bool full) {
  return {entropy_suite(full), stirling_suite(full), pair_sum_suite(full), planner_suite(full)};
}

inline bool all_passed(const std::vector<SuiteResult>& suites) {
  for (const auto& s : suites)
    if (s.failures != 0) return false;
  return true;
}

}  // namespace crossbound::verify
