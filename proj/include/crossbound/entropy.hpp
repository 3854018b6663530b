#pragma once
// Binary entropy H(x) = -x ln x - (1-x) ln(1-x) (nats), the objective
// f(x) = 2x / H(x)^2 on (0, 1/2], and the bracketed critical-point solver.
//
// Every function is templated on the real type; double and hp::Real<D> both
// work. All evaluations are pure.

#include <cmath>
#include <sstream>

#include "crossbound/errors.hpp"
#include "crossbound/hp.hpp"
#include "crossbound/roots.hpp"

namespace crossbound::entropy {

template <class R>
R binary_entropy(const R& x) {
  using std::log;
  if (!(x > 0 && x < 1)) throw std::domain_error("binary_entropy: x must lie in (0,1)");
  return -x * log(x) - (1 - x) * log(1 - x);
}

// H'(x) = ln((1-x)/x); zero exactly at x = 1/2, positive on (0,1/2).
template <class R>
R entropy_derivative(const R& x) {
  using std::log;
  if (!(x > 0 && x < 1)) throw std::domain_error("entropy_derivative: x must lie in (0,1)");
  return log((1 - x) / x);
}

// f(x) = 2x / H(x)^2. Diverges as x -> 0+; evaluation below 1e-12 is refused
// rather than attempted.
template <class R>
R objective(const R& x) {
  if (!(x > 0 && 2 * x <= 1)) throw std::domain_error("objective: x must lie in (0, 1/2]");
  if (x < R(1) / R(1000000000000LL))
    throw std::domain_error("objective: x below the 1e-12 evaluation cutoff");
  const R h = binary_entropy(x);
  return 2 * x / (h * h);
}

// f'(x) = 2/H^2 - 4xH'/H^3; used by the finite-difference property checks.
template <class R>
R objective_derivative(const R& x) {
  if (!(x > 0 && 2 * x < 1)) throw std::domain_error("objective_derivative: x must lie in (0, 1/2)");
  const R h = binary_entropy(x);
  const R hp = entropy_derivative(x);
  return 2 / (h * h) - 4 * x * hp / (h * h * h);
}

// Critical equation in product form: x ln x - (1+x) ln(1-x). A root in
// (0, 1/2) is a critical point of f.
template <class R>
R critical_residual(const R& x) {
  using std::log;
  if (!(x > 0 && x < 1)) throw std::domain_error("critical_residual: x must lie in (0,1)");
  return x * log(x) - (1 + x) * log(1 - x);
}

// Same equation in entropy form: H(x) - 2x H'(x). Algebraically identical to
// critical_residual but evaluated through an independent route; both are
// exposed and must locate the same root.
template <class R>
R critical_residual_entropy_form(const R& x) {
  if (!(x > 0 && x < 1))
    throw std::domain_error("critical_residual_entropy_form: x must lie in (0,1)");
  return binary_entropy(x) - 2 * x * entropy_derivative(x);
}

// Interval version of H for certified inequality checks.
template <class R>
hp::Enclosure<R> enclose_binary_entropy(const hp::Enclosure<R>& x) {
  using E = hp::Enclosure<R>;
  if (!(x.lo > 0 && x.hi < 1))
    throw std::domain_error("enclose_binary_entropy: interval must lie inside (0,1)");
  const E one = E::exact_int(1);
  return -(x * enclose_log(x)) - (one - x) * enclose_log(one - x);
}

template <class R>
struct EntropySolutionT {
  R x0;        // minimizer in (0, 1/2)
  R c_star;    // f(x0)
  R f_half;    // f(1/2) = 1/ln(2)^2
  R residual;  // critical_residual(x0)
  double precision = 0;
};

struct EntropySolution {
  double x0 = 0;
  double c_star = 0;
  double f_half = 0;
  double residual = 0;
  double precision = 0;
};

namespace detail {

// Root of the critical equation on [1/10, 2/5], solved to the precision of R.
template <class R>
R critical_root() {
  const R xtol = std::numeric_limits<R>::epsilon() * 16;
  return roots::brent([](const R& x) { return critical_residual(x); }, R(1) / 10, R(2) / 5, xtol);
}

}  // namespace detail

// Solves for the interior minimizer of f on (0, 1/2]. Beyond root finding it
// verifies second-order optimality at x0 +- tolerance and scans a step-1e-4
// grid of (0, 1/2] to confirm global minimality, erroring out if any grid
// value undercuts f(x0).
template <class R>
EntropySolutionT<R> solve_entropy_minimum_hp(double tolerance, bool verify_global = true) {
  if (!(tolerance > 0 && tolerance < 1e-3))
    throw std::domain_error("solve_entropy_minimum: tolerance must lie in (0, 1e-3)");

  const R x0 = detail::critical_root<R>();
  const R fx0 = objective(x0);
  const R t(tolerance);

  if (!(objective(x0 - t) > fx0) || !(objective(x0 + t) > fx0)) {
    std::ostringstream os;
    os << "solve_entropy_minimum: second-order check failed at x0 = " << x0;
    throw ConvergenceFailure(os.str());
  }

  if (verify_global) {
    for (int i = 1; i <= 5000; ++i) {
      const R xg = R(i) / 10000;
      if (objective(xg) < fx0) {
        std::ostringstream os;
        os << "solve_entropy_minimum: grid point " << xg << " undercuts the solved minimum";
        throw ConvergenceFailure(os.str());
      }
    }
  }

  EntropySolutionT<R> out;
  out.x0 = x0;
  out.c_star = fx0;
  out.f_half = objective(R(1) / 2);
  out.residual = critical_residual(x0);
  out.precision = tolerance;
  return out;
}

inline EntropySolution solve_entropy_minimum(double tolerance) {
  const auto s = solve_entropy_minimum_hp<hp::Real50>(tolerance);
  EntropySolution out;
  out.x0 = static_cast<double>(s.x0);
  out.c_star = static_cast<double>(s.c_star);
  out.f_half = static_cast<double>(s.f_half);
  out.residual = static_cast<double>(s.residual);
  out.precision = tolerance;
  return out;
}

}  // namespace crossbound::entropy
