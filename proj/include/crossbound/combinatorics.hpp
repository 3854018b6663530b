#pragma once
// Exact binomial coefficients, two-sided Stirling factorial bounds, and the
// explicit entropy lower-bound certificate
//   C(q,k) >= (2*pi)^{-1/2} * sqrt(q/(k(q-k))) * exp(q*H(k/q))
//             * exp(-1/(12k) - 1/(12(q-k))),
// valid for all 1 <= k <= q-1. Certificates carry their proof ingredients and
// are verified against the exact binomial on construction.

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <vector>

#include "crossbound/entropy.hpp"
#include "crossbound/errors.hpp"
#include "crossbound/hp.hpp"

namespace crossbound::combinatorics {

using hp::BigInt;

// Exact C(q, k); zero outside [0, q]. Multiplicative form with an exact
// division at every step, so intermediates never leave the integers.
inline BigInt binomial_exact(long long q, long long k) {
  if (q < 0) throw std::domain_error("binomial_exact: q must be nonnegative");
  if (k < 0 || k > q) return 0;
  if (k > q - k) k = q - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= q - k + i;
    r /= i;
  }
  return r;
}

struct FactorialBounds {
  hp::Real40 lower;  // sqrt(2*pi) n^{n+1/2} e^{-n}
  hp::Real40 upper;  // lower * e^{1/(12n)}
};

// Two-sided Stirling bracket, valid for all n >= 1. Evaluated in log space so
// n in the hundreds cannot overflow.
inline FactorialBounds factorial_bounds(long long n) {
  using R = hp::Real40;
  using std::exp;
  using std::log;
  if (n < 1) throw std::domain_error("factorial_bounds: n must be >= 1");
  const R rn(n);
  const R two_pi = 2 * boost::math::constants::pi<R>();
  const R log_lower = log(two_pi) / 2 + (rn + R(1) / 2) * log(rn) - rn;
  FactorialBounds out;
  out.lower = exp(log_lower);
  out.upper = exp(log_lower + R(1) / (12 * rn));
  return out;
}

struct StirlingCertificate {
  long long q = 0;
  long long k = 0;
  BigInt exact_value;             // C(q,k)
  hp::Real40 lower_bound;         // prefactor * exp(q*H(k/q)) * correction_factor
  hp::Real40 entropy_at_ratio;    // H(k/q), nats
  hp::Real40 correction_factor;   // exp(-1/(12k) - 1/(12(q-k)))
  hp::Real40 prefactor;           // (2*pi)^{-1/2} sqrt(q/(k(q-k)))
};

inline StirlingCertificate entropy_lower_bound(long long q, long long k) {
  using R = hp::Real40;
  using std::exp;
  using std::sqrt;
  if (q < 2 || k < 1 || k > q - 1)
    throw std::domain_error("entropy_lower_bound: need q >= 2 and 1 <= k <= q-1");

  StirlingCertificate cert;
  cert.q = q;
  cert.k = k;
  cert.exact_value = binomial_exact(q, k);
  cert.entropy_at_ratio = entropy::binary_entropy(R(k) / R(q));
  cert.prefactor = sqrt(R(q) / (R(k) * R(q - k))) / sqrt(2 * boost::math::constants::pi<R>());
  cert.correction_factor = exp(-R(1) / (12 * k) - R(1) / (12 * (q - k)));
  cert.lower_bound = cert.prefactor * exp(R(q) * cert.entropy_at_ratio) * cert.correction_factor;

  // Binary floats are rationals, so this comparison against the exact
  // binomial is itself exact.
  if (hp::BigRat(cert.lower_bound) > hp::BigRat(cert.exact_value)) {
    throw CertificateViolation("entropy_lower_bound: computed bound exceeds the exact binomial at q=" +
                               std::to_string(q) + ", k=" + std::to_string(k));
  }
  return cert;
}

struct AsymptoticRatio {
  long long q = 0;
  long long k = 0;
  double ratio = 0;  // C(q,k) * sqrt(q) / exp(q*H(x))
};

// Nearest integer to t, ties broken downward.
template <class R>
long long nearest_int_ties_down(const R& t) {
  using std::ceil;
  return static_cast<long long>(hp::floor_to_bigint(ceil(t - R(1) / 2)));
}

// Empirical realization of the Lemma-4 constant c_x: the ratios must stay
// bounded away from zero along a fixed-x sequence of q.
inline std::vector<AsymptoticRatio> asymptotic_constant_check(double x,
                                                              const std::vector<long long>& q_list) {
  using R = hp::Real40;
  using std::exp;
  using std::sqrt;
  if (!(x > 0 && x < 1)) throw std::domain_error("asymptotic_constant_check: x must lie in (0,1)");

  std::vector<AsymptoticRatio> out;
  out.reserve(q_list.size());
  const R rx(x);
  for (long long q : q_list) {
    if (q < 2) throw std::domain_error("asymptotic_constant_check: q must be >= 2");
    long long k = nearest_int_ties_down(rx * R(q));
    k = std::max<long long>(1, std::min<long long>(q - 1, k));
    using std::abs;
    if (abs(R(k) - rx * R(q)) > 2)
      throw std::domain_error("asymptotic_constant_check: no integer k with |k - xq| <= 2 in [1, q-1]");
    const R ratio = R(binomial_exact(q, k)) * sqrt(R(q)) / exp(R(q) * entropy::binary_entropy(rx));
    out.push_back({q, k, static_cast<double>(ratio)});
  }
  return out;
}

}  // namespace crossbound::combinatorics
