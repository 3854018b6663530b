#pragma once
// Certified floors of g^(1+alpha) and high-precision log enclosures.
//
// floor(g^(1+alpha)) is certified either exactly (alpha is a double, hence a
// dyadic rational; when 1+alpha = n/2^s with small s the floor is an integer
// 2^s-th root) or through an outward-rounded enclosure of exp((1+alpha) ln g)
// whose working precision escalates 40 -> 80 -> 160 -> 320 -> 640 digits
// until the enclosure pins down a single integer floor.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "crossbound/hp.hpp"

namespace crossbound::certified {

using hp::BigInt;
using hp::BigRat;

enum class Certainty { certified, ambiguous };

struct CertifiedFloor {
  BigInt value;
  std::string input_expression;
  Certainty certainty = Certainty::ambiguous;
  unsigned working_precision = 0;  // significant digits used by the enclosure route
};

namespace detail {

inline constexpr unsigned kTiers[] = {40, 80, 160, 320, 640};

template <unsigned D>
std::optional<BigInt> floor_via_enclosure(long long g, double alpha) {
  using R = hp::Real<D>;
  using E = hp::Enclosure<R>;
  const E lng = enclose_log(E::point(R(g)));
  const E expo = E::point(R(1) + R(alpha)) * lng;  // 1+alpha is exact in R
  const E value = enclose_exp(expo);
  const BigInt flo = hp::floor_to_bigint(value.lo);
  const BigInt fhi = hp::floor_to_bigint(value.hi);
  if (flo == fhi) return flo;
  return std::nullopt;
}

inline BigInt pow_bigint(BigInt base, BigInt e) {
  BigInt r = 1;
  while (e > 0) {
    if ((e & 1) != 0) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// pre: g >= 2, alpha >= 0, precision >= 20. Ambiguity after full escalation is
// a flagged state, not an error; the caller decides how to proceed.
inline CertifiedFloor power_floor(long long g, double alpha, unsigned precision) {
  if (g < 2) throw std::domain_error("power_floor: g must be >= 2");
  if (!(alpha >= 0)) throw std::domain_error("power_floor: alpha must be >= 0");
  if (precision < 20) throw std::domain_error("power_floor: precision must be >= 20");

  CertifiedFloor out;
  {
    std::ostringstream os;
    os << g << "^(1+" << alpha << ")";
    out.input_expression = os.str();
  }

  // Exact route: 1+alpha = n / 2^s exactly. Feasible when the root degree is
  // small and g^n stays a manageable big integer.
  const BigRat expo = BigRat(1) + BigRat(alpha);
  const BigInt num = numerator(expo);
  const BigInt den = denominator(expo);
  const double bits = static_cast<double>(num) * std::log2(static_cast<double>(g));
  if (den <= 64 && bits <= 200000) {
    out.value = hp::iroot(detail::pow_bigint(g, num), den.convert_to<unsigned>());
    out.certainty = Certainty::certified;
    out.working_precision = precision;
    out.input_expression += " [exact]";
    return out;
  }

  for (unsigned tier : detail::kTiers) {
    if (tier < precision && tier != detail::kTiers[4]) continue;
    std::optional<BigInt> r;
    switch (tier) {
      case 40: r = detail::floor_via_enclosure<40>(g, alpha); break;
      case 80: r = detail::floor_via_enclosure<80>(g, alpha); break;
      case 160: r = detail::floor_via_enclosure<160>(g, alpha); break;
      case 320: r = detail::floor_via_enclosure<320>(g, alpha); break;
      default: r = detail::floor_via_enclosure<640>(g, alpha); break;
    }
    if (r) {
      out.value = *r;
      out.certainty = Certainty::certified;
      out.working_precision = tier;
      return out;
    }
  }
  out.certainty = Certainty::ambiguous;
  out.working_precision = detail::kTiers[4];
  return out;
}

namespace detail {

// Round a guard-digit enclosure outward into the requested precision; the
// 2-ulp pad covers the half-ulp conversion rounding of each endpoint.
template <unsigned P, unsigned PI>
hp::Enclosure<hp::Real<P>> shrink_outward(const hp::Enclosure<hp::Real<PI>>& inner) {
  using RO = hp::Real<P>;
  using std::abs;
  hp::Enclosure<RO> out{RO(inner.lo), RO(inner.hi)};
  const RO two_ulps = std::numeric_limits<RO>::epsilon() * 2;
  out.lo -= abs(out.lo) * two_ulps + std::numeric_limits<RO>::min();
  out.hi += abs(out.hi) * two_ulps + std::numeric_limits<RO>::min();
  return out;
}

}  // namespace detail

// Enclosure of ln x at the requested compile-time precision: computed with 8
// guard digits, endpoints rounded outward into Real<P>. Width stays within
// 10^(2-P) for any argument with |ln x| up to ~1e3.
template <unsigned P>
hp::Enclosure<hp::Real<P>> ln_hp(const BigInt& x) {
  using RI = hp::Real<P + 8>;
  using RO = hp::Real<P>;
  if (x <= 0) throw std::domain_error("ln_hp: x must be positive");
  if (x == 1) return {RO(0), RO(0)};

  return detail::shrink_outward<P>(enclose_log(hp::Enclosure<RI>::of_bigint(x)));
}

template <unsigned P>
hp::Enclosure<hp::Real<P>> ln_hp(double x) {
  using RI = hp::Real<P + 8>;
  using RO = hp::Real<P>;
  if (!(x > 0)) throw std::domain_error("ln_hp: x must be positive");
  if (x == 1) return {RO(0), RO(0)};

  return detail::shrink_outward<P>(enclose_log(hp::Enclosure<RI>::point(RI(x))));
}

template <unsigned P>
hp::Enclosure<hp::Real<P>> ln_hp(long long x) {
  return ln_hp<P>(BigInt(x));
}

}  // namespace crossbound::certified
