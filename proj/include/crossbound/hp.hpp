#pragma once
// High-precision scalars and outward-rounded enclosures.
//
// BigInt/BigRat are exact. Real<D> is a binary float with D decimal digits of
// working precision. Enclosure<R> is a closed interval [lo, hi] whose
// endpoints are pushed outward by kWidenUlps units after every operation, so
// the true real-valued result is always contained regardless of rounding.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace crossbound::hp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

template <unsigned Digits>
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                           boost::multiprecision::et_off>;

using Real40 = Real<40>;
using Real50 = Real<50>;
using Real80 = Real<80>;
using Real100 = Real<100>;

// cpp_bin_float add/sub/mul/div/sqrt are correctly rounded and the
// transcendentals are accurate to a few ulps; 64 ulps of outward slack per
// operation covers both with a wide margin.
inline constexpr int kWidenUlps = 64;

template <class R>
R ulp_pad(const R& v) {
  using std::abs;
  R mag = abs(v);
  if (mag == 0) return std::numeric_limits<R>::min();
  return mag * std::numeric_limits<R>::epsilon() * kWidenUlps;
}

template <class R>
struct Enclosure {
  R lo{};
  R hi{};

  static Enclosure point(const R& v) { return {v, v}; }
  static Enclosure exact_int(long long v) { return {R(v), R(v)}; }

  // BigInt -> float conversion may round; compensate outward.
  static Enclosure of_bigint(const BigInt& v) {
    R r(v);
    return widen(Enclosure{r, r});
  }
  static Enclosure of_bigrat(const BigRat& v) {
    R r(v);
    return widen(Enclosure{r, r});
  }

  static Enclosure widen(Enclosure e) {
    e.lo -= ulp_pad(e.lo);
    e.hi += ulp_pad(e.hi);
    return e;
  }

  R width() const { return hi - lo; }
  R mid() const { return (lo + hi) / 2; }
  bool contains(const R& v) const { return lo <= v && v <= hi; }
};

template <class R>
Enclosure<R> operator-(const Enclosure<R>& a) {
  return {-a.hi, -a.lo};  // exact
}

template <class R>
Enclosure<R> operator+(const Enclosure<R>& a, const Enclosure<R>& b) {
  return Enclosure<R>::widen({a.lo + b.lo, a.hi + b.hi});
}

template <class R>
Enclosure<R> operator-(const Enclosure<R>& a, const Enclosure<R>& b) {
  return Enclosure<R>::widen({a.lo - b.hi, a.hi - b.lo});
}

template <class R>
Enclosure<R> operator*(const Enclosure<R>& a, const Enclosure<R>& b) {
  const R p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Enclosure<R>::widen({std::min(std::min(p1, p2), std::min(p3, p4)),
                              std::max(std::max(p1, p2), std::max(p3, p4))});
}

template <class R>
Enclosure<R> operator/(const Enclosure<R>& a, const Enclosure<R>& b) {
  if (b.lo <= 0 && b.hi >= 0)
    throw std::domain_error("enclosure division: divisor interval contains zero");
  const R q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return Enclosure<R>::widen({std::min(std::min(q1, q2), std::min(q3, q4)),
                              std::max(std::max(q1, q2), std::max(q3, q4))});
}

template <class R>
Enclosure<R> enclose_exp(const Enclosure<R>& a) {
  using std::exp;
  return Enclosure<R>::widen({exp(a.lo), exp(a.hi)});
}

template <class R>
Enclosure<R> enclose_log(const Enclosure<R>& a) {
  using std::log;
  if (a.lo <= 0) throw std::domain_error("enclosure log: argument must be positive");
  if (a.lo == 1 && a.hi == 1) return {R(0), R(0)};
  return Enclosure<R>::widen({log(a.lo), log(a.hi)});
}

template <class R>
Enclosure<R> enclose_sqrt(const Enclosure<R>& a) {
  using std::sqrt;
  if (a.lo < 0) throw std::domain_error("enclosure sqrt: argument must be nonnegative");
  return Enclosure<R>::widen({sqrt(a.lo), sqrt(a.hi)});
}

// sq(a) for a >= 0
template <class R>
Enclosure<R> enclose_sq(const Enclosure<R>& a) {
  return a * a;
}

// Certified comparison: returns true only when a <= b holds for every pair of
// reals drawn from the two enclosures (the unfavorable-side test).
template <class R>
bool certified_le(const Enclosure<R>& a, const Enclosure<R>& b) {
  return a.hi <= b.lo;
}

template <class R>
bool certified_lt(const Enclosure<R>& a, const Enclosure<R>& b) {
  return a.hi < b.lo;
}

// floor(x^(1/n)) for x >= 0, n >= 1, by Newton iteration on integers.
inline BigInt iroot(const BigInt& x, unsigned n) {
  if (n == 0) throw std::domain_error("iroot: n must be >= 1");
  if (x < 0) throw std::domain_error("iroot: x must be >= 0");
  if (n == 1 || x == 0 || x == 1) return x;
  using boost::multiprecision::msb;
  using boost::multiprecision::pow;
  const unsigned bits = msb(x) + 1;
  BigInt r = BigInt(1) << ((bits + n - 1) / n);
  while (true) {
    BigInt next = ((n - 1) * r + x / pow(r, n - 1)) / n;
    if (next >= r) break;
    r = next;
  }
  while (pow(r, n) > x) --r;
  while (pow(r + 1, n) <= x) ++r;
  return r;
}

inline BigInt ceil_rat(const BigRat& v) {
  BigInt q = numerator(v) / denominator(v);
  if (q * denominator(v) < numerator(v)) ++q;  // numerator(v) > 0 case
  return q;
}

inline BigInt floor_rat(const BigRat& v) {
  BigInt q = numerator(v) / denominator(v);
  if (q * denominator(v) > numerator(v)) --q;
  return q;
}

template <class R>
BigInt floor_to_bigint(const R& v) {
  using std::floor;
  R f = floor(v);
  return f.template convert_to<BigInt>();
}

}  // namespace crossbound::hp
