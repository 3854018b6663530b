#pragma once
// Bracketed, derivative-free root finding (Brent's method).

#include <cmath>
#include <sstream>

#include "crossbound/errors.hpp"

namespace crossbound::roots {

// Finds a root of f on [a, b]; f(a) and f(b) must have opposite signs.
// xtol is the absolute tolerance on the root location.
template <class F, class R>
R brent(F&& f, R a, R b, const R& xtol, unsigned max_iter = 400) {
  using std::abs;
  R fa = f(a);
  R fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) {
    std::ostringstream os;
    os << "brent: no sign change on bracket [" << a << ", " << b << "], f = (" << fa << ", " << fb
       << ")";
    throw ConvergenceFailure(os.str());
  }

  if (abs(fa) < abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  R c = a, fc = fa, d = b - a, s = b, fs = fb;
  bool bisected = true;

  for (unsigned it = 0; it < max_iter; ++it) {
    if (fb == 0 || abs(b - a) <= xtol) return b;

    if (fa != fc && fb != fc) {
      // inverse quadratic interpolation
      s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      // secant step
      s = b - fb * (b - a) / (fb - fa);
    }

    const R lo = (3 * a + b) / 4;
    const bool out_of_range = !((lo < s && s < b) || (b < s && s < lo));
    const bool slow = bisected ? abs(s - b) >= abs(b - c) / 2 : abs(s - b) >= abs(c - d) / 2;
    if (out_of_range || slow) {
      s = (a + b) / 2;
      bisected = true;
    } else {
      bisected = false;
    }

    fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if ((fa > 0) != (fs > 0)) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (abs(fa) < abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

}  // namespace crossbound::roots
