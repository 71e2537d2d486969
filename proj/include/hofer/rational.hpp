#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hofer {

// Exact rational scalar used throughout the polytope layer.
using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline int rat_sign(const Rat& r) { return sgn(r); }

// Best rational approximation of x with denominator <= max_den,
// via the continued fraction / Stern-Brocot walk. Deterministic.
inline Rat snap_to_rational(double x, unsigned long max_den = 1000000000UL) {
  if (!std::isfinite(x)) throw std::invalid_argument("snap_to_rational: non-finite input");
  if (max_den == 0) throw std::invalid_argument("snap_to_rational: zero denominator bound");
  const bool neg = x < 0;
  double a = neg ? -x : x;

  // p/q convergents of the continued fraction of a.
  unsigned long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = a;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9.0e18) {
      if (iter == 0) throw std::invalid_argument("snap_to_rational: input too large");
      break;
    }
    unsigned long long ai = static_cast<unsigned long long>(fl);
    // Largest admissible partial quotient before the denominator bound trips.
    if (q1 != 0 && ai > (max_den - q0) / q1) {
      unsigned long long amax = (max_den - q0) / q1;
      // Semiconvergent: only take it if it improves on the last convergent.
      if (amax > 0) {
        unsigned long long ps = amax * p1 + p0, qs = amax * q1 + q0;
        double e_semi = std::abs(a - static_cast<double>(ps) / static_cast<double>(qs));
        double e_conv = std::abs(a - static_cast<double>(p1) / static_cast<double>(q1));
        if (e_semi < e_conv) { p1 = ps; q1 = qs; }
      }
      break;
    }
    unsigned long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) { p1 = p0; q1 = q0; }
  const Int pz(static_cast<unsigned long>(p1)), qz(static_cast<unsigned long>(q1));
  Rat r(pz, qz);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Serialized as "p" or "p/q".
inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace hofer
