#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hofer/rational.hpp"

namespace hofer {

using RatVec = std::vector<Rat>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat vec_sum(const RatVec& a) {
  Rat s = 0;
  for (const Rat& x : a) s += x;
  return s;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline RatVec vec_scale(const RatVec& a, const Rat& t) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * t;
  return c;
}

inline RatVec vec_neg(const RatVec& a) { return vec_scale(a, Rat(-1)); }

inline bool is_zero_vec(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// Scale by the positive rational that makes the entries integers with gcd 1.
// Preserves direction; the zero vector is returned unchanged.
inline RatVec primitive_direction(const RatVec& a) {
  if (is_zero_vec(a)) return a;
  Int l = 1;
  for (const Rat& x : a) {
    Int d = x.get_den();
    l = l / gcd(l, d) * d;
  }
  Int g = 0;
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int num = a[i].get_num() * (l / a[i].get_den());
    c[i] = Rat(num);
    g = gcd(g, num);
  }
  if (g > 1) {
    for (Rat& x : c) x = Rat(x.get_num() / g);
  }
  return c;
}

inline void sort_desc(RatVec& a) { std::sort(a.begin(), a.end(), std::greater<Rat>()); }

inline RatVec sorted_desc(RatVec a) {
  sort_desc(a);
  return a;
}

inline RatVec reversed(RatVec a) {
  std::reverse(a.begin(), a.end());
  return a;
}

// Snap a real vector to rationals; the last coordinate absorbs the residual so
// the result is exactly sum-zero. Reports the largest per-entry adjustment.
inline RatVec snap_sum_zero(const std::vector<double>& v, unsigned long max_den,
                            double* max_err = nullptr) {
  RatVec r(v.size());
  double err = 0;
  Rat acc = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    r[i] = snap_to_rational(v[i], max_den);
    err = std::max(err, std::abs(to_double(r[i]) - v[i]));
    acc += r[i];
  }
  if (!v.empty()) {
    r.back() = -acc;
    err = std::max(err, std::abs(to_double(r.back()) - v.back()));
  }
  if (max_err) *max_err = std::max(*max_err, err);
  return r;
}

}  // namespace hofer
