#pragma once

#include <initializer_list>
#include <vector>

#include "hofer/norms.hpp"
#include "hofer/sampling.hpp"

namespace testutil {

inline hofer::RatVec rv(std::initializer_list<long> xs) {
  hofer::RatVec v;
  for (long x : xs) v.push_back(hofer::Rat(x));
  return v;
}

inline hofer::RatVec rvq(std::initializer_list<const char*> xs) {
  hofer::RatVec v;
  for (const char* x : xs) v.push_back(hofer::rat_from_string(x));
  return v;
}

inline hofer::OrbitFamily orbit_family(std::initializer_list<std::initializer_list<long>> verts,
                                       hofer::FamilyMode mode = hofer::FamilyMode::KirwanHull) {
  std::vector<hofer::RatVec> vs;
  for (auto v : verts) vs.push_back(rv(v));
  const int n = static_cast<int>(vs.front().size());
  return hofer::make_family(n, mode, vs);
}

// Independent brute-force oracle: enumerate every permutation of every orbit
// label, take max / min of the pairing. No sorting tricks.
inline hofer::Rat bf_norm(const hofer::OrbitFamily& E, const hofer::RatVec& xi,
                          hofer::NormKind kind) {
  bool first = true;
  hofer::Rat mx = 0, mn = 0;
  for (const hofer::RatVec& lam : E.vertices) {
    for (const hofer::RatVec& w : hofer::weyl::orbit(lam)) {
      hofer::Rat v = hofer::dot(w, xi);
      if (first || v > mx) mx = v;
      if (first || v < mn) mn = v;
      first = false;
    }
  }
  switch (kind) {
    case hofer::NormKind::Hofer: return mx - mn;
    case hofer::NormKind::Second: return std::max(mx, hofer::Rat(-mn));
    case hofer::NormKind::OneSidedPlus: return mx;
    case hofer::NormKind::OneSidedMinus: return -mn;
  }
  throw std::logic_error("bf_norm: bad kind");
}

}  // namespace testutil
