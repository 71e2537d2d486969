#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "hofer/errors.hpp"
#include "hofer/ratvec.hpp"

namespace hofer::weyl {

// Type A Weyl layer: the symmetric group S_n acting on sum-zero n-vectors by
// coordinate permutation. The dominant chamber is the set of weakly
// DECREASING vectors. Everything the rest of the library knows about the
// group factors through the functions in this namespace, so another root
// system (signed permutations, ...) could be slotted in behind the same
// surface.

inline constexpr int kMaxOrbitDim = 8;  // n! guard for orbit enumeration

template <typename T>
std::vector<T> dominant(std::vector<T> v) {
  std::sort(v.begin(), v.end(), std::greater<T>());
  return v;
}

template <typename T>
bool is_dominant(const std::vector<T>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

// The longest element w* acts on coordinates as the order reversal.
template <typename T>
std::vector<T> longest_element(std::vector<T> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// All distinct coordinate permutations, lexicographically sorted.
template <typename T>
std::vector<std::vector<T>> orbit(const std::vector<T>& v) {
  if (static_cast<int>(v.size()) > kMaxOrbitDim)
    throw DimensionTooLarge("weyl::orbit: n > 8");
  std::vector<T> w = v;
  std::sort(w.begin(), w.end());
  std::vector<std::vector<T>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_regular(const RatVec& v) {
  RatVec s = sorted_desc(v);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return false;
  return true;
}

// Float overload: coordinates closer than eps_cluster count as equal.
inline bool is_regular(const std::vector<double>& v, double eps_cluster) {
  std::vector<double> s = dominant(v);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] - s[i + 1] <= eps_cluster) return false;
  return true;
}

// y symmetric <=> w*.y = -y (reversal equals negation), for dominant y.
inline bool is_symmetric(const RatVec& v) {
  if (!is_dominant(v)) throw NotDominant("is_symmetric: input not dominant");
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    if (v[n - 1 - i] != -v[i]) return false;
  return true;
}

// Fundamental weights omega_k = sum of the first k coordinate directions,
// shifted to sum zero. Their nonnegative span is the dominant chamber.
inline std::vector<RatVec> chamber_generators(int n) {
  if (n < 2) throw std::invalid_argument("chamber_generators: n >= 2 required");
  std::vector<RatVec> out;
  for (int k = 1; k < n; ++k) {
    RatVec w(n);
    for (int i = 0; i < n; ++i) {
      w[i] = (i < k ? Rat(1) : Rat(0)) - make_rat(k, n);
    }
    out.push_back(std::move(w));
  }
  return out;
}

// Run lengths of equal coordinates of a dominant vector; encodes the
// multiplicity blocks of the stabilizer Z(x).
inline std::vector<int> stabilizer_blocks(const RatVec& v) {
  if (!is_dominant(v)) throw NotDominant("stabilizer_blocks: input not dominant");
  std::vector<int> blocks;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[i]) ++j;
    blocks.push_back(static_cast<int>(j - i + 1));
    i = j + 1;
  }
  return blocks;
}

inline std::vector<int> stabilizer_blocks(const std::vector<double>& v, double eps_cluster) {
  if (!is_dominant(v)) throw NotDominant("stabilizer_blocks: input not dominant");
  std::vector<int> blocks;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[i] - v[j + 1] <= eps_cluster) ++j;
    blocks.push_back(static_cast<int>(j - i + 1));
    i = j + 1;
  }
  return blocks;
}

// Images of v under all transpositions (plus v itself). For nonzero v these
// span the same subspace as the full orbit, which makes them a cheap exact
// certificate for fullness rank checks.
inline std::vector<RatVec> transposition_images(const RatVec& v) {
  std::vector<RatVec> out{v};
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) continue;
      RatVec w = v;
      std::swap(w[i], w[j]);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace hofer::weyl
