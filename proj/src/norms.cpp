#include "hofer/norms.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

namespace hofer {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <typename T>
T max_pairing(const std::vector<RatVec>& lambdas, const std::vector<T>& xi_desc,
              bool minus_side) {
  // h+ pairs lambda (desc) with xi (desc); h- pairs lambda with -reverse(xi).
  const std::size_t n = xi_desc.size();
  T best{};
  bool first = true;
  for (const RatVec& lam : lambdas) {
    T s{};
    for (std::size_t j = 0; j < n; ++j) {
      T l;
      if constexpr (std::is_same_v<T, double>) l = to_double(lam[j]);
      else l = lam[j];
      if (minus_side) s -= l * xi_desc[n - 1 - j];
      else s += l * xi_desc[j];
    }
    if (first || s > best) { best = s; first = false; }
  }
  return best;
}

template <typename T>
T norm_closed_form(const OrbitFamily& E, std::vector<T> xi, NormKind kind) {
  std::sort(xi.begin(), xi.end(), std::greater<T>());
  switch (kind) {
    case NormKind::Hofer:
      return max_pairing(E.vertices, xi, false) + max_pairing(E.vertices, xi, true);
    case NormKind::Second:
      return std::max(max_pairing(E.vertices, xi, false), max_pairing(E.vertices, xi, true));
    case NormKind::OneSidedPlus:
      return max_pairing(E.vertices, xi, false);
    case NormKind::OneSidedMinus:
      return max_pairing(E.vertices, xi, true);
  }
  throw std::logic_error("norm_closed_form: bad kind");
}

std::string cache_key(const OrbitFamily& E, NormKind kind) {
  std::ostringstream os;
  os << E.n << '|' << static_cast<int>(kind);
  for (const RatVec& v : E.vertices) {
    os << '|';
    for (const Rat& x : v) os << rat_to_string(x) << ',';
  }
  return os.str();
}

std::mutex g_cache_mu;
std::map<std::string, Polytope> g_poly_cache;
std::map<std::string, Polytope> g_ball_cache;

Polytope zero_polytope(int n) {
  Polytope P;
  P.n = n;
  P.vertices.push_back(RatVec(n, Rat(0)));
  return P;
}

RatVec face_centroid(const Polytope& F) {
  RatVec c(F.n, Rat(0));
  for (const RatVec& v : F.vertices) c = vec_add(c, v);
  return vec_scale(c, Rat(1) / Rat(static_cast<long>(F.vertices.size())));
}

}  // namespace

const char* norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::Hofer: return "hofer";
    case NormKind::Second: return "second";
    case NormKind::OneSidedPlus: return "one-sided-plus";
    case NormKind::OneSidedMinus: return "one-sided-minus";
  }
  return "?";
}

std::optional<NormKind> norm_kind_from_name(const std::string& s) {
  if (s == "hofer") return NormKind::Hofer;
  if (s == "second") return NormKind::Second;
  if (s == "one-sided-plus" || s == "plus") return NormKind::OneSidedPlus;
  if (s == "one-sided-minus" || s == "minus") return NormKind::OneSidedMinus;
  return std::nullopt;
}

OrbitFamily make_family(int n, FamilyMode mode, std::vector<RatVec> vertices) {
  if (n < 2) throw std::invalid_argument("make_family: n >= 2 required");
  for (const RatVec& v : vertices) {
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("make_family: vertex dimension mismatch");
    if (vec_sum(v) != 0) throw std::invalid_argument("make_family: vertex is not sum-zero");
    if (!weyl::is_dominant(v)) throw NotDominant("make_family: vertex is not dominant");
  }
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw NotFull("make_family: no vertices");

  if (mode == FamilyMode::KirwanHull && vertices.size() > 1) {
    // interior sample points of the Kirwan polytope carry no information
    vertices = extreme_points(vertices);
  }

  // fullness: the orbits must span the sum-zero hyperplane
  std::vector<RatVec> span;
  for (const RatVec& v : vertices)
    for (RatVec& t : weyl::transposition_images(v)) span.push_back(std::move(t));
  if (rank_of(span) < n - 1)
    throw NotFull("make_family: orbit family does not span the sum-zero hyperplane");

  OrbitFamily E;
  E.n = n;
  E.mode = mode;
  E.vertices = std::move(vertices);
  return E;
}

Rat norm_exact(const OrbitFamily& E, const RatVec& cartan_coords, NormKind kind,
               const Rat& scale) {
  if (static_cast<int>(cartan_coords.size()) != E.n)
    throw std::invalid_argument("norm_exact: dimension mismatch");
  return scale * norm_closed_form<Rat>(E, cartan_coords, kind);
}

double norm_value(const OrbitFamily& E, const std::vector<double>& cartan_coords, NormKind kind,
                  double scale) {
  if (static_cast<int>(cartan_coords.size()) != E.n)
    throw std::invalid_argument("norm_value: dimension mismatch");
  return scale * norm_closed_form<double>(E, cartan_coords, kind);
}

double norm_value(const OrbitFamily& E, const SkewHermitian& x, NormKind kind, double scale) {
  return norm_value(E, spectrum(x).values, kind, scale);
}

std::vector<RatVec> dominant_generators(const OrbitFamily& E, NormKind kind) {
  std::vector<RatVec> reps;
  switch (kind) {
    case NormKind::Hofer:
      for (const RatVec& a : E.vertices)
        for (const RatVec& b : E.vertices) reps.push_back(vec_sub(a, reversed(b)));
      break;
    case NormKind::Second:
      for (const RatVec& a : E.vertices) {
        reps.push_back(a);
        reps.push_back(vec_neg(reversed(a)));
      }
      break;
    case NormKind::OneSidedPlus:
      reps = E.vertices;
      break;
    case NormKind::OneSidedMinus:
      for (const RatVec& a : E.vertices) reps.push_back(vec_neg(reversed(a)));
      break;
  }
#ifndef NDEBUG
  for (const RatVec& r : reps) assert(weyl::is_dominant(r));
#endif
  std::sort(reps.begin(), reps.end(), lex_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

Polytope hull_of_weyl_orbits(const std::vector<RatVec>& dominant_reps, int n) {
  std::vector<RatVec> all;
  std::vector<std::vector<RatVec>> orbits;
  orbits.reserve(dominant_reps.size());
  for (const RatVec& d : dominant_reps) {
    orbits.push_back(weyl::orbit(d));
    for (const RatVec& p : orbits.back()) all.push_back(p);
  }
  std::sort(all.begin(), all.end(), lex_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  Polytope P;
  P.n = n;
  for (std::size_t k = 0; k < dominant_reps.size(); ++k) {
    // a dominant representative is extreme iff its whole orbit is
    auto it = std::lower_bound(all.begin(), all.end(), dominant_reps[k], lex_less);
    const int idx = static_cast<int>(it - all.begin());
    if (!in_convex_hull(dominant_reps[k], all, idx)) {
      for (const RatVec& p : orbits[k]) P.vertices.push_back(p);
    }
  }
  std::sort(P.vertices.begin(), P.vertices.end(), lex_less);
  P.vertices.erase(std::unique(P.vertices.begin(), P.vertices.end()), P.vertices.end());
  return P;
}

Polytope hofer_polytope(const OrbitFamily& E, NormKind kind) {
  if (E.n > 6) throw DimensionTooLarge("hofer_polytope: n > 6");
  const std::string key = cache_key(E, kind);
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_poly_cache.find(key);
    if (it != g_poly_cache.end()) return it->second;
  }
  Polytope P = hull_of_weyl_orbits(dominant_generators(E, kind), E.n);
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return g_poly_cache.emplace(key, std::move(P)).first->second;
}

Polytope unit_ball_cartan(const OrbitFamily& E, NormKind kind) {
  const std::string key = cache_key(E, kind);
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_ball_cache.find(key);
    if (it != g_ball_cache.end()) return it->second;
  }
  Polytope B = polar(hofer_polytope(E, kind));
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return g_ball_cache.emplace(key, std::move(B)).first->second;
}

void clear_norm_caches() {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  g_poly_cache.clear();
  g_ball_cache.clear();
}

NormingCertificate norming_certificate(const OrbitFamily& E, const RatVec& x, NormKind kind) {
  if (is_zero_vec(x)) throw ZeroVector("norming_certificate: x = 0");
  if (!weyl::is_dominant(x)) throw NotDominant("norming_certificate: x not dominant");

  const Polytope Pplus = hofer_polytope(E, NormKind::OneSidedPlus);
  Polytope plusF = face(Pplus, x);
  Polytope minusF = face(Pplus, vec_neg(x));  // argmin face of conv(E)

  NormingCertificate cert;
  switch (kind) {
    case NormKind::Hofer:
      cert.plus_face = plusF;
      cert.minus_face = minusF;
      cert.functional = vec_sub(face_centroid(plusF), face_centroid(minusF));
      break;
    case NormKind::OneSidedPlus:
      cert.plus_face = plusF;
      cert.minus_face = zero_polytope(E.n);
      cert.functional = face_centroid(plusF);
      break;
    case NormKind::OneSidedMinus:
      cert.plus_face = zero_polytope(E.n);
      cert.minus_face = minusF;
      cert.functional = vec_neg(face_centroid(minusF));
      break;
    case NormKind::Second: {
      const Rat hp = support(Pplus, x);
      const Rat hm = support(Pplus, vec_neg(x));
      if (hp > hm) {
        cert.plus_face = plusF;
        cert.minus_face = zero_polytope(E.n);
        cert.functional = face_centroid(plusF);
      } else if (hm > hp) {
        cert.plus_face = zero_polytope(E.n);
        cert.minus_face = minusF;
        cert.functional = vec_neg(face_centroid(minusF));
      } else {
        cert.plus_face = plusF;
        cert.minus_face = minusF;
        cert.functional = vec_scale(vec_sub(face_centroid(plusF), face_centroid(minusF)),
                                    make_rat(1, 2));
      }
      break;
    }
  }
  return cert;
}

bool majorizes_exact(const RatVec& w_spec, const RatVec& z_spec) {
  if (w_spec.size() != z_spec.size())
    throw std::invalid_argument("majorizes: dimension mismatch");
  RatVec w = sorted_desc(w_spec), z = sorted_desc(z_spec);
  if (vec_sum(w) != 0 || vec_sum(z) != 0)
    throw std::invalid_argument("majorizes: spectra must be sum-zero");

  bool by_sums = true;
  Rat sw = 0, sz = 0;
  for (std::size_t m = 0; m + 1 < w.size(); ++m) {
    sw += w[m];
    sz += z[m];
    if (sz > sw) { by_sums = false; break; }
  }

  // independent route: z in conv(W.w) (Rado / Schur-Horn)
  bool by_hull = in_convex_hull(z, weyl::orbit(w));
  if (by_sums != by_hull)
    throw std::logic_error("majorizes: partial-sum and hull routes disagree");
  return by_sums;
}

namespace {

// Spectra of float matrices land on a common grid before the exact tests, so
// eigenvalues that agree up to solver noise collapse to the same rational and
// knife-edge ties (equal partial sums) survive the rationalization.
RatVec grid_sum_zero(const std::vector<double>& v, unsigned long grid_den) {
  const long d = static_cast<long>(grid_den);
  RatVec r(v.size());
  Rat acc = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    r[i] = make_rat(std::lround(v[i] * static_cast<double>(d)), d);
    acc += r[i];
  }
  if (!v.empty()) r.back() = -acc;
  return r;
}

}  // namespace

bool majorizes(const SkewHermitian& w, const SkewHermitian& z, unsigned long grid_den) {
  if (w.n() != z.n()) throw std::invalid_argument("majorizes: dimension mismatch");
  RatVec wr = grid_sum_zero(spectrum(w).values, grid_den);
  RatVec zr = grid_sum_zero(spectrum(z).values, grid_den);
  return majorizes_exact(wr, zr);
}

BallFace face_of_ball(const OrbitFamily& E, const RatVec& x, NormKind kind) {
  if (is_zero_vec(x)) throw ZeroVector("face_of_ball: x = 0");
  if (!weyl::is_dominant(x)) throw NotDominant("face_of_ball: x not dominant");

  Polytope B = unit_ball_cartan(E, kind);
  Polytope F = face(B, x);

  std::vector<Facet> chamber;
  for (int i = 0; i + 1 < E.n; ++i) {
    RatVec a(E.n, Rat(0));
    a[i] = -1;
    a[i + 1] = 1;  // y_i >= y_{i+1}
    chamber.push_back(canonical_facet(std::move(a), Rat(0)));
  }
  BallFace out;
  out.cartan_part = intersect_with_halfspaces(F, chamber);
  out.blocks = weyl::stabilizer_blocks(x);
  return out;
}

AbelianFaces has_abelian_faces(const OrbitFamily& E, NormKind kind) {
  const Polytope P = hofer_polytope(E, kind);
  AbelianFaces out;
  out.abelian = true;
  for (const RatVec& v : P.vertices) {
    if (!weyl::is_regular(v)) {
      out.abelian = false;
      out.witness = v;
      break;
    }
  }
  return out;
}

std::optional<RatVec> weyl_chamber_norm_test(const OrbitFamily& E, NormKind kind) {
  const Polytope P = hofer_polytope(E, kind);
  std::vector<RatVec> reps;
  for (const RatVec& v : P.vertices) reps.push_back(weyl::dominant(v));
  std::sort(reps.begin(), reps.end(), lex_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (reps.size() != 1) return std::nullopt;
  const RatVec& y = reps[0];
  if (!weyl::is_regular(y) || !weyl::is_symmetric(y)) return std::nullopt;
  return y;
}

double injectivity_radius(const OrbitFamily& E, NormKind kind) {
  const Polytope B = unit_ball_cartan(E, kind);
  Rat worst = 0;
  for (const RatVec& y : B.vertices)
    for (const Rat& c : y) worst = std::max(worst, rat_abs(c));
  if (worst == 0) throw std::logic_error("injectivity_radius: degenerate ball");
  return kPi / to_double(worst);
}

}  // namespace hofer
