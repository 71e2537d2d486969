#include "hofer/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>

namespace hofer {

namespace {

// ---------------------------------------------------------------------------
// rational Gaussian elimination helpers
// ---------------------------------------------------------------------------

// Inverse of a square matrix; false when singular.
bool invert_square(RatMat M, RatMat& inv) {
  const int d = M.rows;
  inv = RatMat(d, d);
  for (int i = 0; i < d; ++i) inv.at(i, i) = 1;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int i = col; i < d; ++i)
      if (M.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return false;
    if (piv != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(M.at(piv, j), M.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const Rat f = 1 / M.at(col, col);
    for (int j = 0; j < d; ++j) {
      M.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (int i = 0; i < d; ++i) {
      if (i == col) continue;
      const Rat g = M.at(i, col);
      if (g == 0) continue;
      for (int j = 0; j < d; ++j) {
        M.at(i, j) -= g * M.at(col, j);
        inv.at(i, j) -= g * inv.at(col, j);
      }
    }
  }
  return true;
}

// Nullspace basis of A x = 0 (x in R^cols).
std::vector<RatVec> nullspace(RatMat A) {
  const int m = A.rows, n = A.cols;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (A.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(r, j));
    const Rat f = 1 / A.at(r, col);
    for (int j = 0; j < n; ++j) A.at(r, j) *= f;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const Rat g = A.at(i, col);
      if (g == 0) continue;
      for (int j = 0; j < n; ++j) A.at(i, j) -= g * A.at(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(n, Rat(0));
    v[free_col] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -A.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Particular solution of A x = b; nullopt when inconsistent.
std::optional<RatVec> solve_general(RatMat A, RatVec b) {
  const int m = A.rows, n = A.cols;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (A.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(r, j));
    std::swap(b[piv], b[r]);
    const Rat f = 1 / A.at(r, col);
    for (int j = 0; j < n; ++j) A.at(r, j) *= f;
    b[r] *= f;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const Rat g = A.at(i, col);
      if (g == 0) continue;
      for (int j = 0; j < n; ++j) A.at(i, j) -= g * A.at(r, j);
      b[i] -= g * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  RatVec x(n, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Greedy maximal independent subset (indices) of the given vectors.
std::vector<int> independent_subset(const std::vector<RatVec>& vecs) {
  std::vector<int> chosen;
  std::vector<RatVec> echelon;
  for (int idx = 0; idx < static_cast<int>(vecs.size()); ++idx) {
    RatVec v = vecs[idx];
    for (const RatVec& e : echelon) {
      // e is normalized with leading 1 at its pivot position
      std::size_t p = 0;
      while (p < e.size() && e[p] == 0) ++p;
      if (p < v.size() && v[p] != 0) {
        const Rat f = v[p];
        for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * e[j];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    const Rat f = 1 / v[p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] *= f;
    echelon.push_back(std::move(v));
    chosen.push_back(idx);
    std::sort(echelon.begin(), echelon.end(), [](const RatVec& a, const RatVec& b) {
      std::size_t pa = 0, pb = 0;
      while (pa < a.size() && a[pa] == 0) ++pa;
      while (pb < b.size() && b[pb] == 0) ++pb;
      return pa < pb;
    });
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// double description (vertex enumeration of bounded H-polytopes)
// ---------------------------------------------------------------------------

using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, int i) { b[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

inline Bits bits_and(const Bits& a, const Bits& b) {
  Bits c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] & b[i];
  return c;
}

inline bool bits_subset(const Bits& small, const Bits& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] & ~big[i]) return false;
  return true;
}

inline int bits_count(const Bits& b) {
  int c = 0;
  for (std::uint64_t w : b) c += __builtin_popcountll(w);
  return c;
}

struct Ray {
  std::vector<Int> v;  // d+1 integer coordinates, primitive
  Bits act;            // active rows by original row index
};

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

std::vector<Int> integerize_row(const RatVec& a, const Rat& b) {
  Int l = 1;
  for (const Rat& x : a) l = l / gcd(l, Int(x.get_den())) * x.get_den();
  l = l / gcd(l, Int(b.get_den())) * b.get_den();
  std::vector<Int> row(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) row[i] = a[i].get_num() * (l / a[i].get_den());
  row[a.size()] = -b.get_num() * (l / b.get_den());
  make_primitive(row);
  return row;
}

}  // namespace

std::vector<RatVec> enumerate_hpolytope_vertices(
    const std::vector<std::pair<RatVec, Rat>>& ineqs, int d) {
  const int D = d + 1;
  std::vector<std::vector<Int>> rows;
  rows.reserve(ineqs.size() + 1);
  for (const auto& [a, b] : ineqs) {
    if (static_cast<int>(a.size()) != d)
      throw std::invalid_argument("enumerate_hpolytope_vertices: row dimension mismatch");
    rows.push_back(integerize_row(a, b));
  }
  {
    std::vector<Int> trow(D, Int(0));  // t >= 0, i.e. -t <= 0
    trow[d] = -1;
    rows.push_back(std::move(trow));
  }
  const int R = static_cast<int>(rows.size());
  const int W = (R + 63) / 64;

  // Initial simplicial cone from D independent rows.
  std::vector<RatVec> row_rats(R);
  for (int i = 0; i < R; ++i) {
    row_rats[i].resize(D);
    for (int j = 0; j < D; ++j) row_rats[i][j] = Rat(rows[i][j]);
  }
  std::vector<int> chosen = independent_subset(row_rats);
  if (static_cast<int>(chosen.size()) < D)
    throw std::logic_error("enumerate_hpolytope_vertices: system is not bounded");
  chosen.resize(D);

  RatMat M(D, D), Minv;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) M.at(i, j) = row_rats[chosen[i]][j];
  if (!invert_square(M, Minv))
    throw std::logic_error("enumerate_hpolytope_vertices: initial basis singular");

  std::vector<bool> processed(R, false);
  for (int c : chosen) processed[c] = true;

  std::vector<Ray> rays;
  for (int j = 0; j < D; ++j) {
    RatVec col(D);
    for (int i = 0; i < D; ++i) col[i] = -Minv.at(i, j);
    Ray r;
    r.v.resize(D);
    Int l = 1;
    for (const Rat& x : col) l = l / gcd(l, Int(x.get_den())) * x.get_den();
    for (int i = 0; i < D; ++i) r.v[i] = col[i].get_num() * (l / col[i].get_den());
    make_primitive(r.v);
    r.act.assign(W, 0);
    for (int k = 0; k < D; ++k)
      if (k != j) set_bit(r.act, chosen[k]);
    rays.push_back(std::move(r));
  }

  // Insert the remaining rows one at a time.
  for (int q = 0; q < R; ++q) {
    if (processed[q]) continue;
    processed[q] = true;
    const std::vector<Int>& row = rows[q];

    std::vector<Int> s(rays.size());
    std::vector<int> pos, neg, zer;
    for (int i = 0; i < static_cast<int>(rays.size()); ++i) {
      Int acc = 0;
      for (int j = 0; j < D; ++j) acc += row[j] * rays[i].v[j];
      s[i] = acc;
      if (acc > 0) pos.push_back(i);
      else if (acc < 0) neg.push_back(i);
      else zer.push_back(i);
    }
    if (pos.empty()) {
      for (int i : zer) set_bit(rays[i].act, q);
      continue;
    }

    // create the cut rays first, while every current ray is still intact
    std::vector<Ray> newrays;
    for (int p : pos) {
      for (int m : neg) {
        Bits z = bits_and(rays[p].act, rays[m].act);
        if (bits_count(z) < d - 1) continue;
        bool adjacent = true;
        for (int r2 = 0; r2 < static_cast<int>(rays.size()); ++r2) {
          if (r2 == p || r2 == m) continue;
          if (bits_subset(z, rays[r2].act)) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v.resize(D);
        for (int j = 0; j < D; ++j) nr.v[j] = s[p] * rays[m].v[j] - s[m] * rays[p].v[j];
        make_primitive(nr.v);
        nr.act = std::move(z);
        set_bit(nr.act, q);
        newrays.push_back(std::move(nr));
      }
    }

    std::vector<Ray> next;
    next.reserve(neg.size() + zer.size() + newrays.size());
    for (int i : zer) {
      set_bit(rays[i].act, q);
      next.push_back(std::move(rays[i]));
    }
    for (int i : neg) next.push_back(std::move(rays[i]));
    for (Ray& nr : newrays) next.push_back(std::move(nr));
    rays = std::move(next);
    if (rays.empty()) break;  // feasible set empty
  }

  std::vector<RatVec> verts;
  verts.reserve(rays.size());
  for (const Ray& r : rays) {
    if (r.v[d] == 0) {
      // A surviving direction with t = 0 would mean an unbounded feasible set.
      bool all_zero = std::all_of(r.v.begin(), r.v.end(), [](const Int& x) { return x == 0; });
      if (all_zero) continue;
      throw std::logic_error("enumerate_hpolytope_vertices: unbounded feasible set");
    }
    assert(r.v[d] > 0);
    RatVec u(d);
    for (int j = 0; j < d; ++j) {
      u[j] = Rat(r.v[j], r.v[d]);
      u[j].canonicalize();
    }
    verts.push_back(std::move(u));
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

// ---------------------------------------------------------------------------
// hull and basic queries
// ---------------------------------------------------------------------------

std::vector<RatVec> extreme_points(const std::vector<RatVec>& points) {
  std::vector<RatVec> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int N = static_cast<int>(pts.size());
  if (N <= 2) return pts;

  std::vector<char> in_s(N, 0), discarded(N, 0);
  std::vector<int> s_idx;
  in_s[0] = 1;  // lex-min point is a vertex
  s_idx.push_back(0);

  auto gather = [&]() {
    std::vector<RatVec> s;
    s.reserve(s_idx.size());
    for (int i : s_idx) s.push_back(pts[i]);
    return s;
  };

  for (int i = 0; i < N; ++i) {
    if (in_s[i] || discarded[i]) continue;
    for (;;) {
      if (in_s[i]) break;
      RatVec sep;
      if (in_convex_hull(pts[i], gather(), -1, &sep)) {
        discarded[i] = 1;
        break;
      }
      // The lex-max maximizer of the separating functional is a hull vertex.
      int best = -1;
      Rat best_val;
      for (int j = 0; j < N; ++j) {
        if (discarded[j]) continue;
        Rat val = dot(sep, pts[j]);
        if (best < 0 || val > best_val || (val == best_val && lex_less(pts[best], pts[j]))) {
          best = j;
          best_val = val;
        }
      }
      assert(best >= 0 && !in_s[best]);
      in_s[best] = 1;
      s_idx.push_back(best);
      if (best == i) break;
    }
  }
  std::vector<RatVec> out = gather();
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Polytope hull(const std::vector<RatVec>& points) {
  if (points.empty()) throw DegenerateInput("hull: no input points");
  const int n = static_cast<int>(points[0].size());
  for (const RatVec& p : points) {
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("hull: mixed dimensions");
    if (vec_sum(p) != 0) throw std::invalid_argument("hull: point is not sum-zero");
  }
  Polytope P;
  P.n = n;
  P.vertices = extreme_points(points);
  return P;
}

Rat support(const Polytope& P, const RatVec& x) {
  if (P.empty()) throw DegenerateInput("support: empty polytope");
  Rat best = dot(P.vertices[0], x);
  for (std::size_t i = 1; i < P.vertices.size(); ++i) best = std::max(best, dot(P.vertices[i], x));
  return best;
}

std::vector<int> argmax_vertices(const Polytope& P, const RatVec& x) {
  Rat best = support(P, x);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(P.vertices.size()); ++i)
    if (dot(P.vertices[i], x) == best) out.push_back(i);
  return out;
}

Polytope face(const Polytope& P, const RatVec& x) {
  if (is_zero_vec(x)) throw ZeroDirection("face: zero direction");
  Polytope F;
  F.n = P.n;
  for (int i : argmax_vertices(P, x)) F.vertices.push_back(P.vertices[i]);
  return F;  // argmax vertices of P are already extreme and lex-sorted
}

bool contains(const Polytope& P, const RatVec& x) {
  if (P.empty()) return false;
  return in_convex_hull(x, P.vertices);
}

Rat gauge_lp_exact(const Polytope& P, const RatVec& x) {
  auto g = gauge_lp(x, P.vertices);
  if (!g) throw OriginNotInterior("gauge: point outside the cone spanned by P");
  return *g;
}

// ---------------------------------------------------------------------------
// H-representation, polar
// ---------------------------------------------------------------------------

Facet canonical_facet(RatVec normal, Rat offset) {
  RatVec prim = primitive_direction(normal);
  // positive scale factor prim = t * normal
  for (std::size_t k = 0; k < normal.size(); ++k) {
    if (normal[k] != 0) {
      offset *= prim[k] / normal[k];
      break;
    }
  }
  return Facet{std::move(prim), std::move(offset)};
}

namespace {

Facet canonical_equality(RatVec normal, Rat offset) {
  RatVec prim = primitive_direction(normal);
  Rat scale;
  for (std::size_t k = 0; k < normal.size(); ++k) {
    if (normal[k] != 0) {
      scale = prim[k] / normal[k];
      break;
    }
  }
  // equalities may be flipped freely: fix the first nonzero entry positive
  for (std::size_t k = 0; k < prim.size(); ++k) {
    if (prim[k] != 0) {
      if (prim[k] < 0) {
        for (Rat& x : prim) x = -x;
        scale = -scale;
      }
      break;
    }
  }
  return Facet{std::move(prim), offset * scale};
}

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

// Coordinates of the vertices relative to (v0; basis columns), basis being a
// row-independent subset selection of the difference vectors.
struct AffineChart {
  RatVec v0;
  std::vector<RatVec> basis;    // m ambient columns
  std::vector<int> pivot_rows;  // m independent coordinate rows of the basis
  RatMat solve_inv;             // inverse of basis restricted to pivot rows

  int m() const { return static_cast<int>(basis.size()); }

  RatVec to_coords(const RatVec& p) const {
    RatVec rhs(m());
    for (int i = 0; i < m(); ++i) rhs[i] = p[pivot_rows[i]] - v0[pivot_rows[i]];
    return apply_mat(solve_inv, rhs);
  }

  RatVec from_coords(const RatVec& u) const {
    RatVec p = v0;
    for (int j = 0; j < m(); ++j)
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += basis[j][i] * u[j];
    return p;
  }
};

AffineChart make_chart(const Polytope& P) {
  AffineChart ch;
  ch.v0 = P.vertices[0];
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < P.vertices.size(); ++i) diffs.push_back(vec_sub(P.vertices[i], ch.v0));
  std::vector<int> idx = independent_subset(diffs);
  for (int i : idx) ch.basis.push_back(diffs[i]);
  const int m = ch.m();
  if (m == 0) return ch;
  // independent rows of the n x m basis matrix
  std::vector<RatVec> rows(ch.v0.size(), RatVec(m));
  for (std::size_t i = 0; i < ch.v0.size(); ++i)
    for (int j = 0; j < m; ++j) rows[i][j] = ch.basis[j][i];
  ch.pivot_rows = independent_subset(rows);
  assert(static_cast<int>(ch.pivot_rows.size()) == m);
  RatMat M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M.at(i, j) = ch.basis[j][ch.pivot_rows[i]];
  bool ok = invert_square(M, ch.solve_inv);
  assert(ok);
  (void)ok;
  return ch;
}

// Lift a chart covector a (facet of the coordinate polytope) to the ambient
// normal inside span(basis): z = B (B^T B)^{-1} a.
RatVec lift_normal(const AffineChart& ch, const RatVec& a) {
  const int m = ch.m();
  RatMat G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G.at(i, j) = dot(ch.basis[i], ch.basis[j]);
  RatMat Ginv;
  bool ok = invert_square(G, Ginv);
  assert(ok);
  (void)ok;
  RatVec w = apply_mat(Ginv, a);
  RatVec z(ch.v0.size(), Rat(0));
  for (int j = 0; j < m; ++j)
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += ch.basis[j][i] * w[j];
  return z;
}

}  // namespace

RatVec apply_mat(const RatMat& M, const RatVec& v) {
  RatVec out(M.rows, Rat(0));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (M.at(i, j) != 0) out[i] += M.at(i, j) * v[j];
  return out;
}

HRep h_representation(const Polytope& P) {
  if (P.empty()) throw DegenerateInput("h_representation: empty polytope");
  const int n = P.n;
  HRep rep;
  AffineChart ch = make_chart(P);
  const int m = ch.m();
  rep.lower_dimensional = m < n - 1;

  if (m > 0) {
    std::vector<RatVec> coords;
    coords.reserve(P.vertices.size());
    for (const RatVec& v : P.vertices) coords.push_back(ch.to_coords(v));
    RatVec centroid(m, Rat(0));
    for (const RatVec& u : coords) centroid = vec_add(centroid, u);
    centroid = vec_scale(centroid, Rat(1) / Rat(static_cast<long>(coords.size())));

    std::vector<std::pair<RatVec, Rat>> polar_rows;
    polar_rows.reserve(coords.size());
    for (const RatVec& u : coords) polar_rows.emplace_back(vec_sub(u, centroid), Rat(1));
    std::vector<RatVec> polar_verts = enumerate_hpolytope_vertices(polar_rows, m);

    for (const RatVec& y : polar_verts) {
      RatVec z = lift_normal(ch, y);
      Rat beta = dot(z, ch.v0) + 1 + dot(y, centroid);
      rep.facets.push_back(canonical_facet(std::move(z), std::move(beta)));
    }
    std::sort(rep.facets.begin(), rep.facets.end(), facet_less);
  }

  // affine-hull equalities: {w : B^T w = 0, sum w = 0}
  if (rep.lower_dimensional) {
    RatMat A(m + 1, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = ch.basis[i][j];
    for (int j = 0; j < n; ++j) A.at(m, j) = 1;
    for (const RatVec& w : nullspace(A))
      rep.equalities.push_back(canonical_equality(w, dot(w, ch.v0)));
    std::sort(rep.equalities.begin(), rep.equalities.end(), facet_less);
  }
  return rep;
}

const HRep& ensure_hrep(Polytope& P) {
  if (!P.hrep) P.hrep = h_representation(P);
  return *P.hrep;
}

namespace {

// Fast chart for the full sum-zero hyperplane, basis f_k = e_k - e_{k+1}.
RatVec sumzero_from_coords(const RatVec& u) {
  const int n = static_cast<int>(u.size()) + 1;
  RatVec y(n);
  y[0] = u[0];
  for (int k = 1; k < n - 1; ++k) y[k] = u[k] - u[k - 1];
  y[n - 1] = -u[n - 2];
  return y;
}

bool zero_interior_in_span(const Polytope& P, const std::vector<RatVec>& basis) {
  for (const RatVec& f : basis) {
    if (!in_cone(f, P.vertices)) return false;
    if (!in_cone(vec_neg(f), P.vertices)) return false;
  }
  return true;
}

}  // namespace

Polytope polar(const Polytope& P) {
  if (P.empty()) throw DegenerateInput("polar: empty polytope");
  const int n = P.n;
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < P.vertices.size(); ++i)
    diffs.push_back(vec_sub(P.vertices[i], P.vertices[0]));
  if (rank_of(diffs) < n - 1)
    throw OriginNotInterior("polar: polytope is lower-dimensional in the sum-zero hyperplane");
  std::vector<RatVec> base;
  for (int k = 0; k + 1 < n; ++k) {
    RatVec f(n, Rat(0));
    f[k] = 1;
    f[k + 1] = -1;
    base.push_back(std::move(f));
  }
  if (!zero_interior_in_span(P, base))
    throw OriginNotInterior("polar: origin not interior to the polytope");

  std::vector<std::pair<RatVec, Rat>> rows;
  rows.reserve(P.vertices.size());
  for (const RatVec& v : P.vertices) {
    RatVec a(n - 1);
    for (int k = 0; k + 1 < n; ++k) a[k] = v[k] - v[k + 1];
    rows.emplace_back(std::move(a), Rat(1));
  }
  std::vector<RatVec> us = enumerate_hpolytope_vertices(rows, n - 1);

  Polytope Q;
  Q.n = n;
  Q.vertices.reserve(us.size());
  for (const RatVec& u : us) Q.vertices.push_back(sumzero_from_coords(u));
  std::sort(Q.vertices.begin(), Q.vertices.end(), lex_less);

  // Each vertex of P is a facet <v, y> <= 1 of the polar.
  HRep rep;
  rep.lower_dimensional = false;
  for (const RatVec& v : P.vertices) rep.facets.push_back(canonical_facet(v, Rat(1)));
  std::sort(rep.facets.begin(), rep.facets.end(), facet_less);
  Q.hrep = std::move(rep);
  return Q;
}

Polytope polar_within(const Polytope& P, const std::vector<RatVec>& basis) {
  if (P.empty()) throw DegenerateInput("polar_within: empty polytope");
  const int d = static_cast<int>(basis.size());
  if (!zero_interior_in_span(P, basis))
    throw OriginNotInterior("polar_within: origin not interior relative to the subspace");
  std::vector<std::pair<RatVec, Rat>> rows;
  rows.reserve(P.vertices.size());
  for (const RatVec& v : P.vertices) {
    RatVec a(d);
    for (int k = 0; k < d; ++k) a[k] = dot(basis[k], v);
    rows.emplace_back(std::move(a), Rat(1));
  }
  std::vector<RatVec> us = enumerate_hpolytope_vertices(rows, d);
  Polytope Q;
  Q.n = P.n;
  for (const RatVec& u : us) {
    RatVec y(P.n, Rat(0));
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < P.n; ++i) y[i] += basis[k][i] * u[k];
    Q.vertices.push_back(std::move(y));
  }
  std::sort(Q.vertices.begin(), Q.vertices.end(), lex_less);
  return Q;
}

Rat gauge(const Polytope& P, const RatVec& x) { return support(polar(P), x); }

Rat gauge_from_hrep(const HRep& hrep, const RatVec& x) {
  if (!hrep.equalities.empty())
    throw OriginNotInterior("gauge_from_hrep: lower-dimensional polytope");
  Rat best = 0;
  for (const Facet& f : hrep.facets) {
    if (f.offset <= 0) throw OriginNotInterior("gauge_from_hrep: origin not interior");
    best = std::max(best, Rat(dot(f.normal, x) / f.offset));
  }
  return best;
}

Polytope polytope_from_hrep(const HRep& hrep, int n) {
  // Solve the equality system (sum-zero plus hull equalities).
  const int ne = static_cast<int>(hrep.equalities.size());
  RatMat A(ne + 1, n);
  RatVec b(ne + 1);
  for (int j = 0; j < n; ++j) A.at(0, j) = 1;
  b[0] = 0;
  for (int i = 0; i < ne; ++i) {
    for (int j = 0; j < n; ++j) A.at(i + 1, j) = hrep.equalities[i].normal[j];
    b[i + 1] = hrep.equalities[i].offset;
  }
  auto y0 = solve_general(A, b);
  if (!y0) throw DegenerateInput("polytope_from_hrep: inconsistent equalities");
  std::vector<RatVec> C = nullspace(A);
  const int d = static_cast<int>(C.size());

  std::vector<std::pair<RatVec, Rat>> rows;
  for (const Facet& f : hrep.facets) {
    RatVec a(d);
    for (int k = 0; k < d; ++k) a[k] = dot(f.normal, C[k]);
    rows.emplace_back(std::move(a), f.offset - dot(f.normal, *y0));
  }
  std::vector<RatVec> us = enumerate_hpolytope_vertices(rows, d);
  Polytope P;
  P.n = n;
  for (const RatVec& u : us) {
    RatVec y = *y0;
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < n; ++i) y[i] += C[k][i] * u[k];
    P.vertices.push_back(std::move(y));
  }
  std::sort(P.vertices.begin(), P.vertices.end(), lex_less);
  return P;
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
  if (P.n != Q.n) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (P.empty() || Q.empty()) throw DegenerateInput("minkowski_sum: empty polytope");
  std::vector<RatVec> sums;
  sums.reserve(P.vertices.size() * Q.vertices.size());
  for (const RatVec& p : P.vertices)
    for (const RatVec& q : Q.vertices) sums.push_back(vec_add(p, q));
  Polytope S;
  S.n = P.n;
  S.vertices = extreme_points(sums);
  return S;
}

Cone normal_cone(const Polytope& P, const HRep& hrep, const RatVec& vertex) {
  if (!std::binary_search(P.vertices.begin(), P.vertices.end(), vertex, lex_less))
    throw NotAVertex("normal_cone: point is not a vertex of the polytope");
  Cone c;
  c.apex = vertex;
  for (const Facet& f : hrep.facets)
    if (dot(f.normal, vertex) == f.offset) c.generators.push_back(f.normal);
  for (const Facet& e : hrep.equalities) c.lineality.push_back(e.normal);
  return c;
}

Cone normal_cone(const Polytope& P, const RatVec& vertex) {
  return normal_cone(P, P.hrep ? *P.hrep : h_representation(P), vertex);
}

bool cone_contains(const Cone& cone, const RatVec& x) {
  std::vector<RatVec> gens = cone.generators;
  for (const RatVec& l : cone.lineality) {
    gens.push_back(l);
    gens.push_back(vec_neg(l));
  }
  return in_cone(x, gens);
}

Polytope intersect_with_halfspaces(const Polytope& P, const std::vector<Facet>& cuts) {
  if (P.empty()) throw DegenerateInput("intersect_with_halfspaces: empty polytope");
  HRep rep = P.hrep ? *P.hrep : h_representation(P);
  HRep all = rep;
  for (const Facet& f : cuts) all.facets.push_back(f);
  Polytope out = polytope_from_hrep(all, P.n);
  return out;
}

Polytope section(const Polytope& P, const std::vector<RatVec>& basis) {
  HRep rep = P.hrep ? *P.hrep : h_representation(P);
  if (!rep.equalities.empty())
    throw OriginNotInterior("section: polytope must be full-dimensional");
  const int d = static_cast<int>(basis.size());
  std::vector<std::pair<RatVec, Rat>> rows;
  for (const Facet& f : rep.facets) {
    RatVec a(d);
    for (int k = 0; k < d; ++k) a[k] = dot(f.normal, basis[k]);
    rows.emplace_back(std::move(a), f.offset);
  }
  std::vector<RatVec> us = enumerate_hpolytope_vertices(rows, d);
  Polytope S;
  S.n = P.n;
  for (const RatVec& u : us) {
    RatVec y(P.n, Rat(0));
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < P.n; ++i) y[i] += basis[k][i] * u[k];
    S.vertices.push_back(std::move(y));
  }
  std::sort(S.vertices.begin(), S.vertices.end(), lex_less);
  return S;
}

RatMat orthogonal_projector(const std::vector<RatVec>& basis, int n) {
  const int m = static_cast<int>(basis.size());
  RatMat G(m, m), Ginv;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G.at(i, j) = dot(basis[i], basis[j]);
  if (!invert_square(G, Ginv))
    throw std::invalid_argument("orthogonal_projector: dependent basis");
  RatMat Pm(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat s = 0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) s += basis[a][i] * Ginv.at(a, b) * basis[b][j];
      Pm.at(i, j) = s;
    }
  }
  return Pm;
}

Polytope project(const Polytope& P, const std::vector<RatVec>& basis) {
  if (P.empty()) throw DegenerateInput("project: empty polytope");
  RatMat Pr = orthogonal_projector(basis, P.n);
  std::vector<RatVec> imgs;
  imgs.reserve(P.vertices.size());
  for (const RatVec& v : P.vertices) imgs.push_back(apply_mat(Pr, v));
  Polytope out;
  out.n = P.n;
  out.vertices = extreme_points(imgs);
  return out;
}

bool same_vertex_set(const Polytope& P, const Polytope& Q) {
  return P.n == Q.n && P.vertices == Q.vertices;
}

}  // namespace hofer
