#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hofer/errors.hpp"
#include "hofer/lp.hpp"
#include "hofer/ratvec.hpp"

namespace hofer {

// One halfspace <normal, x> <= offset. Normals are canonicalized to a
// primitive integer direction (positive scaling only, so the halfspace is
// unchanged) and are sum-zero.
struct Facet {
  RatVec normal;
  Rat offset;
};

// Minimal H-description relative to the affine hull. The sum-zero equality
// is implicit everywhere and not listed. `equalities` carries the extra
// affine-hull constraints of lower-dimensional polytopes.
struct HRep {
  std::vector<Facet> facets;
  std::vector<Facet> equalities;
  bool lower_dimensional = false;
};

// Convex polytope in the sum-zero hyperplane of R^n, held by its irredundant
// vertex list (lexicographically sorted, exact rationals). An H-description
// is attached by the operations that compute one.
struct Polytope {
  int n = 0;
  std::vector<RatVec> vertices;
  std::optional<HRep> hrep;

  bool empty() const { return vertices.empty(); }
  int dim_ambient() const { return n; }
};

struct Cone {
  RatVec apex;
  std::vector<RatVec> generators;  // primitive integer directions, deduplicated
  std::vector<RatVec> lineality;   // basis of contained lines (lower-dim base polytope)
};

// --- construction -----------------------------------------------------------

// Irredundant convex hull. Input points must share a dimension and be
// sum-zero; duplicates are fine. Throws DegenerateInput on an empty list.
Polytope hull(const std::vector<RatVec>& points);

// Extreme points of a finite set (Clarkson-style LP pruning).
std::vector<RatVec> extreme_points(const std::vector<RatVec>& points);

// Vertices of { u in R^d : ineqs.first . u <= ineqs.second }. The feasible
// set must be bounded; it may be empty or lower-dimensional.
std::vector<RatVec> enumerate_hpolytope_vertices(
    const std::vector<std::pair<RatVec, Rat>>& ineqs, int d);

// --- queries ----------------------------------------------------------------

Rat support(const Polytope& P, const RatVec& x);

std::vector<int> argmax_vertices(const Polytope& P, const RatVec& x);

// Hull of the argmax vertices: the exposed face defined by x.
Polytope face(const Polytope& P, const RatVec& x);

// Exact membership x in conv(vertices), by LP.
bool contains(const Polytope& P, const RatVec& x);

// min { t >= 0 : x in tP } via LP. Throws OriginNotInterior when x is
// outside the cone spanned by P (gauge would be infinite).
Rat gauge_lp_exact(const Polytope& P, const RatVec& x);

// --- dual representations ---------------------------------------------------

// Minimal facet list relative to the affine hull, plus hull equalities when
// P is lower-dimensional. Deterministic (lex-sorted facets).
HRep h_representation(const Polytope& P);

// Computes and caches the H-representation in-place.
const HRep& ensure_hrep(Polytope& P);

// Polar within the sum-zero hyperplane: {y : <v,y> <= 1 for all vertices v}.
// Requires 0 interior to P (P full-dimensional in the hyperplane).
Polytope polar(const Polytope& P);

// Polar within the subspace spanned by `basis` (ambient vectors): for P
// contained in that subspace, {y in span(basis) : <v,y> <= 1}. Requires 0
// interior to P relative to the subspace.
Polytope polar_within(const Polytope& P, const std::vector<RatVec>& basis);

// gauge(P, x) = support(polar(P), x); the spec's dual route. Use gauge_from_hrep
// when a polar/H-rep is already at hand.
Rat gauge(const Polytope& P, const RatVec& x);
Rat gauge_from_hrep(const HRep& hrep, const RatVec& x);

// Rebuilds the vertex description from an H-description (round-trip check).
Polytope polytope_from_hrep(const HRep& hrep, int n);

// --- constructions on polytopes ---------------------------------------------

Polytope minkowski_sum(const Polytope& P, const Polytope& Q);

// Normal cone at a vertex: generated by the normals of the incident facets
// (plus the affine-hull directions as lineality when P is lower-dimensional).
Cone normal_cone(const Polytope& P, const RatVec& vertex);
Cone normal_cone(const Polytope& P, const HRep& hrep, const RatVec& vertex);

bool cone_contains(const Cone& cone, const RatVec& x);

// P cut by extra halfspaces; exact, handles lower-dimensional results.
Polytope intersect_with_halfspaces(const Polytope& P, const std::vector<Facet>& cuts);

// P intersected with the linear subspace spanned by `basis` (P full-dim with
// 0 interior), and the orthogonal projection of P onto that subspace.
Polytope section(const Polytope& P, const std::vector<RatVec>& basis);
Polytope project(const Polytope& P, const std::vector<RatVec>& basis);

// --- helpers ----------------------------------------------------------------

// Canonical facet scaling: primitive integer normal, offset scaled along.
Facet canonical_facet(RatVec normal, Rat offset);

bool same_vertex_set(const Polytope& P, const Polytope& Q);

// Orthogonal projection matrix onto span(basis): B (B^T B)^-1 B^T.
RatMat orthogonal_projector(const std::vector<RatVec>& basis, int n);

RatVec apply_mat(const RatMat& M, const RatVec& v);

}  // namespace hofer
