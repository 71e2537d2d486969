#pragma once

#include <optional>
#include <vector>

#include "hofer/ratvec.hpp"

namespace hofer {

// Dense rational matrix, row-major.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  RatVec x;       // primal solution when Optimal
  RatVec dual;    // row multipliers y = c_B B^-1 when Optimal
  RatVec farkas;  // when Infeasible: y with y.A_j <= 0 for all j and y.b > 0
};

// Exact two-phase simplex for  min c.x  s.t.  A x = b, x >= 0.
// Dantzig pricing with a Bland fallback, so it terminates on every input.
LpResult lp_solve(const RatMat& A, const RatVec& b, const RatVec& c);

// Convenience wrappers used by the polytope layer. ----------------------------

// Is x a convex combination of the given points (skipping skip_index)?
// On "no", *separator (if given) receives c with <c,x> > max_i <c,points[i]>.
bool in_convex_hull(const RatVec& x, const std::vector<RatVec>& points, int skip_index = -1,
                    RatVec* separator = nullptr);

// min { t >= 0 : x in t * conv(points) }, i.e. min 1.mu s.t. sum mu_i p_i = x.
// nullopt when x is outside the cone spanned by the points.
std::optional<Rat> gauge_lp(const RatVec& x, const std::vector<RatVec>& points);

// Is x a nonnegative combination of the generators?
bool in_cone(const RatVec& x, const std::vector<RatVec>& generators);

// Rank of the span of the given vectors (exact Gaussian elimination).
int rank_of(const std::vector<RatVec>& vecs);

}  // namespace hofer
