#include "hofer/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace hofer {

namespace {

// Tableau in canonical form: rows 0..m-1 are constraints, row m is the
// objective (reduced costs; rhs entry holds -objective). Columns 0..n+m-1,
// the last m being artificials; column n+m is the rhs.
struct Tableau {
  int m, n;               // constraints, structural columns
  RatMat t;               // (m+1) x (n+m+1)
  std::vector<int> basis; // basis[i] = column basic in row i

  Tableau(const RatMat& A, const RatVec& b) : m(A.rows), n(A.cols), t(A.rows + 1, A.cols + A.rows + 1) {
    for (int i = 0; i < m; ++i) {
      const bool flip = b[i] < 0;
      for (int j = 0; j < n; ++j) t.at(i, j) = flip ? Rat(-A.at(i, j)) : A.at(i, j);
      t.at(i, n + i) = 1;
      t.at(i, n + m) = flip ? Rat(-b[i]) : b[i];
    }
    basis.resize(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;
  }

  int total_cols() const { return n + m; }
  Rat& rhs(int i) { return t.at(i, n + m); }
  Rat& obj(int j) { return t.at(m, j); }

  void pivot(int row, int col) {
    const Rat piv = t.at(row, col);
    assert(piv != 0);
    const Rat inv = 1 / piv;
    for (int j = 0; j <= total_cols(); ++j)
      if (t.at(row, j) != 0) t.at(row, j) *= inv;
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      const Rat f = t.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j <= total_cols(); ++j) {
        if (t.at(row, j) != 0) t.at(i, j) -= f * t.at(row, j);
      }
    }
    basis[row] = col;
  }

  // Returns false when no entering column exists (optimal).
  bool find_entering(bool bland, const std::vector<bool>& allowed, int& col) const {
    col = -1;
    if (bland) {
      for (int j = 0; j < total_cols(); ++j)
        if (allowed[j] && t.at(m, j) < 0) { col = j; return true; }
      return false;
    }
    const Rat* best = nullptr;
    for (int j = 0; j < total_cols(); ++j) {
      if (!allowed[j]) continue;
      const Rat& r = t.at(m, j);
      if (r < 0 && (best == nullptr || r < *best)) { best = &t.at(m, j); col = j; }
    }
    return col >= 0;
  }

  // Ratio test; returns false when the column is unbounded below.
  bool find_leaving(int col, int& row) const {
    row = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      const Rat& a = t.at(i, col);
      if (a <= 0) continue;
      Rat ratio = t.at(i, n + m) / a;
      if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
        row = i;
        best = ratio;
      }
    }
    return row >= 0;
  }
};

// Runs the simplex loop until optimality/unboundedness. Switches from Dantzig
// to Bland after an iteration budget to guarantee termination.
LpStatus run_simplex(Tableau& tb, const std::vector<bool>& allowed) {
  const long bland_after = 50L + 10L * (tb.total_cols());
  long iter = 0;
  for (;;) {
    ++iter;
    int col;
    if (!tb.find_entering(iter > bland_after, allowed, col)) return LpStatus::Optimal;
    int row;
    if (!tb.find_leaving(col, row)) return LpStatus::Unbounded;
    tb.pivot(row, col);
  }
}

}  // namespace

LpResult lp_solve(const RatMat& A, const RatVec& b, const RatVec& c) {
  const int m = A.rows, n = A.cols;
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n)
    throw std::invalid_argument("lp_solve: shape mismatch");

  Tableau tb(A, b);
  std::vector<bool> row_flipped(m);
  for (int i = 0; i < m; ++i) row_flipped[i] = b[i] < 0;

  // Phase 1: minimize the sum of artificials. Objective row starts as
  // -(sum of constraint rows) so the artificial basis prices to zero.
  for (int j = 0; j <= tb.total_cols(); ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += tb.t.at(i, j);
    tb.t.at(m, j) = -s;
  }
  for (int i = 0; i < m; ++i) tb.t.at(m, n + i) = 0;

  std::vector<bool> allow_all(tb.total_cols(), true);
  LpStatus s1 = run_simplex(tb, allow_all);
  assert(s1 == LpStatus::Optimal);  // phase 1 is bounded below by 0
  (void)s1;

  LpResult res;
  Rat phase1_obj = -tb.rhs(m);
  if (phase1_obj > 0) {
    res.status = LpStatus::Infeasible;
    // Dual of phase 1: y_i = 1 - reduced_cost(artificial i), flipped back.
    res.farkas.resize(m);
    for (int i = 0; i < m; ++i) {
      Rat y = 1 - tb.obj(n + i);
      res.farkas[i] = row_flipped[i] ? Rat(-y) : y;
    }
    return res;
  }

  // Drive leftover artificials out of the basis (degenerate at zero).
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (tb.t.at(i, j) != 0) { col = j; break; }
    if (col >= 0) tb.pivot(i, col);
    // else: redundant row; harmless to keep, its artificial stays basic at 0.
  }

  // Phase 2 objective: reduced costs of c against the current basis.
  for (int j = 0; j <= tb.total_cols(); ++j) tb.t.at(m, j) = 0;
  for (int j = 0; j < n; ++j) tb.t.at(m, j) = c[j];
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] >= n) continue;
    const Rat f = tb.t.at(m, tb.basis[i]);
    if (f == 0) continue;
    for (int j = 0; j <= tb.total_cols(); ++j)
      if (tb.t.at(i, j) != 0) tb.t.at(m, j) -= f * tb.t.at(i, j);
  }

  std::vector<bool> allowed(tb.total_cols(), false);
  for (int j = 0; j < n; ++j) allowed[j] = true;

  LpStatus s2 = run_simplex(tb, allowed);
  if (s2 == LpStatus::Unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.rhs(i);
  res.objective = -tb.rhs(m);
  res.dual.resize(m);
  for (int i = 0; i < m; ++i) {
    // Artificial column i is e_i in the original system and has zero cost
    // in phase 2, so its reduced cost equals -y_i.
    Rat y = -tb.obj(n + i);
    res.dual[i] = row_flipped[i] ? Rat(-y) : y;
  }
  return res;
}

bool in_convex_hull(const RatVec& x, const std::vector<RatVec>& points, int skip_index,
                    RatVec* separator) {
  const int n_amb = static_cast<int>(x.size());
  std::vector<int> cols;
  for (int j = 0; j < static_cast<int>(points.size()); ++j)
    if (j != skip_index) cols.push_back(j);
  if (cols.empty()) return false;

  RatMat A(n_amb + 1, static_cast<int>(cols.size()));
  for (int jj = 0; jj < static_cast<int>(cols.size()); ++jj) {
    const RatVec& p = points[cols[jj]];
    for (int i = 0; i < n_amb; ++i) A.at(i, jj) = p[i];
    A.at(n_amb, jj) = 1;
  }
  RatVec b(x);
  b.push_back(Rat(1));
  RatVec c(cols.size(), Rat(0));

  LpResult r = lp_solve(A, b, c);
  if (r.status == LpStatus::Optimal) return true;
  if (separator) {
    // farkas = (y, s) with <y,p_j> + s <= 0 for all j and <y,x> + s > 0.
    separator->assign(r.farkas.begin(), r.farkas.begin() + n_amb);
  }
  return false;
}

std::optional<Rat> gauge_lp(const RatVec& x, const std::vector<RatVec>& points) {
  if (is_zero_vec(x)) return Rat(0);
  const int n_amb = static_cast<int>(x.size());
  RatMat A(n_amb, static_cast<int>(points.size()));
  for (int j = 0; j < static_cast<int>(points.size()); ++j)
    for (int i = 0; i < n_amb; ++i) A.at(i, j) = points[j][i];
  RatVec c(points.size(), Rat(1));
  LpResult r = lp_solve(A, x, c);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.objective;
}

bool in_cone(const RatVec& x, const std::vector<RatVec>& generators) {
  if (is_zero_vec(x)) return true;
  if (generators.empty()) return false;
  const int n_amb = static_cast<int>(x.size());
  RatMat A(n_amb, static_cast<int>(generators.size()));
  for (int j = 0; j < static_cast<int>(generators.size()); ++j)
    for (int i = 0; i < n_amb; ++i) A.at(i, j) = generators[j][i];
  RatVec c(generators.size(), Rat(0));
  return lp_solve(A, x, c).status == LpStatus::Optimal;
}

int rank_of(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return 0;
  std::vector<RatVec> rows = vecs;
  const std::size_t n = rows[0].size();
  int rank = 0;
  std::size_t col = 0;
  while (col < n && rank < static_cast<int>(rows.size())) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) { piv = i; break; }
    if (piv < 0) { ++col; continue; }
    std::swap(rows[rank], rows[piv]);
    const Rat inv = 1 / rows[rank][col];
    for (std::size_t j = col; j < n; ++j) rows[rank][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank) continue;
      const Rat f = rows[i][col];
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
    ++col;
  }
  return rank;
}

}  // namespace hofer
