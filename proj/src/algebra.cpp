#include "hofer/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hofer {

namespace {

constexpr double kPi = 3.14159265358979323846;

CMat skew_project(const CMat& m) {
  CMat s = 0.5 * (m - m.adjoint());
  const Cplx tr = s.trace() / static_cast<double>(m.rows());
  for (int i = 0; i < m.rows(); ++i) s(i, i) -= tr;
  return s;
}

// Joint diagonalization of a commuting Hermitian family by block refinement:
// diagonalize the first matrix, split into eigenvalue clusters, then
// diagonalize each following matrix inside the current blocks.
CMat jointly_diagonalize(const std::vector<CMat>& hs, int n, double cluster_tol) {
  CMat U = CMat::Identity(n, n);
  std::vector<std::pair<int, int>> blocks{{0, n}};
  double scale = 1.0;
  for (const CMat& h : hs) scale = std::max(scale, h.norm());
  const double thr = cluster_tol * scale;

  for (const CMat& h : hs) {
    std::vector<std::pair<int, int>> refined;
    for (auto [b, e] : blocks) {
      const int w = e - b;
      if (w == 1) {
        refined.emplace_back(b, e);
        continue;
      }
      CMat sub = U.middleCols(b, w).adjoint() * h * U.middleCols(b, w);
      sub = 0.5 * (sub + sub.adjoint());
      Eigen::SelfAdjointEigenSolver<CMat> es(sub);
      if (es.info() != Eigen::Success)
        throw EigensolverFailure("jointly_diagonalize: eigensolver did not converge");
      U.middleCols(b, w) = U.middleCols(b, w) * es.eigenvectors();
      const auto& ev = es.eigenvalues();
      int start = 0;
      for (int i = 1; i < w; ++i) {
        if (ev(i) - ev(i - 1) > thr) {
          refined.emplace_back(b + start, b + i);
          start = i;
        }
      }
      refined.emplace_back(b + start, b + w);
    }
    blocks = std::move(refined);
  }
  return U;
}

}  // namespace

SkewHermitian::SkewHermitian(CMat m, double eps_mat) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw std::invalid_argument("SkewHermitian: need a square matrix, n >= 2");
  const double s = 1.0 + m.norm();
  if ((m + m.adjoint()).norm() > eps_mat * s)
    throw std::invalid_argument("SkewHermitian: matrix is not skew-Hermitian");
  if (std::abs(m.trace()) > eps_mat * s)
    throw std::invalid_argument("SkewHermitian: matrix is not traceless");
  m_ = skew_project(m);
}

SkewHermitian SkewHermitian::project(const CMat& m) { return SkewHermitian(skew_project(m)); }

UnitaryElement::UnitaryElement(CMat m, double eps_mat) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw std::invalid_argument("UnitaryElement: need a square matrix, n >= 2");
  const int n = static_cast<int>(m.rows());
  if ((m * m.adjoint() - CMat::Identity(n, n)).norm() > eps_mat * n)
    throw std::invalid_argument("UnitaryElement: matrix is not unitary");
  if (std::abs(m.determinant() - Cplx(1.0, 0.0)) > eps_mat * n)
    throw std::invalid_argument("UnitaryElement: determinant is not 1");
  m_ = std::move(m);
}

double inner_product(const SkewHermitian& x, const SkewHermitian& y, double scale) {
  if (x.n() != y.n()) throw std::invalid_argument("inner_product: dimension mismatch");
  const Cplx tr = (x.mat() * y.mat()).trace();
  return -scale * tr.real();
}

Spectrum spectrum(const SkewHermitian& x) {
  const int n = x.n();
  CMat h = Cplx(0.0, -1.0) * x.mat();  // Hermitian part: x = i h
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  if (es.info() != Eigen::Success)
    throw EigensolverFailure("spectrum: eigensolver did not converge");
  Spectrum s;
  s.values.resize(n);
  s.basis = CMat(n, n);
  for (int i = 0; i < n; ++i) {  // ascending -> descending
    s.values[i] = es.eigenvalues()(n - 1 - i);
    s.basis.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  const double mean = std::accumulate(s.values.begin(), s.values.end(), 0.0) / n;
  for (double& v : s.values) v -= mean;
  return s;
}

UnitaryElement group_exp(const SkewHermitian& x) {
  Spectrum s = spectrum(x);
  const int n = x.n();
  CMat d = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = std::exp(Cplx(0.0, s.values[i]));
  return UnitaryElement(s.basis * d * s.basis.adjoint());
}

LogResult principal_log_full(const UnitaryElement& u, double eps_branch) {
  const int n = u.n();
  CMat a = 0.5 * (u.mat() + u.mat().adjoint());
  CMat b = Cplx(0.0, -0.5) * (u.mat() - u.mat().adjoint());
  CMat q = jointly_diagonalize({a, b}, n, 1e-9);

  std::vector<double> theta(n);
  for (int j = 0; j < n; ++j) {
    const Cplx av = (q.col(j).adjoint() * a * q.col(j))(0, 0);
    const Cplx bv = (q.col(j).adjoint() * b * q.col(j))(0, 0);
    theta[j] = std::atan2(bv.real(), av.real());
    if (kPi - std::abs(theta[j]) < eps_branch)
      throw BoundaryOfInjectivity("principal_log: eigenvalue too close to -1");
  }

  const double total = std::accumulate(theta.begin(), theta.end(), 0.0);
  const int m = static_cast<int>(std::lround(total / (2.0 * kPi)));
  if (std::abs(total - 2.0 * kPi * m) > 1e-6 * n)
    throw EigensolverFailure("principal_log: argument sum is not a multiple of 2*pi");

  if (m != 0) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (m > 0) {
      std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return theta[i] != theta[j] ? theta[i] > theta[j] : i < j;
      });
      for (int k = 0; k < m; ++k) theta[idx[k]] -= 2.0 * kPi;
    } else {
      std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return theta[i] != theta[j] ? theta[i] < theta[j] : i < j;
      });
      for (int k = 0; k < -m; ++k) theta[idx[k]] += 2.0 * kPi;
    }
  }
  const double mean = std::accumulate(theta.begin(), theta.end(), 0.0) / n;
  for (double& t : theta) t -= mean;

  CMat d = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) d(j, j) = Cplx(0.0, theta[j]);
  return LogResult{SkewHermitian::project(q * d * q.adjoint()), m != 0, m};
}

SkewHermitian principal_log(const UnitaryElement& u, double eps_branch) {
  return principal_log_full(u, eps_branch).log;
}

bool commutes(const SkewHermitian& x, const SkewHermitian& y, double tol) {
  if (x.n() != y.n()) throw std::invalid_argument("commutes: dimension mismatch");
  const double br = (x.mat() * y.mat() - y.mat() * x.mat()).norm();
  return br <= tol * (1.0 + x.mat().norm()) * (1.0 + y.mat().norm());
}

JointEigen joint_eigenbasis(const std::vector<SkewHermitian>& xs, double tol) {
  if (xs.empty()) throw std::invalid_argument("joint_eigenbasis: empty family");
  const int n = xs[0].n();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].n() != n) throw std::invalid_argument("joint_eigenbasis: dimension mismatch");
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!commutes(xs[i], xs[j], tol)) {
        // report the worst offending pair
        int wi = 0, wj = 1;
        double worst = -1.0;
        for (std::size_t p = 0; p < xs.size(); ++p) {
          for (std::size_t q = p + 1; q < xs.size(); ++q) {
            double br = (xs[p].mat() * xs[q].mat() - xs[q].mat() * xs[p].mat()).norm();
            if (br > worst) { worst = br; wi = static_cast<int>(p); wj = static_cast<int>(q); }
          }
        }
        throw NotCommuting("joint_eigenbasis: family does not commute", wi, wj, worst);
      }
    }
  }

  std::vector<CMat> hs;
  hs.reserve(xs.size());
  for (const SkewHermitian& x : xs) {
    CMat h = Cplx(0.0, -1.0) * x.mat();
    hs.push_back(0.5 * (h + h.adjoint()));
  }
  CMat U = jointly_diagonalize(hs, n, tol);

  JointEigen out{UnitaryElement(U / std::pow(U.determinant(), 1.0 / n)), {}, 0.0};
  out.coords.reserve(xs.size());
  for (const CMat& h : hs) {
    CMat d = U.adjoint() * h * U;
    std::vector<double> c(n);
    for (int j = 0; j < n; ++j) c[j] = d(j, j).real();
    CMat off = d;
    for (int j = 0; j < n; ++j) off(j, j) = 0.0;
    out.max_offdiag = std::max(out.max_offdiag, off.norm());
    const double mean = std::accumulate(c.begin(), c.end(), 0.0) / n;
    for (double& v : c) v -= mean;
    out.coords.push_back(std::move(c));
  }
  return out;
}

SkewHermitian adjoint(const UnitaryElement& u, const SkewHermitian& x) {
  if (u.n() != x.n()) throw std::invalid_argument("adjoint: dimension mismatch");
  return SkewHermitian::project(u.mat() * x.mat() * u.mat().adjoint());
}

SkewHermitian add(const SkewHermitian& x, const SkewHermitian& y) {
  return SkewHermitian::project(x.mat() + y.mat());
}

SkewHermitian sub(const SkewHermitian& x, const SkewHermitian& y) {
  return SkewHermitian::project(x.mat() - y.mat());
}

SkewHermitian scale_by(const SkewHermitian& x, double t) {
  return SkewHermitian::project(t * x.mat());
}

SkewHermitian bracket(const SkewHermitian& x, const SkewHermitian& y) {
  return SkewHermitian::project(x.mat() * y.mat() - y.mat() * x.mat());
}

double frobenius_norm(const CMat& m) { return m.norm(); }

double spectral_norm_inf(const SkewHermitian& x) {
  Spectrum s = spectrum(x);
  double best = 0.0;
  for (double v : s.values) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace hofer
