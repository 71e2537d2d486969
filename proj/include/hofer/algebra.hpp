#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "hofer/errors.hpp"

namespace hofer {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

struct Tolerances {
  double mat = 1e-9;       // relative matrix invariant tolerance
  double branch = 1e-6;    // radians; distance of spectrum to -1 for logs
  double cluster = 1e-7;   // eigenvalue equality threshold
  unsigned long snap_den = 1000000000UL;  // denominator bound for rationalization
};

// Traceless skew-Hermitian matrix: an element of su(n).
class SkewHermitian {
 public:
  explicit SkewHermitian(CMat m, double eps_mat = 1e-9);

  int n() const { return static_cast<int>(m_.rows()); }
  const CMat& mat() const { return m_; }

  static SkewHermitian zero(int n) { return SkewHermitian(CMat::Zero(n, n)); }

  // Nearest traceless skew-Hermitian matrix; for building elements from
  // unnormalized numeric data.
  static SkewHermitian project(const CMat& m);

 private:
  CMat m_;
};

// Element of SU(n).
class UnitaryElement {
 public:
  explicit UnitaryElement(CMat m, double eps_mat = 1e-9);

  int n() const { return static_cast<int>(m_.rows()); }
  const CMat& mat() const { return m_; }

  static UnitaryElement identity(int n) { return UnitaryElement(CMat::Identity(n, n)); }

  UnitaryElement inverse() const { return UnitaryElement(m_.adjoint()); }

  friend UnitaryElement operator*(const UnitaryElement& a, const UnitaryElement& b) {
    return UnitaryElement(a.m_ * b.m_);
  }

 private:
  CMat m_;
};

// Eigenvalues of x/i in weakly decreasing order, with the matching
// orthonormal eigenbasis (so x = i * basis * diag(values) * basis^*).
struct Spectrum {
  std::vector<double> values;
  CMat basis;
};

// scale * (-tr(xy)); positive definite, Ad-invariant. scale = 2n gives the
// opposite Killing form normalization of su(n).
double inner_product(const SkewHermitian& x, const SkewHermitian& y, double scale = 1.0);

Spectrum spectrum(const SkewHermitian& x);

UnitaryElement group_exp(const SkewHermitian& x);

struct LogResult {
  SkewHermitian log;
  bool branch_corrected = false;
  int winding = 0;  // sum of principal arguments / 2*pi before correction
};

// Principal logarithm of u in su(n). Arguments are taken in (-pi, pi]; when
// they sum to 2*pi*m != 0 the m largest arguments are shifted down by 2*pi
// (mirrored for m < 0) to restore tracelessness.
// Throws BoundaryOfInjectivity when an eigenvalue of u is within eps_branch
// radians of -1.
LogResult principal_log_full(const UnitaryElement& u, double eps_branch = 1e-6);
SkewHermitian principal_log(const UnitaryElement& u, double eps_branch = 1e-6);

bool commutes(const SkewHermitian& x, const SkewHermitian& y, double tol);

struct JointEigen {
  UnitaryElement basis;
  std::vector<std::vector<double>> coords;  // coords[k][j]: j-th diagonal entry of x_k / i
  double max_offdiag = 0.0;                 // worst residual of the joint reduction
};

// One unitary that diagonalizes every member of a pairwise-commuting family.
// Coordinates come back in the shared basis order (not individually sorted).
JointEigen joint_eigenbasis(const std::vector<SkewHermitian>& xs, double tol);

SkewHermitian adjoint(const UnitaryElement& u, const SkewHermitian& x);

// Arithmetic on su(n).
SkewHermitian add(const SkewHermitian& x, const SkewHermitian& y);
SkewHermitian sub(const SkewHermitian& x, const SkewHermitian& y);
SkewHermitian scale_by(const SkewHermitian& x, double t);
SkewHermitian bracket(const SkewHermitian& x, const SkewHermitian& y);

double frobenius_norm(const CMat& m);

// Largest |eigenvalue of x/i|: the spectral norm, whose open pi-ball is the
// injectivity domain of exp on SU(n).
double spectral_norm_inf(const SkewHermitian& x);

}  // namespace hofer
