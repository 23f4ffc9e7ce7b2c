// Copyright 2026 The cp-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra shared by every other module. Everything here is
// templated on the Eigen expression type so that float, double and long double
// scalars all work; the rest of the library instantiates it with double.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <utility>

#include "cpphase/errors.hpp"

namespace cpphase {

using Eigen::Index;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using Complex = std::complex<double>;

template <typename Derived>
using PlainMatrixOf =
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

/// Induced 1-norm (maximum absolute column sum).
template <typename Derived>
RealOf<Derived> norm_1(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return RealOf<Derived>(0);
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

/// exp(a * t) by scaling and squaring.
///
/// The argument is scaled by 2^-s until its 1-norm is at most 1/2, the Taylor
/// series of the scaled matrix is summed until the remaining tail is below a
/// sixteenth of machine epsilon, and the result is squared s times. No
/// eigendecomposition is involved, so strongly non-normal generators are fine.
template <typename Derived>
PlainMatrixOf<Derived> matexp(const Eigen::MatrixBase<Derived>& a, RealOf<Derived> t) {
  using Scalar = typename Derived::Scalar;
  using Real = RealOf<Derived>;
  using Matrix = PlainMatrixOf<Derived>;

  if (a.rows() != a.cols()) {
    throw DimensionError("matexp: matrix must be square");
  }
  if (!a.allFinite() || !std::isfinite(t)) {
    throw PreconditionError("matexp: non-finite input");
  }
  const Index n = a.rows();
  Matrix x = a * Scalar(t);
  const Real norm = norm_1(x);

  int squarings = 0;
  if (norm > Real(0.5)) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / Real(0.5))));
  }
  x /= Scalar(std::ldexp(Real(1), squarings));
  const Real scaled_norm = std::ldexp(norm, -squarings);

  // term_bound tracks ||x||^k / k!, an upper bound on the norm of the k-th term.
  const Real tail_target = std::numeric_limits<Real>::epsilon() / Real(16);
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  Real term_bound = 1;
  for (int k = 1; k < 64; ++k) {
    term = (term * x) / Scalar(Real(k));
    result += term;
    term_bound *= scaled_norm / Real(k);
    // With ||x|| <= 1/2 the tail after term k is at most 2 ||x||^(k+1)/(k+1)!.
    if (Real(2) * term_bound * scaled_norm / Real(k + 1) < tail_target) break;
  }
  for (int s = 0; s < squarings; ++s) {
    result = (result * result).eval();
  }
  return result;
}

/// Kronecker product with block layout a(j,k) * b.
template <typename DA, typename DB>
PlainMatrixOf<DA> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>,
                "kron: operands must share a scalar type");
  PlainMatrixOf<DA> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.rows(); ++j) {
    for (Index k = 0; k < a.cols(); ++k) {
      out.block(j * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(j, k) * b;
    }
  }
  return out;
}

template <typename Derived>
PlainMatrixOf<Derived> hermitian_part(const Eigen::MatrixBase<Derived>& a) {
  return (a + a.adjoint()) / typename Derived::Scalar(2);
}

/// ||u^dagger u - 1||_F.
template <typename Derived>
RealOf<Derived> unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitarity_defect: matrix must be square");
  return (u.adjoint() * u - PlainMatrixOf<Derived>::Identity(u.rows(), u.cols())).norm();
}

/// Eigenvalues of the Hermitian part, ascending.
template <typename Derived>
Eigen::Matrix<RealOf<Derived>, Eigen::Dynamic, 1> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& a) {
  Eigen::SelfAdjointEigenSolver<PlainMatrixOf<Derived>> solver(hermitian_part(a),
                                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Trace distance 1/2 ||a - b||_1 for Hermitian arguments.
template <typename DA, typename DB>
RealOf<DA> trace_distance(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("trace_distance: shape mismatch");
  }
  return hermitian_eigenvalues(a - b).cwiseAbs().sum() / RealOf<DA>(2);
}

/// Partial trace over the trailing tensor factor of a (keep*traced)-dim operator.
template <typename Derived>
PlainMatrixOf<Derived> trace_out_last(const Eigen::MatrixBase<Derived>& a, Index keep,
                                      Index traced) {
  if (a.rows() != keep * traced || a.cols() != keep * traced) {
    throw DimensionError("trace_out_last: dimension is not keep * traced");
  }
  PlainMatrixOf<Derived> out = PlainMatrixOf<Derived>::Zero(keep, keep);
  for (Index i = 0; i < keep; ++i) {
    for (Index j = 0; j < keep; ++j) {
      out(i, j) = a.block(i * traced, j * traced, traced, traced).trace();
    }
  }
  return out;
}

/// Defaults follow the library-wide density-matrix invariants.
template <typename Real>
struct DensityTolerances {
  Real hermiticity = Real(1e-10);  // relative to ||rho||_F
  Real trace = Real(1e-8);
  Real negativity = Real(1e-8);  // smallest admissible eigenvalue is -negativity

  static DensityTolerances uniform(Real tol) { return {tol, tol, tol}; }
};

template <typename Real>
struct DensityDiagnostics {
  Real hermiticity_defect = 0;  // ||rho - rho^dagger||_F / ||rho||_F
  Real trace_defect = 0;        // |tr rho - 1|
  Real min_eigenvalue = 0;      // of (rho + rho^dagger)/2
  bool passed = false;

  std::string describe() const {
    std::ostringstream os;
    os << "hermiticity defect " << hermiticity_defect << ", trace defect " << trace_defect
       << ", min eigenvalue " << min_eigenvalue;
    return os.str();
  }
};

/// Report-only check of the density-matrix invariants.
template <typename Derived>
DensityDiagnostics<RealOf<Derived>> check_density(
    const Eigen::MatrixBase<Derived>& rho,
    const DensityTolerances<RealOf<Derived>>& tol = {}) {
  using Real = RealOf<Derived>;
  if (rho.rows() != rho.cols()) throw DimensionError("check_density: matrix must be square");
  DensityDiagnostics<Real> d;
  const Real scale = rho.norm();
  const Real asym = (rho - rho.adjoint()).norm();
  d.hermiticity_defect = scale > 0 ? asym / scale : asym;
  d.trace_defect = std::abs(rho.trace() - typename Derived::Scalar(1));
  d.min_eigenvalue = rho.size() ? hermitian_eigenvalues(rho).minCoeff() : Real(0);
  d.passed = rho.allFinite() && d.hermiticity_defect <= tol.hermiticity &&
             d.trace_defect <= tol.trace && d.min_eigenvalue >= -tol.negativity;
  return d;
}

template <typename Derived>
DensityDiagnostics<RealOf<Derived>> check_density(const Eigen::MatrixBase<Derived>& rho,
                                                  RealOf<Derived> tol) {
  return check_density(rho, DensityTolerances<RealOf<Derived>>::uniform(tol));
}

/// A validated density matrix. Construction checks the invariants and throws
/// InvalidStateError on failure; unchecked() is for callers that have already
/// established them (for example an integrator that checks on its own terms).
template <typename Real>
class BasicDensityMatrix {
 public:
  using Matrix = CMatrix<Real>;

  explicit BasicDensityMatrix(Matrix m, const DensityTolerances<Real>& tol = {})
      : mat_(std::move(m)) {
    if (mat_.rows() == 0) throw InvalidStateError("density matrix must have dim >= 1");
    const auto d = check_density(mat_, tol);
    if (!d.passed) throw InvalidStateError("not a density matrix: " + d.describe());
  }

  static BasicDensityMatrix unchecked(Matrix m) { return BasicDensityMatrix(std::move(m), Tag{}); }

  /// |psi><psi| for a normalized copy of psi.
  static BasicDensityMatrix pure(const CVector<Real>& psi) {
    const Real n = psi.norm();
    if (!(n > 0)) throw InvalidStateError("pure state vector has zero norm");
    const CVector<Real> v = psi / n;
    return unchecked(v * v.adjoint());
  }

  static BasicDensityMatrix maximally_mixed(Index dim) {
    return unchecked(Matrix::Identity(dim, dim) / std::complex<Real>(Real(dim)));
  }

  const Matrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  Real purity() const { return (mat_ * mat_).trace().real(); }

 private:
  struct Tag {};
  BasicDensityMatrix(Matrix m, Tag) : mat_(std::move(m)) {}

  Matrix mat_;
};

using DensityMatrix = BasicDensityMatrix<double>;

/// <psi| rho |psi> for normalized psi.
template <typename Real>
Real pure_fidelity(const BasicDensityMatrix<Real>& rho, const CVector<Real>& psi) {
  const CVector<Real> v = psi / psi.norm();
  return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

}  // namespace cpphase
