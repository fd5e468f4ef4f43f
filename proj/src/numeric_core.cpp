#include "ggp/numeric_core.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

namespace ggp {

void Tolerance::validate() const {
  if (!(eq_tol > 0.0) || !(null_tol > 0.0) || !(fd_step > 0.0)) {
    throw ValidationError("tolerances must be strictly positive");
  }
  if (!(null_tol > eq_tol)) {
    throw ValidationError("null_tol must exceed eq_tol");
  }
}

bool all_finite(const StateVector& v) { return v.allFinite(); }
bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

void require_dim(const StateVector& v, const Observable& O, const char* what) {
  if (v.size() != O.dim()) {
    throw DimensionError(std::string(what) + ": length " + std::to_string(v.size()) +
                         " does not match observable dimension " + std::to_string(O.dim()));
  }
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("inner: length mismatch " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  return a.dot(b);  // Eigen conjugates the left operand
}

Complex o_inner(const StateVector& a, const Observable& O, const StateVector& b) {
  require_dim(a, O, "o_inner");
  require_dim(b, O, "o_inner");
  return a.dot(O.matrix() * b);
}

double o_norm(const StateVector& a, const Observable& O, const Tolerance& tol) {
  const Complex v = o_inner(a, O, a);
  const double scale = std::max(1.0, a.squaredNorm() * O.matrix().cwiseAbs().maxCoeff());
  if (std::abs(v.imag()) > tol.eq_tol * scale) {
    throw ValidationError("o_norm: (a, O a) has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

ComplexMatrix outer(const StateVector& psi) { return psi * psi.adjoint(); }

Observable eigendecompose(const ComplexMatrix& matrix, const Tolerance& tol) {
  tol.validate();
  if (matrix.rows() != matrix.cols()) {
    throw DimensionError("eigendecompose: matrix is not square");
  }
  if (matrix.rows() < 2) {
    throw DimensionError("eigendecompose: dimension must be at least 2");
  }
  if (!all_finite(matrix)) {
    throw ValidationError("eigendecompose: non-finite entries");
  }
  const double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.eq_tol) {
    throw ValidationError("eigendecompose: matrix is not Hermitian (max |M - M^dagger| = " +
                          std::to_string(asym) + ")");
  }

  // Symmetrise so round-off in the input cannot leak into the solver.
  const ComplexMatrix herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecompose: eigensolver did not converge");
  }

  Observable O;
  O.matrix_ = matrix;
  O.eigenvalues_ = solver.eigenvalues();
  O.eigenvectors_ = solver.eigenvectors();

  const Eigen::Index n = herm.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    auto col = O.eigenvectors_.col(j);
    const double peak = col.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(col(pivot)) < peak - 1e-12) ++pivot;
    col *= std::conj(col(pivot)) / std::abs(col(pivot));
  }

  double min_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 1; j < n; ++j) {
    min_gap = std::min(min_gap, O.eigenvalues_(j) - O.eigenvalues_(j - 1));
  }
  O.degenerate_ = min_gap < tol.null_tol;

  const ComplexMatrix rebuilt = O.eigenvectors_ * O.eigenvalues_.cast<Complex>().asDiagonal() *
                                O.eigenvectors_.adjoint();
  O.residual_ = (rebuilt - matrix).cwiseAbs().maxCoeff();
  if (O.residual_ >= 1e-8 * std::max(1.0, matrix.cwiseAbs().maxCoeff())) {
    throw NumericalError("eigendecompose: reconstruction residual " + std::to_string(O.residual_));
  }
  return O;
}

Observable Observable::identity(Eigen::Index n, const Tolerance& tol) {
  return eigendecompose(ComplexMatrix::Identity(n, n), tol);
}

Observable Observable::diagonal(const RealVector& values, const Tolerance& tol) {
  return eigendecompose(values.cast<Complex>().asDiagonal().toDenseMatrix(), tol);
}

double principal_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(angle, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

double angle_distance(double a, double b) { return std::abs(principal_angle(a - b)); }

}  // namespace ggp
