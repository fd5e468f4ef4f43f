#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "ggp/errors.hpp"

namespace ggp {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerances used for every comparison in the library.
struct Tolerance {
  double eq_tol = 1e-10;    // generic equality
  double null_tol = 1e-9;   // |(psi, O psi)| band classified as null
  double fd_step = 1e-4;    // finite-difference step

  /// Throws ValidationError unless all fields are positive and null_tol > eq_tol.
  void validate() const;
};

/// Hermitian operator together with its ascending spectral decomposition.
class Observable {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  /// Ascending.
  const RealVector& eigenvalues() const { return eigenvalues_; }
  /// Column j is the eigenvector for eigenvalues()(j).
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  /// Smallest gap between consecutive eigenvalues fell below null_tol.
  bool degenerate() const { return degenerate_; }
  /// max-norm of sum_j lambda_j e_j e_j^dagger - matrix.
  double reconstruction_residual() const { return residual_; }

  static Observable identity(Eigen::Index n, const Tolerance& tol = {});
  static Observable diagonal(const RealVector& values, const Tolerance& tol = {});

 private:
  friend Observable eigendecompose(const ComplexMatrix& matrix, const Tolerance& tol);

  ComplexMatrix matrix_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
  bool degenerate_ = false;
  double residual_ = 0.0;
};

/// Hermitian inner product, conjugate-linear in the first slot.
Complex inner(const StateVector& a, const StateVector& b);

/// (a, O b).
Complex o_inner(const StateVector& a, const Observable& O, const StateVector& b);

/// (a, O a), checked to be real within tol.eq_tol (scaled by |a|^2 |O|).
double o_norm(const StateVector& a, const Observable& O, const Tolerance& tol = {});

/// Spectral decomposition of a Hermitian matrix. Eigenvalues ascending; each
/// eigenvector's first largest-modulus component is made real positive so the
/// result is deterministic.
Observable eigendecompose(const ComplexMatrix& matrix, const Tolerance& tol = {});

/// psi psi^dagger.
ComplexMatrix outer(const StateVector& psi);

bool all_finite(const StateVector& v);
bool all_finite(const ComplexMatrix& m);

/// Throws DimensionError unless v has the observable's dimension.
void require_dim(const StateVector& v, const Observable& O, const char* what);

/// Maps an angle onto (-pi, pi].
double principal_angle(double angle);

/// |a - b| measured on the circle, in [0, pi].
double angle_distance(double a, double b);

}  // namespace ggp
