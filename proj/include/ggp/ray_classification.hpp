#pragma once

#include "ggp/numeric_core.hpp"

namespace ggp {

enum class ONormTag { Positive, Negative, Null };

const char* to_string(ONormTag tag);

/// Which of the three disjoint sets a vector falls in, by sign of (psi, O psi).
struct ONormClass {
  ONormTag tag;
  double raw_value;  // (psi, O psi) before any normalisation
};

/// A vector scaled so that (psi, O psi) = sign, with sign = +1 or -1.
struct NormalizedState {
  StateVector psi;
  int sign;
};

/// Density matrix rho = psi psi^dagger of an O-normalised vector. Tr rho is in
/// general not 1. The sign records which ray space the point belongs to.
struct RayPoint {
  ComplexMatrix rho;
  int sign;
};

ONormClass classify(const StateVector& psi, const Observable& O, const Tolerance& tol = {});

/// psi / sqrt|(psi, O psi)|. Throws NullStateError inside the null band.
NormalizedState normalize_o(const StateVector& psi, const Observable& O,
                            const Tolerance& tol = {});

/// sum_j lambda_j |w_j|^2 with w_j = (e_j, psi); zero exactly on the null quadric.
double quadric_residual(const StateVector& psi, const Observable& O);

RayPoint ray_of(const NormalizedState& ns);

/// Checks the RayPoint invariants rho = rho^dagger, rho^2 = rho Tr rho, Tr rho > 0.
bool is_valid_ray(const RayPoint& r, const Tolerance& tol = {});

}  // namespace ggp
