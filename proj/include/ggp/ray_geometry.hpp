#pragma once

#include "ggp/ray_classification.hpp"

namespace ggp {

/// Tangent vector B = chi psi^dagger + psi chi^dagger to a ray, with the
/// horizontal vector chi that generated it.
struct RayTangent {
  ComplexMatrix B;
  RayPoint base;
  NormalizedState psi;
  StateVector chi;
};

RayTangent ray_tangent(const NormalizedState& psi, const StateVector& chi, const Observable& O,
                       const Tolerance& tol = {});

/// -i Tr[rho O (B' O B'' - B'' O B') O].
double symplectic_form(const RayTangent& b1, const RayTangent& b2, const Observable& O,
                       const Tolerance& tol = {});

/// 1/2 Tr[rho O (B' O B'' + B'' O B') O]. Indefinite in general.
double metric(const RayTangent& b1, const RayTangent& b2, const Observable& O,
              const Tolerance& tol = {});

/// Tr[rho O B' O B'' O]; real part is the metric, imaginary part half the
/// symplectic form.
Complex trace_split(const RayPoint& rho, const RayTangent& b1, const RayTangent& b2,
                    const Observable& O, const Tolerance& tol = {});

/// (chi', O chi''), the same pairing computed from the generating vectors.
Complex horizontal_pairing(const RayTangent& b1, const RayTangent& b2, const Observable& O);

/// 1 - Tr(rho1 O rho2 O). No square root: the value can be negative.
double ray_distance_sq(const RayPoint& r1, const RayPoint& r2, const Observable& O);

}  // namespace ggp
