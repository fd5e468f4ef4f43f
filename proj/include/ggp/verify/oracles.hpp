#pragma once

// Reference computations used to check the library. Each one follows a route
// independent of the code it is compared against: explicit component loops
// instead of Eigen products, spherical geometry instead of state overlaps,
// finite differences instead of closed-form derivatives.

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "ggp/numeric_core.hpp"

namespace ggp::verify::oracle {

using Vec3 = Eigen::Vector3d;

/// prod_k (psi_k, O psi_{k+1}) with wrap-around, by explicit loops.
Complex cyclic_overlap_product(const std::vector<StateVector>& states, const ComplexMatrix& O);

/// Oriented solid angle of the spherical triangle (a, b, c), unit vectors.
double signed_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c);

/// Spinor (cos(theta/2), e^{i phi} sin(theta/2)) for a Bloch vector.
StateVector bloch_state(const Vec3& n);

/// Point at fraction t along the great circle from a to b.
Vec3 slerp(const Vec3& a, const Vec3& b, double t);

/// d^2 K / dz^j dzbar^k from central differences in (Re z, Im z).
ComplexMatrix complex_hessian_fd(const std::function<double(const Eigen::VectorXcd&)>& K,
                                 const Eigen::VectorXcd& z, double h);

/// Fubini-Study coefficients [delta (|z|^2 + 1) - zbar^j z^k] / (|z|^2 + 1)^2.
ComplexMatrix fubini_study(const Eigen::VectorXcd& z);

/// Two-level closed forms with eigenvalues (1, -1): ln(|z|^2 - 1) and -1/(|z|^2 - 1)^2.
double two_state_potential(Complex z);
double two_state_metric(Complex z);

}  // namespace ggp::verify::oracle
