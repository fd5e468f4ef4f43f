#include "ggp/ray_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ggp {
namespace {

void require_common_base(const RayPoint& a, const RayPoint& b, const Tolerance& tol,
                         const char* what) {
  const double scale = std::max(1.0, a.rho.cwiseAbs().maxCoeff());
  if (a.sign != b.sign || a.rho.rows() != b.rho.rows() ||
      (a.rho - b.rho).cwiseAbs().maxCoeff() > tol.eq_tol * scale) {
    throw ValidationError(std::string(what) + ": tangent vectors are based at different rays");
  }
}

}  // namespace

RayTangent ray_tangent(const NormalizedState& psi, const StateVector& chi, const Observable& O,
                       const Tolerance& tol) {
  require_dim(chi, O, "ray_tangent");
  const Complex ov = o_inner(psi.psi, O, chi);
  const double scale = std::max(1.0, psi.psi.norm() * chi.norm() * O.matrix().cwiseAbs().maxCoeff());
  if (std::abs(ov) > tol.eq_tol * scale) {
    throw ValidationError("ray_tangent: chi is not horizontal, |(psi, O chi)| = " +
                          std::to_string(std::abs(ov)));
  }
  return {chi * psi.psi.adjoint() + psi.psi * chi.adjoint(), ray_of(psi), psi, chi};
}

Complex trace_split(const RayPoint& rho, const RayTangent& b1, const RayTangent& b2,
                    const Observable& O, const Tolerance& tol) {
  require_common_base(rho, b1.base, tol, "trace_split");
  require_common_base(rho, b2.base, tol, "trace_split");
  const ComplexMatrix& M = O.matrix();
  return (rho.rho * M * b1.B * M * b2.B * M).trace();
}

double symplectic_form(const RayTangent& b1, const RayTangent& b2, const Observable& O,
                       const Tolerance& tol) {
  require_common_base(b1.base, b2.base, tol, "symplectic_form");
  const ComplexMatrix& M = O.matrix();
  const ComplexMatrix& rho = b1.base.rho;
  const ComplexMatrix comm = b1.B * M * b2.B - b2.B * M * b1.B;
  return (Complex{0.0, -1.0} * (rho * M * comm * M).trace()).real();
}

double metric(const RayTangent& b1, const RayTangent& b2, const Observable& O,
              const Tolerance& tol) {
  require_common_base(b1.base, b2.base, tol, "metric");
  const ComplexMatrix& M = O.matrix();
  const ComplexMatrix& rho = b1.base.rho;
  const ComplexMatrix anti = b1.B * M * b2.B + b2.B * M * b1.B;
  return 0.5 * (rho * M * anti * M).trace().real();
}

Complex horizontal_pairing(const RayTangent& b1, const RayTangent& b2, const Observable& O) {
  return o_inner(b1.chi, O, b2.chi);
}

double ray_distance_sq(const RayPoint& r1, const RayPoint& r2, const Observable& O) {
  if (r1.sign != r2.sign) {
    throw ValidationError("ray_distance_sq: rays belong to different sign sheets");
  }
  if (r1.rho.rows() != O.dim() || r2.rho.rows() != O.dim()) {
    throw DimensionError("ray_distance_sq: density matrix dimension mismatch");
  }
  const ComplexMatrix& M = O.matrix();
  return 1.0 - (r1.rho * M * r2.rho * M).trace().real();
}

}  // namespace ggp
