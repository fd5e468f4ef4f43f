#include "ggp/ray_classification.hpp"

#include <cmath>
#include <string>

namespace ggp {

const char* to_string(ONormTag tag) {
  switch (tag) {
    case ONormTag::Positive: return "Positive";
    case ONormTag::Negative: return "Negative";
    case ONormTag::Null: return "Null";
  }
  return "?";
}

ONormClass classify(const StateVector& psi, const Observable& O, const Tolerance& tol) {
  require_dim(psi, O, "classify");
  if (!all_finite(psi)) throw ValidationError("classify: non-finite amplitudes");
  if (psi.squaredNorm() == 0.0) throw ValidationError("classify: zero vector");

  const double raw = o_norm(psi, O, tol);
  if (raw > tol.null_tol) return {ONormTag::Positive, raw};
  if (raw < -tol.null_tol) return {ONormTag::Negative, raw};
  return {ONormTag::Null, raw};
}

NormalizedState normalize_o(const StateVector& psi, const Observable& O, const Tolerance& tol) {
  const ONormClass cls = classify(psi, O, tol);
  if (cls.tag == ONormTag::Null) {
    throw NullStateError("normalize_o: normalisation is ill-defined when (psi, O psi) = 0 (got " +
                         std::to_string(cls.raw_value) + ")");
  }
  const int sign = cls.tag == ONormTag::Positive ? 1 : -1;
  return {psi / std::sqrt(std::abs(cls.raw_value)), sign};
}

double quadric_residual(const StateVector& psi, const Observable& O) {
  require_dim(psi, O, "quadric_residual");
  const StateVector w = O.eigenvectors().adjoint() * psi;
  return (O.eigenvalues().array() * w.array().abs2()).sum();
}

RayPoint ray_of(const NormalizedState& ns) { return {outer(ns.psi), ns.sign}; }

bool is_valid_ray(const RayPoint& r, const Tolerance& tol) {
  const double tr = r.rho.trace().real();
  if (!(tr > 0.0)) return false;
  const double scale = std::max(1.0, tr * tr);
  if ((r.rho - r.rho.adjoint()).cwiseAbs().maxCoeff() > tol.eq_tol * scale) return false;
  return (r.rho * r.rho - r.rho * tr).cwiseAbs().maxCoeff() <= tol.eq_tol * scale;
}

}  // namespace ggp
