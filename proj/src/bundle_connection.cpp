#include "ggp/bundle_connection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ggp {
namespace {

constexpr Complex I{0.0, 1.0};

double pair_scale(const StateVector& a, const StateVector& b, const Observable& O) {
  return std::max(1.0, a.norm() * b.norm() * O.matrix().cwiseAbs().maxCoeff());
}

void require_same_base(const NormalizedState& psi, const TangentVector& phi, const Tolerance& tol,
                       const char* what) {
  if (psi.sign != phi.base.sign || psi.psi.size() != phi.base.psi.size() ||
      (psi.psi - phi.base.psi).cwiseAbs().maxCoeff() > tol.eq_tol * std::max(1.0, psi.psi.norm())) {
    throw ValidationError(std::string(what) + ": tangent vector is based at a different point");
  }
}

void require_tangent(const NormalizedState& psi, const StateVector& phi, const Observable& O,
                     const Tolerance& tol, const char* what) {
  const double re = o_inner(psi.psi, O, phi).real();
  if (std::abs(re) > tol.eq_tol * pair_scale(psi.psi, phi, O)) {
    throw ValidationError(std::string(what) + ": vector is not tangent, Re(psi, O phi) = " +
                          std::to_string(re));
  }
}

}  // namespace

TangentVector make_tangent(const NormalizedState& base, const StateVector& phi,
                           const Observable& O, const Tolerance& tol) {
  require_tangent(base, phi, O, tol, "make_tangent");
  return {phi, base};
}

double connection(const NormalizedState& psi, const TangentVector& phi, const Observable& O,
                  const Tolerance& tol) {
  require_same_base(psi, phi, tol, "connection");
  require_tangent(psi, phi.phi, O, tol, "connection");
  return psi.sign * o_inner(psi.psi, O, phi.phi).imag();
}

TangentSplit split(const NormalizedState& psi, const TangentVector& phi, const Observable& O,
                   const Tolerance& tol) {
  const double a = connection(psi, phi, O, tol);
  return {a, phi.phi - I * a * psi.psi};
}

StateVector covariant_derivative(const NormalizedState& curve_point, const StateVector& velocity,
                                 const Observable& O) {
  const double a = curve_point.sign * o_inner(curve_point.psi, O, velocity).imag();
  return velocity - I * a * curve_point.psi;
}

bool is_horizontal(const NormalizedState& psi, const StateVector& chi, const Observable& O,
                   const Tolerance& tol) {
  return std::abs(o_inner(psi.psi, O, chi)) <= tol.eq_tol * pair_scale(psi.psi, chi, O);
}

StateVector horizontal_part(const NormalizedState& psi, const StateVector& v, const Observable& O) {
  // (psi, O psi) = sign, so subtracting sign (psi, O v) psi removes the O-overlap.
  return v - static_cast<double>(psi.sign) * o_inner(psi.psi, O, v) * psi.psi;
}

double chart_scale(const NormalizedState& psi0, const StateVector& chi0, const Observable& O,
                   const Tolerance& tol) {
  if (!is_horizontal(psi0, chi0, O, tol)) {
    throw ValidationError("chart: chi0 is not horizontal at the chart centre");
  }
  const double q = o_norm(chi0, O, tol);
  const double c2 = 1.0 - psi0.sign * q;
  if (!(c2 > tol.eq_tol)) {
    throw ChartDomainError("chart: sign*(chi0, O chi0) = " + std::to_string(psi0.sign * q) +
                           " must be < 1");
  }
  return std::sqrt(c2);
}

NormalizedState chart_point(const NormalizedState& psi0, const StateVector& chi0, double alpha,
                            const Observable& O, const Tolerance& tol) {
  require_dim(chi0, O, "chart_point");
  const double c = chart_scale(psi0, chi0, O, tol);
  return {std::polar(1.0, alpha) * (c * psi0.psi + chi0), psi0.sign};
}

ChartVariation chart_variations(const ChartPoint& cp, double a, const StateVector& chi,
                                const Observable& O, const Tolerance& tol) {
  const double c = chart_scale(cp.psi0, cp.chi0, O, tol);
  const NormalizedState here = chart_point(cp, O, tol);
  if (!is_horizontal(here, chi, O, tol)) {
    throw ValidationError("chart_variations: chi is not horizontal at the current point");
  }
  const double s = cp.psi0.sign;
  const Complex unphase = std::polar(1.0, -cp.alpha);
  const StateVector chi_t = unphase * chi;
  const StateVector psi_t = unphase * here.psi;
  const Complex m = o_inner(cp.chi0, O, chi_t);

  ChartVariation out;
  out.alpha_rate = a - s * m.imag() / (c * c);
  out.chi0_rate = chi_t + (s * m.real() / c) * cp.psi0.psi + (I * (s * m.imag() / (c * c))) * psi_t;
  return out;
}

double connection_one_form(const ChartPoint& cp, double d_alpha, const StateVector& d_chi0,
                           const Observable& O) {
  return d_alpha + cp.psi0.sign * o_inner(cp.chi0, O, d_chi0).imag();
}

}  // namespace ggp
