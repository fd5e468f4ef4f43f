#pragma once

#include "ggp/ray_classification.hpp"

namespace ggp {

/// A vector phi tangent to the normalised set at `base`: Re(psi, O phi) = 0.
struct TangentVector {
  StateVector phi;
  NormalizedState base;
};

/// Vertical/horizontal decomposition phi = i a psi + chi.
struct TangentSplit {
  double a;
  StateVector chi;
};

/// Local coordinates (chi0, alpha) around a chart centre psi0:
/// psi = e^{i alpha} (c psi0 + chi0), c = sqrt(1 - sign (chi0, O chi0)).
struct ChartPoint {
  NormalizedState psi0;
  StateVector chi0;
  double alpha;
};

/// Rates of change of the chart coordinates along phi = i a psi + chi.
struct ChartVariation {
  double alpha_rate;
  StateVector chi0_rate;
};

/// Builds a TangentVector, throwing ValidationError if phi is not tangent.
TangentVector make_tangent(const NormalizedState& base, const StateVector& phi,
                           const Observable& O, const Tolerance& tol = {});

/// sign * Im(psi, O phi).
double connection(const NormalizedState& psi, const TangentVector& phi, const Observable& O,
                  const Tolerance& tol = {});

TangentSplit split(const NormalizedState& psi, const TangentVector& phi, const Observable& O,
                   const Tolerance& tol = {});

/// d psi/ds - i A(d psi/ds) psi. Horizontal whenever the velocity is tangent.
StateVector covariant_derivative(const NormalizedState& curve_point, const StateVector& velocity,
                                 const Observable& O);

bool is_horizontal(const NormalizedState& psi, const StateVector& chi, const Observable& O,
                   const Tolerance& tol = {});

/// Projects out the O-component along psi so the result is horizontal at psi.
StateVector horizontal_part(const NormalizedState& psi, const StateVector& v, const Observable& O);

/// sqrt(1 - sign (chi0, O chi0)); throws ChartDomainError outside the chart.
double chart_scale(const NormalizedState& psi0, const StateVector& chi0, const Observable& O,
                   const Tolerance& tol = {});

NormalizedState chart_point(const NormalizedState& psi0, const StateVector& chi0, double alpha,
                            const Observable& O, const Tolerance& tol = {});

inline NormalizedState chart_point(const ChartPoint& cp, const Observable& O,
                                   const Tolerance& tol = {}) {
  return chart_point(cp.psi0, cp.chi0, cp.alpha, O, tol);
}

/// chi must be horizontal at the chart's current point.
ChartVariation chart_variations(const ChartPoint& cp, double a, const StateVector& chi,
                                const Observable& O, const Tolerance& tol = {});

/// Connection one-form at cp contracted with coordinate increments:
/// d alpha + sign * Im(chi0, O d chi0).
double connection_one_form(const ChartPoint& cp, double d_alpha, const StateVector& d_chi0,
                           const Observable& O);

}  // namespace ggp
