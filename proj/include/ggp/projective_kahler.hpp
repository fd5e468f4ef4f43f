#pragma once

#include <vector>

#include "ggp/holonomy.hpp"

namespace ggp {

/// Inhomogeneous coordinates z^j = w_j / w_N on one sign sheet, where w are
/// components in the observable eigenbasis. The eigenvalue order defines
/// which component is w_N; to_chart uses the ascending order.
struct KahlerChart {
  Eigen::VectorXcd z;       // N - 1 entries
  RealVector eigenvalues;   // N entries
  int sign = 1;
};

using CoeffGrid = ComplexMatrix;

/// Holomorphic and antiholomorphic components of a tangent vector,
/// X = X^j d/dz^j + Xbar^j d/dzbar^j.
struct TangentCoeffs {
  Eigen::VectorXcd holo;
  Eigen::VectorXcd antiholo;

  static TangentCoeffs real(const Eigen::VectorXcd& holo) { return {holo, holo.conjugate()}; }
};

struct CompatibilityValue {
  double lhs;  // g(X, Y)
  double rhs;  // F(X, J Y)
};

/// Q = sum_{l<N} lambda_l |z^l|^2 + lambda_N.
double chart_denominator(const KahlerChart& chart);

KahlerChart to_chart(const NormalizedState& psi, const Observable& O, const Tolerance& tol = {});

/// O-normalised state with coordinates `chart` and w_N real positive.
NormalizedState chart_representative(const KahlerChart& chart, const Observable& O,
                                     const Tolerance& tol = {});

/// ln(sign Q).
double kahler_potential(const KahlerChart& chart, const Tolerance& tol = {});

/// g_{j kbar} = [delta_jk l_j Q - l_j l_k zbar^j z^k] / Q^2 with l = sign*lambda.
CoeffGrid metric_coeffs(const KahlerChart& chart, const Tolerance& tol = {});

/// F_{j kbar} = i g_{j kbar}.
CoeffGrid form_coeffs(const KahlerChart& chart, const Tolerance& tol = {});

TangentCoeffs apply_complex_structure(const TangentCoeffs& X);

/// Both sides of g(X, Y) = F(X, J Y), each by direct coefficient contraction.
CompatibilityValue compatibility_check(const KahlerChart& chart, const TangentCoeffs& X,
                                       const TangentCoeffs& Y, const Tolerance& tol = {});

/// Loop phase from the chart one-form Im(sum l_j zbar^j dz^j) / Q, with z-dot
/// by central differences and trapezoidal quadrature in the curve parameter.
PhaseResult chart_loop_phase(const DiscreteCurve& curve, const Observable& O,
                             const Tolerance& tol = {});

/// One row of the two-level example: eigenvalues (1, -1) in that order,
/// hyperboloid parameterisation by (theta, phi).
struct TwoStateRow {
  double theta;
  double phi;
  Complex z;
  double potential;
  double g11_re;
  double f11_im;
  bool singular;
};

struct TwoStateGridSpec {
  double theta_min = 0.1;
  double theta_max = 3.0;
  double phi_min = 0.0;
  double phi_max = 6.283185307179586;
  int resolution = 16;
  int sign = 1;
};

/// sign +1: w = (cosh t e^{i p}, sinh t), z = coth t e^{i p}.
/// sign -1: w = (sinh t e^{i p}, cosh t), z = tanh t e^{i p}.
/// Rows at the chart singularity are flagged and carry NaN values.
std::vector<TwoStateRow> two_state_metric_grid(const TwoStateGridSpec& spec,
                                               const Tolerance& tol = {});

}  // namespace ggp
