#pragma once

#include <string>
#include <vector>

#include "ggp/ray_classification.hpp"

namespace ggp {

/// Ordered samples of a curve. A closed curve repeats its starting ray as the
/// last sample; the wrap-around segment back to samples[0] is implied.
struct DiscreteCurve {
  std::vector<StateVector> samples;
  bool closed = true;
  /// Parameter value per sample. Empty means uniform on [0, 1].
  std::vector<double> params;

  std::vector<double> parameters() const;
};

enum class PhaseMethod { LoopIntegral, DiscreteProduct, ThreePoint, ChartIntegral, SurfaceIntegral };

const char* to_string(PhaseMethod m);

struct PhaseResult {
  double gamma = 0.0;           // principal value in (-pi, pi]
  long winding = 0;             // unwrapped total = gamma + 2 pi winding
  PhaseMethod method = PhaseMethod::LoopIntegral;
  double estimated_error = 0.0;

  double unwrapped() const;
};

/// O-normalises every sample and checks the curve invariants (K >= 3, common
/// sign, closure). Throws on violation.
std::vector<NormalizedState> normalize_curve(const DiscreteCurve& curve, const Observable& O,
                                             const Tolerance& tol = {});

/// Holonomy of the generalised connection along a closed curve, evaluated as
/// the sum of per-segment arguments of sign * (psi_k, O psi_{k+1}).
PhaseResult loop_phase(const DiscreteCurve& curve, const Observable& O, const Tolerance& tol = {});

/// Arg prod_k (psi_k, O psi_{k+1}) / prod_k (psi_k, O psi_k), wrapping from the
/// last point to the first.
PhaseResult discrete_pancharatnam(const std::vector<NormalizedState>& points, const Observable& O,
                                  const Tolerance& tol = {});

/// Arg Tr(rho1 O rho2 O rho3 O) / (<O>_1 <O>_2 <O>_3).
PhaseResult three_point_phase(const RayPoint& r1, const RayPoint& r2, const RayPoint& r3,
                              const Observable& O, const Tolerance& tol = {});

/// psi_k -> e^{i lambda_k} psi_k. lambda must agree at both ends modulo 2 pi.
DiscreteCurve gauge_transform(const DiscreteCurve& curve, const std::vector<double>& lambda,
                              const Tolerance& tol = {});

DiscreteCurve reversed(const DiscreteCurve& curve);

}  // namespace ggp
