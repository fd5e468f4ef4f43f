#pragma once

#include <functional>
#include <vector>

#include "ggp/holonomy.hpp"

namespace ggp {

/// Parametrised surface (u, v) in [0,1]^2 -> state. The boundary is traversed
/// counterclockwise in (u, v): v=0, u=1, v=1 (reversed), u=0 (reversed).
struct SurfaceMesh {
  std::function<StateVector(double u, double v)> generator;
  int resolution = 64;  // M, cells per side
};

struct StokesReport {
  PhaseResult loop;
  PhaseResult surface;
  double gap;    // |loop - surface| on the circle
  double order;  // log2(gap at M/2 / gap at M); NaN when either gap is zero
};

struct StokesStudy {
  std::vector<int> resolutions;
  std::vector<double> gaps;
  PhaseResult loop;
  /// Least-squares slope of -log(gap) against log(M).
  double fitted_order;
  /// Order between each consecutive pair of resolutions.
  std::vector<double> pairwise_orders;
};

/// Boundary of the unit square sampled `per_edge` times per side, closed.
DiscreteCurve boundary_curve(const SurfaceMesh& mesh, int per_edge);

/// sign * 2 Im(psi_u, O psi_v) integrated by the midpoint rule on the M x M
/// cell centres, derivatives by second-order finite differences of the
/// O-normalised samples.
PhaseResult surface_phase(const SurfaceMesh& mesh, const Observable& O, const Tolerance& tol = {});

/// Integral at an explicit resolution, unwrapped; used by surface_phase.
double surface_integral(const SurfaceMesh& mesh, int M, const Observable& O,
                        const Tolerance& tol = {});

StokesReport stokes_report(const SurfaceMesh& mesh, const Observable& O, const Tolerance& tol = {});

StokesStudy stokes_study(const SurfaceMesh& mesh, const std::vector<int>& resolutions,
                         const Observable& O, const Tolerance& tol = {});

/// Boundary samples per edge used for the reference loop at resolution M.
int boundary_samples_for(int M);

/// (cosh(r u), e^{2 pi i v} sinh(r u)): a cap on the positive sheet of
/// diag(1, -1) whose boundary is the loop at hyperbolic radius r.
SurfaceMesh hyperboloid_cap(double r, int resolution = 64);

/// Bloch-sphere octant with boundary the geodesic triangle +z -> +x -> +y.
SurfaceMesh bloch_octant(int resolution = 64);

}  // namespace ggp
