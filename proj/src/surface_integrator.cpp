#include "ggp/surface_integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ggp {
namespace {

constexpr double kPi = std::numbers::pi;

NormalizedState sample(const SurfaceMesh& mesh, double u, double v, const Observable& O,
                       const Tolerance& tol, int i, int j) {
  try {
    return normalize_o(mesh.generator(u, v), O, tol);
  } catch (const NullStateError& e) {
    throw NullStateError("surface sample (" + std::to_string(i) + ", " + std::to_string(j) +
                         "): " + e.what());
  }
}

}  // namespace

int boundary_samples_for(int M) { return 128 * M; }

DiscreteCurve boundary_curve(const SurfaceMesh& mesh, int per_edge) {
  if (per_edge < 1) throw ValidationError("boundary_curve: per_edge must be positive");
  DiscreteCurve c;
  c.closed = true;
  const double step = 1.0 / per_edge;
  auto push = [&](double u, double v, double s) {
    c.samples.push_back(mesh.generator(u, v));
    c.params.push_back(s);
  };
  for (int k = 0; k < per_edge; ++k) push(k * step, 0.0, k * step);
  for (int k = 0; k < per_edge; ++k) push(1.0, k * step, 1.0 + k * step);
  for (int k = 0; k < per_edge; ++k) push(1.0 - k * step, 1.0, 2.0 + k * step);
  for (int k = 0; k < per_edge; ++k) push(0.0, 1.0 - k * step, 3.0 + k * step);
  push(0.0, 0.0, 4.0);
  return c;
}

double surface_integral(const SurfaceMesh& mesh, int M, const Observable& O,
                        const Tolerance& tol) {
  if (M < 4) throw ValidationError("surface_integral: resolution too small");
  const double h = 1.0 / M;

  // Derivatives are central differences at each cell centre with a step well
  // inside the cell, so the stencil never leaves [0,1]^2.
  const double d = std::min(tol.fd_step, 0.25 * h);
  const ComplexMatrix& Om = O.matrix();
  int sign = 0;
  double total = 0.0;
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) {
      const double u = (i + 0.5) * h, v = (j + 0.5) * h;
      const NormalizedState c = sample(mesh, u, v, O, tol, i, j);
      if (sign == 0) sign = c.sign;
      const NormalizedState up = sample(mesh, u + d, v, O, tol, i, j);
      const NormalizedState um = sample(mesh, u - d, v, O, tol, i, j);
      const NormalizedState vp = sample(mesh, u, v + d, O, tol, i, j);
      const NormalizedState vm = sample(mesh, u, v - d, O, tol, i, j);
      for (int s : {c.sign, up.sign, um.sign, vp.sign, vm.sign}) {
        if (s != sign) {
          throw ValidationError("surface crosses the null set at grid index (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      }
      const StateVector du = (up.psi - um.psi) / (2.0 * d);
      const StateVector dv = (vp.psi - vm.psi) / (2.0 * d);
      total += 2.0 * du.dot(Om * dv).imag();
    }
  }
  return sign * total * h * h;
}

PhaseResult surface_phase(const SurfaceMesh& mesh, const Observable& O, const Tolerance& tol) {
  if (mesh.resolution < 8) throw ValidationError("surface_phase: resolution M must be >= 8");
  const double fine = surface_integral(mesh, mesh.resolution, O, tol);
  const double coarse = surface_integral(mesh, mesh.resolution / 2, O, tol);
  PhaseResult r;
  r.gamma = principal_angle(fine);
  r.winding = std::lround((fine - r.gamma) / (2.0 * kPi));
  r.method = PhaseMethod::SurfaceIntegral;
  r.estimated_error = std::abs(fine - coarse) / 3.0;
  return r;
}

StokesReport stokes_report(const SurfaceMesh& mesh, const Observable& O, const Tolerance& tol) {
  StokesReport rep;
  rep.loop = loop_phase(boundary_curve(mesh, boundary_samples_for(mesh.resolution)), O, tol);
  rep.surface = surface_phase(mesh, O, tol);
  rep.gap = angle_distance(rep.loop.gamma, rep.surface.gamma);
  const double half = surface_integral(mesh, mesh.resolution / 2, O, tol);
  const double gap_half = angle_distance(rep.loop.gamma, half);
  rep.order = (rep.gap > 0.0 && gap_half > 0.0) ? std::log2(gap_half / rep.gap)
                                                : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

StokesStudy stokes_study(const SurfaceMesh& mesh, const std::vector<int>& resolutions,
                         const Observable& O, const Tolerance& tol) {
  if (resolutions.size() < 2) throw ValidationError("stokes_study: need at least 2 resolutions");
  int finest = 0;
  for (int M : resolutions) finest = std::max(finest, M);

  StokesStudy st;
  st.resolutions = resolutions;
  st.loop = loop_phase(boundary_curve(mesh, boundary_samples_for(finest)), O, tol);
  for (int M : resolutions) {
    st.gaps.push_back(angle_distance(st.loop.gamma, surface_integral(mesh, M, O, tol)));
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool usable = true;
  for (std::size_t k = 0; k < resolutions.size(); ++k) {
    if (!(st.gaps[k] > 0.0)) usable = false;
    const double x = std::log(static_cast<double>(resolutions[k]));
    const double y = usable ? -std::log(st.gaps[k]) : 0.0;
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    if (k > 0) {
      st.pairwise_orders.push_back(
          (st.gaps[k] > 0.0 && st.gaps[k - 1] > 0.0)
              ? std::log(st.gaps[k - 1] / st.gaps[k]) /
                    std::log(static_cast<double>(resolutions[k]) / resolutions[k - 1])
              : nan);
    }
  }
  const double n = static_cast<double>(resolutions.size());
  st.fitted_order = usable ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : nan;
  return st;
}

SurfaceMesh hyperboloid_cap(double r, int resolution) {
  SurfaceMesh m;
  m.resolution = resolution;
  m.generator = [r](double u, double v) {
    StateVector psi(2);
    psi << std::cosh(r * u), std::polar(std::sinh(r * u), 2.0 * kPi * v);
    return psi;
  };
  return m;
}

SurfaceMesh bloch_octant(int resolution) {
  SurfaceMesh m;
  m.resolution = resolution;
  m.generator = [](double u, double v) {
    const double theta = 0.5 * kPi * u;
    const double phi = 0.5 * kPi * v;
    StateVector psi(2);
    psi << std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi);
    return psi;
  };
  return m;
}

}  // namespace ggp
