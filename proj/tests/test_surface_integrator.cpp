#include "ggp/surface_integrator.hpp"

#include "ggp/bundle_connection.hpp"
#include "ggp/holonomy.hpp"
#include "ggp/ray_geometry.hpp"
#include "support.hpp"

using namespace test;

namespace {

SurfaceMesh flip_v(const SurfaceMesh& m) {
  SurfaceMesh out = m;
  auto g = m.generator;
  out.generator = [g](double u, double v) { return g(u, 1.0 - v); };
  return out;
}

// Surface inside one chart: chi0(u, v) bilinear in horizontal vectors at psi0.
SurfaceMesh chart_surface(const NormalizedState& psi0, const Observable& O, verify::Rng& rng) {
  const double s = 0.3 / psi0.psi.norm();
  std::vector<StateVector> c;
  for (int k = 0; k < 4; ++k) c.push_back(verify::random_horizontal(psi0, O, rng, s));
  SurfaceMesh m;
  m.resolution = 64;
  m.generator = [psi0, c, O](double u, double v) {
    const StateVector chi0 = c[0] * (u - 0.5) + c[1] * (v - 0.5) + c[2] * (u * v) + c[3] * (u * u - v);
    return chart_point(psi0, chi0, 0.0, O).psi;
  };
  return m;
}

}  // namespace

TEST_CASE("degenerate surface integrates to zero") {
  const Observable O = sigma_z();
  SurfaceMesh m;
  m.resolution = 16;
  m.generator = [](double u, double) { return vec({std::cosh(u), std::sinh(u)}); };
  CHECK(std::abs(surface_phase(m, O).gamma) < 1e-15);
  CHECK(stokes_report(m, O).gap < 1e-12);
}

TEST_CASE("boundary curve traverses the square counterclockwise") {
  SurfaceMesh m;
  m.generator = [](double u, double v) { return vec({u, v}); };
  const DiscreteCurve c = boundary_curve(m, 4);
  CHECK(c.samples.size() == 17);
  CHECK(c.closed);
  CHECK(max_abs(c.samples[4] - vec({1.0, 0.0})) == 0.0);
  CHECK(max_abs(c.samples[8] - vec({1.0, 1.0})) == 0.0);
  CHECK(max_abs(c.samples[12] - vec({0.0, 1.0})) == 0.0);
  CHECK(max_abs(c.samples[16] - c.samples[0]) == 0.0);
  CHECK(c.params.back() == 4.0);
}

TEST_CASE("hyperboloid cap: surface matches the boundary loop") {
  const Observable O = sigma_z();
  const StokesReport r = stokes_report(hyperboloid_cap(0.8, 64), O);
  CHECK(r.gap < 2 * (r.loop.estimated_error + r.surface.estimated_error));
  CHECK(r.gap < 1e-3);
  CHECK(r.order == doctest::Approx(2.0).epsilon(0.1));
  const double exact = -2 * pi * std::sinh(0.8) * std::sinh(0.8);
  CHECK(angle_distance(r.surface.gamma, exact) < 1e-3);

  const StokesStudy st = stokes_study(hyperboloid_cap(0.8), {16, 32, 64}, O);
  CHECK(st.fitted_order >= 1.8);
  CHECK(st.gaps[2] < st.gaps[1]);
  CHECK(st.pairwise_orders.size() == 2);
}

TEST_CASE("identity observable octant gives half the solid angle") {
  const PhaseResult r = surface_phase(bloch_octant(128), Observable::identity(2));
  CHECK(angle_distance(r.gamma, pi / 4) < 1e-3);
}

TEST_CASE("orientation: reversing v negates the surface phase") {
  const Observable O = sigma_z();
  const SurfaceMesh m = hyperboloid_cap(0.6, 32);
  CHECK(angle_distance(surface_phase(flip_v(m), O).gamma, -surface_phase(m, O).gamma) < 1e-12);
}

TEST_CASE("property: random chart surfaces satisfy Stokes, both signs") {
  verify::Rng rng(61);
  for (int t = 0; t < 6; ++t) {
    const Observable O = random_observable(4, rng);
    const int sign = verify::has_sheet(O, t % 2 ? 1 : -1) ? (t % 2 ? 1 : -1) : (t % 2 ? -1 : 1);
    const NormalizedState psi0 = verify::random_normalized(O, sign, rng, 0.3);
    const SurfaceMesh m = chart_surface(psi0, O, rng);
    CHECK(stokes_report(m, O).gap < 1e-3);
  }
}

TEST_CASE("integrand equals the symplectic form of the horizontal parts") {
  verify::Rng rng(62);
  const Observable O = random_observable(3, rng);
  const NormalizedState psi0 = verify::random_normalized(O, verify::has_sheet(O, -1) ? -1 : 1, rng, 0.3);
  const SurfaceMesh m = chart_surface(psi0, O, rng);
  const double d = 1e-5;
  for (double u : {0.2, 0.5, 0.9}) {
    for (double v : {0.1, 0.6}) {
      auto at = [&](double a, double b) { return normalize_o(m.generator(a, b), O); };
      const NormalizedState p = at(u, v);
      const StateVector pu = (at(u + d, v).psi - at(u - d, v).psi) / (2 * d);
      const StateVector pv = (at(u, v + d).psi - at(u, v - d).psi) / (2 * d);
      const double direct = p.sign * 2 * o_inner(pu, O, pv).imag();
      const double via_split = p.sign * symplectic_form(ray_tangent(p, horizontal_part(p, pu, O), O),
                                                        ray_tangent(p, horizontal_part(p, pv, O), O), O);
      CHECK(direct == doctest::Approx(via_split).epsilon(1e-6));
    }
  }
}

TEST_CASE("surface errors") {
  const Observable O = sigma_z();
  CHECK_THROWS_AS(surface_phase(hyperboloid_cap(0.8, 4), O), ValidationError);
  SurfaceMesh null;
  null.resolution = 8;
  null.generator = [](double, double) { return vec({1.0, 1.0}); };
  CHECK_THROWS_WITH_AS(surface_phase(null, O), doctest::Contains("(0, 0)"), NullStateError);
  SurfaceMesh cross;
  cross.resolution = 8;
  cross.generator = [](double u, double) { return vec({1.0, 2.0 * u}); };
  CHECK_THROWS_AS(surface_phase(cross, O), ValidationError);
}
