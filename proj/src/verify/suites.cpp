#include "ggp/verify/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ggp/bundle_connection.hpp"
#include "ggp/holonomy.hpp"
#include "ggp/projective_kahler.hpp"
#include "ggp/ray_classification.hpp"
#include "ggp/ray_geometry.hpp"
#include "ggp/surface_integrator.hpp"
#include "ggp/verify/oracles.hpp"
#include "ggp/verify/random.hpp"

namespace ggp::verify {
namespace {

constexpr double kPi = std::numbers::pi;

Rng stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return Rng(seq);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random sheet that exists for O.
int pick_sign(const Observable& O, Rng& rng) {
  const int s = uniform_int(rng, 0, 1) ? 1 : -1;
  return has_sheet(O, s) ? s : -s;
}

SuiteResult finish(SuiteResult r) {
  r.passed = r.passed && r.max_error < r.threshold;
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

SuiteResult three_point_identity(std::uint64_t seed, int count) {
  Rng rng = stream(seed, 1);
  SuiteResult r{"three_point_identity", true, 0, 0.0, 1e-12, "", {}};
  while (r.cases < count) {
    const int n = uniform_int(rng, 2, 8);
    const Observable O = eigendecompose(random_hermitian(n, rng));
    std::vector<StateVector> raw;
    std::vector<RayPoint> rays;
    for (int k = 0; k < 3; ++k) {
      const NormalizedState ns = random_normalized(O, pick_sign(O, rng), rng);
      // Hand the oracle an arbitrarily rescaled copy.
      raw.push_back(ns.psi * std::polar(0.5 + std::uniform_real_distribution<double>(0, 2)(rng),
                                        std::uniform_real_distribution<double>(-kPi, kPi)(rng)));
      rays.push_back(ray_of(ns));
    }
    const Complex prod = oracle::cyclic_overlap_product(raw, O.matrix());
    double scale = std::pow(O.eigenvalues().cwiseAbs().maxCoeff(), 3);
    double expectation = 1.0;
    for (const auto& v : raw) {
      scale *= v.squaredNorm();
      expectation *= oracle::cyclic_overlap_product({v}, O.matrix()).real();
    }
    if (std::abs(prod) < 1e-3 * scale) continue;  // near-degenerate triple
    const double expected = std::arg(prod / expectation);
    const PhaseResult got = three_point_phase(rays[0], rays[1], rays[2], O);
    r.max_error = std::max(r.max_error, angle_distance(got.gamma, expected));
    ++r.cases;
  }
  r.detail = "Arg Tr(r1 O r2 O r3 O)/(<O>1<O>2<O>3) against the cyclic overlap product";
  return finish(r);
}

SuiteResult gauge_invariance(std::uint64_t seed, int count, std::size_t K) {
  Rng rng = stream(seed, 2);
  SuiteResult r{"gauge_invariance", true, 0, 0.0, 1e-8, "", {}};
  for (; r.cases < count; ++r.cases) {
    const int n = uniform_int(rng, 2, 8);
    const Observable O = eigendecompose(random_hermitian(n, rng));
    const DiscreteCurve c = random_closed_curve(O, pick_sign(O, rng), K, rng);
    const DiscreteCurve g = gauge_transform(c, random_periodic_gauge(c.parameters(), rng));
    const double d = angle_distance(loop_phase(c, O).gamma, loop_phase(g, O).gamma);
    r.max_error = std::max(r.max_error, d);
  }
  r.detail = "loop phase before and after a smooth periodic gauge change";
  return finish(r);
}

SuiteResult stokes_equivalence(const Tolerance& tol) {
  SuiteResult r{"stokes_equivalence", true, 0, 0.0, 1e-3, "", {}};
  const std::vector<int> res{16, 32, 64};
  struct Case {
    const char* name;
    SurfaceMesh mesh;
    Observable O;
  };
  RealVector hyp(2);
  hyp << 1.0, -1.0;
  const Case cases[] = {{"hyperboloid_cap", hyperboloid_cap(0.8), Observable::diagonal(hyp)},
                        {"bloch_octant", bloch_octant(), Observable::identity(2)}};
  std::ostringstream detail;
  for (const Case& c : cases) {
    const StokesStudy st = stokes_study(c.mesh, res, c.O, tol);
    const std::string p = c.name;
    r.values.emplace_back(p + ".loop", st.loop.gamma);
    for (std::size_t k = 0; k < res.size(); ++k) {
      r.values.emplace_back(p + ".gap_M" + std::to_string(res[k]), st.gaps[k]);
    }
    r.values.emplace_back(p + ".order", st.fitted_order);
    r.max_error = std::max(r.max_error, st.gaps.back());
    const bool order_ok = st.fitted_order >= 1.8;
    if (!order_ok) r.passed = false;
    detail << p << ": gap(64)=" << fmt(st.gaps.back()) << " order=" << fmt(st.fitted_order)
           << (order_ok ? "" : " (order below 1.8)") << "; ";
    ++r.cases;
  }
  r.detail = detail.str() + "threshold applies to the M=64 gap, order must be >= 1.8";
  return finish(r);
}

SuiteResult identity_reduction(std::uint64_t seed, int count) {
  Rng rng = stream(seed, 4);
  SuiteResult r{"identity_reduction", true, 0, 0.0, 1e-4, "", {}};
  const Observable I = Observable::identity(2);
  using oracle::Vec3;

  // Geodesic octant triangle north pole -> +x -> +y, sampled on great circles.
  const Vec3 a(0, 0, 1), b(1, 0, 0), c(0, 1, 0);
  DiscreteCurve loop;
  const int per_edge = 200;
  for (const auto& [p, q] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
    for (int k = 0; k < per_edge; ++k) {
      loop.samples.push_back(oracle::bloch_state(oracle::slerp(p, q, double(k) / per_edge)));
    }
  }
  loop.samples.push_back(loop.samples.front());
  const double omega = oracle::signed_solid_angle(a, b, c);
  const double loop_err = angle_distance(loop_phase(loop, I).gamma, omega / 2.0);
  r.values.emplace_back("octant.loop", loop_phase(loop, I).gamma);
  r.values.emplace_back("octant.half_solid_angle", omega / 2.0);
  r.max_error = loop_err;
  ++r.cases;

  // Bargmann invariants: exact against the solid angle, tight tolerance.
  double bargmann_err = 0.0;
  auto ray = [&](const Vec3& n) { return ray_of(normalize_o(oracle::bloch_state(n), I)); };
  const double oct = three_point_phase(ray(a), ray(b), ray(c), I).gamma;
  r.values.emplace_back("octant.bargmann", oct);
  bargmann_err = angle_distance(oct, omega / 2.0);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = 0; k < count; ++k) {
    Vec3 v[3];
    for (auto& x : v) x = Vec3(g(rng), g(rng), g(rng)).normalized();
    const double w = oracle::signed_solid_angle(v[0], v[1], v[2]);
    if (std::abs(std::abs(w) - 2.0 * kPi) < 1e-3) continue;  // antipodal-ish, Arg ill-conditioned
    const double got = three_point_phase(ray(v[0]), ray(v[1]), ray(v[2]), I).gamma;
    bargmann_err = std::max(bargmann_err, angle_distance(got, w / 2.0));
    ++r.cases;
  }
  r.values.emplace_back("bargmann.max_error", bargmann_err);
  if (bargmann_err >= 1e-12) r.passed = false;
  r.detail = "identity observable: geodesic loop within 1e-4 and Bargmann values within 1e-12 "
             "of half the signed solid angle";
  return finish(r);
}

SuiteResult kahler_fd(std::uint64_t seed, int count, const Tolerance& tol) {
  Rng rng = stream(seed, 5);
  SuiteResult r{"kahler_fd", true, 0, 0.0, 1e-6, "", {}};
  std::uniform_real_distribution<double> mag(0.5, 2.0), unit(0.0, 1.0), ang(-kPi, kPi);
  double gf_err = 0.0;
  while (r.cases < count) {
    const int n = uniform_int(rng, 2, 6);
    KahlerChart ch;
    ch.sign = (r.cases % 2 == 0) ? 1 : -1;
    ch.eigenvalues.resize(n);
    for (int l = 0; l < n; ++l) ch.eigenvalues(l) = (unit(rng) < 0.5 ? -1.0 : 1.0) * mag(rng);
    ch.z.resize(n - 1);
    for (int l = 0; l < n - 1; ++l) ch.z(l) = std::polar(0.8 * std::sqrt(unit(rng) / (n - 1)), ang(rng));
    if (ch.sign * chart_denominator(ch) < 0.5) continue;

    const CoeffGrid gmat = metric_coeffs(ch, tol);
    const CoeffGrid fmat = form_coeffs(ch, tol);
    KahlerChart probe = ch;
    const ComplexMatrix fd = oracle::complex_hessian_fd(
        [&](const Eigen::VectorXcd& z) {
          probe.z = z;
          return kahler_potential(probe, tol);
        },
        ch.z, tol.fd_step);
    r.max_error = std::max(r.max_error, (gmat - fd).cwiseAbs().maxCoeff());
    gf_err = std::max(gf_err, (gmat - Complex(0, -1) * fmat).cwiseAbs().maxCoeff());
    ++r.cases;
  }
  r.values.emplace_back("g_minus_iF.max_error", gf_err);
  if (gf_err >= 1e-14) r.passed = false;
  r.detail = "metric coefficients against central differences of the potential (1e-6), "
             "g = -i F (1e-14)";
  return finish(r);
}

SuiteResult two_state_closed_forms() {
  SuiteResult r{"two_state_closed_forms", true, 1, 0.0, 1e-14, "", {}};
  KahlerChart ch;
  ch.z = Eigen::VectorXcd::Constant(1, Complex(2.0, 0.0));
  ch.eigenvalues = RealVector(2);
  ch.eigenvalues << 1.0, -1.0;
  ch.sign = 1;
  const double g = metric_coeffs(ch)(0, 0).real();
  const double K = kahler_potential(ch);
  r.values.emplace_back("g11", g);
  r.values.emplace_back("potential", K);
  r.max_error = std::max({std::abs(g - (-1.0 / 9.0)), std::abs(K - std::log(3.0)),
                          std::abs(g - oracle::two_state_metric(Complex(2.0, 0.0))),
                          std::abs(K - oracle::two_state_potential(Complex(2.0, 0.0)))});
  r.detail = "z = 2, eigenvalues (1, -1): g = -1/9, potential = ln 3";
  return finish(r);
}

SuiteResult trace_split_identity(std::uint64_t seed, int count) {
  Rng rng = stream(seed, 7);
  SuiteResult r{"trace_split_identity", true, 0, 0.0, 1e-12, "", {}};
  for (; r.cases < count; ++r.cases) {
    const int n = uniform_int(rng, 2, 6);
    const Observable O = eigendecompose(random_hermitian(n, rng));
    const NormalizedState psi = random_normalized(O, pick_sign(O, rng), rng);
    const RayTangent b1 = ray_tangent(psi, random_horizontal(psi, O, rng), O);
    const RayTangent b2 = ray_tangent(psi, random_horizontal(psi, O, rng), O);
    const Complex t = trace_split(b1.base, b1, b2, O);
    const Complex pairing = b1.chi.dot(O.matrix() * b2.chi);
    const double e = std::max({std::abs(t.real() - metric(b1, b2, O)),
                               std::abs(t.imag() - 0.5 * symplectic_form(b1, b2, O)),
                               std::abs(t - pairing)});
    r.max_error = std::max(r.max_error, e);
  }
  r.detail = "Re/Im of Tr[rho O B' O B'' O] against g and omega/2";
  return finish(r);
}

SuiteResult distance_identity(std::uint64_t seed, int count) {
  Rng rng = stream(seed, 8);
  SuiteResult r{"distance_identity", true, 0, 0.0, 1e-12, "", {}};
  for (; r.cases < count; ++r.cases) {
    const int n = uniform_int(rng, 2, 8);
    const Observable O = eigendecompose(random_hermitian(n, rng));
    const int s = pick_sign(O, rng);
    const NormalizedState p1 = random_normalized(O, s, rng, 0.3);
    const NormalizedState p2 = random_normalized(O, s, rng, 0.3);
    const Complex ov = p1.psi.dot(O.matrix() * p2.psi);
    const double d = ray_distance_sq(ray_of(p1), ray_of(p2), O);
    const double scale = std::max(1.0, std::norm(ov));
    r.max_error = std::max(r.max_error, std::abs(d - (1.0 - std::norm(ov))) / scale);
  }

  RealVector hyp(2);
  hyp << 1.0, -1.0;
  const Observable O = Observable::diagonal(hyp);
  StateVector a(2), b(2);
  a << 1.0, 0.0;
  b << std::cosh(0.5), std::sinh(0.5);
  const double d = ray_distance_sq(ray_of(normalize_o(a, O)), ray_of(normalize_o(b, O)), O);
  const double exact = -std::pow(std::sinh(0.5), 2);
  r.values.emplace_back("two_state_t0.5", d);
  r.values.emplace_back("two_state_t0.5.closed_form", exact);
  r.max_error = std::max(r.max_error, std::abs(d - exact));
  if (!(d < 0.0)) r.passed = false;
  ++r.cases;
  r.detail = "D^2 = 1 - |(psi1, O psi2)|^2; two-state t = 0.5 value is -sinh^2(0.5) < 0";
  return finish(r);
}

SuiteResult cross_method(std::size_t K, int M, const Tolerance& tol) {
  SuiteResult r{"cross_method", true, 0, 0.0, 0.0, "", {}};
  constexpr double rr = 0.8;
  RealVector hyp(2);
  hyp << 1.0, -1.0;
  const Observable O = Observable::diagonal(hyp);

  DiscreteCurve c;
  for (std::size_t k = 0; k < K; ++k) {
    const double s = double(k) / double(K - 1);
    StateVector psi(2);
    psi << std::cosh(rr), std::polar(std::sinh(rr), 2.0 * kPi * s);
    c.samples.push_back(psi);
  }
  c.samples.back() = c.samples.front();

  SurfaceMesh mesh = hyperboloid_cap(rr, M);
  const PhaseResult res[] = {loop_phase(c, O, tol),
                             discrete_pancharatnam(normalize_curve(c, O, tol), O, tol),
                             chart_loop_phase(c, O, tol), surface_phase(mesh, O, tol)};
  double worst_ratio = 0.0;
  for (const auto& p : res) r.values.emplace_back(to_string(p.method), p.gamma);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double allowed = std::max({res[i].estimated_error, res[j].estimated_error, 1e-3});
      const double d = angle_distance(res[i].gamma, res[j].gamma);
      r.max_error = std::max(r.max_error, d);
      worst_ratio = std::max(worst_ratio, d / allowed);
      ++r.cases;
    }
  }
  const double closed = principal_angle(-2.0 * kPi * std::pow(std::sinh(rr), 2));
  r.values.emplace_back("closed_form", closed);
  r.values.emplace_back("worst_gap_over_allowance", worst_ratio);
  r.threshold = 1e-3;
  r.passed = worst_ratio < 1.0;
  r.detail = "pairwise gaps within max(error estimates, 1e-3)";
  // The threshold check in finish() would be stricter than the allowance; skip it.
  return r;
}

std::vector<SuiteResult> run_all(std::uint64_t seed, const Tolerance& tol) {
  return {three_point_identity(seed), gauge_invariance(seed),     stokes_equivalence(tol),
          identity_reduction(seed),   kahler_fd(seed, 200, tol),  two_state_closed_forms(),
          trace_split_identity(seed), distance_identity(seed),    cross_method(1000, 64, tol)};
}

}  // namespace ggp::verify
