#include "ggp/projective_kahler.hpp"

#include "ggp/holonomy.hpp"
#include "ggp/verify/oracles.hpp"
#include "support.hpp"

using namespace test;
namespace oracle = ggp::verify::oracle;

namespace {

KahlerChart chart(std::initializer_list<Complex> z, std::initializer_list<double> lambda, int sign) {
  KahlerChart c;
  c.z = vec(z);
  c.eigenvalues.resize(static_cast<Eigen::Index>(lambda.size()));
  Eigen::Index k = 0;
  for (double l : lambda) c.eigenvalues(k++) = l;
  c.sign = sign;
  return c;
}

KahlerChart random_chart(int n, int sign, verify::Rng& rng) {
  std::uniform_real_distribution<double> mag(0.5, 2.0), unit(0.0, 1.0);
  for (;;) {
    KahlerChart c;
    c.sign = sign;
    c.eigenvalues.resize(n);
    for (int l = 0; l < n; ++l) c.eigenvalues(l) = (unit(rng) < 0.5 ? -1.0 : 1.0) * mag(rng);
    c.z = verify::random_state(n - 1, rng) * 0.5;
    if (c.sign * chart_denominator(c) > 0.3) return c;
  }
}

// Charts kept away from the null quadric, where fourth derivatives of the
// potential would swamp a 1e-4 difference step.
KahlerChart tame_chart(int n, int sign, verify::Rng& rng) {
  for (;;) {
    KahlerChart c = random_chart(n, sign, rng);
    c.z *= 0.8 * std::uniform_real_distribution<double>(0.0, 1.0)(rng) / std::max(1.0, c.z.norm());
    if (c.sign * chart_denominator(c) >= 0.5) return c;
  }
}

TangentCoeffs random_tangent(int n, verify::Rng& rng) { return TangentCoeffs::real(verify::random_state(n, rng)); }

}  // namespace

TEST_CASE("to_chart examples") {
  const Observable O = diag({-1.0, 1.0});
  for (double th : {0.0, 0.3, 1.7}) {
    const KahlerChart c = to_chart(normalize_o(vec({std::sinh(th), std::cosh(th)}), O), O);
    CHECK(std::abs(c.z(0) - std::tanh(th)) < 1e-15);
    CHECK(c.sign == 1);
  }
  const Observable R = diag({-2.0, 0.5, 3.0});
  CHECK(to_chart({vec({0.0, 0.0, 1.0 / std::sqrt(3.0)}), 1}, R).z.norm() == 0.0);
  CHECK_THROWS_AS(to_chart({vec({1.0, 0.0, 0.0}), -1}, R), ChartDomainError);
}

TEST_CASE("property: chart round trip and invariance under rescaling") {
  verify::Rng rng(51);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 5;
    const Observable O = random_observable(n, rng);
    const int sign = verify::has_sheet(O, t % 2 ? 1 : -1) ? (t % 2 ? 1 : -1) : (t % 2 ? -1 : 1);
    const NormalizedState psi = verify::random_normalized(O, sign, rng);
    const KahlerChart c = to_chart(psi, O);
    const NormalizedState rep = chart_representative(c, O);
    CHECK(o_inner(rep.psi, O, rep.psi).real() == doctest::Approx(sign).epsilon(1e-12));
    CHECK((to_chart(rep, O).z - c.z).norm() < 1e-12 * std::max(1.0, c.z.norm()));
    const Complex scale = std::polar(0.2 + t % 4, u(rng));
    CHECK((to_chart({scale * psi.psi, sign}, O).z - c.z).norm() < 1e-12 * std::max(1.0, c.z.norm()));
  }
}

TEST_CASE("kahler_potential examples") {
  CHECK(kahler_potential(chart({0.0}, {-1.0, 1.0}, 1)) == 0.0);
  CHECK(kahler_potential(chart({2.0}, {1.0, -1.0}, 1)) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(kahler_potential(chart({0.3, Complex(0, 0.4)}, {-1.0, 1.0, 2.0}, 1)) ==
        doctest::Approx(std::log(2.07)).epsilon(1e-14));
  // The negative sheet uses sign * Q.
  CHECK(kahler_potential(chart({0.5}, {1.0, -1.0}, -1)) == doctest::Approx(std::log(0.75)).epsilon(1e-15));
  CHECK_THROWS_AS(kahler_potential(chart({1.0}, {1.0, -1.0}, 1)), SingularityError);
  CHECK_THROWS_AS(kahler_potential(chart({0.5}, {1.0, -1.0}, 1)), SingularityError);
  CHECK_THROWS_AS(kahler_potential(chart({0.5, 0.1}, {1.0, -1.0}, 1)), DimensionError);
}

TEST_CASE("two-state metric and form at z = 2") {
  const KahlerChart c = chart({2.0}, {1.0, -1.0}, 1);
  CHECK(std::abs(metric_coeffs(c)(0, 0) - (-1.0 / 9.0)) < 1e-15);
  CHECK(std::abs(form_coeffs(c)(0, 0) - Complex(0, -1.0 / 9.0)) < 1e-15);
  CHECK(metric_coeffs(c)(0, 0).real() == doctest::Approx(oracle::two_state_metric(2.0)));
}

TEST_CASE("coefficients at the chart origin") {
  const KahlerChart c = chart({0.0, 0.0, 0.0}, {-2.0, 0.5, 1.5, 4.0}, 1);
  const CoeffGrid g = metric_coeffs(c);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const double expected = j == k ? c.eigenvalues(j) / 4.0 : 0.0;
      CHECK(std::abs(g(j, k) - expected) < 1e-15);
    }
  }
  const KahlerChart ones = chart({0.0, 0.0}, {1.0, 1.0, 1.0}, 1);
  CHECK(max_abs(form_coeffs(ones) - I * ComplexMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("property: finite differences, g = -iF, antihermitian form, both signs") {
  verify::Rng rng(52);
  const Tolerance tol;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 5;
    const KahlerChart c = tame_chart(n, t % 2 ? 1 : -1, rng);
    const CoeffGrid g = metric_coeffs(c), F = form_coeffs(c);
    KahlerChart probe = c;
    const ComplexMatrix fd = oracle::complex_hessian_fd(
        [&](const Eigen::VectorXcd& z) {
          probe.z = z;
          return kahler_potential(probe);
        },
        c.z, tol.fd_step);
    CHECK(max_abs(g - fd) < 1e-6);
    CHECK(max_abs(g - Complex(0, -1) * F) < 1e-14);
    CHECK(max_abs(F + F.adjoint()) < 1e-12);
  }
}

TEST_CASE("identity observable gives the Fubini-Study metric") {
  verify::Rng rng(53);
  for (int n = 2; n <= 6; ++n) {
    KahlerChart c;
    c.eigenvalues = RealVector::Ones(n);
    c.z = verify::random_state(n - 1, rng);
    c.sign = 1;
    CHECK(max_abs(metric_coeffs(c) - oracle::fubini_study(c.z)) < 1e-14);
  }
}

TEST_CASE("complex structure and compatibility") {
  const KahlerChart origin = chart({0.0}, {1.0, -1.0}, -1);
  const TangentCoeffs d1 = TangentCoeffs::real(vec({1.0}));
  const CompatibilityValue v0 = compatibility_check(origin, d1, d1);
  CHECK(v0.lhs == doctest::Approx(v0.rhs));

  verify::Rng rng(54);
  for (int t = 0; t < 50; ++t) {
    const TangentCoeffs X = random_tangent(3, rng);
    const TangentCoeffs JJ = apply_complex_structure(apply_complex_structure(X));
    CHECK((JJ.holo + X.holo).norm() < 1e-15);
    CHECK((JJ.antiholo + X.antiholo).norm() < 1e-15);

    const KahlerChart c = random_chart(4, t % 2 ? 1 : -1, rng);
    const CompatibilityValue v = compatibility_check(c, random_tangent(3, rng), random_tangent(3, rng));
    CHECK(std::abs(v.lhs - v.rhs) < 1e-10);
  }
  CHECK_THROWS_AS(compatibility_check(origin, TangentCoeffs::real(vec({1.0, 0.0})), d1), DimensionError);
}

TEST_CASE("singularity probe: metric diverges towards the null quadric") {
  // Two-state positive sheet, z = 1 + eps approaches Q = 0 from above.
  double last = 0.0;
  for (double eps = 1e-1; eps >= 1e-2; eps /= 1.5) {
    const double norm = metric_coeffs(chart({1.0 + eps}, {1.0, -1.0}, 1)).cwiseAbs().maxCoeff();
    CHECK(norm > last);
    last = norm;
  }
  CHECK(last > 500.0);
  CHECK_THROWS_AS(metric_coeffs(chart({1.0}, {1.0, -1.0}, 1)), SingularityError);
}

TEST_CASE("chart_loop_phase") {
  const Observable O = sigma_z();
  DiscreteCurve flat;
  for (int k = 0; k < 20; ++k) flat.samples.push_back(vec({std::cosh(0.5), std::sinh(0.5)}));
  CHECK(std::abs(chart_loop_phase(flat, O).gamma) < 1e-15);

  DiscreteCurve h;
  for (int k = 0; k < 1000; ++k) {
    h.samples.push_back(vec({std::cosh(0.8), std::polar(std::sinh(0.8), 2 * pi * k / 999.0)}));
  }
  h.samples.back() = h.samples.front();
  const PhaseResult chart = chart_loop_phase(h, O), loop = loop_phase(h, O);
  const double exact = -2 * pi * std::sinh(0.8) * std::sinh(0.8);
  CHECK(angle_distance(chart.gamma, loop.gamma) < chart.estimated_error + loop.estimated_error);
  CHECK(angle_distance(chart.gamma, exact) < 1e-4);
  CHECK(angle_distance(loop.gamma, exact) < 2e-4);

  // Identity observable, latitude circle at colatitude theta0: half the enclosed solid angle.
  const Observable id = Observable::identity(2);
  for (double th0 : {0.4, 1.1, 2.0}) {
    DiscreteCurve c;
    for (int k = 0; k < 801; ++k) {
      c.samples.push_back(vec({std::cos(th0 / 2), std::polar(std::sin(th0 / 2), 2 * pi * k / 800.0)}));
    }
    c.samples.back() = c.samples.front();
    const double expected = principal_angle(pi * (1 - std::cos(th0)));
    CHECK(angle_distance(chart_loop_phase(c, id).gamma, expected) < 1e-4);
    CHECK(angle_distance(loop_phase(c, id).gamma, expected) < 1e-4);
  }

  // Sample 5 has no amplitude on the largest eigenvalue, so it lies outside the chart.
  const Observable R = diag({1.0, 2.0, -1.0});
  DiscreteCurve off;
  for (int k = 0; k < 40; ++k) off.samples.push_back(vec({1.0, std::polar(0.5, 2 * pi * k / 39.0), 0.2}));
  off.samples.back() = off.samples.front();
  off.samples[5] = vec({1.0, 0.0, 0.0});
  CHECK_THROWS_WITH_AS(chart_loop_phase(off, R), doctest::Contains("sample 5"), ChartDomainError);
}

TEST_CASE("chart_loop_phase on the negative sheet agrees with loop_phase") {
  verify::Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    const Observable O = random_observable(3, rng);
    const int sign = verify::has_sheet(O, -1) ? -1 : 1;
    const DiscreteCurve c = verify::random_closed_curve(O, sign, 2000, rng);
    CHECK(angle_distance(chart_loop_phase(c, O).gamma, loop_phase(c, O).gamma) < 1e-3);
  }
}

TEST_CASE("two-state metric grid") {
  TwoStateGridSpec spec;
  const std::vector<TwoStateRow> rows = two_state_metric_grid(spec);
  CHECK(rows.size() == 256);
  for (const TwoStateRow& r : rows) {
    REQUIRE_FALSE(r.singular);
    const double mod = std::abs(r.z);
    CHECK(mod == doctest::Approx(1.0 / std::tanh(r.theta)).epsilon(1e-12));
    CHECK(r.potential == doctest::Approx(oracle::two_state_potential(r.z)).epsilon(1e-12));
    CHECK(r.g11_re == doctest::Approx(oracle::two_state_metric(r.z)).epsilon(1e-12));
    CHECK(r.f11_im == doctest::Approx(r.g11_re).epsilon(1e-15));
  }

  // The point with z = 2.
  spec.theta_min = spec.theta_max = std::atanh(0.5);
  spec.resolution = 2;
  for (const TwoStateRow& r : two_state_metric_grid(spec)) {
    CHECK(std::abs(r.z) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.g11_re == doctest::Approx(-1.0 / 9.0).epsilon(1e-14));
  }

  // Positive sheet: g vanishes as theta -> 0 (z -> infinity) and diverges as
  // theta grows (z -> 1, the null quadric).
  spec.theta_min = 1e-3;
  spec.theta_max = 1e-3;
  CHECK(std::abs(two_state_metric_grid(spec)[0].g11_re) < 1e-11);
  spec.theta_min = spec.theta_max = 8.0;
  CHECK(two_state_metric_grid(spec)[0].g11_re < -1e12);
  spec.theta_min = spec.theta_max = 40.0;
  CHECK(two_state_metric_grid(spec)[0].singular);
  CHECK(std::isnan(two_state_metric_grid(spec)[0].g11_re));

  TwoStateGridSpec neg;
  neg.sign = -1;
  neg.resolution = 5;
  for (const TwoStateRow& r : two_state_metric_grid(neg)) {
    CHECK(std::abs(r.z - std::polar(std::tanh(r.theta), r.phi)) < 1e-14);
    CHECK_FALSE(r.singular);
  }

  TwoStateGridSpec bad;
  bad.sign = 0;
  CHECK_THROWS_AS(two_state_metric_grid(bad), ValidationError);
  bad.sign = 1;
  bad.resolution = 1;
  CHECK_THROWS_AS(two_state_metric_grid(bad), ValidationError);
}
