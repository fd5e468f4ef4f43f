#include "ggp/projective_kahler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ggp {
namespace {

constexpr Complex I{0.0, 1.0};

void check_shape(const KahlerChart& chart) {
  if (chart.eigenvalues.size() < 2 || chart.z.size() != chart.eigenvalues.size() - 1) {
    throw DimensionError("chart: need N eigenvalues and N-1 coordinates");
  }
  if (chart.sign != 1 && chart.sign != -1) throw ValidationError("chart: sign must be +1 or -1");
}

// sign * Q, checked to lie away from the null quadric.
double signed_denominator(const KahlerChart& chart, const Tolerance& tol) {
  check_shape(chart);
  const double q = chart.sign * chart_denominator(chart);
  if (!(q > tol.null_tol)) {
    throw SingularityError("chart: sign*Q = " + std::to_string(q) +
                           " is not positive; point is at or beyond the null quadric");
  }
  return q;
}

}  // namespace

double chart_denominator(const KahlerChart& chart) {
  check_shape(chart);
  const Eigen::Index n = chart.z.size();
  return (chart.eigenvalues.head(n).array() * chart.z.array().abs2()).sum() + chart.eigenvalues(n);
}

KahlerChart to_chart(const NormalizedState& psi, const Observable& O, const Tolerance& tol) {
  require_dim(psi.psi, O, "to_chart");
  const StateVector w = O.eigenvectors().adjoint() * psi.psi;
  const Eigen::Index n = w.size() - 1;
  if (std::abs(w(n)) <= tol.null_tol) {
    throw ChartDomainError("to_chart: w_N vanishes; point is outside this chart");
  }
  KahlerChart chart;
  chart.z = w.head(n) / w(n);
  chart.eigenvalues = O.eigenvalues();
  chart.sign = psi.sign;
  return chart;
}

NormalizedState chart_representative(const KahlerChart& chart, const Observable& O,
                                     const Tolerance& tol) {
  if (chart.eigenvalues.size() != O.dim()) throw DimensionError("chart_representative: dimension");
  const double q = signed_denominator(chart, tol);
  StateVector w(O.dim());
  w.head(chart.z.size()) = chart.z;
  w(chart.z.size()) = 1.0;
  w /= std::sqrt(q);
  return {O.eigenvectors() * w, chart.sign};
}

double kahler_potential(const KahlerChart& chart, const Tolerance& tol) {
  return std::log(signed_denominator(chart, tol));
}

CoeffGrid metric_coeffs(const KahlerChart& chart, const Tolerance& tol) {
  const double q = signed_denominator(chart, tol);
  const Eigen::Index n = chart.z.size();
  const RealVector l = chart.sign * chart.eigenvalues.head(n);
  CoeffGrid g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      Complex num = -l(j) * l(k) * std::conj(chart.z(j)) * chart.z(k);
      if (j == k) num += l(j) * q;
      g(j, k) = num / (q * q);
    }
  }
  return g;
}

CoeffGrid form_coeffs(const KahlerChart& chart, const Tolerance& tol) {
  return I * metric_coeffs(chart, tol);
}

TangentCoeffs apply_complex_structure(const TangentCoeffs& X) {
  return {I * X.holo, -I * X.antiholo};
}

CompatibilityValue compatibility_check(const KahlerChart& chart, const TangentCoeffs& X,
                                       const TangentCoeffs& Y, const Tolerance& tol) {
  const Eigen::Index n = chart.z.size();
  for (const TangentCoeffs* t : {&X, &Y}) {
    if (t->holo.size() != n || t->antiholo.size() != n) {
      throw DimensionError("compatibility_check: tangent coefficients have wrong length");
    }
  }
  const CoeffGrid g = metric_coeffs(chart, tol);
  const CoeffGrid F = form_coeffs(chart, tol);
  const TangentCoeffs JY = apply_complex_structure(Y);

  // g = sum 2 g_{jk} dz^j dzbar^k (symmetrised), F = sum F_{jk} dz^j ^ dzbar^k.
  Complex lhs = 0.0;
  Complex rhs = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      lhs += g(j, k) * (X.holo(j) * Y.antiholo(k) + Y.holo(j) * X.antiholo(k));
      rhs += F(j, k) * (X.holo(j) * JY.antiholo(k) - JY.holo(j) * X.antiholo(k));
    }
  }
  return {lhs.real(), rhs.real()};
}

PhaseResult chart_loop_phase(const DiscreteCurve& curve, const Observable& O,
                             const Tolerance& tol) {
  if (!curve.closed) throw ValidationError("chart_loop_phase: curve is not closed");
  const std::vector<NormalizedState> pts = normalize_curve(curve, O, tol);
  const std::vector<double> s = curve.parameters();

  // The closing sample repeats the first ray, so the periodic grid drops it.
  const std::size_t K = pts.size() - 1;
  const double period = s.back() - s.front();
  if (!(period > 0.0)) throw ValidationError("chart_loop_phase: parameter range is empty");

  std::vector<KahlerChart> charts;
  charts.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    try {
      charts.push_back(to_chart(pts[k], O, tol));
      signed_denominator(charts.back(), tol);
    } catch (const NumericalError& e) {
      throw ChartDomainError("chart_loop_phase: sample " + std::to_string(k) + ": " + e.what());
    }
  }

  auto integrate = [&](std::size_t stride) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < K; k += stride) idx.push_back(k);
    const std::size_t m = idx.size();
    double total = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      const std::size_t prev = idx[(a + m - 1) % m];
      const std::size_t next = idx[(a + 1) % m];
      double s_prev = s[prev];
      double s_next = s[next];
      if (a == 0) s_prev -= period;
      if (a + 1 == m) s_next += period;
      const double span = s_next - s_prev;
      const KahlerChart& c = charts[idx[a]];
      const Eigen::VectorXcd zdot = (charts[next].z - charts[prev].z) / span;
      const Eigen::Index n = c.z.size();
      const Complex num = (c.eigenvalues.head(n).cast<Complex>().array() *
                           c.z.conjugate().array() * zdot.array())
                              .sum();
      total += num.imag() / chart_denominator(c) * 0.5 * span;
    }
    return total;
  };

  const double fine = integrate(1);
  PhaseResult r;
  r.gamma = principal_angle(fine);
  r.winding = std::lround((fine - r.gamma) / (2.0 * std::numbers::pi));
  r.method = PhaseMethod::ChartIntegral;
  if (K >= 8) r.estimated_error = angle_distance(fine, integrate(2)) / 3.0;
  return r;
}

std::vector<TwoStateRow> two_state_metric_grid(const TwoStateGridSpec& spec,
                                               const Tolerance& tol) {
  if (spec.sign != 1 && spec.sign != -1) throw ValidationError("metric-grid: sign must be +1 or -1");
  if (spec.resolution < 2) throw ValidationError("metric-grid: resolution must be at least 2");

  RealVector lambda(2);
  lambda << 1.0, -1.0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const int n = spec.resolution;

  std::vector<TwoStateRow> rows;
  rows.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double theta = spec.theta_min + (spec.theta_max - spec.theta_min) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double phi = spec.phi_min + (spec.phi_max - spec.phi_min) * j / (n - 1);
      const Complex e = std::polar(1.0, phi);
      const Complex w1 = (spec.sign > 0 ? std::cosh(theta) : std::sinh(theta)) * e;
      const Complex w2 = spec.sign > 0 ? std::sinh(theta) : std::cosh(theta);

      TwoStateRow row{theta, phi, Complex{nan, nan}, nan, nan, nan, true};
      if (std::abs(w2) > tol.null_tol) {
        KahlerChart chart;
        chart.z = Eigen::VectorXcd::Constant(1, w1 / w2);
        chart.eigenvalues = lambda;
        chart.sign = spec.sign;
        row.z = chart.z(0);
        try {
          row.potential = kahler_potential(chart, tol);
          const CoeffGrid g = metric_coeffs(chart, tol);
          const CoeffGrid F = form_coeffs(chart, tol);
          row.g11_re = g(0, 0).real();
          row.f11_im = F(0, 0).imag();
          row.singular = false;
        } catch (const SingularityError&) {
          // flagged row
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace ggp
