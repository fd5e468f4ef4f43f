#include "ggp/verify/random.hpp"

#include <cmath>
#include <numbers>

#include "ggp/bundle_connection.hpp"

namespace ggp::verify {

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng, double min_gap) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    ComplexMatrix A(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) A(i, j) = Complex(g(rng), g(rng));
    ComplexMatrix H = 0.5 * (A + A.adjoint());
    const RealVector ev = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(H).eigenvalues();
    bool ok = true;
    for (Eigen::Index k = 1; k < n; ++k) ok = ok && (ev(k) - ev(k - 1) >= min_gap);
    for (Eigen::Index k = 0; k < n; ++k) ok = ok && std::abs(ev(k)) >= min_gap;
    if (ok) return H;
  }
}

StateVector random_state(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

bool has_sheet(const Observable& O, int sign) {
  return sign > 0 ? O.eigenvalues().maxCoeff() > 0.0 : O.eigenvalues().minCoeff() < 0.0;
}

NormalizedState random_normalized(const Observable& O, int sign, Rng& rng, double floor) {
  if (!has_sheet(O, sign)) throw ValidationError("random_normalized: sheet does not exist");
  const double lsheet = sign > 0 ? O.eigenvalues().maxCoeff() : -O.eigenvalues().minCoeff();
  // Mix a random vector towards an eigenvector of the right sign until accepted.
  const Eigen::Index pivot = sign > 0 ? O.dim() - 1 : 0;
  for (double mix = 0.0;; mix = std::min(1.0, mix + 0.05)) {
    StateVector v = random_state(O.dim(), rng);
    v = (1.0 - mix) * v + mix * v.norm() * O.eigenvectors().col(pivot);
    const double raw = o_inner(v, O, v).real();
    if (sign * raw >= floor * v.squaredNorm() * lsheet) return normalize_o(v, O);
  }
}

StateVector random_horizontal(const NormalizedState& psi, const Observable& O, Rng& rng,
                              double scale) {
  StateVector chi = horizontal_part(psi, random_state(O.dim(), rng), O);
  return chi * (scale / chi.norm());
}

DiscreteCurve random_closed_curve(const Observable& O, int sign, std::size_t K, Rng& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const NormalizedState base = random_normalized(O, sign, rng, 0.3);
  const double lsheet = sign > 0 ? O.eigenvalues().maxCoeff() : -O.eigenvalues().minCoeff();
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (double eps = 0.5;; eps *= 0.5) {
    std::vector<StateVector> cos_terms, sin_terms;
    for (int m = 1; m <= 3; ++m) {
      const double amp = eps * base.psi.norm() / m;
      StateVector a = random_state(O.dim(), rng), b = random_state(O.dim(), rng);
      cos_terms.push_back(a * (amp / a.norm()));
      sin_terms.push_back(b * (amp / b.norm()));
    }
    const double twist = std::floor(3.0 * unit(rng)) - 1.0;  // global winding of the lift

    DiscreteCurve c;
    c.closed = true;
    bool ok = true;
    for (std::size_t k = 0; k < K && ok; ++k) {
      const double s = static_cast<double>(k) / static_cast<double>(K - 1);
      StateVector v = base.psi;
      for (int m = 1; m <= 3; ++m) {
        v += std::cos(two_pi * m * s) * cos_terms[m - 1] + std::sin(two_pi * m * s) * sin_terms[m - 1];
      }
      v *= std::polar(1.0, two_pi * twist * s);
      const double raw = o_inner(v, O, v).real();
      ok = sign * raw >= 0.05 * v.squaredNorm() * lsheet;
      c.samples.push_back(std::move(v));
      c.params.push_back(s);
    }
    if (ok) {
      c.samples.back() = c.samples.front();
      return c;
    }
  }
}

std::vector<double> random_periodic_gauge(const std::vector<double>& params, Rng& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const double s0 = params.front();
  const double period = params.back() - params.front();
  const double c0 = coef(rng);
  double a[4], b[4];
  for (int m = 0; m < 4; ++m) { a[m] = coef(rng); b[m] = coef(rng); }
  std::vector<double> out;
  out.reserve(params.size());
  for (double s : params) {
    const double x = two_pi * (s - s0) / period;
    double v = c0;
    for (int m = 0; m < 4; ++m) v += a[m] * std::cos((m + 1) * x) + b[m] * std::sin((m + 1) * x);
    out.push_back(v);
  }
  out.back() = out.front();
  return out;
}

}  // namespace ggp::verify
