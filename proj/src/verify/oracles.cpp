#include "ggp/verify/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace ggp::verify::oracle {

Complex cyclic_overlap_product(const std::vector<StateVector>& states, const ComplexMatrix& O) {
  Complex prod = 1.0;
  const std::size_t K = states.size();
  for (std::size_t k = 0; k < K; ++k) {
    const StateVector& a = states[k];
    const StateVector& b = states[(k + 1) % K];
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      Complex row = 0.0;
      for (Eigen::Index j = 0; j < b.size(); ++j) row += O(i, j) * b(j);
      acc += std::conj(a(i)) * row;
    }
    prod *= acc;
  }
  return prod;
}

double signed_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  // Van Oosterom & Strackee.
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

StateVector bloch_state(const Vec3& n) {
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = std::atan2(n.y(), n.x());
  StateVector psi(2);
  psi << std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi);
  return psi;
}

Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
  const double omega = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
  if (omega < 1e-15) return a;
  return (std::sin((1.0 - t) * omega) * a + std::sin(t * omega) * b) / std::sin(omega);
}

ComplexMatrix complex_hessian_fd(const std::function<double(const Eigen::VectorXcd&)>& K,
                                 const Eigen::VectorXcd& z, double h) {
  const Eigen::Index n = z.size();
  // Real coordinates: x_j = Re z_j at 2j, y_j = Im z_j at 2j+1.
  auto shifted = [&](Eigen::Index p, double dp, Eigen::Index q, double dq) {
    Eigen::VectorXcd w = z;
    auto bump = [&](Eigen::Index r, double d) {
      if (r % 2 == 0) w(r / 2) += Complex(d, 0.0);
      else w(r / 2) += Complex(0.0, d);
    };
    bump(p, dp);
    bump(q, dq);
    return K(w);
  };
  auto second = [&](Eigen::Index p, Eigen::Index q) {
    if (p == q) {
      return (shifted(p, h, p, 0.0) - 2.0 * K(z) + shifted(p, -h, p, 0.0)) / (h * h);
    }
    return (shifted(p, h, q, h) - shifted(p, h, q, -h) - shifted(p, -h, q, h) +
            shifted(p, -h, q, -h)) /
           (4.0 * h * h);
  };

  ComplexMatrix H(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double xx = second(2 * j, 2 * k);
      const double yy = second(2 * j + 1, 2 * k + 1);
      const double xy = second(2 * j, 2 * k + 1);
      const double yx = second(2 * j + 1, 2 * k);
      // d/dz = (d/dx - i d/dy)/2, d/dzbar = (d/dx + i d/dy)/2.
      H(j, k) = 0.25 * Complex(xx + yy, xy - yx);
    }
  }
  return H;
}

ComplexMatrix fubini_study(const Eigen::VectorXcd& z) {
  const Eigen::Index n = z.size();
  double q = 1.0;
  for (Eigen::Index l = 0; l < n; ++l) q += std::norm(z(l));
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      g(j, k) = ((j == k ? q : 0.0) - std::conj(z(j)) * z(k)) / (q * q);
    }
  }
  return g;
}

double two_state_potential(Complex z) { return std::log(std::norm(z) - 1.0); }

double two_state_metric(Complex z) {
  const double d = std::norm(z) - 1.0;
  return -1.0 / (d * d);
}

}  // namespace ggp::verify::oracle
