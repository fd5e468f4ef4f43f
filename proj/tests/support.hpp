#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ggp/errors.hpp"
#include "ggp/numeric_core.hpp"
#include "ggp/ray_classification.hpp"
#include "ggp/verify/random.hpp"

namespace test {

using namespace ggp;
constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

inline Observable diag(std::initializer_list<double> values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (double x : values) v(k++) = x;
  return Observable::diagonal(v);
}

inline Observable sigma_z() { return diag({1.0, -1.0}); }

inline StateVector vec(std::initializer_list<Complex> values) {
  StateVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (Complex x : values) v(k++) = x;
  return v;
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline Observable random_observable(Eigen::Index n, verify::Rng& rng) {
  return eigendecompose(verify::random_hermitian(n, rng));
}

}  // namespace test
