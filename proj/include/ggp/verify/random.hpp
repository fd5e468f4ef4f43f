#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ggp/holonomy.hpp"

namespace ggp::verify {

using Rng = std::mt19937_64;

/// Hermitian matrix with Gaussian entries; eigenvalues separated by at least
/// min_gap (redrawn otherwise).
ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng, double min_gap = 1e-3);

StateVector random_state(Eigen::Index n, Rng& rng);

/// True when the observable has an eigenvalue of the requested sign.
bool has_sheet(const Observable& O, int sign);

/// Random O-normalised state on the given sheet whose O-norm is not small
/// compared to its Euclidean norm: |(psi,O psi)| >= floor * |psi|^2 * |extreme eigenvalue of that sign|.
NormalizedState random_normalized(const Observable& O, int sign, Rng& rng, double floor = 0.1);

/// Random vector horizontal at psi, Euclidean norm `scale`.
StateVector random_horizontal(const NormalizedState& psi, const Observable& O, Rng& rng,
                              double scale = 1.0);

/// Smooth closed curve of K samples (last sample equal to the first) that
/// stays on one sheet, built from a truncated Fourier series.
DiscreteCurve random_closed_curve(const Observable& O, int sign, std::size_t K, Rng& rng);

/// Smooth periodic gauge function sampled at the curve parameters.
std::vector<double> random_periodic_gauge(const std::vector<double>& params, Rng& rng);

}  // namespace ggp::verify
