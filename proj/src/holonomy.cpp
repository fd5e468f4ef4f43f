#include "ggp/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ggp {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PhaseResult from_unwrapped(double total, PhaseMethod method) {
  PhaseResult r;
  r.gamma = principal_angle(total);
  r.winding = std::lround((total - r.gamma) / kTwoPi);
  r.method = method;
  return r;
}

// Sum of Arg(sign * (psi_a, O psi_b)) over consecutive pairs of `idx`,
// including the pair (last, first).
double segment_sum(const std::vector<NormalizedState>& pts, const std::vector<std::size_t>& idx,
                   const Observable& O, const Tolerance& tol) {
  double total = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const NormalizedState& a = pts[idx[k]];
    const NormalizedState& b = pts[idx[(k + 1) % idx.size()]];
    const Complex ov = o_inner(a.psi, O, b.psi) * static_cast<double>(a.sign);
    if (std::abs(ov) <= tol.null_tol) {
      throw DegenerateOverlapError("vanishing O-overlap between samples " + std::to_string(idx[k]) +
                                   " and " + std::to_string(idx[(k + 1) % idx.size()]) +
                                   "; phase undefined");
    }
    total += std::arg(ov);
  }
  return total;
}

std::vector<std::size_t> every(std::size_t n, std::size_t stride) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < n; k += stride) idx.push_back(k);
  return idx;
}

// Second-order scheme: one Richardson step against the stride-2 subsample.
double richardson_error(const std::vector<NormalizedState>& pts, double fine, const Observable& O,
                        const Tolerance& tol) {
  if (pts.size() < 8) return 0.0;
  const double coarse = segment_sum(pts, every(pts.size(), 2), O, tol);
  return angle_distance(fine, coarse) / 3.0;
}

}  // namespace

std::vector<double> DiscreteCurve::parameters() const {
  if (!params.empty()) return params;
  std::vector<double> s(samples.size());
  const double denom = samples.size() > 1 ? static_cast<double>(samples.size() - 1) : 1.0;
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = static_cast<double>(k) / denom;
  return s;
}

const char* to_string(PhaseMethod m) {
  switch (m) {
    case PhaseMethod::LoopIntegral: return "loop_integral";
    case PhaseMethod::DiscreteProduct: return "discrete_product";
    case PhaseMethod::ThreePoint: return "three_point";
    case PhaseMethod::ChartIntegral: return "chart_integral";
    case PhaseMethod::SurfaceIntegral: return "surface_integral";
  }
  return "?";
}

double PhaseResult::unwrapped() const { return gamma + kTwoPi * static_cast<double>(winding); }

std::vector<NormalizedState> normalize_curve(const DiscreteCurve& curve, const Observable& O,
                                             const Tolerance& tol) {
  const std::size_t K = curve.samples.size();
  if (K < 3) throw ValidationError("curve: at least 3 samples required");
  if (!curve.params.empty() && curve.params.size() != K) {
    throw ValidationError("curve: params and samples differ in length");
  }

  std::vector<NormalizedState> pts;
  pts.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    try {
      pts.push_back(normalize_o(curve.samples[k], O, tol));
    } catch (const NullStateError& e) {
      throw NullStateError("sample " + std::to_string(k) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError("sample " + std::to_string(k) + ": " + e.what());
    }
    if (pts[k].sign != pts[0].sign) {
      throw ValidationError("curve: sample " + std::to_string(k) +
                            " lies on the opposite sign sheet; curves may not cross the null set");
    }
  }

  if (curve.closed) {
    const ComplexMatrix first = outer(pts.front().psi);
    const ComplexMatrix last = outer(pts.back().psi);
    const double scale = std::max(1.0, first.cwiseAbs().maxCoeff());
    if ((first - last).cwiseAbs().maxCoeff() > tol.null_tol * scale) {
      throw ValidationError("curve: closed curve must end on the ray it starts from");
    }
  }
  return pts;
}

PhaseResult loop_phase(const DiscreteCurve& curve, const Observable& O, const Tolerance& tol) {
  if (!curve.closed) throw ValidationError("loop_phase: curve is not closed");
  const std::vector<NormalizedState> pts = normalize_curve(curve, O, tol);
  const double total = segment_sum(pts, every(pts.size(), 1), O, tol);
  PhaseResult r = from_unwrapped(total, PhaseMethod::LoopIntegral);
  r.estimated_error = richardson_error(pts, total, O, tol);
  return r;
}

PhaseResult discrete_pancharatnam(const std::vector<NormalizedState>& points, const Observable& O,
                                  const Tolerance& tol) {
  if (points.size() < 2) throw ValidationError("discrete_pancharatnam: need at least 2 points");
  for (const auto& p : points) {
    require_dim(p.psi, O, "discrete_pancharatnam");
    if (p.sign != points.front().sign) {
      throw ValidationError("discrete_pancharatnam: points from different sign sheets");
    }
  }
  const double total = segment_sum(points, every(points.size(), 1), O, tol);
  PhaseResult r = from_unwrapped(total, PhaseMethod::DiscreteProduct);
  r.estimated_error = richardson_error(points, total, O, tol);
  return r;
}

PhaseResult three_point_phase(const RayPoint& r1, const RayPoint& r2, const RayPoint& r3,
                              const Observable& O, const Tolerance& tol) {
  const ComplexMatrix& M = O.matrix();
  for (const RayPoint* r : {&r1, &r2, &r3}) {
    if (r->rho.rows() != O.dim() || r->rho.cols() != O.dim()) {
      throw DimensionError("three_point_phase: density matrix dimension mismatch");
    }
  }
  const double e1 = (r1.rho * M).trace().real();
  const double e2 = (r2.rho * M).trace().real();
  const double e3 = (r3.rho * M).trace().real();
  for (double e : {e1, e2, e3}) {
    if (std::abs(e) <= tol.null_tol) {
      throw NullStateError("three_point_phase: <O> vanishes for one of the rays");
    }
  }
  const Complex t = (r1.rho * M * r2.rho * M * r3.rho * M).trace();
  const Complex ratio = t / (e1 * e2 * e3);
  if (std::abs(t) <= tol.eq_tol * std::abs(e1 * e2 * e3)) {
    throw DegenerateOverlapError("three_point_phase: trace vanishes; Arg undefined");
  }
  PhaseResult r = from_unwrapped(std::arg(ratio), PhaseMethod::ThreePoint);
  return r;
}

DiscreteCurve gauge_transform(const DiscreteCurve& curve, const std::vector<double>& lambda,
                              const Tolerance& tol) {
  if (lambda.size() != curve.samples.size()) {
    throw DimensionError("gauge_transform: one gauge value per sample required");
  }
  if (lambda.empty()) return curve;
  if (angle_distance(lambda.front(), lambda.back()) > tol.eq_tol) {
    throw ValidationError("gauge_transform: gauge function is not periodic");
  }
  DiscreteCurve out = curve;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    out.samples[k] *= std::polar(1.0, lambda[k]);
  }
  return out;
}

DiscreteCurve reversed(const DiscreteCurve& curve) {
  DiscreteCurve out;
  out.closed = curve.closed;
  out.samples.assign(curve.samples.rbegin(), curve.samples.rend());
  if (!curve.params.empty()) {
    const double end = curve.params.back();
    for (auto it = curve.params.rbegin(); it != curve.params.rend(); ++it) {
      out.params.push_back(end - *it);
    }
  }
  return out;
}

}  // namespace ggp
