#include "ptower/lambertw.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptower/constants.hpp"

namespace ptower {

namespace {

constexpr double k_eps = std::numeric_limits<double>::epsilon();

// Expansion around the branch point (-1/e, -1) in p = +-sqrt(2(ez + 1)).
double branch_point_series(double p) {
  return -1.0 +
         p * (1.0 + p * (-1.0 / 3.0 +
                         p * (11.0 / 72.0 +
                              p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

// Third-order (Halley) refinement of w e^w = z. Stops at the residual noise
// floor; near the branch point the derivative vanishes and the step size
// alone never reaches ulp scale.
double halley_refine(double z, double w) {
  for (int i = 0; i < 60; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    if (std::abs(f) <= 2.0 * k_eps * (std::abs(z) + std::abs(w * ew))) break;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - f * (w + 2.0) / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= 2.0 * k_eps * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w(double z, Branch branch) {
  if (std::isnan(z)) throw std::domain_error("lambert_w: z is NaN");
  if (z < -k_inv_e - 1e-15)
    throw std::domain_error("lambert_w: z below the branch point -1/e");
  if (branch == Branch::Secondary && !(z < 0.0))
    throw std::domain_error("lambert_w: secondary branch requires z < 0");
  if (std::isinf(z)) return z;  // principal only: W(+inf) = +inf

  // p^2 of the branch-point expansion. Below noise level the two branches
  // are indistinguishable from their meeting value -1; returning it exactly
  // keeps W(-ln x)/(-ln x) on the tangency value e when x = e^{1/e}.
  double q = 2.0 * (k_e * z + 1.0);
  if (q < 0.0) q = 0.0;
  if (q <= 2.0 * k_eps) return -1.0;

  double w;
  if (branch == Branch::Principal) {
    if (z == 0.0) return 0.0;
    if (z < -0.25) {
      w = branch_point_series(std::sqrt(q));
    } else if (z < 0.25) {
      w = w_series(z, 4);
    } else if (z < 3.0) {
      w = std::log(1.0 + z);
    } else {
      const double l = std::log(z);
      w = l - std::log(l);
    }
    // Refinement noise right above the branch point can cross w = -1, which
    // belongs to the other branch.
    return std::max(halley_refine(z, w), -1.0);
  }
  if (z < -0.25) {
    w = branch_point_series(-std::sqrt(q));
  } else {
    // w = ln(-z) - ln(-w) is a contraction on w < -1; a few rounds give
    // Halley a solid start all the way to z -> 0-.
    w = std::log(-z);
    for (int i = 0; i < 8; ++i) w = std::log(-z) - std::log(-w);
  }
  return std::min(halley_refine(z, w), -1.0);
}

double w_series(double z, int order) {
  if (order < 1 || order > 4)
    throw std::domain_error("w_series: order must be in 1..4");
  static constexpr double coeffs[4] = {1.0, -1.0, 1.5, -8.0 / 3.0};
  double acc = 0.0;
  for (int k = order; k >= 1; --k) acc = coeffs[k - 1] + z * acc;
  return z * acc;
}

double tower_fixed_point(double x) {
  if (!(x > 0.0) || x > e_to_inv_e * (1.0 + 1e-15))
    throw std::domain_error("tower_fixed_point: x must be in (0, e^{1/e}]");
  const double lx = std::log(x);
  if (std::abs(lx) < 1e-300) return 1.0;  // limit of W(z)/z as z -> 0
  const double z = -lx;
  return lambert_w(z, Branch::Principal) / z;
}

double tower_fixed_point_repulsive(double x) {
  if (!(x > 1.0) || !(x < e_to_inv_e))
    throw std::domain_error(
        "tower_fixed_point_repulsive: x must be in (1, e^{1/e})");
  const double z = -std::log(x);
  return lambert_w(z, Branch::Secondary) / z;
}

}  // namespace ptower
