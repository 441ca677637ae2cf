#include "ptower/tower.hpp"

#include <cmath>
#include <stdexcept>

#include "ptower/roots.hpp"

namespace ptower {

double tower_step(double x, double y) {
  if (!(x > 0.0)) throw std::domain_error("tower_step: base must be positive");
  if (std::isnan(y)) throw std::domain_error("tower_step: exponent is NaN");
  if (x == 1.0) return 1.0;  // keeps 1^y = 1 even for infinite y
  return std::exp(y * std::log(x));
}

double finite_tower(double x, int n) {
  if (!(x > 0.0)) throw std::domain_error("finite_tower: base must be positive");
  if (n < 1) throw std::domain_error("finite_tower: height must be at least 1");
  double y = x;
  for (int level = 1; level < n; ++level) y = tower_step(x, y);
  return y;
}

double finite_tower(const TowerInput& input) {
  return finite_tower(input.x, input.height);
}

double tower_inverse(double y) {
  if (!(y > 0.0)) throw std::domain_error("tower_inverse: y must be positive");
  return std::exp(std::log(y) / y);
}

double tower_inverse_derivative(double y) {
  if (!(y > 0.0))
    throw std::domain_error("tower_inverse_derivative: y must be positive");
  return tower_inverse(y) * (1.0 - std::log(y)) / (y * y);
}

namespace {

// Sign factor of the second derivative of the inverse map; its roots are the
// inflection ordinates.
double inflection_residual(double y) {
  const double l = std::log(y);
  return 1.0 - 3.0 * y + (2.0 * y + l - 2.0) * l;
}

CurvePoint inflection_in(double lo, double hi) {
  const auto root = bisect(inflection_residual, lo, hi);
  if (!root)
    throw std::logic_error("tower_inverse_inflections: bracket lost its sign change");
  return CurvePoint{*root, tower_inverse(*root)};
}

}  // namespace

std::pair<CurvePoint, CurvePoint> tower_inverse_inflections() {
  return {inflection_in(0.1, 1.0), inflection_in(3.0, 6.0)};
}

}  // namespace ptower
