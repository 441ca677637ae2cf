#include "ptower/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptower/constants.hpp"
#include "ptower/roots.hpp"
#include "ptower/tower.hpp"

namespace ptower {

void validate(const IterationConfig& config) {
  if (!(config.tolerance > 0.0))
    throw std::domain_error("IterationConfig: tolerance must be positive");
  if (config.max_iterations < 1)
    throw std::domain_error("IterationConfig: max_iterations must be at least 1");
  if (!(config.divergence_threshold > k_e))
    throw std::domain_error("IterationConfig: divergence_threshold must exceed e");
}

IterationOutcome IterationOutcome::converged(double limit) {
  IterationOutcome o;
  o.kind = Kind::Converged;
  o.limit = limit;
  return o;
}

IterationOutcome IterationOutcome::two_cycle(double y_low, double y_high) {
  IterationOutcome o;
  o.kind = Kind::TwoCycle;
  o.y_low = y_low;
  o.y_high = y_high;
  return o;
}

IterationOutcome IterationOutcome::diverged() {
  IterationOutcome o;
  o.kind = Kind::Diverged;
  return o;
}

IterationOutcome IterationOutcome::undecided() { return IterationOutcome{}; }

namespace {

bool escaped(double y, const IterationConfig& config) {
  return !std::isfinite(y) || y > config.divergence_threshold;
}

// Aitken delta-squared extrapolation of three consecutive orbit values. The
// Cauchy stopping rule alone leaves a limit error of diff * rho / (1 - rho),
// which this removes; falls back to the newest value when the curvature is
// at noise level.
double extrapolated_limit(double y0, double y1, double y2) {
  const double d1 = y1 - y0;
  const double d2 = y2 - y1;
  const double curvature = d2 - d1;
  if (std::abs(curvature) < 1e-6 * std::abs(d1)) return y2;
  const double limit = y2 - d2 * d2 / curvature;
  return std::isfinite(limit) ? limit : y2;
}

// Fixed point of y -> x^y inside [lo, hi], if the bracket is valid.
std::optional<double> bracketed_fixed_point(double x, double lo, double hi) {
  return bisect([x](double y) { return tower_step(x, y) - y; }, lo, hi);
}

}  // namespace

IterationTrace iterate_tower(double x, const IterationConfig& config) {
  validate(config);
  if (!(x > 0.0)) throw std::domain_error("iterate_tower: x must be positive");

  IterationTrace trace;
  trace.x = x;
  trace.values.reserve(64);
  trace.values.push_back(x);  // y_1 = x

  bool cycle_ruled_out = false;
  for (int n = 0; n < config.max_iterations; ++n) {
    const double prev = trace.values.back();
    const double next = tower_step(x, prev);
    trace.values.push_back(next);

    if (escaped(next, config)) {
      trace.outcome = IterationOutcome::diverged();
      return trace;
    }
    const double step_diff = std::abs(next - prev);
    const std::size_t k = trace.values.size();
    if (step_diff < config.tolerance) {
      const double limit =
          k >= 3 ? extrapolated_limit(trace.values[k - 3], prev, next) : next;
      trace.outcome = IterationOutcome::converged(limit);
      return trace;
    }
    if (k >= 3 && !cycle_ruled_out &&
        std::abs(next - trace.values[k - 3]) < config.tolerance &&
        step_diff >= 10.0 * config.tolerance) {
      // Candidate cycle pair. Slow oscillating convergence just above
      // x = e^{-e} alternates tightly enough to pass both difference tests,
      // so confirm that the fixed point the pair straddles is repulsive
      // before declaring a cycle.
      const double lo = std::min(prev, next);
      const double hi = std::max(prev, next);
      if (const auto fp = bracketed_fixed_point(x, lo, hi)) {
        if (std::abs(std::log(*fp)) > 1.0) {
          trace.outcome = IterationOutcome::two_cycle(lo, hi);
          return trace;
        }
        cycle_ruled_out = true;  // attractive: the orbit is still converging
      }
    }
  }
  trace.outcome = IterationOutcome::undecided();
  return trace;
}

IterationTrace iterate_double_step(double x, double y0,
                                   const IterationConfig& config) {
  validate(config);
  if (!(x > 0.0) || !(y0 > 0.0))
    throw std::domain_error("iterate_double_step: inputs must be positive");

  IterationTrace trace;
  trace.x = x;
  trace.values.reserve(64);
  trace.values.push_back(y0);

  for (int n = 0; n < config.max_iterations; ++n) {
    // Keep the intermediate single step so the stored orbit still satisfies
    // values[k+1] = x^{values[k]}; the double-step subsequence sits at even
    // indices.
    const double mid = tower_step(x, trace.values.back());
    trace.values.push_back(mid);
    if (escaped(mid, config)) {
      trace.outcome = IterationOutcome::diverged();
      return trace;
    }
    const double next = tower_step(x, mid);
    trace.values.push_back(next);
    if (escaped(next, config)) {
      trace.outcome = IterationOutcome::diverged();
      return trace;
    }
    const std::size_t k = trace.values.size();
    const double prev = trace.values[k - 3];
    if (std::abs(next - prev) < config.tolerance) {
      // Extrapolate along the double-step (even-index) subsequence.
      const double limit =
          k >= 5 ? extrapolated_limit(trace.values[k - 5], prev, next) : next;
      trace.outcome = IterationOutcome::converged(limit);
      return trace;
    }
  }
  trace.outcome = IterationOutcome::undecided();
  return trace;
}

StabilityClass stability_of(double x, double y_star) {
  if (!(x > 0.0) || !(y_star > 0.0))
    throw std::domain_error("stability_of: inputs must be positive");
  if (std::abs(tower_step(x, y_star) - y_star) > 1e-6)
    throw std::invalid_argument(
        "stability_of: y_star is not a fixed point of y -> x^y");
  const double a = std::abs(std::log(y_star));
  if (a < 1.0 - 1e-12) return StabilityClass::Attractive;
  if (a > 1.0 + 1e-12) return StabilityClass::Repulsive;
  return StabilityClass::Neutral;
}

double double_step_derivative(double x, double y) {
  if (!(x > 0.0))
    throw std::domain_error("double_step_derivative: x must be positive");
  if (!std::isfinite(y))
    throw std::domain_error("double_step_derivative: y must be finite");
  const double lx = std::log(x);
  return std::exp((tower_step(x, y) + y) * lx) * lx * lx;
}

bool in_double_step_region(double x, double y) {
  return std::abs(double_step_derivative(x, y)) < 1.0;
}

std::vector<CobwebPoint> cobweb_trace(double x, double y0, int steps) {
  if (!(x > 0.0) || !(y0 > 0.0))
    throw std::domain_error("cobweb_trace: inputs must be positive");
  if (steps < 1) throw std::domain_error("cobweb_trace: steps must be at least 1");

  std::vector<CobwebPoint> points;
  points.reserve(2 * static_cast<std::size_t>(steps) + 1);
  points.push_back({y0, 0.0});  // first riser starts on the horizontal axis
  double y = y0;
  for (int i = 0; i < steps; ++i) {
    const double z = tower_step(x, y);
    if (!std::isfinite(z)) break;  // overflow: truncate the polyline
    points.push_back({y, z});      // vertical move to the curve
    points.push_back({z, z});      // horizontal move to the identity line
    y = z;
  }
  return points;
}

}  // namespace ptower
