#include "ptower/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "ptower/constants.hpp"
#include "ptower/errors.hpp"
#include "ptower/lambertw.hpp"
#include "ptower/roots.hpp"
#include "ptower/tower.hpp"

namespace ptower {

const char* to_string(ConvergenceRegime regime) {
  switch (regime) {
    case ConvergenceRegime::DivergesToInfinity:
      return "DivergesToInfinity";
    case ConvergenceRegime::TangentConvergence:
      return "TangentConvergence";
    case ConvergenceRegime::TwoFixedPoints:
      return "TwoFixedPoints";
    case ConvergenceRegime::Unity:
      return "Unity";
    case ConvergenceRegime::OscillatingConvergence:
      return "OscillatingConvergence";
    case ConvergenceRegime::TwoCycleRegime:
      return "TwoCycleRegime";
  }
  return "?";
}

namespace {

bool within_one_ulp(double x, double target) {
  return x >= std::nextafter(target, -1.0) && x <= std::nextafter(target, 2.0);
}

// The unstable fixed point of y -> x^y for 0 < x < 1. The map is strictly
// decreasing there, so [x, 1] always brackets the single root.
double single_map_fixed_point(double x) {
  const auto fp = bisect([x](double y) { return tower_step(x, y) - y; },
                         std::min(x, 1.0), 1.0);
  if (!fp)
    throw convergence_error("single_map_fixed_point: bracket failed");
  return *fp;
}

}  // namespace

ConvergenceClass classify(double x) {
  if (!(x > 0.0)) throw std::domain_error("classify: x must be positive");
  if (within_one_ulp(x, e_to_inv_e))
    return {ConvergenceRegime::TangentConvergence, {{k_e, k_e}}};
  if (x > e_to_inv_e) return {ConvergenceRegime::DivergesToInfinity, std::nullopt};
  if (within_one_ulp(x, 1.0)) return {ConvergenceRegime::Unity, {{1.0, 1.0}}};
  if (x > 1.0) return {ConvergenceRegime::TwoFixedPoints, {{1.0, k_e}}};
  if (x > e_to_minus_e || within_one_ulp(x, e_to_minus_e))
    return {ConvergenceRegime::OscillatingConvergence, {{k_inv_e, k_e}}};
  return {ConvergenceRegime::TwoCycleRegime, {{0.0, 1.0}}};
}

Tangency tangency() {
  const double lx = std::log(e_to_inv_e);
  const double y_t = -std::log(lx) / lx;
  const double z_t = 1.0 / lx;
  if (std::abs(y_t - z_t) > 1e-9)
    throw std::logic_error("tangency: closed forms disagree");
  return Tangency{e_to_inv_e, {k_e, k_e}};
}

TwoCycle cycle_from_ratio(double ratio) {
  if (!(ratio > 1.0))
    throw std::domain_error("cycle_from_ratio: ratio must exceed 1");
  if (ratio - 1.0 < 1e-9)
    return TwoCycle{k_inv_e, k_inv_e, 1.0, e_to_minus_e};  // collapsed cycle
  const double y_low = std::pow(ratio, ratio / (1.0 - ratio));
  const double y_high = std::pow(ratio, 1.0 / (1.0 - ratio));
  const double x = std::pow(y_low, 1.0 / y_high);
  return TwoCycle{y_low, y_high, ratio, x};
}

TwoCycle cycle_for_base(double x) {
  if (!(x > 0.0) || !(x < e_to_minus_e))
    throw std::domain_error("cycle_for_base: x must be in (0, e^{-e})");

  // Height 1 is odd, so the double-step orbit from y0 = x follows the
  // odd-height branch up towards y_low.
  IterationConfig config;
  config.tolerance = 1e-13;
  config.max_iterations = 200000;
  const IterationTrace trace = iterate_double_step(x, x, config);

  double y_low;
  if (trace.outcome.kind == IterationOutcome::Kind::Converged) {
    y_low = trace.outcome.limit;
  } else if (trace.outcome.kind == IterationOutcome::Kind::Undecided) {
    // Near the pitchfork the double-step map contracts like 1 - O(e^{-e}-x)
    // and plain iteration cannot terminate. The orbit is monotone below
    // y_low, so finish by bisecting the double-step residual between the
    // last iterate and the unstable fixed point.
    const double y_star = single_map_fixed_point(x);
    const double lo = trace.values.back();
    const double hi = y_star * (1.0 - 1e-9);
    // An unusable bracket means the cycle is numerically collapsed onto the
    // fixed point.
    if (lo >= hi) {
      y_low = y_star;
    } else {
      const auto root =
          bisect([x](double y) { return tower_step(x, tower_step(x, y)) - y; },
                 lo, hi);
      y_low = root ? *root : y_star;
    }
  } else {
    throw convergence_error("cycle_for_base: double-step iteration failed");
  }

  const double y_high = tower_step(x, y_low);
  return TwoCycle{y_low, y_high, y_high / y_low, x};
}

std::pair<double, double> parity_limits(double x, int n_pairs) {
  if (!(x > 0.0) || !(x < e_to_minus_e))
    throw std::domain_error("parity_limits: x must be in (0, e^{-e})");
  if (n_pairs < 1)
    throw std::domain_error("parity_limits: n_pairs must be at least 1");
  return {finite_tower(x, 2 * n_pairs), finite_tower(x, 2 * n_pairs + 1)};
}

ScanRow scan_at(double x, const IterationConfig& config) {
  ScanRow row;
  row.x = x;
  row.classification = classify(x);

  switch (row.classification.regime) {
    case ConvergenceRegime::DivergesToInfinity:
      break;  // no attractor value
    case ConvergenceRegime::TwoCycleRegime: {
      const IterationTrace trace = iterate_tower(x, config);
      if (trace.outcome.kind == IterationOutcome::Kind::TwoCycle) {
        row.values = {trace.outcome.y_low, trace.outcome.y_high};
      } else {
        const TwoCycle cycle = cycle_for_base(x);
        row.values = {cycle.y_low, cycle.y_high};
      }
      break;
    }
    default: {
      const IterationTrace trace = iterate_tower(x, config);
      if (trace.outcome.kind == IterationOutcome::Kind::Converged)
        row.values = {trace.outcome.limit};
      else
        row.values = {tower_fixed_point(x)};  // slow orbit: use the closed form
      break;
    }
  }
  return row;
}

std::vector<ScanRow> bifurcation_scan(double x_min, double x_max, int samples,
                                      const IterationConfig& config) {
  if (!(x_min > 0.0) || !(x_max > x_min))
    throw std::domain_error("bifurcation_scan: need 0 < x_min < x_max");
  if (samples < 2)
    throw std::domain_error("bifurcation_scan: need at least 2 samples");

  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double x = x_min + (x_max - x_min) * i / (samples - 1);
    rows.push_back(scan_at(x, config));
  }
  return rows;
}

RegionGrid region_scan(std::pair<double, double> x_range,
                       std::pair<double, double> y_range, int nx, int ny) {
  if (!(x_range.first > 0.0) || !(x_range.second > x_range.first) ||
      !(y_range.first > 0.0) || !(y_range.second > y_range.first))
    throw std::domain_error("region_scan: ranges must be positive and ascending");
  if (nx < 2 || ny < 2)
    throw std::domain_error("region_scan: grid dimensions must be at least 2");

  RegionGrid grid;
  grid.xs.resize(static_cast<std::size_t>(nx));
  grid.ys.resize(static_cast<std::size_t>(ny));
  for (int i = 0; i < nx; ++i)
    grid.xs[i] = x_range.first + (x_range.second - x_range.first) * i / (nx - 1);
  for (int j = 0; j < ny; ++j)
    grid.ys[j] = y_range.first + (y_range.second - y_range.first) * j / (ny - 1);

  grid.cells.resize(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      grid.cells[static_cast<std::size_t>(i) * ny + j] =
          in_double_step_region(grid.xs[i], grid.ys[j]) ? 1 : 0;
  return grid;
}

}  // namespace ptower
