#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ptower/dynamics.hpp"

namespace ptower {

/// The seven regimes of the infinite tower, keyed by the base x:
///   x > e^{1/e}          divergence to +infinity
///   x = e^{1/e}          tangent convergence to e
///   1 < x < e^{1/e}      two fixed points, convergence to the lower one
///   x = 1                instantaneous convergence to 1
///   e^{-e} <= x < 1      oscillating convergence to the single fixed point
///   0 < x < e^{-e}       stable 2-cycle
/// (x = e^{-e} itself converges, to 1/e, and is folded into the oscillating
/// regime.)
enum class ConvergenceRegime {
  DivergesToInfinity,
  TangentConvergence,
  TwoFixedPoints,
  Unity,
  OscillatingConvergence,
  TwoCycleRegime,
};

const char* to_string(ConvergenceRegime regime);

struct ConvergenceClass {
  ConvergenceRegime regime = ConvergenceRegime::Unity;
  /// Range of attained fixed-point values for the regime, absent for the
  /// divergent one.
  std::optional<std::pair<double, double>> fixed_point_range;
};

/// Interval-based regime lookup; no iteration involved. Membership at the
/// two boundary constants uses a one-ulp window around the computed values
/// of e^{1/e} and e^{-e}.
ConvergenceClass classify(double x);

/// The tangency configuration: base e^{1/e} with the exponential curve
/// touching the identity line at (e, e). Cross-checks the two closed forms
/// -ln(ln x)/ln x and 1/ln x against each other before returning.
struct Tangency {
  double x = 0.0;
  std::pair<double, double> point;
};
Tangency tangency();

/// A 2-cycle of the map y -> x^y: x^{y_low} = y_high and x^{y_high} = y_low,
/// with ratio = y_high / y_low and x the generating base.
struct TwoCycle {
  double y_low = 0.0;
  double y_high = 0.0;
  double ratio = 1.0;
  double x = 0.0;
};

/// Builds the cycle from its ratio r > 1: y_low = r^{r/(1-r)},
/// y_high = r^{1/(1-r)}, x = y_low^{1/y_high}. Ratios within 1e-9 of 1
/// collapse to the degenerate cycle (1/e, 1/e) at x = e^{-e}.
TwoCycle cycle_from_ratio(double ratio);

/// Recovers the cycle generated by a base in (0, e^{-e}). The odd-height
/// branch y_low is the limit of the double-step iteration started at
/// y0 = x; near the pitchfork, where that iteration contracts too slowly to
/// terminate, the limit is finished by bisection below the unstable fixed
/// point. y_high = x^{y_low}.
TwoCycle cycle_for_base(double x);

/// Finite-tower values (f_{2n}(x), f_{2n+1}(x)) at n = n_pairs, exposing the
/// even/odd height split for 0 < x < e^{-e}; both approach (1, 0) as x -> 0.
std::pair<double, double> parity_limits(double x, int n_pairs);

/// One base of a bifurcation scan: the attractor values observed at x (one
/// for convergent regimes, two for a cycle, none for divergence).
struct ScanRow {
  double x = 0.0;
  std::vector<double> values;
  ConvergenceClass classification;
};

/// Attractor values at a single base: iterate_tower's diagnosis, with the
/// closed-form fixed point (or cycle_for_base) filling in when the orbit is
/// still undecided at max_iterations.
ScanRow scan_at(double x, const IterationConfig& config = {});

/// scan_at over `samples` evenly spaced bases in [x_min, x_max], ordered by
/// ascending x.
std::vector<ScanRow> bifurcation_scan(double x_min, double x_max, int samples,
                                      const IterationConfig& config = {});

/// Rectangular sampling of in_double_step_region. Cells are stored row-major
/// over x then y: cell(i, j) = cells[i * ys.size() + j] for (xs[i], ys[j]).
struct RegionGrid {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<std::uint8_t> cells;

  bool at(std::size_t i, std::size_t j) const {
    return cells[i * ys.size() + j] != 0;
  }
};

RegionGrid region_scan(std::pair<double, double> x_range,
                       std::pair<double, double> y_range, int nx, int ny);

}  // namespace ptower
