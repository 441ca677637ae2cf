#pragma once

#include <vector>

namespace ptower {

/// Stopping rules for the iteration engine. Convergent orbits never exceed
/// e, so anything past divergence_threshold cannot come back.
struct IterationConfig {
  double tolerance = 1e-12;
  int max_iterations = 10000;
  double divergence_threshold = 1e15;
};

/// Throws std::domain_error unless tolerance > 0, max_iterations >= 1 and
/// divergence_threshold > e.
void validate(const IterationConfig& config);

/// Diagnosed fate of an orbit.
struct IterationOutcome {
  enum class Kind { Converged, TwoCycle, Diverged, Undecided };

  Kind kind = Kind::Undecided;
  double limit = 0.0;   // Converged only
  double y_low = 0.0;   // TwoCycle only, y_low < y_high
  double y_high = 0.0;  // TwoCycle only

  static IterationOutcome converged(double limit);
  static IterationOutcome two_cycle(double y_low, double y_high);
  static IterationOutcome diverged();
  static IterationOutcome undecided();
};

/// An orbit of the map y -> x^y together with its fate. Every stored pair
/// satisfies values[k+1] = tower_step(x, values[k]); double-step runs store
/// the intermediate single steps too, so the recurrence holds there as well.
struct IterationTrace {
  double x = 0.0;
  std::vector<double> values;
  IterationOutcome outcome;

  /// Number of map applications performed (values.size() - 1).
  int iterations() const { return static_cast<int>(values.size()) - 1; }
};

/// Stability of a fixed point y* of y -> x^y, decided by |ln y*| against 1
/// with a 1e-12 neutral window.
enum class StabilityClass { Attractive, Repulsive, Neutral };

/// Runs y_{n+1} = x^{y_n} from y_1 = x. Diagnoses Converged when the step
/// difference drops below tolerance, Diverged past the threshold or on
/// overflow, TwoCycle when the orbit alternates between two separated values
/// (see below), Undecided at max_iterations.
///
/// A two-cycle candidate (|y_{n+2} - y_n| < tolerance while the single-step
/// difference stays >= 10 tolerance) is confirmed only if the fixed point
/// bracketed by the candidate pair is repulsive; slow oscillating
/// convergence just above x = e^{-e} otherwise alternates tightly enough to
/// fake a cycle.
IterationTrace iterate_tower(double x, const IterationConfig& config = {});

/// Runs the double-step map y -> x^{x^y} from y0, reporting the branch limit
/// as Converged. The trace keeps intermediate single steps; the double-step
/// orbit is the even-index subsequence.
IterationTrace iterate_double_step(double x, double y0,
                                   const IterationConfig& config = {});

/// Classifies a fixed point supplied by the caller. Throws
/// std::invalid_argument if |x^{y*} - y*| exceeds 1e-6.
StabilityClass stability_of(double x, double y_star);

/// d/dy of the double-step map: x^{x^y + y} ln^2 x.
double double_step_derivative(double x, double y);

/// True iff |double_step_derivative| < 1, the contraction region of the
/// double-step map.
bool in_double_step_region(double x, double y);

/// A vertex of the cobweb construction, in the plot plane (horizontal = y,
/// vertical = z where z = x^y).
struct CobwebPoint {
  double y = 0.0;
  double z = 0.0;
};

/// The cobweb polyline (y0, 0), (y0, y1), (y1, y1), (y1, y2), ... that
/// alternates vertical moves to the curve z = x^y with horizontal moves to
/// the identity line. 2*steps + 1 points, truncated early if the orbit
/// overflows.
std::vector<CobwebPoint> cobweb_trace(double x, double y0, int steps);

}  // namespace ptower
