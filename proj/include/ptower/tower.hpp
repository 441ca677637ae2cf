#pragma once

#include <utility>

namespace ptower {

/// Base and height of a finite tower x^x^...^x (right-associative).
struct TowerInput {
  double x = 1.0;  // base, must be > 0
  int height = 1;  // number of levels, must be >= 1
};

/// A sample (y, x) of the tower's inverse map x = y^{1/y}.
struct CurvePoint {
  double y = 0.0;
  double x = 0.0;
};

/// One level of the tower recursion: x^y evaluated as exp(y ln x).
/// Overflow yields +infinity rather than an error; the dynamics layer
/// interprets that as divergence. Throws std::domain_error for x <= 0 or
/// NaN y.
double tower_step(double x, double y);

/// The n-level tower f_n(x): f_1 = x, f_{k+1} = x^{f_k}, built from the top
/// level downwards. Throws std::domain_error for x <= 0 or n < 1.
double finite_tower(double x, int n);
double finite_tower(const TowerInput& input);

/// Inverse of the infinite tower: x = y^{1/y}, defined for y > 0.
double tower_inverse(double y);

/// d/dy of tower_inverse: y^{1/y} (1 - ln y) / y^2. Zero at y = e, where the
/// inverse map attains its maximum e^{1/e}.
double tower_inverse_derivative(double y);

/// The two inflection points of the inverse map, found by bisecting
/// 1 - 3y + (2y + ln y - 2) ln y on [0.1, 1] and [3, 6]. Returned in
/// ascending y order: near (0.5819, 0.3944) and (4.3678, 1.4015).
std::pair<CurvePoint, CurvePoint> tower_inverse_inflections();

}  // namespace ptower
