#pragma once

#include <cmath>
#include <limits>
#include <optional>

namespace ptower {

/// Bisection on [lo, hi]. Requires a sign change (endpoints with f == 0 are
/// accepted as roots). Returns nullopt when the bracket is invalid; otherwise
/// runs until the bracket width reaches ulp scale.
template <typename F>
std::optional<double> bisect(F f, double lo, double hi, int max_iterations = 200) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
  for (int i = 0; i < max_iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted at this precision
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ptower
