#pragma once

namespace ptower {

/// Real branch of the Lambert W function. Principal covers w >= -1 for
/// z >= -1/e; Secondary covers w <= -1 for -1/e <= z < 0. The branches meet
/// at (-1/e, -1).
enum class Branch { Principal, Secondary };

/// Solves w e^w = z on the requested branch. Initial guess from the
/// Maclaurin series (small |z|), the branch-point expansion (z near -1/e) or
/// logarithms (everywhere else), refined by Halley iteration to machine
/// precision. Accepts z down to -1/e - 1e-15 to absorb rounding at the
/// branch point; below that throws std::domain_error, as does Secondary with
/// z >= 0.
double lambert_w(double z, Branch branch);

/// Truncated Maclaurin series z - z^2 + (3/2) z^3 - (8/3) z^4, evaluated up
/// to the requested order in 1..4.
double w_series(double z, int order);

/// The attractive fixed point of the infinite tower via the closed form
/// y* = W(-ln x) / (-ln x) on the principal branch, with the x = 1
/// singularity patched to its limit value 1. Domain 0 < x <= e^{1/e}.
double tower_fixed_point(double x);

/// The repulsive fixed point for 1 < x < e^{1/e}, via the secondary branch.
/// Always exceeds tower_fixed_point(x).
double tower_fixed_point_repulsive(double x);

}  // namespace ptower
