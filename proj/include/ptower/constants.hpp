#pragma once

#include <cmath>
#include <numbers>

namespace ptower {

inline constexpr double k_e = std::numbers::e;
inline constexpr double k_inv_e = 1.0 / std::numbers::e;

/// Upper endpoint of the tower's convergence interval, e^{1/e} = 1.44467...
inline const double e_to_inv_e = std::exp(k_inv_e);

/// Lower endpoint of the tower's convergence interval, e^{-e} = 0.065988...
inline const double e_to_minus_e = std::exp(-k_e);

}  // namespace ptower
