#pragma once

#include <vector>

namespace ptower {

/// A truncated power series a_1 z + a_2 z^2 + ... + a_m z^m with no constant
/// term. coefficient(k) is a_k; indices run from 1.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<double> coefficients)
      : coeffs_(std::move(coefficients)) {}

  /// The series z itself, padded with zeros up to `order`.
  static PowerSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()); }
  double coefficient(int k) const;
  const std::vector<double>& coefficients() const { return coeffs_; }

  double evaluate(double z) const;

 private:
  std::vector<double> coeffs_;
};

/// Series reversion by triangular coefficient matching: returns A_1..A_order
/// with compose(series, result) equal to the identity through `order`.
/// Requires a nonzero leading coefficient; series with a constant term are
/// outside this representation and must be shifted by the caller.
PowerSeries revert(const PowerSeries& series, int order);

/// Truncated composition outer(inner(z)) through `order`. Both inputs have
/// no constant term, so the composition is well defined termwise.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner,
                    int order);

/// The series v + v^2 + (3/2) v^3 + (8/3) v^4 solving t = v e^t, truncated
/// at `order` in 1..4. Term by term it equals -w_series(-v, order); accurate
/// to ~1e-9 for |v| <= 0.05 at full order.
double euler_ln_series(double v, int order);

}  // namespace ptower
