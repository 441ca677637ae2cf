#include "ptower/series.hpp"

#include <stdexcept>

namespace ptower {

PowerSeries PowerSeries::identity(int order) {
  if (order < 1) throw std::domain_error("PowerSeries: order must be at least 1");
  std::vector<double> c(static_cast<std::size_t>(order), 0.0);
  c[0] = 1.0;
  return PowerSeries(std::move(c));
}

double PowerSeries::coefficient(int k) const {
  if (k < 1) throw std::domain_error("PowerSeries: coefficients start at power 1");
  if (k > order()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k) - 1];
}

double PowerSeries::evaluate(double z) const {
  double acc = 0.0;
  for (int k = order(); k >= 1; --k) acc = coeffs_[k - 1] + z * acc;
  return z * acc;
}

namespace {

// Truncated product of two coefficient vectors where index i holds the
// coefficient of z^{i+1}.
std::vector<double> multiply_truncated(const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       int order) {
  std::vector<double> prod(static_cast<std::size_t>(order), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t power = i + j + 2;  // z^{i+1} * z^{j+1}
      if (power > static_cast<std::size_t>(order)) break;
      prod[power - 1] += a[i] * b[j];
    }
  }
  return prod;
}

std::vector<double> truncated_coefficients(const PowerSeries& s, int order) {
  std::vector<double> c(static_cast<std::size_t>(order), 0.0);
  for (int k = 1; k <= order && k <= s.order(); ++k)
    c[k - 1] = s.coefficient(k);
  return c;
}

}  // namespace

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner,
                    int order) {
  if (order < 1) throw std::domain_error("compose: order must be at least 1");
  const std::vector<double> base = truncated_coefficients(inner, order);
  std::vector<double> power = base;  // inner^k, truncated
  std::vector<double> result(static_cast<std::size_t>(order), 0.0);
  for (int k = 1; k <= order; ++k) {
    if (k > 1) power = multiply_truncated(power, base, order);
    const double ck = outer.coefficient(k);
    if (ck == 0.0) continue;
    for (int j = 0; j < order; ++j) result[j] += ck * power[j];
  }
  return PowerSeries(std::move(result));
}

PowerSeries revert(const PowerSeries& series, int order) {
  if (order < 1) throw std::domain_error("revert: order must be at least 1");
  const double a1 = series.coefficient(1);
  if (a1 == 0.0)
    throw std::domain_error("revert: leading coefficient must be nonzero");

  // powers[k-1] holds the coefficients of series^k through z^order.
  const std::vector<double> base = truncated_coefficients(series, order);
  std::vector<std::vector<double>> powers;
  powers.reserve(static_cast<std::size_t>(order));
  powers.push_back(base);
  for (int k = 2; k <= order; ++k)
    powers.push_back(multiply_truncated(powers.back(), base, order));

  // Match coefficients of A(f(z)) = z grade by grade; the system is
  // triangular with diagonal a1^n.
  std::vector<double> inverse(static_cast<std::size_t>(order), 0.0);
  inverse[0] = 1.0 / a1;
  for (int n = 2; n <= order; ++n) {
    double sum = 0.0;
    for (int k = 1; k < n; ++k) sum += inverse[k - 1] * powers[k - 1][n - 1];
    inverse[n - 1] = -sum / powers[n - 1][n - 1];
  }
  return PowerSeries(std::move(inverse));
}

double euler_ln_series(double v, int order) {
  if (order < 1 || order > 4)
    throw std::domain_error("euler_ln_series: order must be in 1..4");
  static constexpr double coeffs[4] = {1.0, 1.0, 1.5, 8.0 / 3.0};
  double acc = 0.0;
  for (int k = order; k >= 1; --k) acc = coeffs[k - 1] + v * acc;
  return v * acc;
}

}  // namespace ptower
