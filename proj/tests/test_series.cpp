#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ptower/lambertw.hpp"
#include "ptower/series.hpp"

using namespace ptower;

namespace {

// Coefficients of w e^w = sum_{k>=1} w^k / (k-1)!.
PowerSeries w_exp_w_series(int order) {
  std::vector<double> c(static_cast<std::size_t>(order));
  double factorial = 1.0;
  for (int k = 1; k <= order; ++k) {
    c[k - 1] = 1.0 / factorial;
    factorial *= k;
  }
  return PowerSeries(c);
}

PowerSeries random_series(std::mt19937& rng, int order) {
  std::uniform_real_distribution<double> lead(0.5, 2.0);
  std::uniform_real_distribution<double> tail(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(order));
  c[0] = lead(rng);
  for (int k = 2; k <= order; ++k) c[k - 1] = tail(rng);
  return PowerSeries(c);
}

}  // namespace

TEST_CASE("PowerSeries basics") {
  const PowerSeries s(std::vector<double>{2.0, -1.0, 0.5});
  CHECK(s.order() == 3);
  CHECK(s.coefficient(1) == 2.0);
  CHECK(s.coefficient(3) == 0.5);
  CHECK(s.coefficient(7) == 0.0);
  CHECK_THROWS_AS(s.coefficient(0), std::domain_error);
  CHECK(s.evaluate(0.5) == doctest::Approx(2.0 * 0.5 - 0.25 + 0.5 * 0.125));
  const PowerSeries id = PowerSeries::identity(4);
  CHECK(id.coefficient(1) == 1.0);
  CHECK(id.coefficient(2) == 0.0);
}

TEST_CASE("reverting the identity gives the identity") {
  const PowerSeries inv = revert(PowerSeries::identity(5), 5);
  CHECK(inv.coefficient(1) == 1.0);
  for (int k = 2; k <= 5; ++k) CHECK(inv.coefficient(k) == 0.0);
}

TEST_CASE("revert reproduces the closed-form inverse coefficients") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> lead(0.5, 2.0);
  std::uniform_real_distribution<double> tail(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a1 = lead(rng), a2 = tail(rng), a3 = tail(rng);
    const PowerSeries inv =
        revert(PowerSeries(std::vector<double>{a1, a2, a3}), 3);
    const double a1_3 = a1 * a1 * a1;
    CHECK(std::abs(inv.coefficient(1) - 1.0 / a1) < 1e-12);
    CHECK(std::abs(inv.coefficient(2) - (-a2 / a1_3)) < 1e-12);
    CHECK(std::abs(inv.coefficient(3) -
                   (2.0 * a2 * a2 - a1 * a3) / (a1_3 * a1 * a1)) < 1e-12);
  }
}

TEST_CASE("reverting w e^w yields the Lambert W series") {
  const PowerSeries w4 = revert(w_exp_w_series(4), 4);
  CHECK(std::abs(w4.coefficient(1) - 1.0) < 1e-12);
  CHECK(std::abs(w4.coefficient(2) + 1.0) < 1e-12);
  CHECK(std::abs(w4.coefficient(3) - 1.5) < 1e-12);
  CHECK(std::abs(w4.coefficient(4) + 8.0 / 3.0) < 1e-12);

  // Two more orders of the expansion for free: +125/24 z^5 - 54/5 z^6.
  const PowerSeries w6 = revert(w_exp_w_series(6), 6);
  for (int k = 1; k <= 4; ++k)
    CHECK(std::abs(w6.coefficient(k) - w4.coefficient(k)) < 1e-12);
  CHECK(std::abs(w6.coefficient(5) - 125.0 / 24.0) < 1e-9);
  CHECK(std::abs(w6.coefficient(6) + 54.0 / 5.0) < 1e-9);
}

TEST_CASE("revert rejects a vanishing leading coefficient") {
  CHECK_THROWS_AS(revert(PowerSeries(std::vector<double>{0.0, 1.0}), 2),
                  std::domain_error);
  CHECK_THROWS_AS(revert(PowerSeries::identity(3), 0), std::domain_error);
}

TEST_CASE("composition with the identity is the identity operation") {
  std::mt19937 rng(11);
  for (int order = 2; order <= 8; ++order) {
    const PowerSeries s = random_series(rng, order);
    const PowerSeries id = PowerSeries::identity(order);
    const PowerSeries left = compose(id, s, order);
    const PowerSeries right = compose(s, id, order);
    for (int k = 1; k <= order; ++k) {
      CHECK(left.coefficient(k) == s.coefficient(k));
      CHECK(right.coefficient(k) == s.coefficient(k));
    }
  }
}

TEST_CASE("reversion round trip: both compositions give the identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 2 + trial % 7;
    const PowerSeries s = random_series(rng, order);
    const PowerSeries inv = revert(s, order);
    const PowerSeries forward = compose(s, inv, order);
    const PowerSeries backward = compose(inv, s, order);
    CHECK(std::abs(forward.coefficient(1) - 1.0) < 1e-9);
    CHECK(std::abs(backward.coefficient(1) - 1.0) < 1e-9);
    for (int k = 2; k <= order; ++k) {
      CHECK(std::abs(forward.coefficient(k)) < 1e-9);
      CHECK(std::abs(backward.coefficient(k)) < 1e-9);
    }
  }
}

TEST_CASE("euler_ln_series values and coefficients") {
  CHECK(euler_ln_series(0.0, 4) == 0.0);
  CHECK(euler_ln_series(1.0, 4) ==
        doctest::Approx(1.0 + 1.0 + 1.5 + 8.0 / 3.0).epsilon(1e-15));
  CHECK(euler_ln_series(0.1, 1) == 0.1);
  CHECK_THROWS_AS(euler_ln_series(0.1, 0), std::domain_error);
  CHECK_THROWS_AS(euler_ln_series(0.1, 5), std::domain_error);
}

TEST_CASE("euler_ln_series is -w_series(-v) term for term") {
  for (int order = 1; order <= 4; ++order) {
    for (int i = -30; i <= 30; ++i) {
      const double v = i / 100.0;
      CHECK(euler_ln_series(v, order) == -w_series(-v, order));
    }
  }
}

TEST_CASE("euler_ln_series solves t = v e^t for small v") {
  const double v = 0.01;
  const double t = euler_ln_series(v, 4);
  CHECK(std::abs(t - v * std::exp(t)) < 1e-9);
  CHECK(std::abs(t - (-lambert_w(-v, Branch::Principal))) < 1e-9);
}
