#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "ptower/analysis.hpp"
#include "ptower/constants.hpp"
#include "ptower/lambertw.hpp"

using namespace ptower;

TEST_CASE("classify regimes from the convergence table") {
  CHECK(classify(1.5).regime == ConvergenceRegime::DivergesToInfinity);
  CHECK(!classify(1.5).fixed_point_range.has_value());
  CHECK(classify(1.0).regime == ConvergenceRegime::Unity);
  CHECK(classify(1.2).regime == ConvergenceRegime::TwoFixedPoints);
  CHECK(classify(0.5).regime == ConvergenceRegime::OscillatingConvergence);
  CHECK(classify(0.05).regime == ConvergenceRegime::TwoCycleRegime);
  CHECK(classify(0.5).fixed_point_range == std::pair{k_inv_e, k_e});
  CHECK_THROWS_AS(classify(0.0), std::domain_error);
  CHECK_THROWS_AS(classify(-1.0), std::domain_error);
}

TEST_CASE("classify flips exactly at the computed boundary constants") {
  CHECK(classify(e_to_inv_e).regime == ConvergenceRegime::TangentConvergence);
  CHECK(classify(e_to_inv_e + 1e-12).regime ==
        ConvergenceRegime::DivergesToInfinity);
  CHECK(classify(e_to_inv_e - 1e-12).regime ==
        ConvergenceRegime::TwoFixedPoints);

  CHECK(classify(e_to_minus_e).regime ==
        ConvergenceRegime::OscillatingConvergence);
  CHECK(classify(e_to_minus_e + 1e-12).regime ==
        ConvergenceRegime::OscillatingConvergence);
  CHECK(classify(e_to_minus_e - 1e-12).regime ==
        ConvergenceRegime::TwoCycleRegime);
}

TEST_CASE("regime names are stable") {
  CHECK(std::string(to_string(ConvergenceRegime::DivergesToInfinity)) ==
        "DivergesToInfinity");
  CHECK(std::string(to_string(ConvergenceRegime::TwoCycleRegime)) ==
        "TwoCycleRegime");
}

TEST_CASE("tangency point") {
  const Tangency t = tangency();
  CHECK(t.x == e_to_inv_e);
  CHECK(std::abs(t.x - 1.44467) < 1e-5);
  CHECK(t.point.first == k_e);
  CHECK(t.point.second == k_e);
  // The two closed forms for the tangency ordinate coincide there.
  const double lx = std::log(t.x);
  CHECK(std::abs(-std::log(lx) / lx - 1.0 / lx) < 1e-9);
}

TEST_CASE("cycle_from_ratio at ratio 2 gives the 1/16 cycle exactly") {
  const TwoCycle c = cycle_from_ratio(2.0);
  CHECK(c.y_low == 0.25);
  CHECK(c.y_high == 0.5);
  CHECK(c.ratio == 2.0);
  CHECK(std::abs(c.x - 0.0625) < 1e-12);
}

TEST_CASE("cycle_from_ratio degenerates to (1/e, 1/e) at ratio -> 1") {
  const TwoCycle c = cycle_from_ratio(1.0 + 1e-12);
  CHECK(std::abs(c.y_low - k_inv_e) < 1e-6);
  CHECK(std::abs(c.y_high - k_inv_e) < 1e-6);
  CHECK(std::abs(c.x - e_to_minus_e) < 1e-6);
}

TEST_CASE("cycle_from_ratio at ratio 4") {
  const TwoCycle c = cycle_from_ratio(4.0);
  CHECK(std::abs(c.y_low - 0.15749) < 1e-4);
  CHECK(std::abs(c.y_high - 0.62996) < 1e-4);
  CHECK(c.y_low == doctest::Approx(std::exp(std::log(4.0) * (-4.0 / 3.0)))
                       .epsilon(1e-12));
  // The pair really is exchanged by y -> x^y.
  CHECK(std::pow(c.x, c.y_low) == doctest::Approx(c.y_high).epsilon(1e-12));
  CHECK(std::pow(c.x, c.y_high) == doctest::Approx(c.y_low).epsilon(1e-12));
}

TEST_CASE("cycle_from_ratio domain errors") {
  CHECK_THROWS_AS(cycle_from_ratio(1.0), std::domain_error);
  CHECK_THROWS_AS(cycle_from_ratio(0.5), std::domain_error);
}

TEST_CASE("cycle_for_base recovers the 1/16 cycle") {
  const TwoCycle c = cycle_for_base(0.0625);
  CHECK(std::abs(c.y_low - 0.25) < 1e-9);
  CHECK(std::abs(c.y_high - 0.5) < 1e-9);
  CHECK(std::abs(c.ratio - 2.0) < 1e-8);
  CHECK(c.x == 0.0625);
}

TEST_CASE("cycle_for_base close to the pitchfork") {
  const TwoCycle c = cycle_for_base(e_to_minus_e - 1e-9);
  CHECK(std::abs(c.y_low - k_inv_e) < 1e-3);
  CHECK(std::abs(c.y_high - k_inv_e) < 1e-3);
  CHECK(c.y_low <= c.y_high);
}

TEST_CASE("cycle_for_base residuals") {
  const TwoCycle c = cycle_for_base(0.04);
  CHECK(std::abs(std::pow(0.04, c.y_low) - c.y_high) < 1e-9);
  CHECK(std::abs(std::pow(0.04, c.y_high) - c.y_low) < 1e-9);
}

TEST_CASE("cycle_for_base domain errors") {
  CHECK_THROWS_AS(cycle_for_base(0.0), std::domain_error);
  CHECK_THROWS_AS(cycle_for_base(e_to_minus_e), std::domain_error);
  CHECK_THROWS_AS(cycle_for_base(0.1), std::domain_error);
}

TEST_CASE("ratio round trip: cycle_from_ratio after cycle_for_base") {
  for (const double x : {0.01, 0.03, 0.0625}) {
    const TwoCycle c = cycle_for_base(x);
    CHECK(std::abs(cycle_from_ratio(c.ratio).x - x) < 1e-9);
  }
}

TEST_CASE("every produced cycle satisfies the y^y identity and the value range") {
  for (const double x : {0.005, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06}) {
    const TwoCycle c = cycle_for_base(x);
    CHECK(std::abs(std::pow(c.y_low, c.y_low) - std::pow(c.y_high, c.y_high)) <
          1e-9);
    CHECK(0.0 < c.y_low);
    CHECK(c.y_low < k_inv_e);
    CHECK(k_inv_e < c.y_high);
    CHECK(c.y_high < 1.0);
  }
  for (const double r : {1.5, 2.0, 3.0, 5.0, 8.0}) {
    const TwoCycle c = cycle_from_ratio(r);
    CHECK(std::abs(std::pow(c.y_low, c.y_low) - std::pow(c.y_high, c.y_high)) <
          1e-9);
  }
}

TEST_CASE("cycle values straddle the repulsive fixed point") {
  for (const double x : {0.01, 0.02, 0.03, 0.04, 0.05, 0.06}) {
    const TwoCycle c = cycle_for_base(x);
    // Independent bisection of x^y = y; the map is decreasing for x < 1.
    const double mid = oracle::bisect(
        [x](double y) { return std::pow(x, y) - y; }, 1e-9, 1.0);
    CHECK(c.y_low < mid);
    CHECK(mid < c.y_high);
  }
}

TEST_CASE("parity limits") {
  const auto [even_far, odd_far] = parity_limits(1e-6, 100);
  CHECK(std::abs(even_far - 1.0) < 1e-4);
  CHECK(std::abs(odd_far) < 1e-4);

  const auto [even, odd] = parity_limits(1e-3, 1);
  CHECK(even == doctest::Approx(0.99311604842093382).epsilon(1e-12));
  CHECK(odd == doctest::Approx(0.0010487014167971003).epsilon(1e-12));
  CHECK(even == doctest::Approx(std::pow(1e-3, 1e-3)).epsilon(1e-12));
  CHECK(odd ==
        doctest::Approx(std::pow(1e-3, std::pow(1e-3, 1e-3))).epsilon(1e-12));

  CHECK_THROWS_AS(parity_limits(0.5, 10), std::domain_error);
  CHECK_THROWS_AS(parity_limits(0.01, 0), std::domain_error);
}

TEST_CASE("bifurcation scan in the cycle regime") {
  const auto rows = bifurcation_scan(0.02, 0.06, 21);
  REQUIRE(rows.size() == 21);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].values.size() == 2);
    CHECK(rows[i].values[0] < k_inv_e);
    CHECK(rows[i].values[1] > k_inv_e);
    CHECK(rows[i].classification.regime == ConvergenceRegime::TwoCycleRegime);
    if (i > 0) CHECK(rows[i].x > rows[i - 1].x);
  }
}

TEST_CASE("bifurcation scan in the two-fixed-point window") {
  const auto rows = bifurcation_scan(1.0, 1.4, 21);
  REQUIRE(rows.size() == 21);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].values.size() == 1);
    CHECK(rows[i].values[0] >= 1.0);
    CHECK(rows[i].values[0] < k_e);
    // Attractor value grows strictly with the base.
    if (i > 0) CHECK(rows[i].values[0] > rows[i - 1].values[0]);
  }
}

TEST_CASE("bifurcation scan hits the 1/16 cycle") {
  const auto rows = bifurcation_scan(0.05, 0.075, 11);
  const auto& row = rows[5];
  CHECK(std::abs(row.x - 0.0625) < 1e-15);
  REQUIRE(row.values.size() == 2);
  CHECK(std::abs(row.values[0] - 0.25) < 1e-9);
  CHECK(std::abs(row.values[1] - 0.5) < 1e-9);
}

TEST_CASE("bifurcation scan in the divergent regime yields empty rows") {
  const auto rows = bifurcation_scan(1.5, 1.6, 5);
  for (const auto& row : rows) {
    CHECK(row.values.empty());
    CHECK(row.classification.regime == ConvergenceRegime::DivergesToInfinity);
  }
}

TEST_CASE("bifurcation scan domain errors") {
  CHECK_THROWS_AS(bifurcation_scan(0.0, 1.0, 10), std::domain_error);
  CHECK_THROWS_AS(bifurcation_scan(1.0, 0.5, 10), std::domain_error);
  CHECK_THROWS_AS(bifurcation_scan(0.5, 1.0, 1), std::domain_error);
}

TEST_CASE("scan_at handles the unity base") {
  const ScanRow row = scan_at(1.0);
  CHECK(row.classification.regime == ConvergenceRegime::Unity);
  REQUIRE(row.values.size() == 1);
  CHECK(row.values[0] == 1.0);
}

TEST_CASE("region grid samples the contraction condition") {
  // Grid anchored exactly at the boundary point (e^{-e}, 1/e).
  const RegionGrid grid =
      region_scan({e_to_minus_e, 0.5}, {k_inv_e, 2.0}, 5, 5);
  CHECK(!grid.at(0, 0));  // derivative is exactly 1 there: outside

  const RegionGrid inside = region_scan({0.5, 1.1}, {0.5, 1.0}, 4, 3);
  CHECK(inside.at(0, 0));  // (0.5, 0.5) contracts

  const RegionGrid outside = region_scan({1.5, 3.0}, {3.0, 5.0}, 8, 8);
  for (std::size_t i = 0; i < outside.xs.size(); ++i)
    for (std::size_t j = 0; j < outside.ys.size(); ++j)
      CHECK(!outside.at(i, j));
}

TEST_CASE("region grid domain errors") {
  CHECK_THROWS_AS(region_scan({-1.0, 1.0}, {0.5, 1.0}, 4, 4), std::domain_error);
  CHECK_THROWS_AS(region_scan({0.5, 0.4}, {0.5, 1.0}, 4, 4), std::domain_error);
  CHECK_THROWS_AS(region_scan({0.5, 1.0}, {0.5, 1.0}, 1, 4), std::domain_error);
}
