#include <doctest.h>

#include <cmath>
#include <numbers>

#include "majent/analysis.hpp"
#include "majent/mbqc.hpp"

using namespace majent;

TEST_CASE("asymptotic Dicke entanglement") {
  CHECK(dicke_family_asymptotic(1) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  CHECK(dicke_family_asymptotic(2) == doctest::Approx(1.0 - 2.0 * std::exp(-2.0)).epsilon(1e-15));
  // Large k goes through lgamma and must join the product form smoothly.
  const double k20 = dicke_family_asymptotic(20), k21 = dicke_family_asymptotic(21);
  CHECK(k21 > k20);
  CHECK(1.0 - k21 == doctest::Approx((1.0 - k20) * std::sqrt(20.0 / 21.0)).epsilon(2e-3));
  // Finite-n values approach the limit.
  for (int k = 1; k <= 4; ++k) {
    const double lin = 1.0 - std::exp2(-dicke_entanglement(100000, k));
    CHECK(lin == doctest::Approx(dicke_family_asymptotic(k)).epsilon(1e-4));
  }
  CHECK_THROWS_AS(dicke_family_asymptotic(0), std::domain_error);
}

TEST_CASE("universality condition") {
  CHECK(universality_condition(0.7, 0.001));
  CHECK_FALSE(universality_condition(0.6, 0.001));
  CHECK_FALSE(universality_condition(0.5, 0.0));
  CHECK_THROWS_AS(universality_condition(1.5, 0.01), std::domain_error);
  CHECK_THROWS_AS(universality_condition(0.5, -0.01), std::domain_error);
}

TEST_CASE("eta threshold") {
  const MbqcReport r1 = eta_threshold(1);
  CHECK(r1.eta_threshold == doctest::Approx(1.017089e-3).epsilon(1e-5));
  CHECK(r1.paper_threshold == doctest::Approx(0.001));
  CHECK(r1.eta_threshold / r1.paper_threshold < 3.0);
  // At the threshold the condition sits on its boundary.
  const double eta = r1.eta_threshold;
  const double rhs = 1 - 4 * std::cbrt(eta) + 3.4 * std::cbrt(eta * eta);
  CHECK(r1.eg_linear_asymptotic == doctest::Approx(rhs).epsilon(1e-9));
  double prev = 1.0;
  for (int k = 1; k <= 30; ++k) {
    const MbqcReport r = eta_threshold(k);
    CHECK(r.eta_threshold < prev);
    CHECK(r.eta_threshold / r.paper_threshold < 3.0);
    CHECK(r.eta_threshold / r.paper_threshold > 1.0 / 3.0);
    prev = r.eta_threshold;
  }
}
