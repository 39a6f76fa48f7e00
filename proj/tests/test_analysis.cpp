#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "majent/analysis.hpp"
#include "majent/geometry.hpp"
#include "majent/search.hpp"
#include "oracles.hpp"

using namespace majent;

TEST_CASE("dicke_entanglement closed forms") {
  CHECK(dicke_entanglement(2, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dicke_entanglement(3, 1) == doctest::Approx(std::log2(9.0 / 4)).epsilon(1e-15));
  CHECK(dicke_entanglement(4, 2) == doctest::Approx(std::log2(8.0 / 3)).epsilon(1e-15));
  CHECK(dicke_entanglement(6, 3) == doctest::Approx(std::log2(16.0 / 5)).epsilon(1e-15));
  CHECK(dicke_entanglement(5, 0) == 0.0);
  for (int n = 2; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(dicke_entanglement(n, k) == dicke_entanglement(n, n - k));
      CHECK(dicke_entanglement(n, k) == doctest::Approx(oracle::dicke_eg(n, k)).epsilon(1e-12).scale(1.0));
    }
  CHECK_THROWS_AS(dicke_entanglement(3, 4), std::domain_error);
}

TEST_CASE("dicke_cpp attains the Dicke maximum") {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k < n; ++k) {
      const double f = amplitude(make_dicke(n, k), dicke_cpp(n, k));
      CHECK(-2 * std::log2(f) == doctest::Approx(dicke_entanglement(n, k)).epsilon(1e-12));
    }
}

TEST_CASE("bounds are ordered") {
  for (int n = 2; n <= 60; ++n) {
    const BoundsReport b = entanglement_bounds(n);
    CHECK(b.upper == doctest::Approx(std::log2(n + 1.0)));
    CHECK(b.dicke_lower == doctest::Approx(dicke_entanglement(n, n / 2)));
    CHECK(b.dicke_lower <= b.upper);
    CHECK(b.general_lower <= b.general_upper + 0.5);
  }
  CHECK_THROWS_AS(entanglement_bounds(1), std::domain_error);
}

TEST_CASE("spin vector and designs of Platonic points") {
  for (const char* name : {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}) {
    const MomentReport m = moment_report(MajoranaPoints(platonic_vertices(name)));
    CHECK(m.anticoherent(1e-10));
    CHECK(m.design(2, 1e-10));
  }
  // Square pyramid: four equatorial points and the north pole.
  std::vector<BlochPoint> pyr{BlochPoint::north()};
  for (int i = 0; i < 4; ++i) pyr.push_back(BlochPoint::make(std::numbers::pi / 2, i * std::numbers::pi / 2));
  const MomentReport m = moment_report(MajoranaPoints(pyr));
  CHECK(m.spin_vector.norm() == doctest::Approx(0.2));
  CHECK_FALSE(m.anticoherent());
}

TEST_CASE("spin vector of random points is rotation covariant") {
  std::mt19937_64 rng(53);
  for (int n = 2; n <= 10; ++n) {
    const MajoranaPoints mp = state_to_points(random_state(n, rng));
    const Unitary2 u = Unitary2::random(rng);
    const MomentReport a = moment_report(mp), b = moment_report(rotate_points(mp, u));
    CHECK((u.rotation_matrix() * a.spin_vector - b.spin_vector).norm() < 1e-12);
    CHECK(b.second_moment_deviation == doctest::Approx(a.second_moment_deviation).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("dual pairs") {
  CHECK(duality_report(platonic_state("octahedron"), platonic_state("cube")).dual_pair());
  CHECK(duality_report(platonic_state("icosahedron"), platonic_state("dodecahedron")).dual_pair());
  const DualityReport self = duality_report(platonic_state("tetrahedron"), platonic_state("tetrahedron"));
  CHECK(self.dual_pair());
  CHECK(self.cpp_count_a == 4);
  CHECK_FALSE(duality_report(platonic_state("octahedron"), platonic_state("octahedron")).dual_pair());
}
