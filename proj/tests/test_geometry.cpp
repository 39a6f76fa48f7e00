#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "majent/geometry.hpp"

using namespace majent;

TEST_CASE("Platonic vertex counts and spacing") {
  const std::vector<std::pair<const char*, std::size_t>> solids{
      {"tetrahedron", 4}, {"octahedron", 6}, {"cube", 8}, {"icosahedron", 12}, {"dodecahedron", 20}};
  const std::vector<double> edge_cos{-1.0 / 3, 0.0, 1.0 / 3, 1.0 / std::sqrt(5.0), std::sqrt(5.0) / 3};
  for (std::size_t i = 0; i < solids.size(); ++i) {
    const auto v = platonic_vertices(solids[i].first);
    CHECK(v.size() == solids[i].second);
    CHECK(std::cos(min_pair_angle(v)) == doctest::Approx(edge_cos[i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(platonic_vertices("torus"), std::domain_error);
}

TEST_CASE("dual_vertices maps each solid to its dual") {
  CHECK(aligned_hausdorff(dual_vertices(platonic_vertices("octahedron")), platonic_vertices("cube")) < 1e-10);
  CHECK(aligned_hausdorff(dual_vertices(platonic_vertices("cube")), platonic_vertices("octahedron")) < 1e-10);
  CHECK(aligned_hausdorff(dual_vertices(platonic_vertices("icosahedron")), platonic_vertices("dodecahedron")) < 1e-10);
  CHECK(aligned_hausdorff(dual_vertices(platonic_vertices("dodecahedron")), platonic_vertices("icosahedron")) < 1e-10);
  const auto tet = platonic_vertices("tetrahedron");
  const auto dual = dual_vertices(tet);
  REQUIRE(dual.size() == 4);
  std::vector<BlochPoint> anti;
  for (const auto& p : tet) anti.push_back(p.antipode());
  CHECK(hausdorff_angle(dual, anti) < 1e-10);
}

TEST_CASE("hausdorff_angle is a metric on random sets") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto random_set = [&](int m) {
    std::vector<BlochPoint> s;
    for (int i = 0; i < m; ++i) s.push_back(BlochPoint::make(std::acos(2 * u(rng) - 1), 2 * std::numbers::pi * u(rng)));
    return s;
  };
  for (int t = 0; t < 50; ++t) {
    const auto a = random_set(3 + t % 5), b = random_set(4), c = random_set(2 + t % 3);
    CHECK(hausdorff_angle(a, a) == doctest::Approx(0.0));
    CHECK(hausdorff_angle(a, b) == doctest::Approx(hausdorff_angle(b, a)));
    CHECK(hausdorff_angle(a, c) <= hausdorff_angle(a, b) + hausdorff_angle(b, c) + 1e-12);
  }
}

TEST_CASE("aligned_hausdorff ignores rotations") {
  std::mt19937_64 rng(2);
  const auto ico = platonic_vertices("icosahedron");
  for (int t = 0; t < 5; ++t) {
    const Eigen::Matrix3d r = Unitary2::random(rng).rotation_matrix();
    std::vector<Eigen::Vector3d> vs = to_vectors(ico);
    for (auto& v : vs) v = r * v;
    CHECK(aligned_hausdorff(to_points(vs), ico) < 1e-9);
  }
  CHECK(aligned_hausdorff(platonic_vertices("cube"), platonic_vertices("dodecahedron")) > 0.1);
}

TEST_CASE("coulomb energy of the octahedron") {
  // 12 edges of length sqrt(2) and 3 diameters of length 2.
  CHECK(coulomb_energy(platonic_vertices("octahedron")) == doctest::Approx(12 / std::sqrt(2.0) + 1.5).epsilon(1e-13));
}
