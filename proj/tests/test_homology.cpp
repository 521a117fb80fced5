#include <catch2/catch_amalgamated.hpp>

#include "loopchains/verify.hpp"

using namespace loopchains;

namespace {

Complex sphere() {
  return Complex::from_maximals("sphere", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

QuotientData sphere_collapse() {
  // Collapse three of the four triangles (with all their faces) to a point.
  Complex a = Complex::from_maximals("collapse", {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  return QuotientData::make(sphere(), a);
}

}  // namespace

TEST_CASE("Simplicial homology of the 2-sphere") {
  Complex X = sphere();
  REQUIRE(simplicial_homology(X, 0).betti == 1);
  REQUIRE(simplicial_homology(X, 1).betti == 0);
  REQUIRE(simplicial_homology(X, 1).torsion.empty());
  REQUIRE(simplicial_homology(X, 2).betti == 1);
}

TEST_CASE("Truncated homology in degree zero at weight zero counts vertices") {
  TruncatedHomology h = truncated_homology(sphere(), 0, 0, Ring::z());
  REQUIRE(h.betti == 4);
}

TEST_CASE("Truncated homology detects one loop-space component at weight five") {
  TruncatedHomology h = truncated_homology(sphere(), 0, 5, Ring::z());
  REQUIRE(h.betti == 1);
  REQUIRE(h.torsion.empty());
}

TEST_CASE("Truncated homology of the solid triangle") {
  REQUIRE(truncated_homology(Complex::standard_simplex(2), 0, 4, Ring::z()).betti == 1);
  REQUIRE(truncated_homology(Complex::standard_simplex(2), 0, 5, Ring::z()).betti == 1);
  // Rings agree where there is no torsion.
  REQUIRE(truncated_homology(Complex::standard_simplex(2), 0, 4, Ring::q()).betti == 1);
  REQUIRE(truncated_homology(Complex::standard_simplex(2), 0, 4, Ring::mod(5)).betti == 1);
}

TEST_CASE("Composite moduli are rejected") {
  REQUIRE_THROWS_AS(truncated_homology(Complex::standard_simplex(2), 0, 2, Ring::mod(6)),
                    std::invalid_argument);
}

TEST_CASE("Stabilization scan reports rows and a stable suffix when present") {
  ScanResult r = stabilization_scan(Complex::standard_simplex(1), 0, 1, 5, Ring::z());
  REQUIRE(r.rows.size() == 5);
  // Delta^1: betti 2 at weight 1, then 1 from weight 2 on.
  REQUIRE(r.rows.front().betti == 2);
  for (std::size_t i = 1; i < r.rows.size(); ++i) REQUIRE(r.rows[i].betti == 1);
  REQUIRE(r.stable_from == 2);
}

TEST_CASE("theta_pi of the fundamental cycle of the 2-sphere") {
  QuotientData q = sphere_collapse();
  q.require_cohochschild_shape();
  Chain c = fundamental_cycle(sphere());
  CoHochschildSum reduced = theta_pi(rho(sphere(), c), q);
  std::vector<std::string> lines = reduced.lines();
  REQUIRE(lines.size() == 2);
  REQUIRE(lines[0] == "+1·([0,1,2]|[0,1,2])e");
  REQUIRE(lines[1] == "+1·(id)[0,1,2]");
  REQUIRE(cohochschild_D(reduced, q).empty());
  REQUIRE(necklace_D(rho(sphere(), c)).empty());
}

TEST_CASE("theta_pi is a chain map up to weight four") {
  VerifyResult r = verify_theta(sphere_collapse(), 4);
  INFO(r.detail);
  REQUIRE(r.pass);
}
