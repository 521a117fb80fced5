#include <catch2/catch_amalgamated.hpp>

#include "loopchains/homology.hpp"
#include "loopchains/matrix.hpp"

using namespace loopchains;

TEST_CASE("Smith normal form invariant factors") {
  SparseIntMatrix m(2, 2);
  m.set(0, 0, 2);
  m.set(0, 1, 4);
  m.set(1, 0, 6);
  m.set(1, 1, 8);
  SmithResult s = smith_normal_form(m);
  REQUIRE(s.diag == std::vector<Int>{2, 4});
}

TEST_CASE("Smith normal form with transforms satisfies U M V = diag") {
  SparseIntMatrix m(3, 2);
  m.set(0, 0, 6);
  m.set(1, 0, 4);
  m.set(2, 1, 10);
  m.set(0, 1, 2);
  SmithResult s = smith_normal_form(m, true);
  SparseIntMatrix p = s.U.times(m).times(s.V);
  for (std::size_t i = 0; i < s.diag.size(); ++i)
    REQUIRE(p.get(static_cast<int>(i), static_cast<int>(i)) == s.diag[i]);
  long nz = 0;
  for (int j = 0; j < p.cols(); ++j) nz += static_cast<long>(p.column(j).size());
  REQUIRE(nz == static_cast<long>(s.diag.size()));
}

TEST_CASE("Integer solve finds a particular solution") {
  SparseIntMatrix m(2, 3);
  m.set(0, 0, 2);
  m.set(0, 1, 4);
  m.set(1, 1, 3);
  m.set(1, 2, 6);
  auto x = solve_integer(m, {10, 9});
  REQUIRE(x.has_value());
  REQUIRE(2 * (*x)[0] + 4 * (*x)[1] == 10);
  REQUIRE(3 * (*x)[1] + 6 * (*x)[2] == 9);
  REQUIRE_FALSE(solve_integer(m, {1, 0}).has_value());  // 2a + 4b is even
}

TEST_CASE("Homology step on the circle") {
  // Boundary of a triangle: three vertices, three edges.
  Complex X = Complex::from_maximals("circle", {{0, 1}, {0, 2}, {1, 2}});
  HomologyStep h0 = simplicial_homology(X, 0);
  HomologyStep h1 = simplicial_homology(X, 1);
  REQUIRE(h0.betti == 1);
  REQUIRE(h1.betti == 1);
  REQUIRE(h0.torsion.empty());
  REQUIRE(h1.torsion.empty());
}

TEST_CASE("Rank agrees over Q and Z/p for a torsion-free matrix") {
  SparseIntMatrix m(3, 3);
  m.set(0, 0, 1);
  m.set(1, 1, 2);
  m.set(2, 2, 3);
  m.set(0, 2, 5);
  REQUIRE(hnf_rank(m) == 3);
  REQUIRE(rank_mod_p(m, 5) == 3);
  REQUIRE(rank_mod_p(m, 2) == 2);  // the diagonal 2 dies mod 2
}

TEST_CASE("Fundamental cycle of the tetrahedron boundary") {
  Complex X = Complex::from_maximals("sphere", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  Chain c = fundamental_cycle(X);
  Chain expect;
  expect.add_int(Simplex({0, 1, 2}), 1);
  expect.add_int(Simplex({0, 1, 3}), -1);
  expect.add_int(Simplex({0, 2, 3}), 1);
  expect.add_int(Simplex({1, 2, 3}), -1);
  REQUIRE(c == expect);
  REQUIRE(boundary(c).empty());
}
