#include <catch2/catch_amalgamated.hpp>

#include "loopchains/necklace.hpp"
#include "loopchains/verify.hpp"

using namespace loopchains;

TEST_CASE("Necklace degree and weight") {
  Necklace idn = Necklace::at_vertex(2);
  REQUIRE(idn.degree() == 0);
  REQUIRE(idn.weight() == 0);
  REQUIRE(idn.key() == "(id_2)[2]");

  Necklace n(PathWord::of({Bead({0, 1}, true)}), Simplex({0, 1}));
  REQUIRE(n.degree() == 1);  // word degree 0 + marked dim 1
  REQUIRE(n.weight() == 2);
}

TEST_CASE("Weight basis at weight zero is the vertex necklaces") {
  Complex X = Complex::standard_simplex(3);
  std::vector<Necklace> b = weight_basis(X, 0, 0);
  REQUIRE(b.size() == 4);
  for (const Necklace& n : b) REQUIRE(n.word.is_identity());
}

TEST_CASE("Weight basis contains the rho image of an edge") {
  Complex X = Complex::standard_simplex(1);
  std::vector<Necklace> b = weight_basis(X, 1, 2);
  Necklace expect(PathWord::of({Bead({0, 1}, true)}), Simplex({0, 1}));
  REQUIRE(std::find(b.begin(), b.end(), expect) != b.end());
}

TEST_CASE("Differential drops degree by one and never raises weight") {
  Complex X = Complex::from_maximals("sphere", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  for (int deg = 0; deg <= 4; ++deg)
    for (const Necklace& n : weight_basis(X, deg, 4))
      for (const auto& [m, c] : necklace_D(n).terms()) {
        REQUIRE(m.degree() == n.degree() - 1);
        REQUIRE(m.weight() <= n.weight());
      }
}

TEST_CASE("D squared vanishes over the 2-sphere up to weight 5") {
  Complex X = Complex::from_maximals("sphere", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  VerifyResult r = verify_D2(X, 5);
  INFO(r.detail);
  REQUIRE(r.pass);
}

TEST_CASE("Adjoint complexes intertwine iota and the simplicial boundary") {
  // D^ad(σ ⊗ id) = Σ ±(∂σ ⊗ id) + word terms; composed with ι it must
  // reproduce ι∂ — this pins the +1 in the δ_R sign of D^ad.
  Complex X = Complex::standard_simplex(3);
  for (int d = 1; d <= 3; ++d)
    for (const Simplex& s : X.simplices(d)) {
      AdSum e;
      e.add_int(iota(s), 1);
      AdSum lhs = D_ad(e);
      AdSum rhs;
      for (const auto& [f, c] : boundary(s).terms()) rhs.add_term(iota(f), c);
      REQUIRE(lhs == rhs);
      REQUIRE(D_ad(D_ad(e)).empty());
      REQUIRE(D_ad_op(D_ad_op(e)).empty());
    }
}
