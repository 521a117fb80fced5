#include <catch2/catch_amalgamated.hpp>

#include "loopchains/simplicial.hpp"

using namespace loopchains;

TEST_CASE("Standard simplex enumerates all faces") {
  Complex X = Complex::standard_simplex(3);
  REQUIRE(X.max_dim() == 3);
  REQUIRE(X.simplices(0).size() == 4);
  REQUIRE(X.simplices(1).size() == 6);
  REQUIRE(X.simplices(2).size() == 4);
  REQUIRE(X.simplices(3).size() == 1);
  REQUIRE(X.contains(Simplex({0, 2, 3})));
  REQUIRE_FALSE(X.contains(Simplex({0, 4})));
}

TEST_CASE("Vertex lists must be strictly increasing") {
  REQUIRE_THROWS_AS(Simplex({1, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(Simplex({0, 0}), std::invalid_argument);
}

TEST_CASE("Boundary of a triangle") {
  Chain b = boundary(Simplex({0, 1, 2}));
  Chain expect;
  expect.add_int(Simplex({1, 2}), 1);
  expect.add_int(Simplex({0, 2}), -1);
  expect.add_int(Simplex({0, 1}), 1);
  REQUIRE(b == expect);
}

TEST_CASE("Boundary squares to zero") {
  Complex X = Complex::standard_simplex(5);
  for (const Simplex& s : X.all_simplices()) REQUIRE(boundary(boundary(s)).empty());
}

TEST_CASE("Reduced boundary drops the extreme faces") {
  Chain b = reduced_boundary(Simplex({0, 1, 2, 3}));
  // Only interior vertices are removed: faces missing 1 or 2.
  REQUIRE(b.terms().size() == 2);
  for (const auto& [s, c] : b.terms()) {
    REQUIRE(s.verts().front() == 0);
    REQUIRE(s.verts().back() == 3);
  }
}

TEST_CASE("Alexander-Whitney coproduct is counital and coassociative on a simplex") {
  Simplex s({0, 1, 2, 3});
  TensorChain d = aw_coproduct(s);
  // Counit: project either side to dimension 0.
  Chain left, right;
  for (const auto& [p, c] : d.terms()) {
    if (p.left.dim() == 0) left.add_term(p.right, c);
    if (p.right.dim() == 0) right.add_term(p.left, c);
  }
  Chain self;
  self.add_int(s, 1);
  REQUIRE(left == self);
  REQUIRE(right == self);
  // Coassociativity via string-keyed triples.
  std::map<std::string, Coefficient> lhs, rhs;
  for (const auto& [p, c] : d.terms()) {
    for (const auto& [q, c2] : aw_coproduct(p.left).terms()) {
      auto& e = lhs[q.left.key() + "|" + q.right.key() + "|" + p.right.key()];
      e = e + c * c2;
    }
    for (const auto& [q, c2] : aw_coproduct(p.right).terms()) {
      auto& e = rhs[p.left.key() + "|" + q.left.key() + "|" + q.right.key()];
      e = e + c * c2;
    }
  }
  REQUIRE(lhs == rhs);
}
