#include <catch2/catch_amalgamated.hpp>

#include "loopchains/hopf.hpp"
#include "loopchains/verify.hpp"

using namespace loopchains;

TEST_CASE("Coproduct of a triangle bead") {
  TensorWordSum d = nabla0(PathWord::single(Bead({0, 1, 2})));
  // ([0,1,2]) ⊗ ([0,2]) + ([0,1]|[1,2]) ⊗ ([0,1,2]), both with sign +1.
  TensorWordSum expect;
  expect.add_int(WordPair{PathWord::single(Bead({0, 1, 2})), PathWord::single(Bead({0, 2}))}, 1);
  expect.add_int(WordPair{PathWord::of({Bead({0, 1}), Bead({1, 2})}), PathWord::single(Bead({0, 1, 2}))}, 1);
  REQUIRE(d == expect);
}

TEST_CASE("Antipode of edges and of a triangle bead") {
  PathSum se = antipode(PathWord::single(Bead({0, 1})));
  PathSum expect_e;
  expect_e.add_int(PathWord::single(Bead({0, 1}, true)), 1);
  REQUIRE(se == expect_e);

  PathSum st = antipode(PathWord::single(Bead({0, 1, 2})));
  PathSum expect_t;
  expect_t.add_int(PathWord::of({Bead({1, 2}, true), Bead({0, 1}, true), Bead({0, 1, 2}), Bead({0, 2}, true)}),
                   -1);
  REQUIRE(st == expect_t);
}

TEST_CASE("Homotopy cocommutativity correction on a triangle bead") {
  // (d⊗id + id⊗d)∇₁ + ∇₁d = ∇₀^op − ∇₀ on the bead [0,1,2].
  PathWord w = PathWord::single(Bead({0, 1, 2}));
  TensorWordSum lhs = tensor_differential(nabla1(w));
  for (const auto& [ww, c] : word_differential(w).terms()) lhs.add(nabla1(ww).scaled(c));
  REQUIRE(lhs == nabla0_op(w) - nabla0(w));
}

TEST_CASE("Hopf suite over the 3-simplex") {
  Complex X = Complex::standard_simplex(3);
  VerifyResult r = verify_hopf(X, 3);
  INFO(r.detail);
  REQUIRE(r.pass);
}

TEST_CASE("Antipode suite over the 3-simplex") {
  Complex X = Complex::standard_simplex(3);
  VerifyResult r = verify_antipode(X, 3);
  INFO(r.detail);
  REQUIRE(r.pass);
}
