#include <catch2/catch_amalgamated.hpp>

#include "loopchains/pathcat.hpp"

using namespace loopchains;

TEST_CASE("Words reduce adjacent inverse pairs on construction") {
  Bead e({0, 1});
  Bead einv({0, 1}, true);
  PathWord w = PathWord::of({e, einv});
  REQUIRE(w.is_identity());
  REQUIRE(w.s() == 0);
  PathWord v = PathWord::of({Bead({0, 2}), Bead({0, 2}, true), Bead({0, 1})});
  REQUIRE(v.beads().size() == 1);
  REQUIRE(v.key() == "([0,1])");
}

TEST_CASE("Degree and weight of words") {
  // degree = sum over beads of (dim - 1), inverse edges count 0;
  // weight = sum of dims, inverse edges count 1.
  PathWord tri = PathWord::of({Bead({0, 1}, true), Bead({0, 1, 2})});
  REQUIRE(tri.degree() == 1);
  REQUIRE(tri.weight() == 3);
  REQUIRE(tri.s() == 1);
  REQUIRE(tri.t() == 2);
}

TEST_CASE("Differential of a triangle bead") {
  PathSum d = word_differential(PathWord::single(Bead({0, 1, 2})));
  PathSum expect;
  expect.add_int(PathWord::single(Bead({0, 2})), 1);
  expect.add_int(PathWord::of({Bead({0, 1}), Bead({1, 2})}), -1);
  REQUIRE(d == expect);
}

TEST_CASE("Differential is a derivation of concatenation") {
  PathWord a = PathWord::single(Bead({0, 1, 2}));
  PathWord b = PathWord::of({Bead({2, 3}), Bead({1, 3}, true)});
  PathWord ab = concat_mu(a, b);
  PathSum lhs = word_differential(ab);
  PathSum rhs;
  for (const auto& [w, c] : word_differential(a).terms()) rhs.add_term(concat_mu(w, b), c);
  int sg = (a.degree() % 2 == 0) ? 1 : -1;
  for (const auto& [w, c] : word_differential(b).terms())
    rhs.add_term(concat_mu(a, w), c * Coefficient::integer(sg));
  REQUIRE(lhs == rhs);
}

TEST_CASE("d squared vanishes on words of up to three beads") {
  Complex X = Complex::standard_simplex(4);
  std::vector<Bead> beads;
  for (int d = 1; d <= 4; ++d)
    for (const Simplex& s : X.simplices(d)) {
      beads.push_back(Bead(s));
      if (d == 1) beads.push_back(Bead(s, true));
    }
  long checked = 0;
  for (const Bead& a : beads) {
    REQUIRE(word_differential(word_differential(PathWord::single(a))).empty());
    for (const Bead& b : beads) {
      if (a.t() != b.s() || a.cancels(b)) continue;
      REQUIRE(word_differential(word_differential(PathWord::of({a, b}))).empty());
      for (const Bead& c : beads) {
        if (b.t() != c.s() || b.cancels(c)) continue;
        if (a.simplex.dim() + b.simplex.dim() + c.simplex.dim() > 8) continue;
        PathWord w = PathWord::of({a, b, c});
        if (!word_differential(word_differential(w)).empty()) {
          INFO(w.key());
          REQUIRE(false);
        }
        ++checked;
      }
    }
  }
  REQUIRE(checked > 1000);  // the enumeration really ran
}
