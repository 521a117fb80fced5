#include <catch2/catch_amalgamated.hpp>

#include "loopchains/constloops.hpp"
#include "loopchains/verify.hpp"

using namespace loopchains;

namespace {

std::string rho_text(int k) {
  Complex X = Complex::standard_simplex(k);
  std::vector<int> vs(k + 1);
  for (int i = 0; i <= k; ++i) vs[i] = i;
  std::string out;
  for (const std::string& line : rho_simplex(X, Simplex(vs)).lines()) {
    if (!out.empty()) out += "\n";
    out += line;
  }
  return out;
}

}  // namespace

TEST_CASE("Golden rho on the 0- and 1-simplex") {
  REQUIRE(rho_text(0) == "+1·(id_0)[0]");
  REQUIRE(rho_text(1) == "+1·([1,0])[0,1]");
}

TEST_CASE("Golden rho on the 2-simplex") {
  REQUIRE(rho_text(2) ==
          "+1·([1,0]|[0,1,2]|[2,0])[0,1]\n"
          "+1·([1,0]|[0,1,2]|[2,0]|[0,1,2]|[2,1])[1]\n"
          "+1·([2,0])[0,1,2]\n"
          "+1·([2,0]|[0,1,2]|[2,1])[1,2]");
}

TEST_CASE("Golden rho on the 3-simplex") {
  REQUIRE(rho_text(3) ==
          "-1·([1,0]|[0,1,2,3]|[3,0])[0,1]\n"
          "-1·([1,0]|[0,1,2,3]|[3,0]|[0,1,3]|[3,1])[1]\n"
          "+1·([1,0]|[0,1,2]|[2,0]|[0,1,2,3]|[3,1])[1]\n"
          "-1·([1,0]|[0,1,2]|[2,0]|[0,1,2]|[2,1]|[1,2,3]|[3,1])[1]\n"
          "+1·([1,0]|[0,1,2]|[2,0]|[0,2,3]|[3,0])[0,1]\n"
          "+1·([1,0]|[0,1,2]|[2,0]|[0,2,3]|[3,0]|[0,1,3]|[3,1])[1]\n"
          "-1·([2,0]|[0,1,2,3]|[3,1])[1,2]\n"
          "-1·([2,0]|[0,1,2,3]|[3,1]|[1,2,3]|[3,2])[2]\n"
          "+1·([2,0]|[0,1,2]|[2,1]|[1,2,3]|[3,1])[1,2]\n"
          "+1·([2,0]|[0,1,2]|[2,1]|[1,2,3]|[3,1]|[1,2,3]|[3,2])[2]\n"
          "-1·([2,0]|[0,2,3]|[3,0])[0,1,2]\n"
          "+1·([2,0]|[0,2,3]|[3,0]|[0,1,2,3]|[3,2])[2]\n"
          "-1·([2,0]|[0,2,3]|[3,0]|[0,1,3]|[3,1])[1,2]\n"
          "-1·([2,0]|[0,2,3]|[3,0]|[0,1,3]|[3,1]|[1,2,3]|[3,2])[2]\n"
          "+1·([3,0])[0,1,2,3]\n"
          "-1·([3,0]|[0,1,2,3]|[3,2])[2,3]\n"
          "+1·([3,0]|[0,1,3]|[3,1])[1,2,3]\n"
          "+1·([3,0]|[0,1,3]|[3,1]|[1,2,3]|[3,2])[2,3]");
}

TEST_CASE("Index-sequence enumeration sizes behind rho") {
  // The number of rho terms for the k-simplex: 1, 4, 18 for k = 1, 2, 3.
  REQUIRE(enumerate_S(1).size() == 1);
  REQUIRE(enumerate_S(2).size() == 4);
  REQUIRE(enumerate_S(3).size() == 18);
}

TEST_CASE("rho is a chain map on all faces of the 5-simplex") {
  Complex X = Complex::standard_simplex(5);
  VerifyResult r = verify_chainmap_rho(X, 5);
  INFO(r.detail);
  REQUIRE(r.pass);
}

TEST_CASE("Golden chi on the 2-simplex") {
  Complex X = Complex::standard_simplex(2);
  NecklaceSum c = chi_direct(X, Simplex({0, 1, 2}));
  std::string out;
  for (const std::string& line : c.lines()) {
    if (!out.empty()) out += "\n";
    out += line;
  }
  REQUIRE(out ==
          "-1·([0,1,2]|[2,1]|[1,0]|[0,1,2]|[2,0])[0]\n"
          "+1·([2,1]|[1,0])[0,1,2]\n"
          "+1·([2,1]|[1,0]|[0,1,2]|[2,0])[0,2]");
}

TEST_CASE("chi equals its factorization and is a chain map over the 3-simplex") {
  Complex X = Complex::standard_simplex(3);
  VerifyResult r = verify_chainmap_chi(X, 3);
  INFO(r.detail);
  REQUIRE(r.pass);
}

TEST_CASE("chi agrees with rho in dimensions at most one") {
  Complex X = Complex::standard_simplex(3);
  for (const Simplex& s : X.all_simplices())
    if (s.dim() <= 1) REQUIRE(chi_direct(X, s) == rho_simplex(X, s));
}

TEST_CASE("Homotopy synthesis for the 2-simplex") {
  std::vector<NecklaceSum> h = synthesize_homotopy(2);
  REQUIRE(h[0].empty());
  REQUIRE(h[1].empty());
  Complex X = Complex::standard_simplex(2);
  Simplex top({0, 1, 2});
  NecklaceSum lhs = necklace_D(h[2]);
  for (int j = 0; j <= 2; ++j) {
    std::vector<int> vmap;
    for (int i = 0; i < 2; ++i) vmap.push_back(i < j ? i : i + 1);
    lhs = lhs + relabel(h[1], vmap).scaled((j % 2 == 0) ? 1 : -1);
  }
  REQUIRE(lhs == chi_composed(X, top) - rho_simplex(X, top));
}
