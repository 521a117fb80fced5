// Acceptance suite: one line per criterion, "PASS"/"FAIL" with elapsed time.
// Exit status 0 iff every criterion passes.
#include <chrono>
#include <iostream>
#include <sstream>

#include "loopchains/verify.hpp"

using namespace loopchains;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool pass, Clock::time_point t0,
            const std::string& detail = "") {
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " [" << std::fixed;
  line.precision(1);
  line << secs << "s]";
  if (!pass && !detail.empty()) line << " — " << detail.substr(0, 200);
  std::cout << line.str() << std::endl;
  if (!pass) ++failures;
}

std::string joined_lines(const NecklaceSum& x) {
  std::string out;
  for (const std::string& line : x.lines()) {
    if (!out.empty()) out += "\n";
    out += line;
  }
  return out;
}

Complex sphere() {
  return Complex::from_maximals("sphere", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Criterion 1: golden rho outputs for the standard 0-,1-,2-,3-simplices,
// byte-exact under canonical serialization (18 terms in dimension 3).
void criterion1() {
  auto t0 = Clock::now();
  static const char* golden[4] = {
      "+1·(id_0)[0]",

      "+1·([1,0])[0,1]",

      "+1·([1,0]|[0,1,2]|[2,0])[0,1]\n"
      "+1·([1,0]|[0,1,2]|[2,0]|[0,1,2]|[2,1])[1]\n"
      "+1·([2,0])[0,1,2]\n"
      "+1·([2,0]|[0,1,2]|[2,1])[1,2]",

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
      "+1·([3,0]|[0,1,3]|[3,1]|[1,2,3]|[3,2])[2,3]"};
  bool ok = true;
  std::string detail;
  for (int k = 0; k <= 3 && ok; ++k) {
    Complex X = Complex::standard_simplex(k);
    std::vector<int> vs(k + 1);
    for (int i = 0; i <= k; ++i) vs[i] = i;
    std::string got = joined_lines(rho_simplex(X, Simplex(vs)));
    if (got != golden[k]) {
      ok = false;
      detail = "rho mismatch at k=" + std::to_string(k);
    }
  }
  report(1, "golden rho outputs for the 0-,1-,2-,3-simplex, byte-exact", ok, t0, detail);
}

// Criterion 2: rho is a chain map on every face of the 6-simplex.
void criterion2() {
  auto t0 = Clock::now();
  VerifyResult r = verify_chainmap_rho(Complex::standard_simplex(6), 6);
  report(2, "rho chain map on all faces of the 6-simplex", r.pass, t0, r.detail);
}

// Criterion 3: chi_direct = psi∘T∘iota and chi∂ = D chi on every face of the
// 4-simplex; chi = rho in dimensions <= 1.
void criterion3() {
  auto t0 = Clock::now();
  VerifyResult r = verify_chainmap_chi(Complex::standard_simplex(4), 4);
  report(3, "chi factorization and chain map on all faces of the 4-simplex", r.pass, t0, r.detail);
}

// Criterion 4: d² = 0 on words of <= 3 beads with total dimension <= 8;
// D² = 0 and weight monotonicity up to weight 6 over the 2-sphere;
// (D^ad)² = (D^ad-op)² = 0 on heads of dimension <= 4.
void criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;

  Complex X4 = Complex::standard_simplex(4);
  std::vector<Bead> beads;
  for (int d = 1; d <= 4; ++d)
    for (const Simplex& s : X4.simplices(d)) {
      beads.push_back(Bead(s));
      if (d == 1) beads.push_back(Bead(s, true));
    }
  std::vector<PathWord> words;
  for (const Bead& a : beads) {
    words.push_back(PathWord::single(a));
    for (const Bead& b : beads) {
      if (a.t() != b.s() || a.cancels(b) || a.simplex.dim() + b.simplex.dim() > 8) continue;
      words.push_back(PathWord::of({a, b}));
      for (const Bead& c : beads) {
        if (b.t() != c.s() || b.cancels(c)) continue;
        if (a.simplex.dim() + b.simplex.dim() + c.simplex.dim() > 8) continue;
        words.push_back(PathWord::of({a, b, c}));
      }
    }
  }
  detail::FirstFailure ff;
  parallel_for(words.size(), [&](std::size_t i) {
    if (!word_differential(word_differential(words[i])).empty())
      ff.report(i, "d² != 0 at " + words[i].key());
  });
  if (ff.failed()) {
    ok = false;
    detail = ff.detail;
  }

  if (ok) {
    VerifyResult r = verify_D2(sphere(), 6);
    if (!r.pass) {
      ok = false;
      detail = r.detail;
    }
  }
  if (ok) {
    for (const Simplex& s : X4.all_simplices()) {
      AdSum e;
      e.add_int(iota(s), 1);
      if (!D_ad(D_ad(e)).empty() || !D_ad_op(D_ad_op(e)).empty()) {
        ok = false;
        detail = "adjoint differential square at head " + s.key();
        break;
      }
    }
  }
  report(4, "d², D² (weight <= 6 over the 2-sphere), and adjoint squares vanish", ok, t0, detail);
}

// Criterion 5: coassociativity/counit, bimonoid law, both antipode equations
// with the anti-homomorphism law, and the two nabla_1 identities, on beads of
// dimension <= 4 and composable pairs.
void criterion5() {
  auto t0 = Clock::now();
  Complex X = Complex::standard_simplex(4);
  VerifyResult h = verify_hopf(X, 4);
  VerifyResult a = verify_antipode(X, 4);
  report(5, "Hopf-like suite: coproduct, bimonoid, antipode, cocommutativity homotopy",
         h.pass && a.pass, t0, h.pass ? a.detail : h.detail);
}

// Criterion 6: 2-sphere pipeline over Z — theta_pi(rho(c)) for the
// fundamental cycle c equals (id)·sigma + (sigma|sigma)·epsilon, and rho(c)
// is closed.
void criterion6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  Complex X = sphere();
  Complex a = Complex::from_maximals("collapse", {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  QuotientData q = QuotientData::make(X, a);
  q.require_cohochschild_shape();
  Chain c = fundamental_cycle(X);
  NecklaceSum rc = rho(X, c);
  if (!necklace_D(rc).empty()) {
    ok = false;
    detail = "D(rho(c)) != 0";
  } else {
    CoHochschildSum reduced = theta_pi(rc, q);
    std::vector<std::string> lines = reduced.lines();
    if (lines.size() != 2 || lines[0] != "+1·([0,1,2]|[0,1,2])e" || lines[1] != "+1·(id)[0,1,2]") {
      ok = false;
      detail = "theta_pi(rho(c)) = " + reduced.str();
    } else if (!cohochschild_D(reduced, q).empty()) {
      ok = false;
      detail = "theta_pi(rho(c)) is not a coHochschild cycle";
    }
  }
  report(6, "2-sphere pipeline: theta_pi(rho(c)) = (id)s + (s|s)e and D(rho(c)) = 0", ok, t0, detail);
}

// Criterion 7: homotopy synthesis h with Dh + h∂ = chi − rho for k = 2, 3,
// h(Δ⁰) = h(Δ¹) = 0, verified by substitution.
void criterion7() {
  auto t0 = Clock::now();
  VerifyResult r = verify_homotopy(3);
  report(7, "homotopy synthesis Dh + h∂ = chi − rho for k = 2, 3", r.pass, t0, r.detail);
}

// Criterion 8: homology sanity. Simplicial H of the 2-sphere is (Z, 0, Z);
// truncated degree-0 homology counts vertices at weight 0 and detects the
// single loop-space component (betti 1, no torsion) at weights 2 and 5; the
// solid triangle has betti 1 in degree 0 at weights 4 and 5.
void criterion8() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  Complex X = sphere();
  HomologyStep h0 = simplicial_homology(X, 0), h1 = simplicial_homology(X, 1),
               h2 = simplicial_homology(X, 2);
  if (h0.betti != 1 || h1.betti != 0 || !h1.torsion.empty() || h2.betti != 1) {
    ok = false;
    detail = "simplicial homology of the 2-sphere is not (Z, 0, Z)";
  }
  auto expect = [&](const Complex& C, int deg, int w, long betti, const char* what) {
    if (!ok) return;
    TruncatedHomology t = truncated_homology(C, deg, w, Ring::z());
    if (t.betti != betti || !t.torsion.empty()) {
      ok = false;
      detail = std::string(what) + ": betti " + std::to_string(t.betti) + " expected " +
               std::to_string(betti);
    }
  };
  expect(X, 0, 0, 4, "sphere degree 0 weight 0");
  expect(X, 0, 2, 1, "sphere degree 0 weight 2");
  expect(X, 0, 5, 1, "sphere degree 0 weight 5");
  Complex T = Complex::standard_simplex(2);
  expect(T, 0, 4, 1, "triangle degree 0 weight 4");
  expect(T, 0, 5, 1, "triangle degree 0 weight 5");
  report(8, "homology sanity: simplicial (Z, 0, Z) and truncated degree-0 betti values", ok, t0,
         detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all 8 criteria passed" << std::endl;
  return 0;
}
