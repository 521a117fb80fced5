#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "loopchains/constloops.hpp"
#include "loopchains/homology.hpp"

namespace loopchains {

/// Parallelism cap: LOOPCHAINS_THREADS, else hardware concurrency.
inline unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LOOPCHAINS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) return static_cast<unsigned>(v);
  }
  return hw;
}

/// Run f(i) for i in [0, n) across up to thread_cap() threads.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  unsigned nt = std::min<std::size_t>(thread_cap(), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  for (auto& t : pool) t.join();
}

struct VerifyResult {
  std::string suite;
  bool pass = true;
  std::string detail;  ///< first failing generator and both sides, if any

  void fail(const std::string& d) {
    if (pass) detail = d;
    pass = false;
  }
};

namespace detail {

/// Thread-safe failure collector keeping only the first failure by index.
struct FirstFailure {
  std::mutex mu;
  std::size_t at = SIZE_MAX;
  std::string detail;

  void report(std::size_t i, const std::string& d) {
    std::lock_guard<std::mutex> lock(mu);
    if (i < at) {
      at = i;
      detail = d;
    }
  }
  bool failed() const { return at != SIZE_MAX; }
};

inline std::vector<PathWord> hopf_test_words(const Complex& X, int max_bead_dim, int weight_cap) {
  std::vector<Bead> beads;
  for (int d = 1; d <= std::min(max_bead_dim, X.max_dim()); ++d)
    for (const Simplex& s : X.simplices(d)) {
      beads.push_back(Bead(s));
      if (d == 1) beads.push_back(Bead(s, true));
    }
  std::vector<PathWord> words;
  for (const Bead& b : beads) words.push_back(PathWord::single(b));
  for (const Bead& a : beads)
    for (const Bead& b : beads) {
      if (a.t() != b.s() || a.cancels(b)) continue;
      if (a.weight() + b.weight() > weight_cap) continue;
      words.push_back(PathWord::of({a, b}));
    }
  return words;
}

}  // namespace detail

/// d² = 0 on all words with ≤ 2 beads over X (dims ≤ max_dim beads).
inline VerifyResult verify_d2(const Complex& X, int max_dim) {
  VerifyResult r{"d2"};
  std::vector<PathWord> words = detail::hopf_test_words(X, max_dim, 8);
  detail::FirstFailure ff;
  parallel_for(words.size(), [&](std::size_t i) {
    PathSum dd = word_differential(word_differential(words[i]));
    if (!dd.empty()) ff.report(i, "d²(" + words[i].key() + ") = " + dd.str());
  });
  if (ff.failed()) r.fail(ff.detail);
  return r;
}

/// D² = 0 and weight monotonicity on all necklaces of weight ≤ w over X,
/// plus D^ad² = D^ad-op² = 0 on heads with identity tails.
inline VerifyResult verify_D2(const Complex& X, int weight) {
  VerifyResult r{"D2"};
  std::vector<Necklace> basis;
  for (int deg = 0; deg <= weight; ++deg) {
    std::vector<Necklace> b = weight_basis(X, deg, weight);
    basis.insert(basis.end(), b.begin(), b.end());
  }
  detail::FirstFailure ff;
  parallel_for(basis.size(), [&](std::size_t i) {
    const Necklace& n = basis[i];
    NecklaceSum d = necklace_D(n);
    for (const auto& [m, c] : d.terms())
      if (m.weight() > n.weight())
        ff.report(i, "weight raised: D(" + n.key() + ") contains " + m.key());
    NecklaceSum dd = necklace_D(d);
    if (!dd.empty()) ff.report(i, "D²(" + n.key() + ") = " + dd.str());
  });
  if (ff.failed()) r.fail(ff.detail);

  for (const Simplex& s : X.all_simplices()) {
    AdSum e;
    e.add_int(iota(s), 1);
    if (!D_ad(D_ad(e)).empty()) r.fail("D^ad²(" + s.key() + "⊗id) ≠ 0");
    if (!D_ad_op(D_ad_op(e)).empty()) r.fail("D^ad-op²(" + s.key() + "⊗id) ≠ 0");
  }
  return r;
}

/// ρ∂ = Dρ on every simplex of X with dim ≤ max_dim.
inline VerifyResult verify_chainmap_rho(const Complex& X, int max_dim) {
  VerifyResult r{"chainmap-rho"};
  std::vector<Simplex> all;
  for (const Simplex& s : X.all_simplices())
    if (s.dim() <= max_dim) all.push_back(s);
  detail::FirstFailure ff;
  parallel_for(all.size(), [&](std::size_t i) {
    const Simplex& s = all[i];
    NecklaceSum lhs = rho(X, boundary(s));
    NecklaceSum rhs = necklace_D(rho_simplex(X, s));
    if (lhs != rhs)
      ff.report(i, "ρ∂ ≠ Dρ at " + s.key() + ": ρ∂ = " + lhs.str() + " | Dρ = " + rhs.str());
  });
  if (ff.failed()) r.fail(ff.detail);
  return r;
}

/// χ_direct = χ_composed, χ∂ = Dχ, and χ = ρ in dims ≤ 1, over X.
inline VerifyResult verify_chainmap_chi(const Complex& X, int max_dim) {
  VerifyResult r{"chainmap-chi"};
  std::vector<Simplex> all;
  for (const Simplex& s : X.all_simplices())
    if (s.dim() <= max_dim) all.push_back(s);
  detail::FirstFailure ff;
  parallel_for(all.size(), [&](std::size_t i) {
    const Simplex& s = all[i];
    NecklaceSum direct = chi_direct(X, s);
    NecklaceSum composed = chi_composed(X, s);
    if (direct != composed) {
      ff.report(i, "χ_direct ≠ ψ∘T∘ι at " + s.key() + ": " + direct.str() + " | " + composed.str());
      return;
    }
    NecklaceSum lhs = chi(X, boundary(s));
    NecklaceSum rhs = necklace_D(composed);
    if (lhs != rhs) {
      ff.report(i, "χ∂ ≠ Dχ at " + s.key() + ": χ∂ = " + lhs.str() + " | Dχ = " + rhs.str());
      return;
    }
    if (s.dim() <= 1 && composed != rho_simplex(X, s))
      ff.report(i, "χ ≠ ρ at " + s.key() + ": χ = " + composed.str() + " | ρ = " + rho_simplex(X, s).str());
  });
  if (ff.failed()) r.fail(ff.detail);
  return r;
}

/// Coassociativity, two-sided counit, bimonoid law, Eq. (18) homotopy
/// identity, and Eq. (19) derivation identity.
inline VerifyResult verify_hopf(const Complex& X, int max_dim) {
  VerifyResult r{"hopf"};
  std::vector<PathWord> words = detail::hopf_test_words(X, max_dim, 5);

  auto triple_key = [](const PathWord& a, const PathWord& b, const PathWord& c) {
    return a.key() + "⊗" + b.key() + "⊗" + c.key();
  };
  for (const PathWord& w : words) {
    std::map<std::string, Coefficient> lhs, rhs;
    for (const auto& [p, c] : nabla0(w).terms()) {
      for (const auto& [q, c2] : nabla0(p.left).terms()) {
        auto& e = lhs[triple_key(q.left, q.right, p.right)];
        e = e + c * c2;
      }
      for (const auto& [q, c2] : nabla0(p.right).terms()) {
        auto& e = rhs[triple_key(p.left, q.left, q.right)];
        e = e + c * c2;
      }
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs != rhs) {
      r.fail("coassociativity fails at " + w.key());
      return r;
    }
    PathSum right_counit, left_counit, self;
    self.add_int(w, 1);
    for (const auto& [p, c] : nabla0(w).terms()) {
      if (counit(p.right)) right_counit.add_term(p.left, c);
      if (counit(p.left)) left_counit.add_term(p.right, c);
    }
    if (right_counit != self || left_counit != self) {
      r.fail("counit fails at " + w.key());
      return r;
    }
  }

  for (const PathWord& a : words)
    for (const PathWord& b : words) {
      if (a.t() != b.s() || a.weight() + b.weight() > 6) continue;
      if (nabla0(concat_mu(a, b)) != tensor_mu(nabla0(a), nabla0(b))) {
        r.fail("bimonoid law fails at " + a.key() + " · " + b.key());
        return r;
      }
      TensorWordSum lhs19 = nabla1(concat_mu(a, b));
      int sg = (a.degree() % 2 == 0) ? 1 : -1;
      TensorWordSum rhs19 = tensor_mu(nabla0_op(a), nabla1(b)).scaled(sg) + tensor_mu(nabla1(a), nabla0(b));
      if (lhs19 != rhs19) {
        r.fail("Eq. (19) fails at " + a.key() + " · " + b.key() + ": " + lhs19.str() + " | " + rhs19.str());
        return r;
      }
    }

  for (const PathWord& w : words) {
    TensorWordSum lhs = tensor_differential(nabla1(w));
    for (const auto& [ww, c] : word_differential(w).terms()) lhs.add(nabla1(ww).scaled(c));
    TensorWordSum rhs = nabla0_op(w) - nabla0(w);
    if (lhs != rhs) {
      r.fail("Eq. (18) fails at " + w.key() + ": " + lhs.str() + " | " + rhs.str());
      return r;
    }
  }
  return r;
}

/// Both antipode convolution equations, the anti-homomorphism law, and the
/// S chain map.
inline VerifyResult verify_antipode(const Complex& X, int max_dim) {
  VerifyResult r{"antipode"};
  std::vector<PathWord> words = detail::hopf_test_words(X, max_dim, 5);
  for (const PathWord& w : words) {
    PathSum eq1, eq2, expect1, expect2;
    if (counit(w)) {
      expect1.add_int(PathWord::identity(w.s()), 1);
      expect2.add_int(PathWord::identity(w.t()), 1);
    }
    for (const auto& [p, c] : nabla0(w).terms()) {
      for (const auto& [sw, sc] : antipode(p.right).terms()) eq1.add_term(concat_mu(p.left, sw), c * sc);
      for (const auto& [sw, sc] : antipode(p.left).terms()) eq2.add_term(concat_mu(sw, p.right), c * sc);
    }
    if (eq1 != expect1) {
      r.fail("μ(id⊗S)∇₀ ≠ εη at " + w.key() + ": " + eq1.str());
      return r;
    }
    if (eq2 != expect2) {
      r.fail("μ(S⊗id)∇₀ ≠ εη at " + w.key() + ": " + eq2.str());
      return r;
    }
    PathSum lhs = antipode(word_differential(w));
    PathSum rhs = word_differential(antipode(w));
    if (lhs != rhs) {
      r.fail("S not a chain map at " + w.key() + ": Sd = " + lhs.str() + " | dS = " + rhs.str());
      return r;
    }
  }
  for (const PathWord& a : words)
    for (const PathWord& b : words) {
      if (a.t() != b.s() || a.weight() + b.weight() > 6) continue;
      PathSum lhs = antipode(concat_mu(a, b));
      PathSum rhs;
      int sg = ((a.degree() * b.degree()) % 2 == 0) ? 1 : -1;
      for (const auto& [sb, cb] : antipode(b).terms())
        for (const auto& [sa, ca] : antipode(a).terms())
          rhs.add_term(concat_mu(sb, sa), cb * ca * Coefficient::integer(sg));
      if (lhs != rhs) {
        r.fail("S∘μ ≠ μ(S⊗S)τ at " + a.key() + " · " + b.key());
        return r;
      }
    }
  return r;
}

/// Theorem 3 homotopy for standard simplices up to max_k, verified by
/// substitution: D h(Δᵏ) + h(∂Δᵏ) = χ(Δᵏ) − ρ(Δᵏ).
inline VerifyResult verify_homotopy(int max_k) {
  VerifyResult r{"homotopy"};
  std::vector<NecklaceSum> h;
  try {
    h = synthesize_homotopy(max_k);
  } catch (const std::exception& e) {
    r.fail(e.what());
    return r;
  }
  if (!h[0].empty() || (max_k >= 1 && !h[1].empty())) {
    r.fail("h(Δ⁰) or h(Δ¹) not zero");
    return r;
  }
  for (int k = 2; k <= max_k; ++k) {
    Complex X = Complex::standard_simplex(k);
    std::vector<int> vs(k + 1);
    for (int i = 0; i <= k; ++i) vs[i] = i;
    Simplex top(vs);
    NecklaceSum lhs = necklace_D(h[k]);
    for (int j = 0; j <= k; ++j) {
      std::vector<int> vmap;
      for (int i = 0; i < k; ++i) vmap.push_back(i < j ? i : i + 1);
      lhs = lhs + relabel(h[k - 1], vmap).scaled((j % 2 == 0) ? 1 : -1);
    }
    NecklaceSum rhs = chi_composed(X, top) - rho_simplex(X, top);
    if (lhs != rhs) {
      r.fail("Dh + h∂ ≠ χ − ρ at k=" + std::to_string(k) + ": " + lhs.str() + " | " + rhs.str());
      return r;
    }
  }
  return r;
}

/// θ_π chain map: θ_π∘D = D_coCH∘θ_π on every necklace of weight ≤ w.
inline VerifyResult verify_theta(const QuotientData& q, int weight) {
  VerifyResult r{"theta"};
  std::vector<Necklace> basis;
  for (int deg = 0; deg <= weight; ++deg) {
    std::vector<Necklace> b = weight_basis(q.X, deg, weight);
    basis.insert(basis.end(), b.begin(), b.end());
  }
  detail::FirstFailure ff;
  parallel_for(basis.size(), [&](std::size_t i) {
    NecklaceSum n;
    n.add_int(basis[i], 1);
    CoHochschildSum lhs = theta_pi(necklace_D(n), q);
    CoHochschildSum rhs = cohochschild_D(theta_pi(n, q), q);
    if (lhs != rhs)
      ff.report(i, "θ_π not a chain map at " + basis[i].key() + ": θD = " + lhs.str() +
                       " | Dθ = " + rhs.str());
  });
  if (ff.failed()) r.fail(ff.detail);
  return r;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"chainmap-rho", "chainmap-chi", "d2", "D2",
                                                 "hopf", "antipode", "homotopy", "theta"};
  return names;
}

/// Dispatch a named suite over X (and optional collapse data for theta).
inline VerifyResult run_suite(const std::string& name, const Complex& X, int max_dim, int weight,
                              const std::optional<QuotientData>& q = std::nullopt) {
  if (name == "chainmap-rho") return verify_chainmap_rho(X, max_dim);
  if (name == "chainmap-chi") return verify_chainmap_chi(X, max_dim);
  if (name == "d2") return verify_d2(X, max_dim);
  if (name == "D2") return verify_D2(X, weight);
  if (name == "hopf") return verify_hopf(X, max_dim);
  if (name == "antipode") return verify_antipode(X, max_dim);
  if (name == "homotopy") return verify_homotopy(std::min(max_dim, 3));
  if (name == "theta") {
    if (!q) {
      VerifyResult r{"theta"};
      r.fail("theta suite needs collapse data (a \"collapse\" block in the input file)");
      return r;
    }
    return verify_theta(*q, weight);
  }
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace loopchains
