#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "loopchains/hopf.hpp"

namespace loopchains {

/// Generator of the necklace complex: a reduced path word plus a marked
/// simplex closing the cycle, (σ₁|…|σ_p)σ_{p+1} with t(marked) = s(word)
/// and t(word) = s(marked). An identity word forces a marked vertex,
/// printed (id_a)[a]. The word never reduces against the marked bead.
struct Necklace {
  PathWord word;
  Simplex marked;
  std::string key_;

  Necklace(PathWord w, Simplex m) : word(std::move(w)), marked(std::move(m)) {
    if (marked.t() != word.s() || word.t() != marked.s())
      throw std::invalid_argument("Necklace: endpoints do not close up: " + word.key() + marked.key());
    if (word.is_identity() && marked.dim() != 0)
      throw std::invalid_argument("Necklace: identity word needs a marked vertex");
    key_ = word.key() + marked.key();
  }

  static Necklace at_vertex(int v) { return Necklace(PathWord::identity(v), Simplex::vertex(v)); }

  int degree() const { return word.degree() + marked.dim(); }
  int weight() const { return word.weight() + marked.dim(); }

  const std::string& key() const { return key_; }
  bool operator<(const Necklace& o) const { return key_ < o.key_; }
  bool operator==(const Necklace& o) const { return key_ == o.key_; }
  bool operator!=(const Necklace& o) const { return !(*this == o); }
};

using NecklaceSum = FormalSum<Necklace>;

/// The differential D = d□id + id□∂̃ + δ of Eq. (10). With w the word,
/// c = [c₀..c_k] the marked bead, g = deg(w):
///  - d on the word, marked bead unchanged;
///  - (−1)^g (w)(∂̃c);
///  - δ_L: for 1 ≤ j ≤ k, (−1)^g (w|[c₀..c_j])[c_j..c_k];
///  - δ_R: for 0 ≤ j ≤ k−1, (−1)^{j+1+g+(k−j−1)(g+j)} ([c_j..c_k]|w)[c₀..c_j]
///    (the last factor is the Koszul sign of rotating the shifted right
///    Sweedler factor past the rest of the necklace).
/// Appended/prepended beads reduce against the word as usual.
inline NecklaceSum necklace_D(const Necklace& n) {
  NecklaceSum out;
  const int g = n.word.degree();
  const int gs = (g % 2 == 0) ? 1 : -1;
  const int k = n.marked.dim();

  for (const auto& [w, c] : word_differential(n.word).terms()) out.add_term(Necklace(w, n.marked), c);

  for (int j = 1; j < k; ++j)
    out.add_int(Necklace(n.word, n.marked.face(j)), gs * ((j % 2 == 0) ? 1 : -1));

  for (int j = 1; j <= k; ++j) {
    std::vector<Bead> raw = n.word.beads();
    raw.push_back(Bead(n.marked.range(0, j)));
    out.add_int(Necklace(PathWord::of(raw, n.word.s()), n.marked.range(j, k)), gs);
  }

  for (int j = 0; j < k; ++j) {
    std::vector<Bead> raw{Bead(n.marked.range(j, k))};
    raw.insert(raw.end(), n.word.beads().begin(), n.word.beads().end());
    int exp = j + 1 + g + (k - j - 1) * (g + j);
    out.add_int(Necklace(PathWord::of(raw, n.marked.verts()[j]), n.marked.range(0, j)),
                (exp % 2 == 0) ? 1 : -1);
  }
  return out;
}

inline NecklaceSum necklace_D(const NecklaceSum& x) {
  return apply_linear<Necklace>(x, [](const Necklace& n) { return necklace_D(n); });
}

/// Exhaustive, canonically ordered basis of necklaces over X with the given
/// degree and weight ≤ w.
inline std::vector<Necklace> weight_basis(const Complex& X, int degree, int max_weight) {
  std::vector<Necklace> out;
  if (degree < 0) return out;

  // Beads available from each source vertex.
  std::map<int, std::vector<Bead>> from;
  for (int d = 1; d <= X.max_dim(); ++d)
    for (const Simplex& s : X.simplices(d)) {
      from[s.s()].push_back(Bead(s));
      if (d == 1) from[s.t()].push_back(Bead(s, true));
    }

  for (const Simplex& marked : X.all_simplices()) {
    int m = marked.dim();
    if (m > degree || m > max_weight) continue;
    int want_deg = degree - m, budget = max_weight - m;
    // words from t(marked) to s(marked)
    std::vector<Bead> cur;
    std::function<void(int, int, int)> dfs = [&](int at, int deg, int wt) {
      if (at == marked.s() && deg == want_deg) {
        if (cur.empty()) {
          if (m == 0) out.push_back(Necklace::at_vertex(marked.s()));
        } else {
          out.push_back(Necklace(PathWord::of(cur), marked));
        }
      }
      auto it = from.find(at);
      if (it == from.end()) return;
      for (const Bead& b : it->second) {
        if (wt + b.weight() > budget || deg + b.degree() > want_deg) continue;
        if (!cur.empty() && cur.back().cancels(b)) continue;  // keep words reduced
        cur.push_back(b);
        dfs(b.t(), deg + b.degree(), wt + b.weight());
        cur.pop_back();
      }
    };
    dfs(marked.t(), 0, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Generator σ₀ ⊗ (σ₁|…|σ_p) of the auxiliary complexes 𝕃^ad / 𝕃^ad-op:
/// a head simplex and a closed tail word, t(head) = s(tail) = t(tail).
struct AdElement {
  Simplex head;
  PathWord tail;
  std::string key_;

  AdElement(Simplex h, PathWord t) : head(std::move(h)), tail(std::move(t)) {
    if (head.t() != tail.s() || tail.s() != tail.t())
      throw std::invalid_argument("AdElement: endpoint condition violated: " + head.key() + "⊗" + tail.key());
    key_ = head.key() + "⊗" + tail.key();
  }

  int degree() const { return head.dim() + tail.degree(); }
  const std::string& key() const { return key_; }
  bool operator<(const AdElement& o) const { return key_ < o.key_; }
  bool operator==(const AdElement& o) const { return key_ == o.key_; }
};

using AdSum = FormalSum<AdElement>;

/// Shared part of D^ad and D^ad-op. For e = σ⊗α with σ = [v₀..v_k]:
///  - ∂̃σ ⊗ α;
///  - (−1)^{|σ|} σ ⊗ dα;
///  - δ_L: ∂₀σ ⊗ α (only for k ≥ 1);
///  - δ_R: for each AW cut σ = σ′·σ″ with dim σ″ ≥ 1 and each ∇₀ Sweedler
///    term x⊗y of the bead σ″:
///      plain: (−1)^{|σ′|+1+|y||α|}          σ′ ⊗ (x|α|S(y))
///      op:    (−1)^{|σ′|+1+|x||α|+|x||y|}   σ′ ⊗ (y|α|S(x))
/// The +1 in the δ_R exponent is pinned by D^ad∘ι = ι∘∂ (the paper prints
/// this sign only up to ±).
inline AdSum D_ad_impl(const AdElement& e, bool op) {
  AdSum out;
  const int k = e.head.dim();

  for (const auto& [f, c] : reduced_boundary(e.head).terms()) out.add_term(AdElement(f, e.tail), c);

  int hsign = (k % 2 == 0) ? 1 : -1;
  for (const auto& [w, c] : word_differential(e.tail).terms())
    out.add_term(AdElement(e.head, w), c * Coefficient::integer(hsign));

  if (k >= 1) out.add_int(AdElement(e.head.face(0), e.tail), 1);

  int adeg = e.tail.degree();
  for (int j = 0; j < k; ++j) {
    Simplex left = e.head.range(0, j);
    Bead right(e.head.range(j, k));
    for (const auto& [p, c] : nabla0_bead(right).terms()) {
      const PathWord& x = p.left;
      const PathWord& y = p.right;
      int exp = j + 1 + (op ? x.degree() : y.degree()) * adeg;
      if (op) exp += x.degree() * y.degree();
      const PathWord& first = op ? y : x;
      const PathWord& second = op ? x : y;
      for (const auto& [sw, sc] : antipode(second).terms()) {
        PathWord tail = concat_mu(concat_mu(first, e.tail), sw);
        out.add_term(AdElement(left, tail),
                     c * sc * Coefficient::integer((exp % 2 == 0) ? 1 : -1));
      }
    }
  }
  return out;
}

inline AdSum D_ad(const AdElement& e) { return D_ad_impl(e, false); }
inline AdSum D_ad_op(const AdElement& e) { return D_ad_impl(e, true); }

inline AdSum D_ad(const AdSum& x) {
  return apply_linear<AdElement>(x, [](const AdElement& e) { return D_ad(e); });
}
inline AdSum D_ad_op(const AdSum& x) {
  return apply_linear<AdElement>(x, [](const AdElement& e) { return D_ad_op(e); });
}

}  // namespace loopchains
