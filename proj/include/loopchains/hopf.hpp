#pragma once

#include <mutex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopchains/pathcat.hpp"

namespace loopchains {

/// Basis element of ℙ ⊗ ℙ: an ordered pair of path words with equal
/// sources and equal targets.
struct WordPair {
  PathWord left, right;
  std::string key_;

  WordPair(PathWord l, PathWord r) : left(std::move(l)), right(std::move(r)) {
    if (left.s() != right.s() || left.t() != right.t())
      throw std::invalid_argument("WordPair: endpoint mismatch " + left.key() + " vs " + right.key());
    key_ = left.key() + "⊗" + right.key();
  }
  const std::string& key() const { return key_; }
  bool operator<(const WordPair& o) const { return key_ < o.key_; }
  bool operator==(const WordPair& o) const { return left == o.left && right == o.right; }
};

using TensorWordSum = FormalSum<WordPair>;

/// Multiplication in ℙ ⊗ ℙ with the Koszul sign:
/// (x⊗y)·(x'⊗y') = (−1)^{|y||x'|} (xx' ⊗ yy').
inline TensorWordSum tensor_mu(const TensorWordSum& a, const TensorWordSum& b) {
  TensorWordSum out;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      int sign = ((pa.right.degree() * pb.left.degree()) % 2 == 0) ? 1 : -1;
      Coefficient c = ca * cb * Coefficient::integer(sign);
      out.add_term(WordPair(concat_mu(pa.left, pb.left), concat_mu(pa.right, pb.right)), c);
    }
  return out;
}

/// Koszul-signed swap τ(x⊗y) = (−1)^{|x||y|} y⊗x, extended linearly.
inline TensorWordSum tensor_swap(const TensorWordSum& a) {
  TensorWordSum out;
  for (const auto& [p, c] : a.terms()) {
    int sign = ((p.left.degree() * p.right.degree()) % 2 == 0) ? 1 : -1;
    out.add_term(WordPair(p.right, p.left), c * Coefficient::integer(sign));
  }
  return out;
}

/// ∇₀ on a single bead. For a simplex bead [0..k] (positions relative to
/// the bead): sum over interior position subsets i = (i₁<…<i_l) of
///   (−1)^{ε(i)} ([0..i₁]|…|[i_l..k]) ⊗ ([0,i₁,…,i_l,k]),
/// ε(i) = Σ_{j=1}^{l+1} (j−1)(i_j − i_{j−1}) + l(l+1)/2 with i₀=0,
/// i_{l+1}=k. The l(l+1)/2 summand is forced by the chain-map identity
/// (d⊗id + id⊗d)∘∇₀ = ∇₀∘d under the standard Koszul conventions; with it
/// the full-interior (all-edges) term always carries sign +1.
/// Edges and inverse edges are grouplike.
inline TensorWordSum nabla0_bead(const Bead& b) {
  TensorWordSum out;
  PathWord self = PathWord::single(b);
  if (b.inverse || b.simplex.dim() == 1) {
    out.add_int(WordPair(self, self), 1);
    return out;
  }
  int k = b.simplex.dim();
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<int> pos{0};
    for (int j = 1; j < k; ++j)
      if (mask & (1u << (j - 1))) pos.push_back(j);
    pos.push_back(k);
    int l = static_cast<int>(pos.size()) - 2;
    int eps = l * (l + 1) / 2;
    for (std::size_t j = 1; j < pos.size(); ++j) eps += static_cast<int>(j - 1) * (pos[j] - pos[j - 1]);
    std::vector<Bead> chop;
    for (std::size_t j = 0; j + 1 < pos.size(); ++j) chop.push_back(Bead(b.simplex.range(pos[j], pos[j + 1])));
    out.add_int(WordPair(PathWord::of(chop), PathWord::single(Bead(b.simplex.positions(pos)))),
                (eps % 2 == 0) ? 1 : -1);
  }
  return out;
}

/// ∇₀ on words: monoid map, i.e. the tensor_mu-product of the bead values.
inline TensorWordSum nabla0(const PathWord& w) {
  TensorWordSum out;
  if (w.is_identity()) {
    out.add_int(WordPair(w, w), 1);
    return out;
  }
  bool first = true;
  for (const Bead& b : w.beads()) {
    TensorWordSum f = nabla0_bead(b);
    out = first ? f : tensor_mu(out, f);
    first = false;
  }
  return out;
}

inline TensorWordSum nabla0(const PathSum& x) {
  return apply_linear<WordPair>(x, [](const PathWord& w) { return nabla0(w); });
}

inline TensorWordSum nabla0_op(const PathWord& w) { return tensor_swap(nabla0(w)); }

/// Counit: 1 on words of degree-0 beads (and identities), 0 otherwise.
inline int counit(const PathWord& w) {
  for (const Bead& b : w.beads())
    if (b.degree() != 0) return 0;
  return 1;
}

TensorWordSum nabla0_bead_interior(const Bead& b);
PathSum antipode(const PathWord& w);

/// Antipode on a single bead, memoized per simplex. On an edge: the inverse
/// edge (and vice versa). On a k-simplex bead σ = [v0..vk], solving
/// μ(id⊗S)∇₀(σ) = 0 for S(σ) against the full-interior term (whose sign
/// is +1, see nabla0_bead) gives the recursion
///   S(σ) = − desc · [ μ(id⊗S)(∇̃₀(σ)) + (σ|[vk,v0]) ]
/// where desc = ([vk,v_{k−1}]|…|[v1,v0]) and ∇̃₀ is ∇₀ with its two extreme
/// terms (empty and full interior subsets) removed.
inline PathSum antipode_bead(const Bead& b) {
  PathSum out;
  if (b.inverse) {
    out.add_int(PathWord::single(Bead(b.simplex)), 1);
    return out;
  }
  if (b.simplex.dim() == 1) {
    out.add_int(PathWord::single(Bead(b.simplex, true)), 1);
    return out;
  }

  static std::mutex mu;
  static std::map<Simplex, PathSum> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(b.simplex);
    if (it != cache.end()) return it->second;
  }

  int k = b.simplex.dim();
  const auto& v = b.simplex.verts();
  const int pref = -1;

  std::vector<Bead> desc;
  for (int j = k; j >= 1; --j) desc.push_back(Bead::backward(v[j - 1], v[j]));
  PathWord desc_word = PathWord::of(desc);

  // Closing term desc · (σ | [vk, v0]-inverse).
  {
    std::vector<Bead> raw = desc;
    raw.push_back(b);
    raw.push_back(Bead::backward(v[0], v[k]));
    out.add_int(PathWord::of(raw), pref);
  }

  // desc · μ(id⊗S)(∇̃₀(σ)): the interior terms of ∇₀, right factor under S.
  for (const auto& [p, c] : nabla0_bead_interior(b).terms()) {
    for (const auto& [ws, cs] : antipode(p.right).terms()) {
      PathWord word = concat_mu(concat_mu(desc_word, p.left), ws);
      out.add_term(word, c * cs * Coefficient::integer(pref));
    }
  }

  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(b.simplex, out);
  }
  return out;
}

/// ∇₀ on a simplex bead minus its two extreme terms.
inline TensorWordSum nabla0_bead_interior(const Bead& b) {
  TensorWordSum out;
  if (b.inverse || b.simplex.dim() < 2) return out;
  int k = b.simplex.dim();
  PathWord self = PathWord::single(b);
  out = nabla0_bead(b);
  // remove the i = ∅ term (+ self ⊗ [v0,vk]) and the full-subset term
  // (+ (edge chain) ⊗ self; its sign is +1 with the corrected ε).
  out.add_int(WordPair(self, PathWord::single(Bead(b.simplex.positions({0, k})))), -1);
  std::vector<Bead> edges;
  for (int j = 0; j < k; ++j) edges.push_back(Bead(b.simplex.range(j, j + 1)));
  out.add_int(WordPair(PathWord::of(edges), self), -1);
  return out;
}

/// Antipode on words: reverse the word, apply S to each bead, with the
/// Koszul sign of the full graded reversal.
inline PathSum antipode(const PathWord& w) {
  PathSum out;
  if (w.is_identity()) {
    out.add_int(w, 1);
    return out;
  }
  const auto& beads = w.beads();
  int rev_exp = 0;
  for (std::size_t i = 0; i < beads.size(); ++i)
    for (std::size_t j = i + 1; j < beads.size(); ++j) rev_exp += beads[i].degree() * beads[j].degree();
  Coefficient acc_sign = Coefficient::integer((rev_exp % 2 == 0) ? 1 : -1);

  PathSum acc;
  acc.add_term(PathWord::identity(beads.back().t()), acc_sign);
  for (auto it = beads.rbegin(); it != beads.rend(); ++it) acc = concat_mu(acc, antipode_bead(*it));
  return acc;
}

inline PathSum antipode(const PathSum& x) {
  return apply_linear<PathWord>(x, [](const PathWord& w) { return antipode(w); });
}

/// ∇₁ on a single simplex bead [0..k] (positions relative to the bead):
///   Σ_{l=1}^{k−1} Σ_{(i,j)∈𝒯(k,l)} (−1)^{ε(i,j)}
///     (B₀ | [j₁..j₂] | … | [j_n..k]) ⊗ ([0..i₁] | … | [i_{m−1}..i_m] | B_m)
/// with 𝒯(k,l) = {0<i₁<…<i_m<l, l<j₁<…<j_n<k},
/// B₀ spanned by positions {0,i₁,…,i_m} ∪ [l..j₁] (j₁ := k when n = 0),
/// B_m spanned by [i_m..l] ∪ {j₁,…,j_n,k} (i_m := 0 when m = 0), and
/// ε(i,j) = Σ_r (r−1)(i_r−i_{r−1}) + Σ_s (s−1)(j_s−j_{s−1}) + (m+l)(n+k)
///        + m(m+1)/2 + n(n+1)/2
/// (chains read with i₀=0, i_{m+1}=l, j₀=l, j_{n+1}=k). The two triangular
/// summands mirror the l(l+1)/2 correction in ∇₀ and are forced by the
/// homotopy identity (d⊗id+id⊗d)∇₁ + ∇₁d = ∇₀^op − ∇₀.
/// Zero on edges and inverse edges.
inline TensorWordSum nabla1_bead(const Bead& b) {
  TensorWordSum out;
  if (b.inverse || b.simplex.dim() < 2) return out;
  int k = b.simplex.dim();
  for (int l = 1; l < k; ++l) {
    // subsets i ⊂ (0,l), j ⊂ (l,k)
    std::vector<int> ipool, jpool;
    for (int p = 1; p < l; ++p) ipool.push_back(p);
    for (int p = l + 1; p < k; ++p) jpool.push_back(p);
    for (unsigned imask = 0; imask < (1u << ipool.size()); ++imask) {
      std::vector<int> iv;
      for (std::size_t t = 0; t < ipool.size(); ++t)
        if (imask & (1u << t)) iv.push_back(ipool[t]);
      for (unsigned jmask = 0; jmask < (1u << jpool.size()); ++jmask) {
        std::vector<int> jv;
        for (std::size_t t = 0; t < jpool.size(); ++t)
          if (jmask & (1u << t)) jv.push_back(jpool[t]);
        int m = static_cast<int>(iv.size()), n = static_cast<int>(jv.size());

        int eps = (m + l) * (n + k) + m * (m + 1) / 2 + n * (n + 1) / 2;
        {
          int prev = 0;
          for (int r = 0; r < m; ++r) {
            eps += r * (iv[r] - prev);
            prev = iv[r];
          }
          eps += m * (l - prev);
        }
        {
          int prev = l;
          for (int s = 0; s < n; ++s) {
            eps += s * (jv[s] - prev);
            prev = jv[s];
          }
          eps += n * (k - prev);
        }

        // Left word: B0 on {0} ∪ i ∪ [l..j1], then consecutive j-runs.
        int j1 = n > 0 ? jv[0] : k;
        std::vector<int> b0{0};
        b0.insert(b0.end(), iv.begin(), iv.end());
        for (int p = l; p <= j1; ++p) b0.push_back(p);
        std::vector<Bead> lw{Bead(b.simplex.positions(b0))};
        for (int s = 0; s < n; ++s) {
          int hi = (s + 1 < n) ? jv[s + 1] : k;
          lw.push_back(Bead(b.simplex.range(jv[s], hi)));
        }

        // Right word: consecutive i-runs, then Bm on [i_m..l] ∪ j ∪ {k}.
        std::vector<Bead> rw;
        int prev_i = 0;
        for (int r = 0; r < m; ++r) {
          rw.push_back(Bead(b.simplex.range(prev_i, iv[r])));
          prev_i = iv[r];
        }
        std::vector<int> bm;
        for (int p = prev_i; p <= l; ++p) bm.push_back(p);
        bm.insert(bm.end(), jv.begin(), jv.end());
        bm.push_back(k);
        rw.push_back(Bead(b.simplex.positions(bm)));

        out.add_int(WordPair(PathWord::of(lw), PathWord::of(rw)), (eps % 2 == 0) ? 1 : -1);
      }
    }
  }
  return out;
}

/// ∇₁ on words: Σ_r (−1)^{deg σ₁+…+deg σ_{r−1}}
///   ∇₀^op(σ₁)⋯∇₀^op(σ_{r−1}) · ∇₁(σ_r) · ∇₀(σ_{r+1})⋯∇₀(σ_p),
/// products in ℙ⊗ℙ. Zero on identities.
inline TensorWordSum nabla1(const PathWord& w) {
  TensorWordSum out;
  if (w.is_identity()) return out;
  const auto& beads = w.beads();
  if (beads.size() == 1) return nabla1_bead(beads[0]);
  int prefix = 0;
  for (std::size_t r = 0; r < beads.size(); ++r) {
    TensorWordSum mid = nabla1_bead(beads[r]);
    if (!mid.empty()) {
      TensorWordSum acc;
      bool started = false;
      for (std::size_t s = 0; s < r; ++s) {
        TensorWordSum f = tensor_swap(nabla0_bead(beads[s]));
        acc = started ? tensor_mu(acc, f) : f;
        started = true;
      }
      acc = started ? tensor_mu(acc, mid) : mid;
      for (std::size_t s = r + 1; s < beads.size(); ++s) acc = tensor_mu(acc, nabla0_bead(beads[s]));
      out.add(acc.scaled((prefix % 2 == 0) ? 1 : -1));
    }
    prefix += beads[r].degree();
  }
  return out;
}

/// (d⊗id + id⊗d) on ℙ⊗ℙ with the Koszul sign on the second summand.
inline TensorWordSum tensor_differential(const TensorWordSum& a) {
  TensorWordSum out;
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [wl, cl] : word_differential(p.left).terms())
      out.add_term(WordPair(wl, p.right), c * cl);
    int sign = (p.left.degree() % 2 == 0) ? 1 : -1;
    for (const auto& [wr, cr] : word_differential(p.right).terms())
      out.add_term(WordPair(p.left, wr), c * cr * Coefficient::integer(sign));
  }
  return out;
}

}  // namespace loopchains
