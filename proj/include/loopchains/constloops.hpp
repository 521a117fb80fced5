#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopchains/matrix.hpp"
#include "loopchains/necklace.hpp"

namespace loopchains {

/// Index datum of the ρ formula: ((p₁,q₁),…,(p_ℓ,q_ℓ)) subject to
/// p₁ = 0, q_ℓ = k, p₁+q₁ < … < p_ℓ+q_ℓ, 0 = p₁ ≤ … ≤ p_ℓ ≤ q₁ ≤ … ≤ q_ℓ,
/// and p_{j+1} < q_j.
using IndexSequence = std::vector<std::pair<int, int>>;

/// Sign exponent ε(s) = ℓ + 1 + p_ℓ + q₁(q_ℓ+1) + Σ_{j≥2} p_j (q_j − q_{j−1}).
inline int index_sequence_sign(const IndexSequence& s) {
  int l = static_cast<int>(s.size());
  int eps = l + 1 + s.back().first + s.front().second * (s.back().second + 1);
  for (int j = 1; j < l; ++j) eps += s[j].first * (s[j].second - s[j - 1].second);
  return (eps % 2 == 0) ? 1 : -1;
}

/// Exhaustive enumeration of the index sequences for dimension k, in
/// lexicographic order of the flattened sequence, with signs.
inline std::vector<std::pair<IndexSequence, int>> enumerate_S(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_S: k must be >= 1");
  std::vector<std::pair<IndexSequence, int>> out;
  IndexSequence cur;
  std::function<void()> dfs = [&]() {
    if (!cur.empty() && cur.back().second == k) out.push_back({cur, index_sequence_sign(cur)});
    int q1 = cur.empty() ? 0 : cur.front().second;
    for (int p = cur.empty() ? 0 : cur.back().first; p <= (cur.empty() ? 0 : q1); ++p) {
      if (!cur.empty() && p >= cur.back().second) break;  // p_{j+1} < q_j
      for (int q = cur.empty() ? 1 : cur.back().second; q <= k; ++q) {
        if (p >= q) continue;
        if (!cur.empty() && p + q <= cur.back().first + cur.back().second) continue;
        cur.push_back({p, q});
        dfs();
        cur.pop_back();
      }
      if (cur.empty()) break;  // p₁ = 0 only
    }
  };
  dfs();
  return out;
}

/// ρ on a single simplex (Eq. (1)–(2)): for each index sequence, the word
/// alternates inverse edges [i_{q_j}, i_{p_j}] with merged beads on
/// positions p_j..p_{j+1} ∪ q_j..q_{j+1}, closing with [i_{q_ℓ}, i_{p_ℓ}];
/// the marked bead sits on positions p_ℓ..q₁.
inline NecklaceSum rho_simplex(const Complex& X, const Simplex& sigma) {
  if (!X.contains(sigma)) throw std::invalid_argument("rho_simplex: " + sigma.key() + " not in complex");
  NecklaceSum out;
  int k = sigma.dim();
  if (k == 0) {
    out.add_int(Necklace::at_vertex(sigma.s()), 1);
    return out;
  }
  const auto& v = sigma.verts();
  for (const auto& [s, sign] : enumerate_S(k)) {
    int l = static_cast<int>(s.size());
    std::vector<Bead> word;
    for (int j = 0; j < l; ++j) {
      word.push_back(Bead(Simplex({std::min(v[s[j].first], v[s[j].second]), std::max(v[s[j].first], v[s[j].second])}), true));
      if (j + 1 < l) {
        std::vector<int> pos;
        for (int p = s[j].first; p <= s[j + 1].first; ++p) pos.push_back(p);
        for (int q = s[j].second; q <= s[j + 1].second; ++q) pos.push_back(q);
        word.push_back(Bead(sigma.positions(pos)));
      }
    }
    std::vector<int> mpos;
    for (int p = s.back().first; p <= s.front().second; ++p) mpos.push_back(p);
    out.add_int(Necklace(PathWord::of(word), sigma.positions(mpos)), sign);
  }
  return out;
}

inline NecklaceSum rho(const Complex& X, const Chain& c) {
  return apply_linear<Necklace>(c, [&X](const Simplex& s) { return rho_simplex(X, s); });
}

/// ι(σ) = σ ⊗ id_{t(σ)}.
inline AdElement iota(const Simplex& sigma) { return AdElement(sigma, PathWord::identity(sigma.t())); }

/// T = id + T₀ : 𝕃^ad → 𝕃^ad-op. T₀(σ⊗α) sums over AW cuts σ = σ′·σ″ with
/// dim σ″ ≥ 2 and ∇₁ Sweedler terms u⊗v of the bead σ″:
///   (−1)^{|v||α|} σ′ ⊗ (u|α|S(v)).
inline AdSum T_map(const AdElement& e) {
  AdSum out;
  out.add_int(e, 1);
  int k = e.head.dim();
  int adeg = e.tail.degree();
  for (int j = 0; j <= k - 2; ++j) {
    Simplex left = e.head.range(0, j);
    Bead right(e.head.range(j, k));
    for (const auto& [p, c] : nabla1_bead(right).terms()) {
      int exp = p.right.degree() * adeg;
      for (const auto& [sv, sc] : antipode(p.right).terms()) {
        PathWord tail = concat_mu(concat_mu(p.left, e.tail), sv);
        out.add_term(AdElement(left, tail), c * sc * Coefficient::integer((exp % 2 == 0) ? 1 : -1));
      }
    }
  }
  return out;
}

inline AdSum T_map(const AdSum& x) {
  return apply_linear<AdElement>(x, [](const AdElement& e) { return T_map(e); });
}

/// ψ : 𝕃^ad-op → 𝕃. ψ(σ⊗α) = (α)σ for a vertex head; otherwise
///   Σ_{x⊗y ∈ ∇₀(σ)} (−1)^{|α||σ|+|x|} (α|S(x)) y.
inline NecklaceSum psi(const AdElement& e) {
  NecklaceSum out;
  int k = e.head.dim();
  if (k == 0) {
    out.add_int(Necklace(e.tail, e.head), 1);
    return out;
  }
  int adeg = e.tail.degree();
  for (const auto& [p, c] : nabla0_bead(Bead(e.head)).terms()) {
    int exp = adeg * k + p.left.degree();
    for (const auto& [sx, sc] : antipode(p.left).terms()) {
      PathWord word = concat_mu(e.tail, sx);
      out.add_term(Necklace(word, p.right.beads()[0].simplex),
                   c * sc * Coefficient::integer((exp % 2 == 0) ? 1 : -1));
    }
  }
  return out;
}

inline NecklaceSum psi(const AdSum& x) {
  return apply_linear<Necklace>(x, [](const AdElement& e) { return psi(e); });
}

/// χ as the composed pipeline ψ∘T∘ι — the reference implementation.
inline NecklaceSum chi_composed(const Complex& X, const Simplex& sigma) {
  if (!X.contains(sigma)) throw std::invalid_argument("chi: " + sigma.key() + " not in complex");
  AdSum t = T_map(iota(sigma));
  return psi(t);
}

/// χ by the direct three-term formula (Eq. (8)); vertex anchor (id_σ)σ.
/// The three families are the expansion of ψ∘T∘ι:
///   (1) Σ_{x⊗y ∈ ∇₀σ} (−1)^{|x|} (S(x)) y;
///   (2) Σ_{u⊗v ∈ ∇₁σ} (u|S(v)) [s(σ)];
///   (3) Σ over AW cuts σ′·σ″, dim σ′ ≥ 1, dim σ″ ≥ 2, u⊗v ∈ ∇₁σ″,
///       x⊗y ∈ ∇₀σ′: (−1)^{j(k−j)+|x|} (u|S(v)|S(x)) y,
/// where j = dim σ′.
inline NecklaceSum chi_direct(const Complex& X, const Simplex& sigma) {
  if (!X.contains(sigma)) throw std::invalid_argument("chi: " + sigma.key() + " not in complex");
  NecklaceSum out;
  int k = sigma.dim();
  if (k == 0) {
    out.add_int(Necklace::at_vertex(sigma.s()), 1);
    return out;
  }
  Bead whole(sigma);

  for (const auto& [p, c] : nabla0_bead(whole).terms())
    for (const auto& [sx, sc] : antipode(p.left).terms())
      out.add_term(Necklace(sx, p.right.beads()[0].simplex),
                   (p.left.degree() % 2 == 0) ? c * sc : -(c * sc));

  for (const auto& [p, c] : nabla1_bead(whole).terms())
    for (const auto& [sv, sc] : antipode(p.right).terms())
      out.add_term(Necklace(concat_mu(p.left, sv), Simplex::vertex(sigma.s())), c * sc);

  for (int j = 1; j <= k - 2; ++j) {
    Simplex head = sigma.range(0, j);
    Bead tailpart(sigma.range(j, k));
    for (const auto& [p1, c1] : nabla1_bead(tailpart).terms())
      for (const auto& [sv, sc1] : antipode(p1.right).terms())
        for (const auto& [p0, c0] : nabla0_bead(Bead(head)).terms()) {
          int exp = j * (k - j) + p0.left.degree();
          for (const auto& [sx, sc0] : antipode(p0.left).terms()) {
            PathWord word = concat_mu(concat_mu(p1.left, sv), sx);
            out.add_term(Necklace(word, p0.right.beads()[0].simplex),
                         c1 * sc1 * c0 * sc0 * Coefficient::integer((exp % 2 == 0) ? 1 : -1));
          }
        }
  }
  return out;
}

inline NecklaceSum chi(const Complex& X, const Chain& c) {
  return apply_linear<Necklace>(c, [&X](const Simplex& s) { return chi_composed(X, s); });
}

/// Apply an order-preserving vertex map to every simplex of a necklace sum.
inline NecklaceSum relabel(const NecklaceSum& x, const std::vector<int>& vmap) {
  auto map_simplex = [&](const Simplex& s) {
    std::vector<int> w;
    for (int v : s.verts()) w.push_back(vmap.at(v));
    return Simplex(std::move(w));
  };
  NecklaceSum out;
  for (const auto& [n, c] : x.terms()) {
    std::vector<Bead> beads;
    for (const Bead& b : n.word.beads()) beads.push_back(Bead(map_simplex(b.simplex), b.inverse));
    PathWord w = n.word.is_identity() ? PathWord::identity(vmap.at(n.word.s())) : PathWord::of(beads);
    out.add_term(Necklace(w, map_simplex(n.marked)), c);
  }
  return out;
}

namespace detail {

/// Local inverse moves: necklaces n of degree deg(m)+1 whose differential
/// can contain m. Used to grow the candidate set of the homotopy solver.
inline std::vector<Necklace> preimage_moves(const Necklace& m, const Complex& X, int wcap) {
  std::vector<Necklace> out;
  auto push = [&](const std::vector<Bead>& raw, const Simplex& marked, int at_vertex) {
    try {
      PathWord w = raw.empty() ? PathWord::identity(at_vertex) : PathWord::of(raw);
      Necklace n(w, marked);
      if (n.degree() == m.degree() + 1 && n.weight() <= wcap) out.push_back(n);
    } catch (const std::invalid_argument&) {
    }
  };
  const auto& beads = m.word.beads();
  const auto& verts = X.vertices();

  auto try_simplex = [&](const std::vector<int>& vs) -> std::optional<Simplex> {
    Simplex s(vs);
    if (X.contains(s)) return s;
    return std::nullopt;
  };

  // insert an interior vertex into a word bead / the marked bead
  for (std::size_t r = 0; r < beads.size(); ++r) {
    if (beads[r].inverse) continue;
    const auto& bv = beads[r].simplex.verts();
    for (int u : verts) {
      if (u <= bv.front() || u >= bv.back()) continue;
      if (std::binary_search(bv.begin(), bv.end(), u)) continue;
      std::vector<int> nv = bv;
      nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
      if (auto s = try_simplex(nv)) {
        std::vector<Bead> raw = beads;
        raw[r] = Bead(*s);
        push(raw, m.marked, -1);
      }
    }
  }
  if (m.marked.dim() >= 1) {
    const auto& mv = m.marked.verts();
    for (int u : verts) {
      if (u <= mv.front() || u >= mv.back()) continue;
      if (std::binary_search(mv.begin(), mv.end(), u)) continue;
      std::vector<int> nv = mv;
      nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
      if (auto s = try_simplex(nv)) push(beads, *s, m.word.s());
    }
  }

  // merge adjacent word beads (un-split)
  for (std::size_t r = 0; r + 1 < beads.size(); ++r) {
    if (beads[r].inverse || beads[r + 1].inverse) continue;
    std::vector<int> nv = beads[r].simplex.verts();
    const auto& w2 = beads[r + 1].simplex.verts();
    nv.insert(nv.end(), w2.begin() + 1, w2.end());
    if (auto s = try_simplex(nv)) {
      std::vector<Bead> raw;
      raw.insert(raw.end(), beads.begin(), beads.begin() + r);
      raw.push_back(Bead(*s));
      raw.insert(raw.end(), beads.begin() + r + 2, beads.end());
      push(raw, m.marked, -1);
    }
  }

  // merge last word bead into the marked bead (un-δ_L)
  if (!beads.empty() && !beads.back().inverse) {
    std::vector<int> nv = beads.back().simplex.verts();
    const auto& mv = m.marked.verts();
    nv.insert(nv.end(), mv.begin() + 1, mv.end());
    if (std::is_sorted(nv.begin(), nv.end()) && std::adjacent_find(nv.begin(), nv.end()) == nv.end())
      if (auto s = try_simplex(nv))
        push(std::vector<Bead>(beads.begin(), beads.end() - 1), *s, s->t());
  }
  // merge marked bead into first word bead (un-δ_R)
  if (!beads.empty() && !beads.front().inverse) {
    std::vector<int> nv = m.marked.verts();
    const auto& fv = beads.front().simplex.verts();
    nv.insert(nv.end(), fv.begin() + 1, fv.end());
    if (std::is_sorted(nv.begin(), nv.end()) && std::adjacent_find(nv.begin(), nv.end()) == nv.end())
      if (auto s = try_simplex(nv))
        push(std::vector<Bead>(beads.begin() + 1, beads.end()), *s, s->t());
  }

  // un-cancel: bead -> (inverse edge | enlarged bead) or (enlarged | inverse)
  for (std::size_t r = 0; r < beads.size(); ++r) {
    if (beads[r].inverse) continue;
    const auto& bv = beads[r].simplex.verts();
    for (int a : verts) {
      if (a < bv.front() && try_simplex({a, bv.front()})) {
        std::vector<int> nv = bv;
        nv.insert(nv.begin(), a);
        if (auto s = try_simplex(nv)) {
          std::vector<Bead> raw(beads.begin(), beads.begin() + r);
          raw.push_back(Bead(Simplex({a, bv.front()}), true));
          raw.push_back(Bead(*s));
          raw.insert(raw.end(), beads.begin() + r + 1, beads.end());
          push(raw, m.marked, -1);
        }
      }
      if (a > bv.back() && try_simplex({bv.back(), a})) {
        std::vector<int> nv = bv;
        nv.push_back(a);
        if (auto s = try_simplex(nv)) {
          std::vector<Bead> raw(beads.begin(), beads.begin() + r);
          raw.push_back(Bead(*s));
          raw.push_back(Bead(Simplex({bv.back(), a}), true));
          raw.insert(raw.end(), beads.begin() + r + 1, beads.end());
          push(raw, m.marked, -1);
        }
      }
    }
  }

  // un-cancel across the marked bead: extend marked front/back with an
  // inverse edge on the word side
  {
    const auto& mv = m.marked.verts();
    for (int a : verts) {
      if (a < mv.front() && try_simplex({a, mv.front()})) {
        std::vector<int> nv = mv;
        nv.insert(nv.begin(), a);
        if (auto s = try_simplex(nv)) {
          std::vector<Bead> raw = beads;
          raw.push_back(Bead(Simplex({a, mv.front()}), true));
          push(raw, *s, -1);
        }
      }
      if (a > mv.back() && try_simplex({mv.back(), a})) {
        std::vector<int> nv = mv;
        nv.push_back(a);
        if (auto s = try_simplex(nv)) {
          std::vector<Bead> raw{Bead(Simplex({mv.back(), a}), true)};
          raw.insert(raw.end(), beads.begin(), beads.end());
          push(raw, *s, -1);
        }
      }
    }
  }

  // cascade un-cancellations: insert a 2-simplex flanked by inverse edges
  for (std::size_t pos = 0; pos <= beads.size(); ++pos) {
    int at = (pos == 0) ? m.word.s() : beads[pos - 1].t();
    for (const Simplex& tri : X.simplices(2)) {
      const auto& tv = tri.verts();
      std::vector<std::vector<Bead>> inserts;
      if (at == tv[1])
        inserts.push_back({Bead(Simplex({tv[0], tv[1]}), true), Bead(tri),
                           Bead(Simplex({tv[1], tv[2]}), true)});
      if (at == tv[2])
        inserts.push_back({Bead(Simplex({tv[1], tv[2]}), true), Bead(Simplex({tv[0], tv[1]}), true),
                           Bead(tri)});
      if (at == tv[0])
        inserts.push_back({Bead(tri), Bead(Simplex({tv[1], tv[2]}), true),
                           Bead(Simplex({tv[0], tv[1]}), true)});
      for (const auto& ins : inserts) {
        std::vector<Bead> raw(beads.begin(), beads.begin() + pos);
        raw.insert(raw.end(), ins.begin(), ins.end());
        raw.insert(raw.end(), beads.begin() + pos, beads.end());
        push(raw, m.marked, m.word.s());
      }
    }
  }

  return out;
}

}  // namespace detail

/// Solve D h = rhs over X. Because D never raises weight, the system is
/// block-triangular in the weight grading: the residual is peeled from its
/// top weight W down, solving over a sliding weight window [W, W + margin]
/// where margin = weight_cap − (top weight of rhs). Candidates inside each
/// window are grown from the residual support via local inverse moves, then
/// matched by an exact integer solve. Returns nullopt when some window has
/// no integer solution after the closure stops growing.
inline std::optional<NecklaceSum> solve_for_preimage(const Complex& X, const NecklaceSum& rhs,
                                                     int weight_cap, int max_rounds = 6) {
  if (rhs.empty()) return NecklaceSum();
  int rhs_top = 0;
  for (const auto& [n, c] : rhs.terms()) rhs_top = std::max(rhs_top, n.weight());
  int margin = std::max(0, weight_cap - rhs_top);

  NecklaceSum h, residual = rhs;
  while (!residual.empty()) {
    int W = 0;
    for (const auto& [n, c] : residual.terms()) W = std::max(W, n.weight());
    int cap = W + margin;

    std::map<Necklace, NecklaceSum> cands;  // candidate -> its differential
    std::set<Necklace> rows;                // window rows of weight >= W
    for (const auto& [n, c] : residual.terms())
      if (n.weight() >= W) rows.insert(n);

    bool solved = false;
    for (int round = 0; round < max_rounds && !solved; ++round) {
      bool grew = false;
      std::vector<Necklace> row_list(rows.begin(), rows.end());
      for (const Necklace& r : row_list)
        for (const Necklace& cand : detail::preimage_moves(r, X, cap))
          if (cand.weight() >= W && !cands.count(cand)) {
            NecklaceSum d = necklace_D(cand);
            for (const auto& [n, c] : d.terms())
              if (n.weight() >= W) rows.insert(n);
            cands.emplace(cand, std::move(d));
            grew = true;
          }

      std::vector<Necklace> row_basis(rows.begin(), rows.end());
      std::map<Necklace, int> row_index;
      for (std::size_t i = 0; i < row_basis.size(); ++i)
        row_index.emplace(row_basis[i], static_cast<int>(i));
      std::vector<const Necklace*> col_basis;
      SparseIntMatrix M(static_cast<int>(row_basis.size()), static_cast<int>(cands.size()));
      {
        int j = 0;
        for (const auto& [cand, d] : cands) {
          col_basis.push_back(&cand);
          for (const auto& [n, c] : d.terms()) {
            auto it = row_index.find(n);
            if (it != row_index.end()) M.add(it->second, j, c.num());
          }
          ++j;
        }
      }
      std::vector<Int> b(row_basis.size(), 0);
      for (const auto& [n, c] : residual.terms()) {
        auto it = row_index.find(n);
        if (it != row_index.end()) b[it->second] = c.num();
      }

      if (auto x = solve_integer(M, b)) {
        for (std::size_t j = 0; j < x->size(); ++j)
          if ((*x)[j] != 0) {
            Coefficient c(Ring::z(), (*x)[j]);
            h.add_term(*col_basis[j], c);
            residual = residual - necklace_D(*col_basis[j]).scaled(c);
          }
        solved = true;
      } else if (!grew) {
        return std::nullopt;
      }
    }
    if (!solved) return std::nullopt;
  }
  if (necklace_D(h) != rhs) throw std::logic_error("solve_for_preimage: substitution check failed");
  return h;
}

/// Theorem 3 homotopy on standard simplices: h(Δ⁰) = h(Δ¹) = 0 and for
/// k ≥ 2, D h(Δᵏ) = χ(Δᵏ) − ρ(Δᵏ) − h(∂Δᵏ), with h(∂Δᵏ) transported along
/// the face inclusions. Throws with a bound suggestion when the solver
/// fails within the weight cap (= max rhs weight + weight_margin).
inline std::vector<NecklaceSum> synthesize_homotopy(int max_k, int weight_margin = 2) {
  std::vector<NecklaceSum> h(max_k + 1);
  for (int k = 2; k <= max_k; ++k) {
    Complex X = Complex::standard_simplex(k);
    std::vector<int> vs(k + 1);
    for (int i = 0; i <= k; ++i) vs[i] = i;
    Simplex top(vs);

    NecklaceSum rhs = chi_composed(X, top) - rho_simplex(X, top);
    for (int j = 0; j <= k; ++j) {
      std::vector<int> vmap;
      for (int i = 0; i < k; ++i) vmap.push_back(i < j ? i : i + 1);
      rhs = rhs - relabel(h[k - 1], vmap).scaled((j % 2 == 0) ? 1 : -1);
    }

    int wmax = 0;
    for (const auto& [n, c] : rhs.terms()) wmax = std::max(wmax, n.weight());
    std::optional<NecklaceSum> sol;
    for (int margin = weight_margin; margin <= weight_margin + 2 && !sol; ++margin)
      sol = solve_for_preimage(X, rhs, wmax + margin);
    if (!sol)
      throw std::runtime_error("synthesize_homotopy: no solution at dimension " + std::to_string(k) +
                               " within weight bound " + std::to_string(wmax + weight_margin + 2) +
                               "; retry with a larger weight margin");
    h[k] = *sol;
  }
  return h;
}

}  // namespace loopchains
