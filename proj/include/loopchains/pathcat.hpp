#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loopchains/simplicial.hpp"

namespace loopchains {

/// One bead of a path word: either a simplex of dimension >= 1, traversed
/// forward, or the formal inverse of an edge. An inverse bead stores the
/// underlying edge [a,b] and prints as [b,a].
struct Bead {
  Simplex simplex;
  bool inverse = false;

  explicit Bead(Simplex s, bool inv = false) : simplex(std::move(s)), inverse(inv) {
    if (simplex.dim() < 1) throw std::invalid_argument("Bead: dimension must be >= 1");
    if (inverse && simplex.dim() != 1) throw std::invalid_argument("Bead: only edges have inverses");
    if (inverse) {
      key_ = "[" + std::to_string(simplex.t()) + "," + std::to_string(simplex.s()) + "]";
    } else {
      key_ = simplex.key();
    }
  }

  static Bead forward(std::vector<int> verts) { return Bead(Simplex(std::move(verts))); }
  static Bead backward(int a, int b) {  ///< inverse of edge [min,max], traversed b-as-source
    if (a == b) throw std::invalid_argument("Bead: degenerate edge");
    return Bead(Simplex(std::vector<int>{std::min(a, b), std::max(a, b)}), true);
  }

  int s() const { return inverse ? simplex.t() : simplex.s(); }
  int t() const { return inverse ? simplex.s() : simplex.t(); }
  int degree() const { return inverse ? 0 : simplex.dim() - 1; }
  int weight() const { return inverse ? 1 : simplex.dim(); }

  bool cancels(const Bead& o) const { return inverse != o.inverse && simplex == o.simplex; }

  const std::string& key() const { return key_; }
  bool operator==(const Bead& o) const { return inverse == o.inverse && simplex == o.simplex; }
  bool operator!=(const Bead& o) const { return !(*this == o); }

 private:
  std::string key_;
};

/// Reduce a composable bead sequence: repeatedly delete adjacent pairs
/// (edge, its inverse) in either order. A single stack pass computes the
/// (confluent) normal form. Throws on non-composable input.
inline std::vector<Bead> reduce_beads(const std::vector<Bead>& raw) {
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i - 1].t() != raw[i].s())
      throw std::invalid_argument("reduce_beads: beads " + raw[i - 1].key() + " and " + raw[i].key() +
                                  " are not composable");
  std::vector<Bead> stack;
  for (const Bead& b : raw) {
    if (!stack.empty() && stack.back().cancels(b))
      stack.pop_back();
    else
      stack.push_back(b);
  }
  return stack;
}

/// Morphism of the localized path category: a reduced composable word of
/// beads, or the identity at a vertex (printed (id_a)).
class PathWord {
 public:
  static PathWord identity(int v) {
    PathWord w;
    w.idv_ = v;
    w.key_ = "(id_" + std::to_string(v) + ")";
    return w;
  }

  /// Build from a raw bead sequence: checks composability and reduces.
  /// An empty or fully-cancelling sequence needs the source vertex to name
  /// the resulting identity; pass it as at_vertex (checked for consistency).
  static PathWord of(const std::vector<Bead>& raw, int at_vertex = -1) {
    std::vector<Bead> r = reduce_beads(raw);
    if (r.empty()) {
      int v = raw.empty() ? at_vertex : raw.front().s();
      if (v < 0) throw std::invalid_argument("PathWord: empty word needs a vertex");
      if (at_vertex >= 0 && at_vertex != v)
        throw std::invalid_argument("PathWord: vertex mismatch for empty word");
      return identity(v);
    }
    if (at_vertex >= 0 && r.front().s() != at_vertex)
      throw std::invalid_argument("PathWord: source vertex mismatch");
    PathWord w;
    w.beads_ = std::move(r);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.beads_.size(); ++i) {
      if (i) os << '|';
      os << w.beads_[i].key();
    }
    os << ')';
    w.key_ = os.str();
    return w;
  }

  static PathWord single(Bead b) { return of({std::move(b)}); }

  bool is_identity() const { return beads_.empty(); }
  int s() const { return beads_.empty() ? idv_ : beads_.front().s(); }
  int t() const { return beads_.empty() ? idv_ : beads_.back().t(); }

  int degree() const {
    int d = 0;
    for (const Bead& b : beads_) d += b.degree();
    return d;
  }

  int weight() const {
    int w = 0;
    for (const Bead& b : beads_) w += b.weight();
    return w;
  }

  const std::vector<Bead>& beads() const { return beads_; }
  const std::string& key() const { return key_; }
  bool operator<(const PathWord& o) const { return key_ < o.key_; }
  bool operator==(const PathWord& o) const { return key_ == o.key_; }
  bool operator!=(const PathWord& o) const { return !(*this == o); }

 private:
  std::vector<Bead> beads_;
  int idv_ = -1;
  std::string key_;
};

using PathSum = FormalSum<PathWord>;

/// Composition in the path category: concatenate and reduce. Throws when
/// t(u) != s(v).
inline PathWord concat_mu(const PathWord& u, const PathWord& v) {
  if (u.t() != v.s())
    throw std::invalid_argument("concat_mu: endpoint mismatch, t" + u.key() + " != s" + v.key());
  if (u.is_identity()) return v;
  if (v.is_identity()) return u;
  std::vector<Bead> raw = u.beads();
  raw.insert(raw.end(), v.beads().begin(), v.beads().end());
  return PathWord::of(raw, u.s());
}

/// Bilinear extension of concat_mu with no extra sign (the Koszul signs of
/// the operations producing the operands are the callers' responsibility).
inline PathSum concat_mu(const PathSum& u, const PathSum& v) {
  PathSum out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) out.add_term(concat_mu(wu, wv), cu * cv);
  return out;
}

/// Differential of a single bead, returned as (sign, replacement sequence)
/// pairs. On a simplex bead [i0..ik]:
///   d = sum_{j=1}^{k-1} (-1)^{j+1} [i0..^ij..ik]
///     + sum_{j=1}^{k-1} (-1)^j   ([i0..ij] | [ij..ik]).
/// Edges and inverse edges are cycles.
inline std::vector<std::pair<int, std::vector<Bead>>> bead_differential(const Bead& b) {
  std::vector<std::pair<int, std::vector<Bead>>> out;
  if (b.inverse || b.simplex.dim() < 2) return out;
  int k = b.simplex.dim();
  for (int j = 1; j < k; ++j)
    out.push_back({(j % 2 == 0) ? -1 : 1, {Bead(b.simplex.face(j))}});
  for (int j = 1; j < k; ++j)
    out.push_back({(j % 2 == 0) ? 1 : -1, {Bead(b.simplex.range(0, j)), Bead(b.simplex.range(j, k))}});
  return out;
}

/// Differential on path words: derivation over the beads with Koszul sign
/// (-1)^{degree of the prefix}. The spliced words are reduced, so adjacent
/// cancellations are applied automatically.
inline PathSum word_differential(const PathWord& w) {
  PathSum out;
  const auto& beads = w.beads();
  int prefix = 0;
  for (std::size_t r = 0; r < beads.size(); ++r) {
    int psign = (prefix % 2 == 0) ? 1 : -1;
    for (const auto& [sign, repl] : bead_differential(beads[r])) {
      std::vector<Bead> raw(beads.begin(), beads.begin() + r);
      raw.insert(raw.end(), repl.begin(), repl.end());
      raw.insert(raw.end(), beads.begin() + r + 1, beads.end());
      out.add_int(PathWord::of(raw, w.s()), psign * sign);
    }
    prefix += beads[r].degree();
  }
  return out;
}

inline PathSum word_differential(const PathSum& x) {
  return apply_linear<PathWord>(x, [](const PathWord& w) { return word_differential(w); });
}

}  // namespace loopchains
