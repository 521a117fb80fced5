#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopchains/constloops.hpp"
#include "loopchains/matrix.hpp"
#include "loopchains/necklace.hpp"

namespace loopchains {

/// Basis class of the quotient coalgebra C•(X/A): the basepoint (all of A
/// collapsed, printed "e") or a simplex of X not in A.
struct QClass {
  std::optional<Simplex> rep;
  std::string key_;

  QClass() : key_("e") {}
  explicit QClass(Simplex s) : rep(std::move(s)), key_(rep->key()) {}

  bool is_basepoint() const { return !rep.has_value(); }
  int dim() const { return rep ? rep->dim() : 0; }
  const std::string& key() const { return key_; }
  bool operator<(const QClass& o) const { return key_ < o.key_; }
  bool operator==(const QClass& o) const { return key_ == o.key_; }
};

struct QClassPair {
  QClass left, right;
  std::string key_;
  QClassPair(QClass l, QClass r) : left(std::move(l)), right(std::move(r)) {
    key_ = left.key() + "⊗" + right.key();
  }
  const std::string& key() const { return key_; }
  bool operator<(const QClassPair& o) const { return key_ < o.key_; }
  bool operator==(const QClassPair& o) const { return left == o.left && right == o.right; }
};

/// A complex X with a collapsed face-closed subcomplex A, and the quotient
/// chain coalgebra data of Remark 2.5.
struct QuotientData {
  Complex X, A;

  static QuotientData make(Complex x, Complex a) {
    for (const Simplex& s : a.all_simplices())
      if (!x.contains(s))
        throw std::invalid_argument("QuotientData: collapse simplex " + s.key() + " not in complex");
    return QuotientData{std::move(x), std::move(a)};
  }

  bool in_A(const Simplex& s) const { return A.contains(s); }

  /// π of a simplex: a class, or nullopt when the simplex maps to zero
  /// (positive-dimensional simplex of A).
  std::optional<QClass> pi(const Simplex& s) const {
    if (!in_A(s)) return QClass(s);
    if (s.dim() == 0) return QClass();
    return std::nullopt;
  }

  /// Shape needed for the coHochschild reduction: the quotient must have a
  /// single vertex and no edges.
  void require_cohochschild_shape() const {
    for (const Simplex& v : X.simplices(0))
      if (!in_A(v)) throw std::invalid_argument("QuotientData: vertex " + v.key() + " not collapsed");
    for (const Simplex& e : X.simplices(1))
      if (!in_A(e)) throw std::invalid_argument("QuotientData: edge " + e.key() + " not collapsed");
  }

  /// Per-degree basis of the quotient: basepoint in degree 0, classes of
  /// non-collapsed simplices elsewhere.
  std::vector<QClass> basis(int degree) const {
    std::vector<QClass> out;
    if (degree == 0) out.push_back(QClass());
    for (const Simplex& s : X.simplices(degree))
      if (!in_A(s)) out.push_back(QClass(s));
    return out;
  }

  /// Induced AW coproduct on the quotient.
  FormalSum<QClassPair> coproduct(const QClass& c) const {
    FormalSum<QClassPair> out;
    if (c.is_basepoint()) {
      out.add_int(QClassPair(QClass(), QClass()), 1);
      return out;
    }
    const Simplex& s = *c.rep;
    for (int j = 0; j <= s.dim(); ++j) {
      auto l = pi(s.range(0, j));
      auto r = pi(s.range(j, s.dim()));
      if (l && r) out.add_int(QClassPair(*l, *r), 1);
    }
    return out;
  }
};

/// Generator of the coHochschild complex of C•(X/A): a word of classes of
/// dimension >= 2 plus a marked class (or the basepoint, printed "e"). The
/// quotient has one object, so no endpoint conditions remain.
struct CoHochschildElement {
  std::vector<Simplex> word;        ///< class representatives, dim >= 2
  std::optional<Simplex> marked;    ///< nullopt = basepoint
  std::string key_;

  CoHochschildElement(std::vector<Simplex> w, std::optional<Simplex> m)
      : word(std::move(w)), marked(std::move(m)) {
    std::string ws = "(";
    if (word.empty()) {
      ws += "id";
    } else {
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) ws += "|";
        ws += word[i].key();
      }
    }
    ws += ")";
    key_ = ws + (marked ? marked->key() : "e");
  }

  int degree() const {
    int d = marked ? marked->dim() : 0;
    for (const Simplex& s : word) d += s.dim() - 1;
    return d;
  }

  const std::string& key() const { return key_; }
  bool operator<(const CoHochschildElement& o) const { return key_ < o.key_; }
  bool operator==(const CoHochschildElement& o) const { return key_ == o.key_; }
};

using CoHochschildSum = FormalSum<CoHochschildElement>;

/// θ_π: delete edge and inverse-edge beads, push everything else through π.
/// A zero class anywhere kills the term. Deleted beads have degree 0, so no
/// Koszul signs appear.
inline CoHochschildSum theta_pi(const NecklaceSum& x, const QuotientData& q) {
  q.require_cohochschild_shape();
  CoHochschildSum out;
  for (const auto& [n, c] : x.terms()) {
    std::vector<Simplex> word;
    bool dead = false;
    for (const Bead& b : n.word.beads()) {
      if (b.inverse || b.simplex.dim() == 1) continue;
      auto cls = q.pi(b.simplex);
      if (!cls) {
        dead = true;
        break;
      }
      word.push_back(*cls->rep);
    }
    if (dead) continue;
    auto mcls = q.pi(n.marked);
    if (!mcls) continue;
    out.add_term(CoHochschildElement(std::move(word), mcls->rep), c);
  }
  return out;
}

/// CoHochschild differential: the image of D under the collapse — same
/// shape as necklace_D, with classes in place of beads and the basepoint in
/// place of marked vertices.
inline CoHochschildSum cohochschild_D(const CoHochschildElement& e, const QuotientData& q) {
  CoHochschildSum out;
  int g = 0;
  for (const Simplex& s : e.word) g += s.dim() - 1;
  const int gs = (g % 2 == 0) ? 1 : -1;

  // derivation over the word
  int prefix = 0;
  for (std::size_t r = 0; r < e.word.size(); ++r) {
    const Simplex& s = e.word[r];
    int k = s.dim();
    int psign = (prefix % 2 == 0) ? 1 : -1;
    for (int j = 1; j < k; ++j) {
      auto cls = q.pi(s.face(j));
      if (!cls) continue;
      std::vector<Simplex> w = e.word;
      w[r] = *cls->rep;
      out.add_int(CoHochschildElement(std::move(w), e.marked), psign * ((j % 2 == 0) ? -1 : 1));
    }
    for (int j = 1; j < k; ++j) {
      auto l = q.pi(s.range(0, j));
      auto rr = q.pi(s.range(j, k));
      if (!l || !rr) continue;
      std::vector<Simplex> w(e.word.begin(), e.word.begin() + r);
      w.push_back(*l->rep);
      w.push_back(*rr->rep);
      w.insert(w.end(), e.word.begin() + r + 1, e.word.end());
      out.add_int(CoHochschildElement(std::move(w), e.marked), psign * ((j % 2 == 0) ? 1 : -1));
    }
    prefix += k - 1;
  }

  if (!e.marked) return out;
  const Simplex& c = *e.marked;
  int k = c.dim();

  for (int j = 1; j < k; ++j) {
    auto cls = q.pi(c.face(j));
    if (!cls) continue;
    out.add_int(CoHochschildElement(e.word, *cls->rep), gs * ((j % 2 == 0) ? -1 : 1));
  }

  for (int j = 1; j <= k; ++j) {  // δ_L analogue
    auto front = q.pi(c.range(0, j));
    auto back = q.pi(c.range(j, k));
    if (!front || !back || front->is_basepoint()) continue;
    std::vector<Simplex> w = e.word;
    w.push_back(*front->rep);
    out.add_int(CoHochschildElement(std::move(w), back->rep), gs);
  }

  for (int j = 0; j < k; ++j) {  // δ_R analogue
    auto right = q.pi(c.range(j, k));
    auto left = q.pi(c.range(0, j));
    if (!right || !left || right->is_basepoint()) continue;
    std::vector<Simplex> w{*right->rep};
    w.insert(w.end(), e.word.begin(), e.word.end());
    int exp = j + 1 + g + (k - j - 1) * (g + j);
    out.add_int(CoHochschildElement(std::move(w), left->rep), (exp % 2 == 0) ? 1 : -1);
  }
  return out;
}

inline CoHochschildSum cohochschild_D(const CoHochschildSum& x, const QuotientData& q) {
  return apply_linear<CoHochschildElement>(
      x, [&q](const CoHochschildElement& e) { return cohochschild_D(e, q); });
}

/// All coHochschild generators of a given degree (finite: every word letter
/// contributes shifted degree >= 1).
inline std::vector<CoHochschildElement> cohochschild_basis(const QuotientData& q, int degree) {
  std::vector<Simplex> letters;
  for (int d = 2; d <= q.X.max_dim(); ++d)
    for (const Simplex& s : q.X.simplices(d))
      if (!q.in_A(s)) letters.push_back(s);

  std::vector<CoHochschildElement> out;
  std::vector<Simplex> cur;
  std::function<void(int)> dfs = [&](int used) {
    int rem = degree - used;
    if (rem == 0) out.push_back(CoHochschildElement(cur, std::nullopt));
    for (const Simplex& m : q.X.simplices(rem))
      if (!q.in_A(m)) out.push_back(CoHochschildElement(cur, m));
    for (const Simplex& s : letters) {
      if (s.dim() - 1 > rem) continue;
      cur.push_back(s);
      dfs(used + s.dim() - 1);
      cur.pop_back();
    }
  };
  dfs(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct TruncatedHomology {
  long betti = 0;
  std::vector<Int> torsion;  ///< invariant factors > 1 (empty over fields)
};

/// Homology of the weight-w truncation of the necklace complex in the given
/// degree. Over Z/m the modulus must be prime.
inline TruncatedHomology truncated_homology(const Complex& X, int degree, int weight, Ring ring) {
  std::vector<Necklace> bp = weight_basis(X, degree + 1, weight);
  std::vector<Necklace> bn = weight_basis(X, degree, weight);
  std::vector<Necklace> bm = weight_basis(X, degree - 1, weight);
  SparseIntMatrix d_n = matrix_of(bn, bm, [](const Necklace& n) { return necklace_D(n); });
  SparseIntMatrix d_next = matrix_of(bp, bn, [](const Necklace& n) { return necklace_D(n); });

  TruncatedHomology r;
  switch (ring.kind) {
    case Ring::Kind::Z: {
      HomologyStep h = homology_step(d_n, d_next);
      r.betti = h.betti;
      r.torsion = h.torsion;
      break;
    }
    case Ring::Kind::Q:
      r.betti = d_n.cols() - hnf_rank(d_n) - hnf_rank(d_next);
      break;
    case Ring::Kind::Mod: {
      long m = ring.modulus;
      for (long f = 2; f * f <= m; ++f)
        if (m % f == 0)
          throw std::invalid_argument("truncated_homology: composite modulus " + std::to_string(m) +
                                      " not supported (prime moduli only)");
      r.betti = d_n.cols() - rank_mod_p(d_n, m) - rank_mod_p(d_next, m);
      break;
    }
  }
  return r;
}

/// Ordinary simplicial homology of X in the given degree (over Z).
inline HomologyStep simplicial_homology(const Complex& X, int degree) {
  std::vector<Simplex> bp(X.simplices(degree + 1)), bn(X.simplices(degree)), bm(X.simplices(degree - 1));
  SparseIntMatrix d_n = matrix_of(bn, bm, [](const Simplex& s) { return boundary(s); });
  SparseIntMatrix d_next = matrix_of(bp, bn, [](const Simplex& s) { return boundary(s); });
  return homology_step(d_n, d_next);
}

/// Generator of the kernel of the top-degree boundary map, over Z. Requires
/// the kernel to have rank one (as for a closed orientable pseudomanifold);
/// the sign is normalized so the first top simplex carries a positive
/// coefficient.
inline Chain fundamental_cycle(const Complex& X) {
  int d = X.max_dim();
  std::vector<Simplex> bn(X.simplices(d)), bm(X.simplices(d - 1));
  SparseIntMatrix m = matrix_of(bn, bm, [](const Simplex& s) { return boundary(s); });
  SmithResult s = smith_normal_form(m, true);
  long rank = static_cast<long>(s.diag.size());
  if (m.cols() - rank != 1)
    throw std::invalid_argument("fundamental_cycle: top boundary kernel is not rank one");
  bool flip = false;
  for (int i = 0; i < m.cols(); ++i) {
    Int v = s.V.get(i, static_cast<int>(rank));
    if (v != 0) {
      flip = v < 0;
      break;
    }
  }
  Chain c;
  for (int i = 0; i < m.cols(); ++i) {
    Int v = s.V.get(i, static_cast<int>(rank));
    c.add_term(bn[i], Coefficient(Ring::z(), flip ? Int(-v) : v));
  }
  return c;
}

struct ScanRow {
  int weight;
  long betti;
  std::vector<Int> torsion;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  int stable_from = -1;  ///< weight starting the largest all-equal suffix (length >= 3), else -1
};

inline ScanResult stabilization_scan(const Complex& X, int degree, int w_start, int w_end, Ring ring) {
  ScanResult r;
  for (int w = w_start; w <= w_end; ++w) {
    TruncatedHomology h = truncated_homology(X, degree, w, ring);
    r.rows.push_back({w, h.betti, h.torsion});
  }
  if (!r.rows.empty()) {
    std::size_t i = r.rows.size() - 1;
    while (i > 0 && r.rows[i - 1].betti == r.rows.back().betti && r.rows[i - 1].torsion == r.rows.back().torsion)
      --i;
    if (r.rows.size() - i >= 3) r.stable_from = r.rows[i].weight;
  }
  return r;
}

}  // namespace loopchains
