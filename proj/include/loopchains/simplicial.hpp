#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopchains/formal_sum.hpp"

namespace loopchains {

/// Ordered simplex: a strictly increasing list of integer vertex labels.
class Simplex {
 public:
  explicit Simplex(std::vector<int> verts) : v_(std::move(verts)) {
    if (v_.empty()) throw std::invalid_argument("Simplex: empty vertex list");
    for (std::size_t i = 1; i < v_.size(); ++i)
      if (v_[i - 1] >= v_[i])
        throw std::invalid_argument("Simplex: vertex list must be strictly increasing: " + render(v_));
    key_ = render(v_);
  }

  Simplex(std::initializer_list<int> verts) : Simplex(std::vector<int>(verts)) {}

  static Simplex vertex(int v) { return Simplex(std::vector<int>{v}); }

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  const std::vector<int>& verts() const { return v_; }
  int s() const { return v_.front(); }  ///< first vertex
  int t() const { return v_.back(); }   ///< last vertex

  /// j-th face (delete vertex at position j), 0 <= j <= dim.
  Simplex face(int j) const {
    if (dim() == 0) throw std::invalid_argument("Simplex::face: vertex has no faces");
    std::vector<int> w = v_;
    w.erase(w.begin() + j);
    return Simplex(std::move(w));
  }

  /// Sub-simplex spanned by positions [a, b].
  Simplex range(int a, int b) const {
    return Simplex(std::vector<int>(v_.begin() + a, v_.begin() + b + 1));
  }

  /// Sub-simplex spanned by the given position list (strictly increasing).
  Simplex positions(const std::vector<int>& pos) const {
    std::vector<int> w;
    w.reserve(pos.size());
    for (int p : pos) w.push_back(v_.at(p));
    return Simplex(std::move(w));
  }

  bool is_face_of(const Simplex& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
  }

  const std::string& key() const { return key_; }
  bool operator<(const Simplex& o) const { return key_ < o.key_; }
  bool operator==(const Simplex& o) const { return v_ == o.v_; }
  bool operator!=(const Simplex& o) const { return !(*this == o); }

  static std::string render(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << ']';
    return os.str();
  }

 private:
  std::vector<int> v_;
  std::string key_;
};

using Chain = FormalSum<Simplex>;

/// Basis element of a tensor square of simplicial chains.
struct SimplexPair {
  Simplex left, right;
  std::string key_;

  SimplexPair(Simplex l, Simplex r) : left(std::move(l)), right(std::move(r)) {
    key_ = left.key() + "⊗" + right.key();
  }
  const std::string& key() const { return key_; }
  bool operator<(const SimplexPair& o) const { return key_ < o.key_; }
  bool operator==(const SimplexPair& o) const { return left == o.left && right == o.right; }
};

using TensorChain = FormalSum<SimplexPair>;

/// Finite ordered simplicial complex, closed under faces. Built from a list
/// of maximal simplices; vertex labels are arbitrary ints ordered by <.
class Complex {
 public:
  Complex() = default;

  static Complex from_maximals(const std::string& name, const std::vector<std::vector<int>>& maximals) {
    Complex x;
    x.name_ = name;
    for (const auto& m : maximals) {
      std::vector<int> v = m;
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("Complex: repeated vertex in simplex " + Simplex::render(m));
      x.insert_with_faces(Simplex(std::move(v)));
    }
    x.finish();
    return x;
  }

  /// The full simplex on vertices 0..k.
  static Complex standard_simplex(int k) {
    std::vector<int> v(k + 1);
    for (int i = 0; i <= k; ++i) v[i] = i;
    return from_maximals("standard_" + std::to_string(k), {v});
  }

  const std::string& name() const { return name_; }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  int max_dim() const { return by_dim_.empty() ? -1 : static_cast<int>(by_dim_.size()) - 1; }

  const std::vector<Simplex>& simplices(int dim) const {
    static const std::vector<Simplex> none;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[dim];
  }

  std::vector<Simplex> all_simplices() const {
    return std::vector<Simplex>(simplices_.begin(), simplices_.end());
  }

  const std::vector<int>& vertices() const { return vertices_; }

  bool empty() const { return simplices_.empty(); }

 private:
  void insert_with_faces(const Simplex& s) {
    if (simplices_.count(s)) return;
    simplices_.insert(s);
    if (s.dim() > 0)
      for (int j = 0; j <= s.dim(); ++j) insert_with_faces(s.face(j));
  }

  void finish() {
    for (const Simplex& s : simplices_) {
      int d = s.dim();
      if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
      by_dim_[d].push_back(s);
      if (d == 0) vertices_.push_back(s.s());
    }
    std::sort(vertices_.begin(), vertices_.end());
  }

  std::string name_;
  std::set<Simplex> simplices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<int> vertices_;
};

/// Simplicial boundary: sum of all faces with alternating signs.
inline Chain boundary(const Simplex& s) {
  Chain out;
  if (s.dim() == 0) return out;
  for (int j = 0; j <= s.dim(); ++j) out.add_int(s.face(j), (j % 2 == 0) ? 1 : -1);
  return out;
}

/// Interior-face boundary: sum over faces deleting an interior vertex,
/// with sign (-1)^j. Zero in dimension <= 1.
inline Chain reduced_boundary(const Simplex& s) {
  Chain out;
  for (int j = 1; j < s.dim(); ++j) out.add_int(s.face(j), (j % 2 == 0) ? 1 : -1);
  return out;
}

/// Alexander-Whitney coproduct: all front/back splittings.
inline TensorChain aw_coproduct(const Simplex& s) {
  TensorChain out;
  for (int j = 0; j <= s.dim(); ++j) out.add_int(SimplexPair(s.range(0, j), s.range(j, s.dim())), 1);
  return out;
}

/// Interior splittings only: both factors of positive dimension. Zero on
/// edges (and, by convention, on inverse edges, which never reach here).
inline TensorChain reduced_aw_coproduct(const Simplex& s) {
  TensorChain out;
  for (int j = 1; j < s.dim(); ++j) out.add_int(SimplexPair(s.range(0, j), s.range(j, s.dim())), 1);
  return out;
}

inline Chain boundary(const Chain& c) {
  return apply_linear<Simplex>(c, [](const Simplex& s) { return boundary(s); });
}

}  // namespace loopchains
