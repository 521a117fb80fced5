#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopchains/coefficient.hpp"
#include "loopchains/formal_sum.hpp"

namespace loopchains {

/// Sparse integer matrix, column-major (columns are generator images).
class SparseIntMatrix {
 public:
  SparseIntMatrix(int rows = 0, int cols = 0) : rows_(rows), cols_(cols), col_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int i, int j, const Int& v) {
    check(i, j);
    if (v == 0) return;
    auto& m = col_[j];
    auto it = m.find(i);
    if (it == m.end()) {
      m.emplace(i, v);
    } else {
      it->second += v;
      if (it->second == 0) m.erase(it);
    }
  }

  void set(int i, int j, const Int& v) {
    check(i, j);
    if (v == 0)
      col_[j].erase(i);
    else
      col_[j][i] = v;
  }

  Int get(int i, int j) const {
    check(i, j);
    auto it = col_[j].find(i);
    return it == col_[j].end() ? Int(0) : it->second;
  }

  const std::map<int, Int>& column(int j) const { return col_[j]; }

  bool is_zero() const {
    for (const auto& c : col_)
      if (!c.empty()) return false;
    return true;
  }

  SparseIntMatrix times(const SparseIntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("SparseIntMatrix: dimension mismatch in product");
    SparseIntMatrix r(rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j)
      for (const auto& [k, v] : o.col_[j])
        for (const auto& [i, w] : col_[k]) r.add(i, j, v * w);
    return r;
  }

  static SparseIntMatrix identity(int n) {
    SparseIntMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.set(i, i, 1);
    return r;
  }

 private:
  void check(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("SparseIntMatrix: index out of range");
  }

  int rows_, cols_;
  std::vector<std::map<int, Int>> col_;
};

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Dual-indexed mutable matrix for the normal-form algorithms.
struct Work {
  int nr, nc;
  std::vector<std::map<int, Int>> row;   // row[i][j]
  std::vector<std::set<int>> colrows;    // rows with a nonzero in column j

  explicit Work(const SparseIntMatrix& m) : nr(m.rows()), nc(m.cols()), row(m.rows()), colrows(m.cols()) {
    for (int j = 0; j < nc; ++j)
      for (const auto& [i, v] : m.column(j)) {
        row[i][j] = v;
        colrows[j].insert(i);
      }
  }

  Int get(int i, int j) const {
    auto it = row[i].find(j);
    return it == row[i].end() ? Int(0) : it->second;
  }

  void set(int i, int j, const Int& v) {
    if (v == 0) {
      row[i].erase(j);
      colrows[j].erase(i);
    } else {
      row[i][j] = v;
      colrows[j].insert(i);
    }
  }

  void row_add(int dst, int src, const Int& c) {  // row[dst] += c*row[src]
    for (const auto& [j, v] : std::map<int, Int>(row[src])) set(dst, j, get(dst, j) + c * v);
  }

  void col_add(int dst, int src, const Int& c) {  // col[dst] += c*col[src]
    for (int i : std::set<int>(colrows[src])) set(i, dst, get(i, dst) + c * get(i, src));
  }

  void row_swap(int a, int b) {
    if (a == b) return;
    std::set<int> js;
    for (const auto& [j, v] : row[a]) js.insert(j);
    for (const auto& [j, v] : row[b]) js.insert(j);
    std::swap(row[a], row[b]);
    for (int j : js) {
      colrows[j].erase(a);
      colrows[j].erase(b);
      if (row[a].count(j)) colrows[j].insert(a);
      if (row[b].count(j)) colrows[j].insert(b);
    }
  }

  void col_swap(int a, int b) {
    if (a == b) return;
    std::set<int> is = colrows[a];
    is.insert(colrows[b].begin(), colrows[b].end());
    for (int i : is) {
      Int va = get(i, a), vb = get(i, b);
      set(i, a, vb);
      set(i, b, va);
    }
  }

  void row_negate(int r) {
    for (auto& [j, v] : row[r]) v = -v;
  }
};

}  // namespace detail

struct SmithResult {
  std::vector<Int> diag;  ///< nonzero invariant factors d₁ | d₂ | …
  SparseIntMatrix U, V;   ///< unimodular, U·M·V = diag (when requested)
  bool with_transforms = false;
};

/// Smith normal form by repeated pivoting on a smallest-magnitude entry.
inline SmithResult smith_normal_form(const SparseIntMatrix& m, bool transforms = false) {
  detail::Work w(m);
  std::optional<detail::Work> U, V;
  if (transforms) {
    U.emplace(SparseIntMatrix::identity(m.rows()));
    V.emplace(SparseIntMatrix::identity(m.cols()));
  }

  auto row_add = [&](int d, int s, const Int& c) {
    w.row_add(d, s, c);
    if (U) U->row_add(d, s, c);
  };
  auto col_add = [&](int d, int s, const Int& c) {
    w.col_add(d, s, c);
    if (V) V->col_add(d, s, c);
  };
  auto row_swap = [&](int a, int b) {
    w.row_swap(a, b);
    if (U) U->row_swap(a, b);
  };
  auto col_swap = [&](int a, int b) {
    w.col_swap(a, b);
    if (V) V->col_swap(a, b);
  };

  int t = 0;
  int lim = std::min(m.rows(), m.cols());
  while (t < lim) {
    // locate a smallest-magnitude nonzero entry in the trailing submatrix
    int pi = -1, pj = -1;
    Int best;
    for (int j = t; j < w.nc; ++j)
      for (int i : w.colrows[j]) {
        if (i < t) continue;
        Int a = w.get(i, j);
        if (a < 0) a = -a;
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t
      for (int i : std::set<int>(w.colrows[t])) {
        if (i <= t) continue;
        Int q = detail::floor_div(w.get(i, t), w.get(t, t));
        if (q != 0) row_add(i, t, -q);
        if (w.get(i, t) != 0) {  // remainder smaller than pivot: promote it
          row_swap(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // clear row t
      for (const auto& [j, v] : std::map<int, Int>(w.row[t])) {
        if (j <= t) continue;
        Int q = detail::floor_div(v, w.get(t, t));
        if (q != 0) col_add(j, t, -q);
        if (w.get(t, j) != 0) {
          col_swap(t, j);
          dirty = true;
        }
      }
    }

    // divisibility: pivot must divide every later entry
    bool redo = false;
    Int p = w.get(t, t);
    for (int j = t + 1; j < w.nc && !redo; ++j)
      for (int i : w.colrows[j]) {
        if (i < t + 1) continue;
        if (w.get(i, j) % p != 0) {
          row_add(t, i, 1);
          redo = true;
          break;
        }
      }
    if (redo) continue;

    if (w.get(t, t) < 0) {
      w.row_negate(t);
      if (U) U->row_negate(t);
    }
    ++t;
  }

  SmithResult r;
  for (int i = 0; i < t; ++i) r.diag.push_back(w.get(i, i));
  if (transforms) {
    r.with_transforms = true;
    r.U = SparseIntMatrix(m.rows(), m.rows());
    r.V = SparseIntMatrix(m.cols(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (const auto& [j, v] : U->row[i]) r.U.set(i, j, v);
    for (int i = 0; i < m.cols(); ++i)
      for (const auto& [j, v] : V->row[i]) r.V.set(i, j, v);
  }
  return r;
}

/// Integer rank (= rank over Q) via a column Hermite reduction.
inline long hnf_rank(const SparseIntMatrix& m) {
  detail::Work w(m);
  int pivot = 0;
  for (int r = 0; r < w.nr && pivot < w.nc; ++r) {
    while (true) {
      std::vector<int> cols;
      for (const auto& [j, v] : w.row[r])
        if (j >= pivot) cols.push_back(j);
      if (cols.empty()) break;
      int best = cols[0];
      for (int j : cols) {
        Int a = w.get(r, j), b = w.get(r, best);
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        if (a < b) best = j;
      }
      w.col_swap(pivot, best);
      bool cleared = true;
      for (const auto& [j, v] : std::map<int, Int>(w.row[r])) {
        if (j <= pivot) continue;
        Int q = detail::floor_div(v, w.get(r, pivot));
        if (q != 0) w.col_add(j, pivot, -q);
        if (w.get(r, j) != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }
  return pivot;
}

/// Rank over the field Z/p (p prime), by Gaussian elimination.
inline long rank_mod_p(const SparseIntMatrix& m, long p) {
  detail::Work w(m);
  auto norm = [&](const Int& v) { return ((v % p) + p) % p; };
  long rank = 0;
  int prow = 0;
  for (int r = 0; r < w.nr; ++r) {
    (void)prow;
    int pc = -1;
    for (const auto& [j, v] : w.row[r])
      if (j >= rank && norm(v) != 0) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    w.col_swap(rank, pc);
    Int inv = 0;
    {  // inverse of pivot mod p
      Int a = norm(w.get(r, rank)), m0 = p, x0 = 0, x1 = 1;
      while (a > 1) {
        Int q = a / m0, t = m0;
        m0 = a % m0;
        a = t;
        t = x0;
        x0 = x1 - q * x0;
        x1 = t;
      }
      inv = ((x1 % p) + p) % p;
    }
    for (const auto& [j, v] : std::map<int, Int>(w.row[r])) {
      if (j == rank || j < rank) continue;
      Int c = norm(v) * inv % p;
      if (c != 0) w.col_add(j, rank, -c);
    }
    ++rank;
  }
  return rank;
}

/// One integer solution of M·x = b, or nullopt if none exists. Column
/// Hermite reduction with transform tracking, then forward substitution.
inline std::optional<std::vector<Int>> solve_integer(const SparseIntMatrix& m, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve_integer: size mismatch");
  detail::Work w(m);
  detail::Work V(SparseIntMatrix::identity(m.cols()));
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int pivot = 0;
  for (int r = 0; r < w.nr && pivot < w.nc; ++r) {
    while (true) {
      std::vector<int> cols;
      for (const auto& [j, v] : w.row[r])
        if (j >= pivot) cols.push_back(j);
      if (cols.empty()) break;
      int best = cols[0];
      for (int j : cols) {
        Int a = w.get(r, j), bb = w.get(r, best);
        if (a < 0) a = -a;
        if (bb < 0) bb = -bb;
        if (a < bb) best = j;
      }
      w.col_swap(pivot, best);
      V.col_swap(pivot, best);
      bool cleared = true;
      for (const auto& [j, v] : std::map<int, Int>(w.row[r])) {
        if (j <= pivot) continue;
        Int q = detail::floor_div(v, w.get(r, pivot));
        if (q != 0) {
          w.col_add(j, pivot, -q);
          V.col_add(j, pivot, -q);
        }
        if (w.get(r, j) != 0) cleared = false;
      }
      if (cleared) {
        pivots.push_back({r, pivot});
        ++pivot;
        break;
      }
    }
  }

  std::map<int, Int> residual;
  for (int i = 0; i < m.rows(); ++i)
    if (b[i] != 0) residual[i] = b[i];
  std::vector<Int> y(m.cols(), 0);
  for (const auto& [r, p] : pivots) {
    auto it = residual.find(r);
    Int c = (it == residual.end()) ? Int(0) : it->second;
    if (c == 0) continue;
    Int d = w.get(r, p);
    if (c % d != 0) return std::nullopt;
    Int q = c / d;
    y[p] = q;
    for (int i : w.colrows[p]) {
      Int nv = (residual.count(i) ? residual[i] : Int(0)) - q * w.get(i, p);
      if (nv == 0)
        residual.erase(i);
      else
        residual[i] = nv;
    }
  }
  if (!residual.empty()) return std::nullopt;

  // x = V·y
  std::vector<Int> x(m.cols(), 0);
  for (int i = 0; i < m.cols(); ++i)
    for (const auto& [j, v] : V.row[i])
      if (y[j] != 0) x[i] += v * y[j];
  return x;
}

struct HomologyStep {
  long betti = 0;
  std::vector<Int> torsion;  ///< invariant factors > 1
};

/// Homology at the middle of  C_{n+1} --d_next--> C_n --d_n--> C_{n-1}.
/// Requires d_n ∘ d_next = 0 (checked; throws naming the failing column).
inline HomologyStep homology_step(const SparseIntMatrix& d_n, const SparseIntMatrix& d_next) {
  if (d_n.cols() != d_next.rows())
    throw std::invalid_argument("homology_step: chain group dimension mismatch");
  for (int j = 0; j < d_next.cols(); ++j) {
    std::map<int, Int> acc;
    for (const auto& [k, v] : d_next.column(j))
      for (const auto& [i, w] : d_n.column(k)) {
        acc[i] += v * w;
      }
    for (const auto& [i, v] : acc)
      if (v != 0)
        throw std::invalid_argument("homology_step: d∘d != 0 on generator column " + std::to_string(j));
  }
  HomologyStep r;
  long rank_n = hnf_rank(d_n);
  SmithResult s = smith_normal_form(d_next, false);
  r.betti = d_n.cols() - rank_n - static_cast<long>(s.diag.size());
  for (const Int& d : s.diag)
    if (d > 1) r.torsion.push_back(d);
  return r;
}

/// Matrix of a linear map between indexed bases. Image coefficients must be
/// integers; basis elements outside the codomain basis throw.
template <typename BD, typename BC, typename F>
SparseIntMatrix matrix_of(const std::vector<BD>& domain, const std::vector<BC>& codomain, F&& f) {
  std::map<BC, int> index;
  for (std::size_t i = 0; i < codomain.size(); ++i) index.emplace(codomain[i], static_cast<int>(i));
  SparseIntMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
  for (std::size_t j = 0; j < domain.size(); ++j) {
    FormalSum<BC> img = f(domain[j]);
    for (const auto& [b, c] : img.terms()) {
      auto it = index.find(b);
      if (it == index.end())
        throw std::invalid_argument("matrix_of: image element " + b.key() + " not in codomain basis");
      if (c.den() != 1) throw std::invalid_argument("matrix_of: non-integer coefficient");
      m.add(it->second, static_cast<int>(j), c.num());
    }
  }
  return m;
}

}  // namespace loopchains
