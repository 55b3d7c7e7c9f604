// Dense and sparse matrices over an exact field, with elimination kernels.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "cohom/field.hpp"

namespace cohom {

template <class F>
using Vec = std::vector<F>;

template <class F>
struct Dense {
  int r = 0, c = 0;
  std::vector<F> a;

  Dense() = default;
  Dense(int rows, int cols) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols, FieldOps<F>::zero()) {}
  F& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
  const F& operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }

  static Dense identity(int n) {
    Dense m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = FieldOps<F>::one();
    return m;
  }
  Vec<F> col(int j) const {
    Vec<F> v(r);
    for (int i = 0; i < r; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const Vec<F>& v) {
    for (int i = 0; i < r; ++i) (*this)(i, j) = v[i];
  }
  static Dense from_cols(const std::vector<Vec<F>>& cols, int rows) {
    Dense m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c; ++j) m.set_col(j, cols[j]);
    return m;
  }
  Dense transpose() const {
    Dense t(c, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend Dense operator*(const Dense& x, const Dense& y) {
    assert(x.c == y.r);
    Dense z(x.r, y.c);
    for (int i = 0; i < x.r; ++i)
      for (int k = 0; k < x.c; ++k) {
        const F& xv = x(i, k);
        if (FieldOps<F>::is_zero(xv)) continue;
        for (int j = 0; j < y.c; ++j) z(i, j) += xv * y(k, j);
      }
    return z;
  }
  Vec<F> apply(const Vec<F>& v) const {
    Vec<F> out(r, FieldOps<F>::zero());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (!FieldOps<F>::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  bool is_zero() const {
    for (const auto& x : a)
      if (!FieldOps<F>::is_zero(x)) return false;
    return true;
  }
  friend bool operator==(const Dense& x, const Dense& y) { return x.r == y.r && x.c == y.c && x.a == y.a; }
};

// Row reduction to reduced echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref_inplace(Dense<F>& m) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int p = -1;
    for (int i = row; i < m.r; ++i)
      if (!FieldOps<F>::is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.c; ++j) std::swap(m(p, j), m(row, j));
    F inv = FieldOps<F>::inv(m(row, col));
    for (int j = col; j < m.c; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.r; ++i) {
      if (i == row || FieldOps<F>::is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (int j = col; j < m.c; ++j)
        if (!FieldOps<F>::is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

// Forward elimination only; returns rank.
template <class F>
int rank_inplace(Dense<F>& m) {
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int p = -1;
    for (int i = row; i < m.r; ++i)
      if (!FieldOps<F>::is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < m.c; ++j) std::swap(m(p, j), m(row, j));
    F inv = FieldOps<F>::inv(m(row, col));
    for (int i = row + 1; i < m.r; ++i) {
      if (FieldOps<F>::is_zero(m(i, col))) continue;
      F f = m(i, col) * inv;
      for (int j = col; j < m.c; ++j)
        if (!FieldOps<F>::is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    ++row;
  }
  return row;
}

template <class F>
int rank(Dense<F> m) {
  if (m.r > m.c) m = m.transpose();
  return rank_inplace(m);
}

// Fraction-free (Bareiss) rank over the rationals.
int bareiss_rank(const Dense<Rational>& m);

// Columns form a basis of {x : m x = 0}.
template <class F>
Dense<F> kernel(const Dense<F>& m) {
  Dense<F> e = m;
  std::vector<int> piv = rref_inplace(e);
  std::vector<char> is_piv(m.c, 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<int> fre;
  for (int j = 0; j < m.c; ++j)
    if (!is_piv[j]) fre.push_back(j);
  Dense<F> k(m.c, static_cast<int>(fre.size()));
  for (size_t t = 0; t < fre.size(); ++t) {
    k(fre[t], static_cast<int>(t)) = FieldOps<F>::one();
    for (size_t i = 0; i < piv.size(); ++i) k(piv[i], static_cast<int>(t)) = -e(static_cast<int>(i), fre[t]);
  }
  return k;
}

// Indices of a maximal linearly independent prefix-greedy subset of columns.
template <class F>
std::vector<int> independent_columns(const Dense<F>& m) {
  Dense<F> e = m;
  return rref_inplace(e);
}

// Basis (as columns) of the column space, chosen greedily among the given columns.
template <class F>
Dense<F> column_basis(const Dense<F>& m) {
  std::vector<int> idx = independent_columns(m);
  Dense<F> b(m.r, static_cast<int>(idx.size()));
  for (size_t t = 0; t < idx.size(); ++t)
    for (int i = 0; i < m.r; ++i) b(i, static_cast<int>(t)) = m(i, idx[t]);
  return b;
}

// Left inverse data for a full-column-rank matrix B: coordinates of x in span(B).
template <class F>
struct Coordinates {
  std::vector<int> rows;  // pivot rows
  Dense<F> inv;           // inverse of B restricted to pivot rows
  int n = 0;

  explicit Coordinates(const Dense<F>& b) : n(b.c) {
    Dense<F> t = b.transpose();
    rows = independent_columns(t);
    if (static_cast<int>(rows.size()) != b.c) throw std::runtime_error("Coordinates: basis is not independent");
    Dense<F> sq(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sq(i, j) = b(rows[i], j);
      sq(i, n + i) = FieldOps<F>::one();
    }
    rref_inplace(sq);
    inv = Dense<F>(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = sq(i, n + j);
  }
  Vec<F> operator()(const Vec<F>& x) const {
    Vec<F> y(n, FieldOps<F>::zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!FieldOps<F>::is_zero(x[rows[j]])) y[i] += inv(i, j) * x[rows[j]];
    return y;
  }
};

// Row-major sparse matrix.
template <class F>
struct Sparse {
  using Entry = std::pair<int, F>;
  int r = 0, c = 0;
  std::vector<std::vector<Entry>> rows;

  Sparse() = default;
  Sparse(int nr, int nc) : r(nr), c(nc), rows(nr) {}

  static Sparse identity(int n, const F& s = FieldOps<F>::one()) {
    Sparse m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i].push_back({i, s});
    return m;
  }
  static Sparse from_dense(const Dense<F>& d) {
    Sparse m(d.r, d.c);
    for (int i = 0; i < d.r; ++i)
      for (int j = 0; j < d.c; ++j)
        if (!FieldOps<F>::is_zero(d(i, j))) m.rows[i].push_back({j, d(i, j)});
    return m;
  }
  // Accumulates duplicates, drops zeros, sorts columns.
  static Sparse from_triplets(int nr, int nc, std::vector<std::tuple<int, int, F>> t) {
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
      return std::get<0>(x) != std::get<0>(y) ? std::get<0>(x) < std::get<0>(y) : std::get<1>(x) < std::get<1>(y);
    });
    Sparse m(nr, nc);
    for (auto& [i, j, v] : t) {
      auto& row = m.rows[i];
      if (!row.empty() && row.back().first == j)
        row.back().second += v;
      else
        row.push_back({j, v});
    }
    for (auto& row : m.rows)
      row.erase(std::remove_if(row.begin(), row.end(), [](const Entry& e) { return FieldOps<F>::is_zero(e.second); }),
                row.end());
    return m;
  }
  Dense<F> to_dense() const {
    Dense<F> d(r, c);
    for (int i = 0; i < r; ++i)
      for (const auto& [j, v] : rows[i]) d(i, j) = v;
    return d;
  }
  size_t nnz() const {
    size_t s = 0;
    for (const auto& row : rows) s += row.size();
    return s;
  }
  bool is_zero() const { return nnz() == 0; }
  F at(int i, int j) const {
    for (const auto& [k, v] : rows[i])
      if (k == j) return v;
    return FieldOps<F>::zero();
  }
  Vec<F> apply(const Vec<F>& x) const {
    Vec<F> y(r, FieldOps<F>::zero());
    for (int i = 0; i < r; ++i)
      for (const auto& [j, v] : rows[i])
        if (!FieldOps<F>::is_zero(x[j])) y[i] += v * x[j];
    return y;
  }
  Sparse transpose() const {
    Sparse t(c, r);
    for (int i = 0; i < r; ++i)
      for (const auto& [j, v] : rows[i]) t.rows[j].push_back({i, v});
    return t;
  }
  Sparse scaled(const F& s) const {
    Sparse m = *this;
    for (auto& row : m.rows)
      for (auto& e : row) e.second *= s;
    if (FieldOps<F>::is_zero(s))
      for (auto& row : m.rows) row.clear();
    return m;
  }
  friend Sparse operator+(const Sparse& x, const Sparse& y) {
    assert(x.r == y.r && x.c == y.c);
    Sparse z(x.r, x.c);
    for (int i = 0; i < x.r; ++i) {
      const auto& a = x.rows[i];
      const auto& b = y.rows[i];
      auto& out = z.rows[i];
      size_t p = 0, q = 0;
      while (p < a.size() || q < b.size()) {
        if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
          out.push_back(a[p++]);
        } else if (p == a.size() || b[q].first < a[p].first) {
          out.push_back(b[q++]);
        } else {
          F s = a[p].second + b[q].second;
          if (!FieldOps<F>::is_zero(s)) out.push_back({a[p].first, s});
          ++p;
          ++q;
        }
      }
    }
    return z;
  }
  friend Sparse operator-(const Sparse& x, const Sparse& y) { return x + y.scaled(-FieldOps<F>::one()); }
  friend Sparse operator*(const Sparse& x, const Sparse& y) {
    assert(x.c == y.r);
    Sparse z(x.r, y.c);
    std::map<int, F> acc;
    for (int i = 0; i < x.r; ++i) {
      acc.clear();
      for (const auto& [k, v] : x.rows[i])
        for (const auto& [j, w] : y.rows[k]) {
          auto it = acc.find(j);
          if (it == acc.end())
            acc.emplace(j, v * w);
          else
            it->second += v * w;
        }
      for (auto& [j, s] : acc)
        if (!FieldOps<F>::is_zero(s)) z.rows[i].push_back({j, s});
    }
    return z;
  }
  friend bool operator==(const Sparse& x, const Sparse& y) {
    if (x.r != y.r || x.c != y.c) return false;
    for (int i = 0; i < x.r; ++i) {
      if (x.rows[i].size() != y.rows[i].size()) return false;
      for (size_t k = 0; k < x.rows[i].size(); ++k)
        if (x.rows[i][k].first != y.rows[i][k].first || x.rows[i][k].second != y.rows[i][k].second) return false;
    }
    return true;
  }
  template <class G>
  Sparse<G> convert() const {
    Sparse<G> m(r, c);
    for (int i = 0; i < r; ++i) {
      m.rows[i].reserve(rows[i].size());
      for (const auto& [j, v] : rows[i]) m.rows[i].push_back({j, FieldOps<G>::from(v)});
    }
    return m;
  }
};

template <class F>
Sparse<F> commutator(const Sparse<F>& x, const Sparse<F>& y) {
  return x * y - y * x;
}

// Kronecker product x (tensor) y.
template <class F>
Sparse<F> kron(const Sparse<F>& x, const Sparse<F>& y) {
  Sparse<F> z(x.r * y.r, x.c * y.c);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < y.r; ++k) {
      auto& out = z.rows[i * y.r + k];
      for (const auto& [j, v] : x.rows[i])
        for (const auto& [l, w] : y.rows[k]) out.push_back({j * y.c + l, v * w});
    }
  return z;
}

// Block diagonal sum.
template <class F>
Sparse<F> block_diag(const Sparse<F>& x, const Sparse<F>& y) {
  Sparse<F> z(x.r + y.r, x.c + y.c);
  for (int i = 0; i < x.r; ++i) z.rows[i] = x.rows[i];
  for (int i = 0; i < y.r; ++i)
    for (const auto& [j, v] : y.rows[i]) z.rows[x.r + i].push_back({x.c + j, v});
  return z;
}

// [[a, b], [c, d]] from four equally sized blocks.
template <class F>
Sparse<F> block2(const Sparse<F>& a, const Sparse<F>& b, const Sparse<F>& c, const Sparse<F>& d) {
  Sparse<F> z(a.r + c.r, a.c + b.c);
  for (int i = 0; i < a.r; ++i) {
    z.rows[i] = a.rows[i];
    for (const auto& [j, v] : b.rows[i]) z.rows[i].push_back({a.c + j, v});
  }
  for (int i = 0; i < c.r; ++i) {
    auto& out = z.rows[a.r + i];
    out = c.rows[i];
    for (const auto& [j, v] : d.rows[i]) out.push_back({c.c + j, v});
  }
  return z;
}

template <class F>
F dot(const Vec<F>& x, const Vec<F>& y) {
  F s = FieldOps<F>::zero();
  for (size_t i = 0; i < x.size(); ++i)
    if (!FieldOps<F>::is_zero(x[i]) && !FieldOps<F>::is_zero(y[i])) s += x[i] * y[i];
  return s;
}

template <class F>
bool is_zero_vec(const Vec<F>& x) {
  for (const auto& v : x)
    if (!FieldOps<F>::is_zero(v)) return false;
  return true;
}

template <class G, class F>
Vec<G> convert_vec(const Vec<F>& x) {
  Vec<G> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = FieldOps<G>::from(x[i]);
  return y;
}

template <class G, class F>
Dense<G> convert_dense(const Dense<F>& x) {
  Dense<G> y(x.r, x.c);
  for (size_t i = 0; i < x.a.size(); ++i) y.a[i] = FieldOps<G>::from(x.a[i]);
  return y;
}

}  // namespace cohom
