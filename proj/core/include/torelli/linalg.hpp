#pragma once

// Exact sparse linear algebra over Q, Z and Q(zeta_m).
//
// Vectors are sorted (index, value) lists with no stored zeros; matrices are
// row-major lists of such vectors. Every algorithm iterates in index order,
// so results never depend on insertion order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "torelli/error.hpp"
#include "torelli/exact.hpp"

namespace torelli::linalg {

template <class T>
using SparseVector = std::vector<std::pair<std::size_t, T>>;

/// Builds a sparse vector from a dense one, dropping zeros.
template <class T>
SparseVector<T> sparsify(const std::vector<T>& dense) {
  SparseVector<T> v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) v.emplace_back(i, dense[i]);
  return v;
}

template <class T>
std::vector<T> densify(const SparseVector<T>& v, std::size_t dim) {
  std::vector<T> d(dim, T(0));
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

/// Sorts by index, sums duplicates and drops zeros.
template <class T>
void canonicalize(SparseVector<T>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector<T> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
  v = std::move(out);
}

/// y + a*x, merged in index order.
template <class T>
SparseVector<T> axpy(const SparseVector<T>& y, const T& a, const SparseVector<T>& x) {
  SparseVector<T> r;
  r.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      r.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      r.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      T s = iy->second + a * ix->second;
      if (!is_zero(s)) r.emplace_back(iy->first, std::move(s));
      ++iy;
      ++ix;
    }
  }
  return r;
}

template <class T>
void scale(SparseVector<T>& v, const T& a) {
  for (auto& e : v) e.second *= a;
  std::erase_if(v, [](const auto& e) { return is_zero(e.second); });
}

template <class T>
const T* lookup(const SparseVector<T>& v, std::size_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != v.end() && it->first == i) ? &it->second : nullptr;
}

template <class T>
T dot(const SparseVector<T>& a, const SparseVector<T>& b) {
  T s(0);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else
      s += (ia++)->second * (ib++)->second;
  }
  return s;
}

/// Sparse exact matrix. Rows are kept canonical (sorted, no zeros).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, T(1));
    return m;
  }

  static Matrix from_dense(const std::vector<std::vector<T>>& d, std::size_t cols_if_empty = 0) {
    const std::size_t c = d.empty() ? cols_if_empty : d.front().size();
    Matrix m(d.size(), c);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i].size() != c) throw PreconditionError("linalg", "ragged dense matrix");
      m.data_[i] = sparsify(d[i]);
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, std::vector<SparseVector<T>> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      canonicalize(rows[i]);
      if (!rows[i].empty() && rows[i].back().first >= cols)
        throw PreconditionError("linalg", "row entry beyond column count");
      m.data_[i] = std::move(rows[i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const SparseVector<T>& row(std::size_t r) const { return data_.at(r); }
  const std::vector<SparseVector<T>>& row_data() const { return data_; }

  T at(std::size_t r, std::size_t c) const {
    check(r, c);
    const T* p = lookup(data_[r], c);
    return p ? *p : T(0);
  }

  void set(std::size_t r, std::size_t c, T value) {
    check(r, c);
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
    const bool present = it != row.end() && it->first == c;
    if (is_zero(value)) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(value);
    } else {
      row.insert(it, {c, std::move(value)});
    }
  }

  void add(std::size_t r, std::size_t c, const T& value) { set(r, c, at(r, c) + value); }

  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& r : data_) k += r.size();
    return k;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, x] : data_[r]) t.data_[c].emplace_back(r, x);
    return t;
  }

  /// M * v for a sparse column vector v.
  SparseVector<T> apply(const SparseVector<T>& v) const {
    SparseVector<T> out;
    for (std::size_t r = 0; r < rows_; ++r) {
      T s = dot(data_[r], v);
      if (!is_zero(s)) out.emplace_back(r, std::move(s));
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("linalg", "matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      SparseVector<T> acc;
      for (const auto& [k, x] : a.data_[r]) acc = axpy(acc, x, b.data_[k]);
      p.data_[r] = std::move(acc);
    }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<std::vector<T>> to_dense() const {
    std::vector<std::vector<T>> d;
    d.reserve(rows_);
    for (const auto& r : data_) d.push_back(densify(r, cols_));
    return d;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw PreconditionError("linalg", "matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector<T>> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using ExactMatrix = Matrix<ExactScalar>;

/// Incrementally maintained reduced row echelon basis of a subspace of T^dim.
/// Every stored row has leading coefficient 1 at its pivot, and no row has a
/// nonzero entry in another row's pivot column.
template <class T>
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Remainder of v modulo the span; supported on non-pivot columns only.
  SparseVector<T> reduce(SparseVector<T> v) const {
    // Rows are mutually reduced, so one pass over the pivots of v suffices.
    std::vector<std::pair<std::size_t, T>> hits;
    for (const auto& [i, x] : v)
      if (rows_.count(i)) hits.emplace_back(i, x);
    for (const auto& [p, x] : hits) v = axpy(v, T(-x), rows_.at(p));
    return v;
  }

  bool contains(const SparseVector<T>& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false if v was already in it.
  bool insert(SparseVector<T> v) {
    if (!v.empty() && v.back().first >= dim_) throw PreconditionError("linalg", "vector beyond ambient dimension");
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::size_t pivot = v.front().first;
    const T inv = T(1) / v.front().second;
    scale(v, inv);
    for (auto& [p, row] : rows_) {
      const T* x = lookup(row, pivot);
      if (x) row = axpy(row, T(-*x), v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  /// pivot column -> row
  const std::map<std::size_t, SparseVector<T>>& rows() const { return rows_; }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& [k, r] : rows_) p.push_back(k);
    return p;
  }

  /// Coordinates of a vector known to lie in the span, w.r.t. rows() order.
  /// Throws if v is not in the span.
  std::vector<T> coordinates(const SparseVector<T>& v) const {
    std::vector<T> c;
    c.reserve(rows_.size());
    SparseVector<T> check;
    for (const auto& [p, row] : rows_) {
      const T* x = lookup(v, p);
      c.push_back(x ? *x : T(0));
      if (x) check = axpy(check, *x, row);
    }
    if (check != v) throw PreconditionError("linalg", "vector not in span");
    return c;
  }

 private:
  std::size_t dim_ = 0;
  std::map<std::size_t, SparseVector<T>> rows_;
};

/// Conductor shared by all entries (1 if all rational); DomainMismatch if two
/// different nontrivial conductors appear.
unsigned matrix_domain(const ExactMatrix& m);

namespace detail {

template <class T>
void check_domain(const Matrix<T>&) {}

inline void check_domain(const ExactMatrix& m) { (void)matrix_domain(m); }

}  // namespace detail

/// Rank over the fraction field, by exact pivoting.
template <class T>
std::size_t rank(const Matrix<T>& m) {
  detail::check_domain(m);
  EchelonBasis<T> e(m.cols());
  for (const auto& r : m.row_data()) e.insert(r);
  return e.rank();
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

/// Reduced row echelon form of the row space.
template <class T>
EchelonBasis<T> row_echelon(const Matrix<T>& m) {
  detail::check_domain(m);
  EchelonBasis<T> e(m.cols());
  for (const auto& r : m.row_data()) e.insert(r);
  return e;
}

/// Basis of the right null space, one vector per non-pivot column, in
/// increasing free-column order. Each vector has a 1 at its free column.
template <class T>
std::vector<SparseVector<T>> kernel_basis_sparse(const Matrix<T>& m) {
  const EchelonBasis<T> e = row_echelon(m);
  const auto& rows = e.rows();
  std::vector<SparseVector<T>> basis;
  // columns -> list of (pivot, coefficient) for quick assembly
  std::map<std::size_t, SparseVector<T>> by_col;
  for (const auto& [p, row] : rows)
    for (const auto& [c, x] : row)
      if (c != p) by_col[c].emplace_back(p, x);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (rows.count(f)) continue;
    SparseVector<T> v;
    if (auto it = by_col.find(f); it != by_col.end())
      for (const auto& [p, x] : it->second) v.emplace_back(p, T(-x));
    v.emplace_back(f, T(1));
    canonicalize(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  std::vector<std::vector<T>> out;
  for (const auto& v : kernel_basis_sparse(m)) out.push_back(densify(v, m.cols()));
  return out;
}

/// Determinant of a square matrix over a commutative ring by cofactor
/// expansion along the sparsest row. Intended for the small minors of
/// presentation matrices.
template <class T>
T determinant_cofactor(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  if (n == 1) return a[0][0];
  std::size_t best = 0, best_nz = n + 1;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t nz = 0;
    for (const auto& x : a[r]) nz += is_zero(x) ? 0 : 1;
    if (nz < best_nz) best_nz = nz, best = r;
  }
  T det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(a[best][c])) continue;
    std::vector<std::vector<T>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == best) continue;
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(std::move(row));
    }
    T term = a[best][c] * determinant_cofactor(sub);
    if ((best + c) % 2) det -= term;
    else det += term;
  }
  return det;
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// All size x size minors, ordered lexicographically by (row set, column set).
/// T only needs ring operations and is_zero (works for LaurentPoly).
template <class T>
std::vector<T> minors(const std::vector<std::vector<T>>& a, std::size_t cols, std::size_t size) {
  const std::size_t rows = a.size();
  if (size == 0 || size > std::min(rows, cols))
    throw PreconditionError("minors", "minor size " + std::to_string(size) + " out of range for " +
                                          std::to_string(rows) + "x" + std::to_string(cols));
  std::vector<T> out;
  const auto rsets = subsets(rows, size);
  const auto csets = subsets(cols, size);
  for (const auto& rs : rsets)
    for (const auto& cs : csets) {
      std::vector<std::vector<T>> sub;
      for (auto r : rs) {
        std::vector<T> row;
        for (auto c : cs) row.push_back(a[r][c]);
        sub.push_back(std::move(row));
      }
      out.push_back(determinant_cofactor(sub));
    }
  return out;
}

template <class T>
std::vector<T> minors(const Matrix<T>& m, std::size_t size) {
  detail::check_domain(m);
  return minors(m.to_dense(), m.cols(), size);
}

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> divisors;  // nonzero diagonal entries of D
};

/// Throws PreconditionError when a rational matrix has non-integral entries.
IntMatrix to_integer_matrix(const RatMatrix& m);

SmithForm smith_normal_form(const IntMatrix& m);

/// Determinant of a square integer matrix (Bareiss).
Integer determinant(const IntMatrix& m);

}  // namespace torelli::linalg
