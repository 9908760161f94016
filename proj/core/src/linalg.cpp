#include "torelli/linalg.hpp"

namespace torelli::linalg {

unsigned matrix_domain(const ExactMatrix& m) {
  unsigned domain = 1;
  for (const auto& row : m.row_data())
    for (const auto& [c, x] : row) {
      const unsigned k = x.conductor();
      if (k == 1 || k == domain) continue;
      if (domain != 1)
        throw DomainMismatch("linalg", "matrix mixes conductors " + std::to_string(domain) + " and " +
                                           std::to_string(k));
      domain = k;
    }
  return domain;
}

namespace {

using Dense = std::vector<std::vector<Integer>>;

// Fraction-free elimination; returns the rank and leaves the last pivot in
// `last_pivot` (the determinant for a full-rank square matrix, up to sign).
std::size_t bareiss(Dense a, Integer* det_out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out) *det_out = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // eliminate along the shorter side
  const IntMatrix& src = m;
  Dense d = (m.rows() <= m.cols()) ? src.to_dense() : src.transpose().to_dense();
  return bareiss(std::move(d), nullptr);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("linalg", "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Integer det;
  bareiss(m.to_dense(), &det);
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

IntMatrix to_integer_matrix(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r)) {
      if (x.get_den() != 1)
        throw PreconditionError("smith", "non-integer entry " + x.get_str() + " at (" + std::to_string(r) + "," +
                                             std::to_string(c) + ")");
      out.set(r, c, x.get_num());
    }
  return out;
}

namespace {

void row_swap(Dense& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
void col_swap(Dense& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}
// row_i += f * row_j
void row_add(Dense& a, std::size_t i, std::size_t j, const Integer& f) {
  for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] += f * a[j][c];
}
void col_add(Dense& a, std::size_t i, std::size_t j, const Integer& f) {
  for (auto& row : a) row[i] += f * row[j];
}

IntMatrix dense_to_matrix(const Dense& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_zero(d[r][c])) m.set(r, c, d[r][c]);
  return m;
}

Dense identity_dense(std::size_t n) {
  Dense d(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Dense a = m.to_dense();
  if (rows == 0) a.clear();
  Dense u = identity_dense(rows);  // u * m * v = a maintained throughout
  Dense v = identity_dense(cols);

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!is_zero(a[i][j]) && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == rows) goto done;  // trailing block is zero
      row_swap(a, t, pr);
      row_swap(u, t, pr);
      col_swap(a, t, pc);
      col_swap(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(a[i][t])) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_add(a, i, t, -q);
        row_add(u, i, t, -q);
        if (!is_zero(a[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(a[t][j])) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_add(a, j, t, -q);
        col_add(v, j, t, -q);
        if (!is_zero(a[t][j])) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_add(a, t, bad, Integer(1));
      row_add(u, t, bad, Integer(1));
    }
    if (sgn(a[t][t]) < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
done:
  SmithForm f{dense_to_matrix(u, rows, rows), dense_to_matrix(a, rows, cols), dense_to_matrix(v, cols, cols), {}};
  for (std::size_t t = 0; t < diag; ++t)
    if (!is_zero(a[t][t])) f.divisors.push_back(a[t][t]);
  return f;
}

}  // namespace torelli::linalg
