#include "torelli/slnrep.hpp"

#include <algorithm>
#include <deque>

#include "torelli/error.hpp"

namespace torelli {

Weight canonical_weight(Weight w) {
  if (w.empty()) return w;
  const int lo = *std::min_element(w.begin(), w.end());
  for (auto& x : w) x -= lo;
  return w;
}

Weight t_weight(std::size_t n, std::size_t i) {
  Weight w(n, 0);
  w.at(i - 1) = 1;
  return canonical_weight(std::move(w));
}

Weight add_weights(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw PreconditionError("weight", "length mismatch");
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i] + b[i];
  return canonical_weight(std::move(w));
}

Weight sub_weights(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw PreconditionError("weight", "length mismatch");
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i] - b[i];
  return canonical_weight(std::move(w));
}

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

const QVector& RepSpace::op_image(int l, int m, std::size_t b) const {
  auto it = ops_.find({l, m});
  if (it == ops_.end()) throw PreconditionError("rep", "no root operator x_" + std::to_string(l) + std::to_string(m));
  return it->second.at(b);
}

QVector RepSpace::apply(int l, int m, const QVector& v) const {
  auto it = ops_.find({l, m});
  if (it == ops_.end()) throw PreconditionError("rep", "no root operator x_" + std::to_string(l) + std::to_string(m));
  QVector out;
  for (const auto& [b, c] : v)
    for (const auto& [k, x] : it->second.at(b)) out.emplace_back(k, c * x);
  linalg::canonicalize(out);
  return out;
}

std::vector<std::size_t> RepSpace::weight_indices(const Weight& w) const {
  const Weight cw = canonical_weight(w);
  std::vector<std::size_t> idx;
  for (std::size_t b = 0; b < weights_.size(); ++b)
    if (weights_[b] == cw) idx.push_back(b);
  return idx;
}

std::map<Weight, std::vector<std::size_t>> RepSpace::weight_blocks() const {
  std::map<Weight, std::vector<std::size_t>> blocks;
  for (std::size_t b = 0; b < weights_.size(); ++b) blocks[weights_[b]].push_back(b);
  return blocks;
}

std::size_t RepSpace::pair_index(std::size_t dim, std::size_t a, std::size_t b) {
  if (!(a < b && b < dim)) throw PreconditionError("wedge", "pair index needs a < b < dim");
  return a * dim - a * (a + 1) / 2 + (b - a - 1);
}

RepSpace RepSpace::standard(std::size_t n) {
  if (n < 2) throw PreconditionError("rep", "sl_n needs n >= 2");
  RepSpace r;
  r.n_ = n;
  for (std::size_t i = 1; i <= n; ++i) {
    r.weights_.push_back(t_weight(n, i));
    r.labels_.push_back("e" + std::to_string(i));
  }
  for (int l = 1; l <= static_cast<int>(n); ++l)
    for (int m = 1; m <= static_cast<int>(n); ++m) {
      if (l == m) continue;
      OpTable t(n);
      t[m - 1] = {{static_cast<std::size_t>(l - 1), Rational(1)}};
      r.ops_.emplace(std::make_pair(l, m), std::move(t));
    }
  return r;
}

RepSpace RepSpace::dual(const RepSpace& x) {
  RepSpace r;
  r.n_ = x.n_;
  for (std::size_t b = 0; b < x.dim(); ++b) {
    Weight w = x.weights_[b];
    for (auto& e : w) e = -e;
    r.weights_.push_back(canonical_weight(std::move(w)));
    r.labels_.push_back(x.labels_[b] + "*");
  }
  for (const auto& [key, table] : x.ops_) {
    OpTable t(x.dim());
    // (x.f_b)(e_c) = -f_b(x e_c)
    for (std::size_t c = 0; c < x.dim(); ++c)
      for (const auto& [b, v] : table[c]) t[b].emplace_back(c, -v);
    for (auto& v : t) linalg::canonicalize(v);
    r.ops_.emplace(key, std::move(t));
  }
  return r;
}

QVector wedge(const QVector& u, const QVector& v, std::size_t dim) {
  QVector out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) {
      if (a == b) continue;
      if (a < b)
        out.emplace_back(RepSpace::pair_index(dim, a, b), x * y);
      else
        out.emplace_back(RepSpace::pair_index(dim, b, a), -(x * y));
    }
  linalg::canonicalize(out);
  return out;
}

RepSpace RepSpace::wedge2(const RepSpace& x) {
  RepSpace r;
  r.n_ = x.n_;
  const std::size_t d = x.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      r.weights_.push_back(add_weights(x.weights_[a], x.weights_[b]));
      r.labels_.push_back(x.labels_[a] + "^" + x.labels_[b]);
    }
  for (const auto& [key, table] : x.ops_) {
    OpTable t(r.dim());
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        const QVector ea{{a, Rational(1)}}, eb{{b, Rational(1)}};
        QVector img = wedge(table[a], eb, d);
        img = linalg::axpy(img, Rational(1), wedge(ea, table[b], d));
        t[pair_index(d, a, b)] = std::move(img);
      }
    r.ops_.emplace(key, std::move(t));
  }
  return r;
}

RepSpace RepSpace::tensor(const RepSpace& x, const RepSpace& y) {
  if (x.n_ != y.n_) throw PreconditionError("rep", "tensor of modules over different sl_n");
  RepSpace r;
  r.n_ = x.n_;
  const std::size_t dy = y.dim();
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t b = 0; b < dy; ++b) {
      r.weights_.push_back(add_weights(x.weights_[a], y.weights_[b]));
      r.labels_.push_back(x.labels_[a] + "⊗" + y.labels_[b]);
    }
  for (const auto& [key, tx] : x.ops_) {
    const OpTable& ty = y.ops_.at(key);
    OpTable t(r.dim());
    for (std::size_t a = 0; a < x.dim(); ++a)
      for (std::size_t b = 0; b < dy; ++b) {
        QVector img;
        for (const auto& [k, v] : tx[a]) img.emplace_back(k * dy + b, v);
        for (const auto& [k, v] : ty[b]) img.emplace_back(a * dy + k, v);
        linalg::canonicalize(img);
        t[a * dy + b] = std::move(img);
      }
    r.ops_.emplace(key, std::move(t));
  }
  return r;
}

std::optional<Weight> weight_of(const RepSpace& x, const QVector& v) {
  if (v.empty()) return std::nullopt;
  const Weight& w = x.weight(v.front().first);
  for (const auto& [b, c] : v)
    if (x.weight(b) != w) return std::nullopt;
  return w;
}

RepSpace RepSpace::subspace(const RepSpace& x, const std::vector<QVector>& vectors) {
  linalg::EchelonBasis<Rational> e(x.dim());
  for (const auto& v : vectors) e.insert(v);
  RepSpace r;
  r.n_ = x.n_;
  r.ambient_dim_ = x.dim();
  std::map<std::size_t, std::size_t> slot;  // pivot -> subspace index
  for (const auto& [p, row] : e.rows()) {
    const auto w = weight_of(x, row);
    if (!w) throw PreconditionError("rep", "subspace basis is not made of weight vectors");
    slot.emplace(p, r.embedding_.size());
    r.embedding_.push_back(row);
    r.weights_.push_back(*w);
    r.labels_.push_back(row.size() == 1 ? x.labels_[p] : "v" + std::to_string(r.embedding_.size()));
  }
  for (const auto& [key, table] : x.ops_) {
    OpTable t(r.dim());
    for (std::size_t k = 0; k < r.dim(); ++k) {
      const QVector img = x.apply(key.first, key.second, r.embedding_[k]);
      if (!e.reduce(img).empty())
        throw VerificationFailure("rep", "subspace is not stable under x_" + std::to_string(key.first) +
                                             std::to_string(key.second));
      QVector coords;
      for (const auto& [i, c] : img)
        if (auto it = slot.find(i); it != slot.end()) coords.emplace_back(it->second, c);
      linalg::canonicalize(coords);
      t[k] = std::move(coords);
    }
    r.ops_.emplace(key, std::move(t));
  }
  return r;
}

bool verify_action(const RepSpace& x) {
  const int n = static_cast<int>(x.n());
  for (int l = 1; l <= n; ++l)
    for (int m = 1; m <= n; ++m) {
      if (l == m) continue;
      const Weight shift = sub_weights(t_weight(x.n(), l), t_weight(x.n(), m));
      for (std::size_t b = 0; b < x.dim(); ++b) {
        const Weight target = add_weights(x.weight(b), shift);
        for (const auto& [k, c] : x.op_image(l, m, b))
          if (x.weight(k) != target) return false;
        if (l < m) {
          const QVector e{{b, Rational(1)}};
          QVector h = x.apply(l, m, x.apply(m, l, e));
          h = linalg::axpy(h, Rational(-1), x.apply(m, l, x.apply(l, m, e)));
          const Weight& w = x.weight(b);
          const int val = w[l - 1] - w[m - 1];
          QVector expect;
          if (val) expect.emplace_back(b, Rational(val));
          if (h != expect) return false;
        }
      }
    }
  return true;
}

RepSpace ambient_H_wedge2_dual(std::size_t n) {
  const RepSpace h = RepSpace::standard(n);
  return RepSpace::tensor(h, RepSpace::wedge2(RepSpace::dual(h)));
}

linalg::RatMatrix adjoint_trace_matrix(std::size_t n) {
  const std::size_t w2 = n * (n - 1) / 2;
  linalg::RatMatrix m(n, n * w2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::size_t col = a * w2 + RepSpace::pair_index(n, b, c);
        if (c == a) m.add(b, col, Rational(1));
        if (b == a) m.add(c, col, Rational(-1));
      }
  return m;
}

RepSpace build_V(std::size_t n) {
  if (n < 4)
    throw PreconditionError("build-V", "V is only used for n >= 4; for n = 3 the outer Torelli abelianization "
                                       "is not irreducible of this form");
  const RepSpace x = ambient_H_wedge2_dual(n);
  return RepSpace::subspace(x, linalg::kernel_basis_sparse(adjoint_trace_matrix(n)));
}

std::vector<QVector> maximal_vectors(const RepSpace& x, const std::optional<Weight>& w) {
  const int n = static_cast<int>(x.n());
  std::vector<QVector> out;
  auto blocks = x.weight_blocks();
  std::vector<std::pair<Weight, std::vector<std::size_t>>> todo;
  if (w) {
    auto it = blocks.find(canonical_weight(*w));
    if (it == blocks.end()) return out;
    todo.emplace_back(*it);
  } else {
    todo.assign(blocks.begin(), blocks.end());
  }
  for (const auto& [wt, idx] : todo) {
    // columns: basis vectors of the block; rows: stacked simple-root images
    std::vector<QVector> cols;
    for (std::size_t b : idx) {
      QVector c;
      for (int l = 1; l < n; ++l)
        for (const auto& [k, v] : x.op_image(l, l + 1, b)) c.emplace_back((l - 1) * x.dim() + k, v);
      linalg::canonicalize(c);
      cols.push_back(std::move(c));
    }
    const auto m = linalg::RatMatrix::from_rows((n - 1) * x.dim(), std::move(cols)).transpose();
    for (const auto& kv : linalg::kernel_basis_sparse(m)) {
      QVector v;
      for (const auto& [j, c] : kv) v.emplace_back(idx[j], c);
      out.push_back(std::move(v));
    }
  }
  return out;
}

linalg::EchelonBasis<Rational> generate_submodule(const RepSpace& x, const std::vector<QVector>& seeds) {
  const int n = static_cast<int>(x.n());
  linalg::EchelonBasis<Rational> span(x.dim());
  std::deque<QVector> queue;
  auto push = [&](const QVector& v) {
    QVector r = span.reduce(v);
    if (r.empty()) return;
    span.insert(r);
    queue.push_back(std::move(r));
  };
  for (const auto& s : seeds) push(s);
  if (span.rank() == 0) throw PreconditionError("submodule", "generator must be nonzero");
  while (!queue.empty()) {
    const QVector v = std::move(queue.front());
    queue.pop_front();
    for (int l = 1; l <= n; ++l)
      for (int m = 1; m <= n; ++m)
        if (l != m) push(x.apply(l, m, v));
  }
  return span;
}

linalg::EchelonBasis<Rational> generate_submodule(const RepSpace& x, const QVector& v) {
  return generate_submodule(x, std::vector<QVector>{v});
}

std::vector<QVector> weight_space(const RepSpace& x, const Weight& w) {
  std::vector<QVector> out;
  for (std::size_t b : x.weight_indices(w)) out.push_back({{b, Rational(1)}});
  return out;
}

Integer weyl_dim(const std::vector<unsigned>& hw, std::size_t n) {
  if (n < 2 || hw.size() != n - 1)
    throw PreconditionError("weyl-dim", "highest weight for sl_" + std::to_string(n) + " needs " +
                                            std::to_string(n - 1) + " entries");
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      unsigned long s = j - i;
      for (std::size_t k = i; k < j; ++k) s += hw[k];
      num *= s;
      den *= static_cast<unsigned long>(j - i);
    }
  return num / den;
}

std::vector<unsigned> dynkin_labels(const Weight& w) {
  std::vector<unsigned> a;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int d = w[i] - w[i + 1];
    if (d < 0) throw PreconditionError("dynkin", "weight " + weight_string(w) + " is not dominant");
    a.push_back(static_cast<unsigned>(d));
  }
  return a;
}

QVector exp_root_apply(const RepSpace& x, int l, int m, const Rational& c, const QVector& v) {
  QVector sum = v, term = v;
  for (std::size_t k = 1; !term.empty(); ++k) {
    if (k > x.dim() + 1) throw VerificationFailure("exp", "root operator is not nilpotent");
    term = x.apply(l, m, term);
    linalg::scale(term, Rational(c / static_cast<unsigned long>(k)));
    sum = linalg::axpy(sum, Rational(1), term);
  }
  return sum;
}

}  // namespace torelli
