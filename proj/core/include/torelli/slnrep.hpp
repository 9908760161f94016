#pragma once

// Finite-dimensional sl_n(Q)-modules given by explicit root operators.
//
// Every RepSpace has a basis of weight vectors. A weight is an integer vector
// in t-coordinates taken modulo (1, ..., 1); the canonical representative has
// minimum entry 0. x_{lm} (l != m) is the elementary matrix E_{lm} acting on
// the standard module by e_m -> e_l; it shifts weights by t_l - t_m.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torelli/exact.hpp"
#include "torelli/linalg.hpp"

namespace torelli {

using Weight = std::vector<int>;
using QVector = linalg::SparseVector<Rational>;

Weight canonical_weight(Weight w);

/// t_i as a weight, 1-based.
Weight t_weight(std::size_t n, std::size_t i);
Weight add_weights(const Weight& a, const Weight& b);
Weight sub_weights(const Weight& a, const Weight& b);
std::string weight_string(const Weight& w);

class RepSpace {
 public:
  RepSpace() = default;

  std::size_t n() const { return n_; }
  std::size_t dim() const { return weights_.size(); }
  const Weight& weight(std::size_t b) const { return weights_.at(b); }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::string& label(std::size_t b) const { return labels_.at(b); }

  /// Image of basis vector b under x_{lm} (1-based l, m).
  const QVector& op_image(int l, int m, std::size_t b) const;
  QVector apply(int l, int m, const QVector& v) const;

  /// Basis indices with the given (canonicalized) weight.
  std::vector<std::size_t> weight_indices(const Weight& w) const;
  std::map<Weight, std::vector<std::size_t>> weight_blocks() const;

  /// For subspaces: basis vectors written in the ambient basis.
  const std::vector<QVector>& embedding() const { return embedding_; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  static RepSpace standard(std::size_t n);
  static RepSpace dual(const RepSpace& x);
  static RepSpace wedge2(const RepSpace& x);
  static RepSpace tensor(const RepSpace& x, const RepSpace& y);
  /// The span of `vectors` (weight vectors of X spanning an invariant
  /// subspace). The basis is the reduced echelon form, so the coordinates of a
  /// subspace vector are its entries at the pivots. Throws VerificationFailure
  /// if the span is not invariant.
  static RepSpace subspace(const RepSpace& x, const std::vector<QVector>& vectors);

  /// Index of the pair (a, b), a < b, in wedge2 order.
  static std::size_t pair_index(std::size_t dim, std::size_t a, std::size_t b);

 private:
  using OpTable = std::vector<QVector>;  // one image per basis vector
  std::size_t n_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, OpTable> ops_;
  std::vector<QVector> embedding_;
  std::size_t ambient_dim_ = 0;
};

/// Sum of c_B v_B wedges: the wedge of two vectors of X inside wedge2(X).
QVector wedge(const QVector& u, const QVector& v, std::size_t dim);

/// Weight of a nonzero weight vector; nullopt if the support mixes weights.
std::optional<Weight> weight_of(const RepSpace& x, const QVector& v);

/// True iff x_{lm} maps each weight space into the one shifted by t_l - t_m
/// and [x_{lm}, x_{ml}] acts on weight w by w_l - w_m.
bool verify_action(const RepSpace& x);

/// H ⊗ Λ²H*, the ambient space of V.
RepSpace ambient_H_wedge2_dual(std::size_t n);

/// ad*: H ⊗ Λ²H* -> H*, e_a ⊗ e_b*∧e_c* -> δ_{ca} e_b* - δ_{ba} e_c*.
linalg::RatMatrix adjoint_trace_matrix(std::size_t n);

/// V = ker ad*, n >= 4.
RepSpace build_V(std::size_t n);

/// Basis of {v : x_{l,l+1} v = 0 for all l}, optionally within one weight space.
std::vector<QVector> maximal_vectors(const RepSpace& x, const std::optional<Weight>& w = std::nullopt);

/// Smallest subspace containing v stable under every x_{lm}, in reduced
/// echelon form.
linalg::EchelonBasis<Rational> generate_submodule(const RepSpace& x, const QVector& v);
linalg::EchelonBasis<Rational> generate_submodule(const RepSpace& x, const std::vector<QVector>& seeds);

/// Basis of the weight-w subspace.
std::vector<QVector> weight_space(const RepSpace& x, const Weight& w);

/// Weyl dimension of V(Σ a_i λ_i) for sl_n; hw has n-1 entries.
Integer weyl_dim(const std::vector<unsigned>& hw, std::size_t n);

/// Highest weight a_i = w_i - w_{i+1}.
std::vector<unsigned> dynkin_labels(const Weight& w);

/// exp(c x_{lm}) applied to v (x_{lm} is nilpotent on every finite module).
QVector exp_root_apply(const RepSpace& x, int l, int m, const Rational& c, const QVector& v);

}  // namespace torelli
