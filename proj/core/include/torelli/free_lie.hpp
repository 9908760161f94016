#pragma once

// The free Lie algebra L_n on a Lyndon basis, embedded in the tensor algebra,
// and the Magnus expansion F_n -> Z<<X_1..X_n>> truncated at a fixed degree.
//
// Basis element P(w) for a Lyndon word w is the standard bracketing: a letter
// is itself, otherwise w = uv with v the longest proper Lyndon suffix and
// P(w) = [P(u), P(v)]. Its tensor expansion is w plus lexicographically larger
// words, which makes the change of basis from tensors triangular.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torelli/exact.hpp"
#include "torelli/linalg.hpp"
#include "torelli/word.hpp"

namespace torelli {

using LyndonWord = std::vector<int>;  // letters 1..n

/// Noncommutative polynomial, homogeneous or not; keys are letter sequences.
using Tensor = std::map<std::vector<int>, Rational>;

/// Truncation cap of every Magnus computation.
constexpr std::size_t kMaxMagnusDegree = 8;

bool is_lyndon(const LyndonWord& w);

/// Lyndon words of length s over 1..n in lexicographic order (cached).
const std::vector<LyndonWord>& lyndon_basis(std::size_t n, std::size_t s);

/// Position of a Lyndon word in lyndon_basis(n, |w|); throws if w is not Lyndon.
std::size_t lyndon_index(std::size_t n, const LyndonWord& w);

/// Necklace formula (1/s) sum_{d|s} mu(d) n^{s/d}.
std::size_t witt_dimension(std::size_t n, std::size_t s);

/// Standard factorization w = u v, |w| >= 2.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w);

/// Bracket notation of P(w), e.g. "[1,[1,2]]".
std::string bracketing_string(const LyndonWord& w);

/// Tensor expansion of P(w) (cached).
const Tensor& lyndon_tensor(std::size_t n, const LyndonWord& w);

/// Homogeneous element of L_n^s, coordinates on lyndon_basis(n, s).
class LieElement {
 public:
  LieElement() = default;
  LieElement(std::size_t rank, std::size_t degree, linalg::SparseVector<Rational> coeffs = {});

  static LieElement zero(std::size_t rank, std::size_t degree) { return LieElement(rank, degree); }
  static LieElement basis(std::size_t rank, const LyndonWord& w, const Rational& c = 1);
  /// x̄_i, 1-based.
  static LieElement generator(std::size_t rank, int i);

  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  const linalg::SparseVector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(const LyndonWord& w) const;

  Tensor to_tensor() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  LieElement operator-() const;
  friend LieElement operator*(const Rational& c, LieElement a);
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  /// e.g. "2*[1,2] - [1,3]"; "0" for zero.
  std::string to_string() const;

 private:
  void check_compatible(const LieElement& o) const;
  std::size_t rank_ = 0;
  std::size_t degree_ = 0;
  linalg::SparseVector<Rational> coeffs_;
};

/// Converts a homogeneous tensor known to be a Lie polynomial. Throws
/// VerificationFailure if it is not.
LieElement lie_from_tensor(std::size_t rank, std::size_t degree, const Tensor& t);

Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor tensor_commutator(const Tensor& a, const Tensor& b);
void tensor_axpy(Tensor& y, const Rational& c, const Tensor& x);

LieElement bracket(const LieElement& a, const LieElement& b);

/// Magnus expansion x_i -> 1 + X_i truncated above `degree`.
class MagnusSeries {
 public:
  MagnusSeries(std::size_t rank, std::size_t degree);

  static MagnusSeries of(const Word& w, std::size_t degree);

  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }

  /// Right multiplication by (1+X_i)^{±1}.
  void multiply_letter(int letter);

  /// Coefficient of the monomial X_{w_1}..X_{w_k}.
  const Integer& coefficient(const std::vector<int>& word) const;

  /// Degree-d part as a tensor (d >= 1).
  Tensor part(std::size_t d) const;

  bool vanishes_in_degree(std::size_t d) const;

 private:
  std::size_t rank_;
  std::size_t degree_;
  std::vector<std::vector<Integer>> parts_;  // parts_[d] has rank^d entries, base-rank digits
};

/// Least d >= 1 with a nonzero degree-d Magnus term, searched up to `cap`;
/// nullopt for the identity or when no term appears by `cap`.
std::optional<std::size_t> magnus_lowest_degree(const Word& w, std::size_t cap);

/// w in Γ^s(F_n), by the Magnus criterion.
bool gamma_membership(const Word& w, std::size_t s);

/// Class of w in gr^s = L_n^s. Requires w in Γ^s.
LieElement magnus_class(const Word& w, std::size_t s);

/// True iff c -> ([c, x̄_1], ..., [c, x̄_n]) is injective on L_n^s for all s <= s_max.
bool center_check(std::size_t n, std::size_t s_max);

}  // namespace torelli
