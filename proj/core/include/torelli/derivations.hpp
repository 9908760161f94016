#pragma once

#include <cstddef>
#include <vector>

#include "torelli/free_lie.hpp"
#include "torelli/linalg.hpp"
#include "torelli/word.hpp"

namespace torelli {

/// Degree-s derivation of L_n, stored by its values on x̄_1..x̄_n (each of
/// degree s+1) and extended by the Leibniz rule.
class GradedDerivation {
 public:
  GradedDerivation() = default;
  GradedDerivation(std::size_t rank, std::size_t degree);
  GradedDerivation(std::size_t rank, std::size_t degree, std::vector<LieElement> images);

  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  const std::vector<LieElement>& images() const { return images_; }
  bool is_zero() const;

  /// Coordinates in Der^s = (L_n^{s+1})^n: block i holds the image of x̄_{i+1}.
  linalg::SparseVector<Rational> coordinates() const;
  static GradedDerivation from_coordinates(std::size_t rank, std::size_t degree,
                                           const linalg::SparseVector<Rational>& v);

  GradedDerivation& operator+=(const GradedDerivation& o);
  friend GradedDerivation operator+(GradedDerivation a, const GradedDerivation& b) { return a += b; }
  friend GradedDerivation operator-(const GradedDerivation& a, const GradedDerivation& b);
  friend GradedDerivation operator*(const Rational& c, const GradedDerivation& d);
  friend bool operator==(const GradedDerivation& a, const GradedDerivation& b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.images_ == b.images_;
  }

 private:
  std::size_t rank_ = 0;
  std::size_t degree_ = 0;
  std::vector<LieElement> images_;
};

/// dim Der^s(L_n) = n * witt(n, s+1).
std::size_t derivation_space_dim(std::size_t n, std::size_t s);

LieElement derivation_apply(const GradedDerivation& d, const LieElement& a);

/// Inner derivation x -> [a, x].
GradedDerivation ad(const LieElement& a);

/// δ(x̄_i), 1-based.
const LieElement& ev(const GradedDerivation& d, std::size_t i);

/// x̄ -> class of α(x) x^{-1} in L^{s+1}. Requires α in F^s.
GradedDerivation johnson_image(const Endo& alpha, std::size_t s);

/// L_{n-1} -> L_n, letters kept.
LieElement lie_embed(const LieElement& a, std::size_t rank);

/// The section on Lyndon words: a letter j is α_{n j}, a standard bracketing
/// [u, v] is the group commutator of the images of u and v. n = |alphabet|+1.
Endo psi_section(const LyndonWord& w, std::size_t n);

/// ψ(w) = Σ c_w J(section(w)), for w in L_{n-1}^s with n = w.rank() + 1.
GradedDerivation psi_image(const LieElement& w, std::size_t s);

/// Normal form of δ modulo inner derivations: the orthogonal projection of the
/// coordinate vector onto the complement of im(ad) under the standard dot
/// product.
struct OuterDerivationClass {
  GradedDerivation representative;
  linalg::SparseVector<Rational> normal_form;
  bool is_zero() const { return normal_form.empty(); }
};

OuterDerivationClass outer_reduce(const GradedDerivation& d);

/// Integer matrix of ad: L_n^s -> Der^s, one row per Lyndon basis element.
linalg::IntMatrix ad_matrix(std::size_t n, std::size_t s);

/// Rank of the degree-1 Johnson images of all Magnus generators.
std::size_t pettet_rank(std::size_t n);

/// Rank of im(ad) inside Der^s.
std::size_t inner_rank(std::size_t n, std::size_t s);

/// Outcome of the exact checks around ψ for one (n, s).
struct PsiCheck {
  std::size_t n = 0, s = 0;
  std::size_t basis_size = 0;
  bool lower_evaluations_vanish = true;  // ev_i ψ(w) = 0 for i < n
  int sign = 0;                          // ev_n ψ(w) = sign * [x̄_n, w] for all w, 0 if inconsistent
  std::size_t rank_psi = 0, rank_ad = 0, rank_joint = 0;
  std::size_t rank_ev_n = 0;  // rank of ev_n ∘ ψ
  bool outer_nonzero = true;  // outer_reduce(ψ(w)) ≠ 0 for every basis w
};

PsiCheck psi_check(std::size_t n, std::size_t s);

}  // namespace torelli
