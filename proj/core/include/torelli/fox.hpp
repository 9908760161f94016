#pragma once

// Fox calculus over Z[Z^k], Alexander matrices and polynomials, twisted
// first Betti numbers at exact characters, and the Alexander invariant of
// F_n realized as the kernel of the boundary map R^n -> R.

#include <cstddef>
#include <string>
#include <vector>

#include "torelli/laurent.hpp"
#include "torelli/linalg.hpp"
#include "torelli/word.hpp"

namespace torelli {

/// Abelianized Fox derivative ∂w/∂x_i in Z[t_1^{±1}..t_n^{±1}], n = rank of w.
LaurentPoly fox_derivative_ab(const Word& w, std::size_t i);

/// Free part of G_ab for G = <x_1..x_n | relators>. Computed from the Smith
/// form of the exponent-sum matrix; torsion coordinates are dropped.
struct Abelianization {
  std::size_t generators = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;                 // elementary divisors > 1
  std::vector<LaurentPoly::Exponent> images;    // image of x_i in Z^free_rank
};

Abelianization abelianize(const Presentation& p);

struct AlexanderMatrix {
  Abelianization ab;
  /// relators x generators, entries over Z[Z^free_rank].
  std::vector<std::vector<LaurentPoly>> entries;
  /// (x̄_1 - 1, ..., x̄_n - 1) over the same ring.
  std::vector<LaurentPoly> boundary;
};

AlexanderMatrix alexander_matrix(const Presentation& p);

struct AlexanderPolynomial {
  LaurentPoly delta;          // canonical unit form
  std::size_t free_rank = 0;
  bool torsion_dropped = false;
  /// True when the matrix has more relators than generators - 1, so the first
  /// elementary ideal was taken over all (n-1)-minors of the raw Fox matrix.
  bool excess_relators = false;
};

/// gcd of the (n-1)-minors of the Fox matrix. Throws UnsupportedArity when
/// the free rank exceeds the gcd cap.
AlexanderPolynomial alexander_polynomial(const Presentation& p);

/// True iff rho(r) = 1 for every relator (rho given on the generators).
bool is_character_of(const Presentation& p, const Character& rho);

/// dim H_1 of C_2 -> C_1 -> C_0 twisted by rho. Throws PreconditionError if rho
/// does not factor through G.
std::size_t twisted_betti1(const Presentation& p, const Character& rho);

bool cv_membership(const Presentation& p, const Character& rho, std::size_t d);

/// Element of ker(∂_1: R^n -> R), R = Z[t_1^{±1}..t_n^{±1}].
class BFnElement {
 public:
  BFnElement() = default;
  explicit BFnElement(std::size_t rank);
  BFnElement(std::size_t rank, std::vector<LaurentPoly> entries);

  std::size_t rank() const { return rank_; }
  const std::vector<LaurentPoly>& entries() const { return v_; }
  const LaurentPoly& operator[](std::size_t i) const { return v_.at(i); }
  bool is_zero() const;

  /// Σ v_i (x̄_i - 1).
  LaurentPoly boundary() const;
  bool in_kernel() const { return boundary().is_zero(); }

  BFnElement& operator+=(const BFnElement& o);
  BFnElement& operator-=(const BFnElement& o);
  friend BFnElement operator+(BFnElement a, const BFnElement& b) { return a += b; }
  friend BFnElement operator-(BFnElement a, const BFnElement& b) { return a -= b; }
  BFnElement operator-() const;
  friend BFnElement operator*(const LaurentPoly& r, const BFnElement& v);
  friend bool operator==(const BFnElement& a, const BFnElement& b) { return a.rank_ == b.rank_ && a.v_ == b.v_; }

 private:
  std::size_t rank_ = 0;
  std::vector<LaurentPoly> v_;
};

/// x̄_i - 1 in Z[Z^n].
LaurentPoly augmentation_generator(std::size_t n, std::size_t i);

/// (∂w/∂x_1, ..., ∂w/∂x_n); w must lie in F_n'.
BFnElement bfn_embed(const Word& w);

/// bfn_embed(α(w)); α must act trivially on H_1.
BFnElement bfn_act(const Endo& alpha, const Word& w);

/// Largest s <= cap with α(x_i) x_i^{-1} in Γ^{s+1} for every i.
std::size_t johnson_filtration_degree(const Endo& alpha, std::size_t cap);

}  // namespace torelli
