#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace torelli {

/// Freely reduced word in the free group F_n. Letter +i is x_i, -i is x_i^{-1}.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}
  /// Validates indices against `rank` and freely reduces.
  Word(std::size_t rank, std::vector<int> letters);

  static Word generator(std::size_t rank, int letter) { return Word(rank, {letter}); }

  std::size_t rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;

  /// Exponent sum of each generator x_1..x_n; the image in H_1(F_n).
  std::vector<long> exponent_sums() const;

  /// True iff every exponent sum vanishes (w lies in the commutator subgroup).
  bool in_commutator_subgroup() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

  /// "x1 x2 X1 X2" style, capital letter for inverse; "1" for the identity.
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<int> letters_;
};

/// Free reduction by a single stack pass. Throws PreconditionError on a zero
/// letter or an index outside 1..rank.
Word reduce(std::size_t rank, const std::vector<int>& letters);

/// (x, y) = x y x^{-1} y^{-1}.
Word commutator(const Word& x, const Word& y);

/// ^x y = x y x^{-1}.
Word conjugate(const Word& x, const Word& y);

Word power(const Word& w, long e);

/// Endomorphism of F_n given by generator images. Library constructors also
/// store the images of an inverse automorphism; general inversion is not
/// provided.
class Endo {
 public:
  Endo() = default;
  Endo(std::size_t rank, std::vector<Word> images, std::optional<std::vector<Word>> inverse_images = std::nullopt);

  static Endo identity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::size_t i) const { return images_.at(i - 1); }  // 1-based
  bool has_inverse() const { return inverse_.has_value(); }
  const std::optional<std::vector<Word>>& inverse_images() const { return inverse_; }

  Word apply(const Word& w) const;

  /// The stored inverse; throws PreconditionError if none is stored.
  Endo inverse() const;

  /// True iff the stored inverse composes to the identity on both sides.
  bool verify_inverse() const;

  /// True iff the induced map on H_1 is the identity (membership in IA_n).
  bool acts_trivially_on_homology() const;

  friend bool operator==(const Endo& a, const Endo& b) { return a.rank_ == b.rank_ && a.images_ == b.images_; }

 private:
  std::size_t rank_ = 0;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_;
};

Word apply_endo(const Endo& a, const Word& w);

/// (a o b)(x_i) = a(b(x_i)); keeps an inverse when both factors carry one.
Endo compose(const Endo& a, const Endo& b);

/// a b a^{-1} b^{-1} in Aut(F_n); both factors need stored inverses.
Endo commutator(const Endo& a, const Endo& b);

/// Magnus generators of IA_n.
struct MagnusGenerator {
  enum class Kind { Conj, Chain };
  Kind kind = Kind::Conj;
  int i = 0, j = 0, k = 0;

  static MagnusGenerator conj(int i, int j) { return {Kind::Conj, i, j, 0}; }
  static MagnusGenerator chain(int i, int j, int k) { return {Kind::Chain, i, j, k}; }
  std::string name() const;
};

/// conj(i,j): x_i -> x_j x_i x_j^{-1}; chain(i,j,k): x_i -> x_i (x_j, x_k);
/// every other generator fixed. The result carries a verified inverse.
Endo magnus_gen(const MagnusGenerator& g, std::size_t n);

/// All Magnus generators for F_n: every conj(i,j), then chain(i,j,k) for i
/// outside {j, k} and j < k ([x_k,x_j] is the inverse commutator).
std::vector<MagnusGenerator> all_magnus_generators(std::size_t n);

/// Ad_x: y -> x y x^{-1}, with inverse Ad_{x^{-1}}.
Endo inner_auto(const Word& x);

/// x_m -> v x_m, other generators fixed; v must not involve x_m. The inverse
/// sends x_m -> v^{-1} x_m.
Endo left_multiply_generator(std::size_t rank, int m, const Word& v);

/// Finitely presented group <x_1..x_n | relators>.
struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
};

}  // namespace torelli
