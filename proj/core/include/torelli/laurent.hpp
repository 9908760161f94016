#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "torelli/exact.hpp"

namespace torelli {

/// Element of the group ring Z[Z^n] = Z[t_1^{±1}, ..., t_n^{±1}].
///
/// A polynomial built from a bare integer has zero variables and adapts to
/// the arity of whatever it is combined with; two polynomials with different
/// nonzero arities cannot be combined.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);             // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(static_cast<long>(c)) {}  // NOLINT
  LaurentPoly(std::size_t vars, Terms terms);

  static LaurentPoly zero(std::size_t vars) { return LaurentPoly(vars, {}); }
  static LaurentPoly constant(std::size_t vars, const Integer& c);
  static LaurentPoly monomial(std::size_t vars, Exponent exp, const Integer& c = 1);
  /// t_i^e, 1-based variable index.
  static LaurentPoly variable(std::size_t vars, std::size_t i, int e = 1);

  std::size_t vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by the monomial t^shift (a unit).
  LaurentPoly shifted(const Exponent& shift) const;

  /// Ring map t_i -> t^{column i of images}: images[i] is the exponent vector
  /// (length `target_vars`) of the image of t_{i+1}.
  LaurentPoly substitute(std::size_t target_vars, const std::vector<Exponent>& images) const;

  /// Var names default to t (one variable) or t1..tn.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void adopt_arity(const LaurentPoly& o);
  std::size_t vars_ = 0;
  Terms terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// Sum of coefficients.
Integer augmentation(const LaurentPoly& p);

/// Point of the character torus with coordinates r_i * zeta_m^{p_i}.
class Character {
 public:
  struct Coord {
    Rational scale;
    long power = 0;
  };

  Character() = default;
  Character(unsigned conductor, std::vector<Coord> coords);

  static Character trivial(std::size_t n);
  static Character rational(const std::vector<Rational>& values);

  unsigned conductor() const { return conductor_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Coord>& coords() const { return coords_; }

  ExactScalar value(std::size_t i) const;  // 0-based
  bool is_trivial() const;

 private:
  unsigned conductor_ = 1;
  std::vector<Coord> coords_;
};

ExactScalar evaluate(const LaurentPoly& p, const Character& rho);

/// Canonical representative modulo units: every variable has minimal
/// exponent 0 and the coefficient of the lexicographically largest exponent
/// is positive.
LaurentPoly normalize_unit(const LaurentPoly& p);

/// Exact quotient a / b in Z[t^{±1}]; throws PreconditionError if b does
/// not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// True iff b divides a in the Laurent ring.
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// gcd in the UFD Z[t_1^{±1}, ..., t_k^{±1}], k <= 3, in canonical unit form.
/// gcd of an empty list (or of zeros) is 0. Throws UnsupportedArity for k > 3.
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& polys);

constexpr std::size_t kMaxGcdVariables = 3;

}  // namespace torelli
