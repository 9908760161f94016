#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace torelli {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// p/q in lowest terms. mpq_class(p, q) alone does not canonicalize, and
/// GMP arithmetic on a non-canonical value is undefined.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first. Cached per conductor.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

/// Euler phi.
unsigned euler_phi(unsigned m);

/// Exact element of Q(zeta_m), stored in the power basis 1, t, ..., t^{phi(m)-1}
/// of Q[t]/Phi_m(t). Conductor 1 means a plain rational.
///
/// Arithmetic between conductor 1 and conductor m promotes to m; any other
/// mix of conductors throws DomainMismatch.
class ExactScalar {
 public:
  ExactScalar() : ExactScalar(Rational(0)) {}
  ExactScalar(const Rational& r);  // NOLINT(google-explicit-constructor)
  ExactScalar(long v) : ExactScalar(Rational(v)) {}  // NOLINT
  ExactScalar(int v) : ExactScalar(Rational(v)) {}   // NOLINT

  /// scale * zeta_m^power.
  static ExactScalar root_of_unity(unsigned m, long power, const Rational& scale = 1);

  /// Residue of a rational polynomial (constant term first) modulo Phi_m.
  static ExactScalar from_polynomial(unsigned m, std::vector<Rational> coeffs);

  unsigned conductor() const { return m_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; throws DomainMismatch if the element is irrational.
  Rational rational_value() const;

  ExactScalar inverse() const;
  ExactScalar pow(long e) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Human readable form, e.g. "1/2 + 3*z6^1".
  std::string to_string() const;

 private:
  ExactScalar(unsigned m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  void promote_to(unsigned m);
  unsigned common_conductor(const ExactScalar& o) const;

  unsigned m_ = 1;
  std::vector<Rational> c_;
};

inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }

}  // namespace torelli
