#include "torelli/exact.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

namespace {

using QPoly = std::vector<Rational>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  const long db = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
    if (is_zero(a[k])) continue;
    Rational f = a[k] / lead;
    const long shift = k - db;
    q[shift] = f;
    for (long j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly phi_as_qpoly(unsigned m) {
  const auto& z = cyclotomic_polynomial(m);
  QPoly p;
  p.reserve(z.size());
  for (const auto& c : z) p.emplace_back(c);
  return p;
}

// Reduce modulo Phi_m into a vector of exactly phi(m) coefficients.
std::vector<Rational> reduce_mod_phi(unsigned m, QPoly p) {
  trim(p);
  const unsigned d = euler_phi(m);
  if (p.size() > d) p = poly_divmod(std::move(p), phi_as_qpoly(m)).second;
  p.resize(d, Rational(0));
  return p;
}

}  // namespace

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw PreconditionError("parse", "empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw PreconditionError("parse", "malformed rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw PreconditionError("parse", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

unsigned euler_phi(unsigned m) {
  if (m == 0) throw PreconditionError("cyclotomic", "conductor must be positive");
  unsigned result = m;
  unsigned x = m;
  for (unsigned p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> cache;
  if (m == 0) throw PreconditionError("cyclotomic", "conductor must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
  QPoly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    auto [q, r] = poly_divmod(num, phi_as_qpoly(d));
    if (!r.empty()) throw VerificationFailure("cyclotomic", "inexact cyclotomic division");
    num = std::move(q);
  }
  std::vector<Integer> z;
  for (const auto& c : num) {
    if (c.get_den() != 1) throw VerificationFailure("cyclotomic", "non-integral cyclotomic coefficient");
    z.push_back(c.get_num());
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(z)).first->second;
}

ExactScalar::ExactScalar(const Rational& r) : m_(1), c_{r} { c_[0].canonicalize(); }

ExactScalar ExactScalar::root_of_unity(unsigned m, long power, const Rational& scale) {
  if (m == 0) throw PreconditionError("cyclotomic", "conductor must be positive");
  long e = power % static_cast<long>(m);
  if (e < 0) e += m;
  QPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[e] = scale;
  return ExactScalar(m, reduce_mod_phi(m, std::move(p)));
}

ExactScalar ExactScalar::from_polynomial(unsigned m, std::vector<Rational> coeffs) {
  return ExactScalar(m, reduce_mod_phi(m, std::move(coeffs)));
}

bool ExactScalar::is_zero() const {
  for (const auto& c : c_)
    if (!torelli::is_zero(c)) return false;
  return true;
}

bool ExactScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!torelli::is_zero(c_[i])) return false;
  return true;
}

Rational ExactScalar::rational_value() const {
  if (!is_rational()) throw DomainMismatch("exact-scalar", "element " + to_string() + " is not rational");
  return c_[0];
}

unsigned ExactScalar::common_conductor(const ExactScalar& o) const {
  if (m_ == o.m_) return m_;
  if (m_ == 1) return o.m_;
  if (o.m_ == 1) return m_;
  throw DomainMismatch("exact-scalar", "conductors " + std::to_string(m_) + " and " + std::to_string(o.m_) +
                                           " cannot be mixed");
}

void ExactScalar::promote_to(unsigned m) {
  if (m_ == m) return;
  // only conductor 1 is ever promoted
  std::vector<Rational> c(euler_phi(m), Rational(0));
  c[0] = c_[0];
  c_ = std::move(c);
  m_ = m;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  const unsigned m = common_conductor(o);
  promote_to(m);
  if (o.m_ == m) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    c_[0] += o.c_[0];
  }
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  const unsigned m = common_conductor(o);
  if (o.m_ == 1) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (m_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    return *this;
  }
  c_ = reduce_mod_phi(m, poly_mul(c_, o.c_));
  return *this;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw PreconditionError("exact-scalar", "division by zero");
  if (m_ == 1) return ExactScalar(Rational(1) / c_[0]);
  // extended Euclid: s*a + t*Phi = 1
  QPoly a = c_;
  trim(a);
  QPoly b = phi_as_qpoly(m_);
  QPoly s0{Rational(1)}, s1{};
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // a is a nonzero constant because Phi_m is irreducible
  if (a.size() != 1) throw VerificationFailure("exact-scalar", "non-invertible cyclotomic residue");
  Rational inv = Rational(1) / a[0];
  for (auto& c : s0) c *= inv;
  return ExactScalar(m_, reduce_mod_phi(m_, std::move(s0)));
}

ExactScalar ExactScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExactScalar result(Rational(1));
  result.promote_to(m_);
  ExactScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  return false;
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (torelli::is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << m_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace torelli
