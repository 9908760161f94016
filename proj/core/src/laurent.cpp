#include "torelli/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Integer(c));
}

LaurentPoly::LaurentPoly(std::size_t vars, Terms terms) : vars_(vars) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars) throw PreconditionError("laurent", "exponent length differs from variable count");
    if (!torelli::is_zero(c)) terms_.emplace(e, std::move(c));
  }
}

LaurentPoly LaurentPoly::constant(std::size_t vars, const Integer& c) {
  Terms t;
  if (!torelli::is_zero(c)) t.emplace(Exponent(vars, 0), c);
  return LaurentPoly(vars, std::move(t));
}

LaurentPoly LaurentPoly::monomial(std::size_t vars, Exponent exp, const Integer& c) {
  Terms t;
  t.emplace(std::move(exp), c);
  return LaurentPoly(vars, std::move(t));
}

LaurentPoly LaurentPoly::variable(std::size_t vars, std::size_t i, int e) {
  if (i < 1 || i > vars) throw PreconditionError("laurent", "variable index " + std::to_string(i) + " out of range");
  Exponent x(vars, 0);
  x[i - 1] = e;
  return monomial(vars, std::move(x));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPoly::adopt_arity(const LaurentPoly& o) {
  if (o.vars_ == vars_ || o.vars_ == 0) return;
  if (vars_ != 0)
    throw PreconditionError("laurent", "variable count mismatch " + std::to_string(vars_) + " vs " +
                                           std::to_string(o.vars_));
  Terms lifted;
  for (auto& [e, c] : terms_) lifted.emplace(Exponent(o.vars_, 0), c);
  terms_ = std::move(lifted);
  vars_ = o.vars_;
}

namespace {

// A zero-arity constant combined with an n-variable polynomial.
LaurentPoly lift(const LaurentPoly& p, std::size_t vars) {
  if (p.vars() == vars || p.vars() != 0) return p;
  LaurentPoly::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(LaurentPoly::Exponent(vars, 0), c);
  return LaurentPoly(vars, std::move(t));
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  adopt_arity(o);
  const LaurentPoly b = lift(o, vars_);
  for (const auto& [e, c] : b.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (torelli::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  adopt_arity(o);
  const LaurentPoly b = lift(o, vars_);
  Terms out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(vars_);
      for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.try_emplace(std::move(e), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return torelli::is_zero(kv.second); });
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.vars_ != 0 && b.vars_ != 0) return false;
  const std::size_t v = std::max(a.vars_, b.vars_);
  return lift(a, v).terms_ == lift(b, v).terms_;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != vars_) throw PreconditionError("laurent", "shift length mismatch");
  Terms t;
  for (const auto& [e, c] : terms_) {
    Exponent x = e;
    for (std::size_t i = 0; i < vars_; ++i) x[i] += shift[i];
    t.emplace(std::move(x), c);
  }
  return LaurentPoly(vars_, std::move(t));
}

LaurentPoly LaurentPoly::substitute(std::size_t target_vars, const std::vector<Exponent>& images) const {
  if (vars_ != 0 && images.size() != vars_) throw PreconditionError("laurent", "substitution needs one image per variable");
  for (const auto& im : images)
    if (im.size() != target_vars) throw PreconditionError("laurent", "substitution image has wrong length");
  LaurentPoly out = zero(target_vars);
  for (const auto& [e, c] : terms_) {
    Exponent x(target_vars, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < target_vars; ++j) x[j] += e[i] * images[i][j];
    out += monomial(target_vars, std::move(x), c);
  }
  return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) -> std::string {
    if (i < names.size()) return names[i];
    return vars_ == 1 ? "t" : "t" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

Integer augmentation(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

Character::Character(unsigned conductor, std::vector<Coord> coords)
    : conductor_(conductor), coords_(std::move(coords)) {
  if (conductor_ == 0) throw PreconditionError("character", "conductor must be positive");
  for (auto& c : coords_) {
    if (is_zero(c.scale)) throw PreconditionError("character", "character coordinates must be nonzero");
    const long m = static_cast<long>(conductor_);
    c.power = ((c.power % m) + m) % m;
  }
}

Character Character::trivial(std::size_t n) { return Character(1, std::vector<Coord>(n, Coord{1, 0})); }

Character Character::rational(const std::vector<Rational>& values) {
  std::vector<Coord> c;
  for (const auto& v : values) c.push_back({v, 0});
  return Character(1, std::move(c));
}

ExactScalar Character::value(std::size_t i) const {
  const Coord& c = coords_.at(i);
  if (c.power == 0) return ExactScalar(c.scale);
  return ExactScalar::root_of_unity(conductor_, c.power, c.scale);
}

// By value: -1 * zeta_2 is the trivial coordinate too.
bool Character::is_trivial() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (value(i) != ExactScalar(1)) return false;
  return true;
}

ExactScalar evaluate(const LaurentPoly& p, const Character& rho) {
  if (p.vars() != 0 && p.vars() != rho.size())
    throw PreconditionError("evaluate", "polynomial has " + std::to_string(p.vars()) + " variables, character has " +
                                            std::to_string(rho.size()) + " coordinates");
  std::vector<ExactScalar> base, inv;
  for (std::size_t i = 0; i < p.vars(); ++i) {
    base.push_back(rho.value(i));
    inv.push_back(base.back().inverse());
  }
  ExactScalar s(0);
  for (const auto& [e, c] : p.terms()) {
    ExactScalar term{Rational(c)};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= base[i].pow(e[i]);
      else if (e[i] < 0) term *= inv[i].pow(-e[i]);
    }
    s += term;
  }
  return s;
}

namespace {

using Exp = LaurentPoly::Exponent;

LaurentPoly shift_to_origin(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exp lo(p.vars(), std::numeric_limits<int>::max());
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  for (auto& x : lo) x = -x;
  return p.shifted(lo);
}

// Minimal exponent vector of a nonzero polynomial.
Exp min_exponent(const LaurentPoly& p) {
  Exp lo(p.vars(), std::numeric_limits<int>::max());
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  return lo;
}

// Exact division of genuine polynomials (nonnegative exponents) using the
// lex leading term. Returns false if b does not divide a.
bool poly_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q) {
  const std::size_t n = std::max(a.vars(), b.vars());
  q = LaurentPoly::zero(n);
  LaurentPoly r = a;
  const auto& [lb, cb] = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().rbegin();
    Exp d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) return false;
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return false;
    const LaurentPoly t = LaurentPoly::monomial(n, d, Integer(cr / cb));
    q += t;
    r -= t * b;
  }
  return true;
}

int degree_in(const LaurentPoly& p, std::size_t v) {
  int d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

// Coefficient of x_v^d, as a polynomial with exponent v set to 0.
LaurentPoly coeff_in(const LaurentPoly& p, std::size_t v, int d) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : p.terms())
    if (e[v] == d) {
      Exp x = e;
      x[v] = 0;
      t.emplace(std::move(x), c);
    }
  return LaurentPoly(p.vars(), std::move(t));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!poly_divide(a, b, q)) throw VerificationFailure("laurent-gcd", "inexact division in gcd");
  return q;
}

LaurentPoly gcd_from(const LaurentPoly& a, const LaurentPoly& b, std::size_t v);

// gcd of the coefficients of p viewed as a polynomial in x_v.
LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g = LaurentPoly::zero(p.vars());
  for (int d = degree_in(p, v); d >= 0; --d) {
    const LaurentPoly c = coeff_in(p, v, d);
    if (!c.is_zero()) g = gcd_from(g, c, v + 1);
  }
  return g;
}

LaurentPoly positive_lead(LaurentPoly p) {
  if (!p.is_zero() && sgn(p.terms().rbegin()->second) < 0) p = -p;
  return p;
}

// gcd of polynomials in variables v..n-1 (earlier exponents are zero).
LaurentPoly gcd_from(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  const std::size_t n = std::max(a.vars(), b.vars());
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  if (v >= n) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.terms().begin()->second.get_mpz_t(), b.terms().begin()->second.get_mpz_t());
    return LaurentPoly::constant(n, g);
  }
  const LaurentPoly ca = content_in(a, v);
  const LaurentPoly cb = content_in(b, v);
  const LaurentPoly c = gcd_from(ca, cb, v + 1);
  LaurentPoly p = divide_exact(a, ca);
  LaurentPoly q = divide_exact(b, cb);
  if (degree_in(p, v) < degree_in(q, v)) std::swap(p, q);
  LaurentPoly g;
  while (true) {
    if (degree_in(q, v) == 0) {
      g = LaurentPoly::constant(n, 1);
      break;
    }
    // pseudo-remainder of p by q in x_v
    const int dq = degree_in(q, v);
    const LaurentPoly lq = coeff_in(q, v, dq);
    LaurentPoly r = p;
    while (!r.is_zero() && degree_in(r, v) >= dq) {
      const int dr = degree_in(r, v);
      Exp sh(n, 0);
      sh[v] = dr - dq;
      r = lq * r - coeff_in(r, v, dr) * q.shifted(sh);
    }
    if (r.is_zero()) {
      g = q;
      break;
    }
    p = q;
    q = divide_exact(r, content_in(r, v));
  }
  return positive_lead(c * g);
}

}  // namespace

LaurentPoly normalize_unit(const LaurentPoly& p) { return positive_lead(shift_to_origin(p)); }

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  LaurentPoly q;
  return poly_divide(shift_to_origin(a), shift_to_origin(b), q);
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw PreconditionError("laurent", "division by zero");
  const std::size_t n = std::max(a.vars(), b.vars());
  if (a.is_zero()) return LaurentPoly::zero(n);
  LaurentPoly q;
  const LaurentPoly la = lift(a, n), lb = lift(b, n);
  if (!poly_divide(shift_to_origin(la), shift_to_origin(lb), q))
    throw PreconditionError("laurent", lb.to_string() + " does not divide " + la.to_string());
  Exp ea = min_exponent(la), eb = min_exponent(lb);
  for (std::size_t i = 0; i < n; ++i) ea[i] -= eb[i];
  return q.shifted(ea);
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& polys) {
  std::size_t n = 0;
  for (const auto& p : polys) {
    if (p.vars() == 0) continue;
    if (n != 0 && p.vars() != n) throw PreconditionError("laurent-gcd", "variable count mismatch");
    n = p.vars();
  }
  if (n > kMaxGcdVariables)
    throw UnsupportedArity("laurent-gcd", "gcd supports at most " + std::to_string(kMaxGcdVariables) +
                                              " variables, got " + std::to_string(n));
  LaurentPoly g = LaurentPoly::zero(n);
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = gcd_from(g, shift_to_origin(lift(p, n)), 0);
    if (g.is_constant() && g.terms().begin()->second == 1) break;
  }
  return normalize_unit(g);
}

}  // namespace torelli
