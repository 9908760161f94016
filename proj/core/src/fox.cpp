#include "torelli/fox.hpp"

#include <algorithm>
#include <cstdlib>

#include "torelli/error.hpp"
#include "torelli/free_lie.hpp"

namespace torelli {

LaurentPoly fox_derivative_ab(const Word& w, std::size_t i) {
  const std::size_t n = w.rank();
  if (i < 1 || i > n) throw PreconditionError("fox", "derivative index out of range");
  LaurentPoly::Terms terms;
  LaurentPoly::Exponent prefix(n, 0);
  auto bump = [&terms](const LaurentPoly::Exponent& e, int c) {
    auto [it, fresh] = terms.try_emplace(e, c);
    if (!fresh) it->second += c;
  };
  for (int a : w.letters()) {
    const std::size_t j = static_cast<std::size_t>(std::abs(a));
    if (a > 0) {
      if (j == i) bump(prefix, 1);
      ++prefix[j - 1];
    } else {
      --prefix[j - 1];
      if (j == i) bump(prefix, -1);
    }
  }
  std::erase_if(terms, [](const auto& kv) { return is_zero(kv.second); });
  return LaurentPoly(n, std::move(terms));
}

Abelianization abelianize(const Presentation& p) {
  const std::size_t n = p.generators;
  const std::size_t m = p.relators.size();
  Abelianization ab;
  ab.generators = n;
  linalg::IntMatrix e(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    if (p.relators[r].rank() != n) throw PreconditionError("abelianize", "relator rank differs from generator count");
    const auto sums = p.relators[r].exponent_sums();
    for (std::size_t i = 0; i < n; ++i)
      if (sums[i]) e.set(r, i, Integer(sums[i]));
  }
  const linalg::SmithForm snf = linalg::smith_normal_form(e);
  const std::size_t rk = snf.divisors.size();
  for (const auto& d : snf.divisors)
    if (d > 1) ab.torsion.push_back(d);
  ab.free_rank = n - rk;
  // x -> x V identifies Z^n / rowspace(E) with Z^n / rowspace(D); the last
  // n - rk coordinates are free.
  ab.images.assign(n, LaurentPoly::Exponent(ab.free_rank, 0));
  for (std::size_t k = 0; k < ab.free_rank; ++k) {
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer x = snf.V.at(i, rk + k);
      if (!x.fits_sint_p()) throw ResourceLimit("abelianize", "coordinate change too large");
      ab.images[i][k] = static_cast<int>(x.get_si());
      if (sign == 0 && x != 0) sign = sgn(x);
    }
    if (sign < 0)
      for (std::size_t i = 0; i < n; ++i) ab.images[i][k] = -ab.images[i][k];
  }
  return ab;
}

AlexanderMatrix alexander_matrix(const Presentation& p) {
  AlexanderMatrix a;
  a.ab = abelianize(p);
  const std::size_t n = p.generators;
  const std::size_t r = a.ab.free_rank;
  for (const auto& rel : p.relators) {
    std::vector<LaurentPoly> row;
    for (std::size_t i = 1; i <= n; ++i) row.push_back(fox_derivative_ab(rel, i).substitute(r, a.ab.images));
    a.entries.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i)
    a.boundary.push_back(LaurentPoly::monomial(r, a.ab.images[i]) - LaurentPoly::constant(r, 1));
  return a;
}

AlexanderPolynomial alexander_polynomial(const Presentation& p) {
  const AlexanderMatrix a = alexander_matrix(p);
  AlexanderPolynomial out;
  out.free_rank = a.ab.free_rank;
  out.torsion_dropped = !a.ab.torsion.empty();
  const std::size_t r = a.ab.free_rank;
  if (r > kMaxGcdVariables)
    throw UnsupportedArity("alexander", "free rank " + std::to_string(r) + " exceeds the gcd cap of " +
                                            std::to_string(kMaxGcdVariables));
  const std::size_t n = p.generators;
  const std::size_t m = p.relators.size();
  out.excess_relators = n >= 1 && m > n - 1;
  if (n == 0) {
    out.delta = LaurentPoly::constant(r, 1);
    return out;
  }
  const std::size_t size = n - 1;
  if (size == 0) {
    out.delta = LaurentPoly::constant(r, 1);
  } else if (m < size) {
    out.delta = LaurentPoly::zero(r);
  } else {
    out.delta = laurent_gcd(linalg::minors(a.entries, n, size));
  }
  if (out.delta.vars() != r) out.delta = out.delta + LaurentPoly::zero(r);
  return out;
}

namespace {

ExactScalar monomial_value(const std::vector<long>& exps, const Character& rho) {
  ExactScalar v(1);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) v *= rho.value(i).pow(exps[i]);
  return v;
}

}  // namespace

bool is_character_of(const Presentation& p, const Character& rho) {
  if (rho.size() != p.generators)
    throw PreconditionError("character", "character has " + std::to_string(rho.size()) + " coordinates, group has " +
                                             std::to_string(p.generators) + " generators");
  for (const auto& r : p.relators)
    if (monomial_value(r.exponent_sums(), rho) != ExactScalar(1)) return false;
  return true;
}

std::size_t twisted_betti1(const Presentation& p, const Character& rho) {
  if (!is_character_of(p, rho)) throw PreconditionError("twisted-betti", "character does not kill every relator");
  const std::size_t n = p.generators;
  linalg::ExactMatrix d1(1, n);
  for (std::size_t i = 0; i < n; ++i) d1.set(0, i, rho.value(i) - ExactScalar(1));
  linalg::ExactMatrix d2(p.relators.size(), n);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) d2.set(r, i, evaluate(fox_derivative_ab(p.relators[r], i + 1), rho));
  return (n - linalg::rank(d1)) - linalg::rank(d2);
}

bool cv_membership(const Presentation& p, const Character& rho, std::size_t d) { return twisted_betti1(p, rho) >= d; }

BFnElement::BFnElement(std::size_t rank) : rank_(rank), v_(rank, LaurentPoly::zero(rank)) {}

BFnElement::BFnElement(std::size_t rank, std::vector<LaurentPoly> entries) : rank_(rank), v_(std::move(entries)) {
  if (v_.size() != rank_) throw PreconditionError("bfn", "expected " + std::to_string(rank_) + " entries");
  for (auto& x : v_) {
    if (x.vars() == 0) x = x + LaurentPoly::zero(rank_);
    if (x.vars() != rank_) throw PreconditionError("bfn", "entry has wrong variable count");
  }
}

bool BFnElement::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

LaurentPoly augmentation_generator(std::size_t n, std::size_t i) {
  return LaurentPoly::variable(n, i) - LaurentPoly::constant(n, 1);
}

LaurentPoly BFnElement::boundary() const {
  LaurentPoly s = LaurentPoly::zero(rank_);
  for (std::size_t i = 0; i < rank_; ++i) s += v_[i] * augmentation_generator(rank_, i + 1);
  return s;
}

BFnElement& BFnElement::operator+=(const BFnElement& o) {
  if (rank_ != o.rank_) throw PreconditionError("bfn", "rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) v_[i] += o.v_[i];
  return *this;
}

BFnElement& BFnElement::operator-=(const BFnElement& o) { return *this += -o; }

BFnElement BFnElement::operator-() const {
  BFnElement r = *this;
  for (auto& x : r.v_) x = -x;
  return r;
}

BFnElement operator*(const LaurentPoly& r, const BFnElement& v) {
  BFnElement out = v;
  for (auto& x : out.v_) x = r * x;
  return out;
}

BFnElement bfn_embed(const Word& w) {
  if (!w.in_commutator_subgroup())
    throw PreconditionError("bfn-embed", "word " + w.to_string() + " is not in the commutator subgroup");
  std::vector<LaurentPoly> v;
  for (std::size_t i = 1; i <= w.rank(); ++i) v.push_back(fox_derivative_ab(w, i));
  BFnElement e(w.rank(), std::move(v));
  if (!e.in_kernel()) throw VerificationFailure("bfn-embed", "Fox vector left ker ∂1");
  return e;
}

BFnElement bfn_act(const Endo& alpha, const Word& w) {
  if (!alpha.acts_trivially_on_homology())
    throw PreconditionError("bfn-act", "automorphism does not act trivially on H_1");
  return bfn_embed(alpha.apply(w));
}

std::size_t johnson_filtration_degree(const Endo& alpha, std::size_t cap) {
  if (cap + 1 > kMaxMagnusDegree)
    throw ResourceLimit("johnson-degree", "cap " + std::to_string(cap) + " exceeds Magnus truncation");
  std::size_t level = cap;
  for (std::size_t i = 1; i <= alpha.rank() && level > 0; ++i) {
    const Word x = Word::generator(alpha.rank(), static_cast<int>(i));
    const Word u = alpha.apply(x) * x.inverse();
    const auto d = magnus_lowest_degree(u, level + 1);
    if (d) level = std::min(level, *d - 1);
  }
  return level;
}

}  // namespace torelli
