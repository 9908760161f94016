#pragma once

// Seeded generators for property tests. Every draw goes through one
// std::mt19937_64 so a failing case is reproduced by its seed.

#include <random>
#include <vector>

#include "torelli/exact.hpp"
#include "torelli/free_lie.hpp"
#include "torelli/laurent.hpp"
#include "torelli/linalg.hpp"
#include "torelli/word.hpp"

namespace gen {

using namespace torelli;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return rng_() & 1; }
  std::mt19937_64& rng() { return rng_; }

  Rational rational(long h = 5) {
    const long den = range(1, h);
    return ratio(range(-h, h), den);
  }
  Rational nonzero_rational(long h = 5) {
    Rational r;
    do r = rational(h);
    while (r == 0);
    return r;
  }

  ExactScalar scalar(unsigned m) {
    std::vector<Rational> c;
    for (unsigned i = 0; i < m; ++i) c.push_back(rational(3));
    return ExactScalar::from_polynomial(m, c);
  }

  Word word(std::size_t n, std::size_t max_len) {
    std::vector<int> w;
    const long len = range(0, static_cast<long>(max_len));
    for (long k = 0; k < len; ++k) {
      const int x = static_cast<int>(range(1, static_cast<long>(n)));
      w.push_back(coin() ? x : -x);
    }
    return Word(n, w);
  }

  Word commutator_word(std::size_t n, std::size_t max_len) {
    return commutator(word(n, max_len), word(n, max_len));
  }

  LaurentPoly poly(std::size_t vars, std::size_t terms, int max_exp = 2, long h = 4) {
    LaurentPoly::Terms t;
    for (std::size_t k = 0; k < terms; ++k) {
      LaurentPoly::Exponent e(vars);
      for (auto& x : e) x = static_cast<int>(range(-max_exp, max_exp));
      t[e] += Integer(range(-h, h));
    }
    return LaurentPoly(vars, t);
  }

  LieElement lie(std::size_t n, std::size_t s, long h = 3) {
    linalg::SparseVector<Rational> v;
    const std::size_t dim = witt_dimension(n, s);
    for (std::size_t i = 0; i < dim; ++i)
      if (coin()) v.emplace_back(i, rational(h));
    linalg::canonicalize(v);
    return LieElement(n, s, v);
  }

  Endo ia(std::size_t n, std::size_t factors) {
    const auto gens = all_magnus_generators(n);
    Endo e = Endo::identity(n);
    for (std::size_t f = 0; f < factors; ++f) {
      Endo g = magnus_gen(gens[static_cast<std::size_t>(range(0, static_cast<long>(gens.size()) - 1))], n);
      e = compose(e, coin() ? g : g.inverse());
    }
    return e;
  }

  linalg::RatMatrix rat_matrix(std::size_t r, std::size_t c, double density = 0.5) {
    linalg::RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (static_cast<double>(rng_() % 1000) < density * 1000) m.set(i, j, rational(4));
    return m;
  }

  linalg::IntMatrix int_matrix(std::size_t r, std::size_t c, long h = 6) {
    linalg::IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, Integer(range(-h, h)));
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
