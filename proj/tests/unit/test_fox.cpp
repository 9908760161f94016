#include <doctest.h>

#include "generators.hpp"
#include "torelli/error.hpp"
#include "torelli/fox.hpp"

using namespace torelli;

namespace {
Word x(std::size_t n, int i) { return Word::generator(n, i); }
LaurentPoly T(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }  // x̄_i
const Presentation kTrefoil{2, {Word(2, {1, 2, 1, -2, -1, -2})}};
}  // namespace

TEST_SUITE("fox-alexander") {
  TEST_CASE("Fox derivative oracles") {
    CHECK(fox_derivative_ab(x(1, 1), 1) == LaurentPoly(1, {{{0}, 1}}));
    CHECK(fox_derivative_ab(x(2, 1) * x(2, 2), 2) == T(2, 1));
    const Word c = commutator(x(2, 1), x(2, 2));
    CHECK(fox_derivative_ab(c, 1) == 1 - T(2, 2));
    CHECK(fox_derivative_ab(c, 2) == T(2, 1) - 1);
    CHECK(fox_derivative_ab(Word(2, {-1}), 1) == -LaurentPoly::variable(2, 1, -1));
  }

  TEST_CASE("fundamental identity on random words") {
    gen::Gen g(31);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = g.range(1, 4);
      const Word w = g.word(n, 10);
      LaurentPoly sum = LaurentPoly::zero(n);
      for (std::size_t i = 1; i <= n; ++i) sum += fox_derivative_ab(w, i) * augmentation_generator(n, i);
      LaurentPoly::Exponent e;
      for (long s : w.exponent_sums()) e.push_back(static_cast<int>(s));
      CHECK(sum == LaurentPoly::monomial(n, e) - 1);
    }
  }

  TEST_CASE("Alexander matrices") {
    const auto free = alexander_matrix(Presentation{3, {}});
    CHECK(free.entries.empty());
    CHECK(free.boundary.size() == 3);
    CHECK(free.ab.free_rank == 3);
    const auto m = alexander_matrix(Presentation{2, {power(x(2, 2), 3)}});
    CHECK(m.ab.free_rank == 1);
    CHECK(m.ab.torsion == std::vector<Integer>{3});
    CHECK(m.entries[0][0].is_zero());
    const auto tr = alexander_matrix(kTrefoil);
    CHECK(tr.ab.free_rank == 1);
    // each row pairs to zero with the boundary
    for (const auto& row : tr.entries) {
      LaurentPoly s = LaurentPoly::zero(1);
      for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * tr.boundary[i];
      CHECK(s.is_zero());
    }
  }

  TEST_CASE("torsion row before abelianization") {
    // (0, 1 + y + y^2) over Z[x^{±1}, y^{±1}]
    const Word r = power(x(2, 2), 3);
    CHECK(fox_derivative_ab(r, 1).is_zero());
    CHECK(fox_derivative_ab(r, 2) == 1 + T(2, 2) + T(2, 2) * T(2, 2));
  }

  TEST_CASE("Alexander polynomial oracles") {
    const auto tr = alexander_polynomial(kTrefoil);
    CHECK(tr.delta.to_string() == "t^2 - t + 1");
    CHECK_FALSE(tr.excess_relators);
    const auto fig8 = alexander_polynomial(Presentation{2, {Word(2, {2, 1, -2, 1, 2, -1, -2, 1, -2, -1})}});
    CHECK(fig8.delta.to_string() == "t^2 - 3*t + 1");
    const auto tor = alexander_polynomial(Presentation{2, {power(x(2, 2), 2)}});
    CHECK(tor.delta == LaurentPoly(1, {{{0}, 2}}));
    CHECK(tor.torsion_dropped);
    CHECK(alexander_polynomial(Presentation{3, {}}).delta.is_zero());
    CHECK(alexander_polynomial(Presentation{1, {}}).delta == LaurentPoly(1, {{{0}, 1}}));
    CHECK_THROWS_AS(alexander_polynomial(Presentation{4, {}}), UnsupportedArity);
  }

  TEST_CASE("twisted Betti numbers") {
    const Presentation f3{3, {}};
    const auto rho = Character::rational({Rational(2), Rational(3), Rational(5)});
    CHECK(twisted_betti1(f3, rho) == 2);
    CHECK(cv_membership(f3, rho, 2));
    CHECK_FALSE(cv_membership(f3, rho, 3));
    CHECK(twisted_betti1(f3, Character::trivial(3)) == 3);
    const Presentation p{2, {power(x(2, 2), 3)}};
    CHECK(twisted_betti1(p, Character(3, {{Rational(2), 0}, {Rational(1), 1}})) >= 1);
    CHECK_FALSE(cv_membership(p, Character::rational({Rational(2), Rational(1)}), 1));
    CHECK_THROWS_AS(twisted_betti1(p, Character::rational({Rational(1), Rational(2)})), PreconditionError);
  }

  TEST_CASE("trefoil characteristic variety at sixth roots") {
    CHECK(cv_membership(kTrefoil, Character(6, {{Rational(1), 1}, {Rational(1), 1}}), 1));
    CHECK_FALSE(cv_membership(kTrefoil, Character(4, {{Rational(1), 1}, {Rational(1), 1}}), 1));
  }

  TEST_CASE("B(F_n) embedding") {
    const auto v = bfn_embed(commutator(x(3, 1), x(3, 2)));
    CHECK(v[0] == 1 - T(3, 2));
    CHECK(v[1] == T(3, 1) - 1);
    CHECK(v[2].is_zero());
    CHECK(v.in_kernel());
    CHECK(bfn_embed(Word(3)).is_zero());
    CHECK_THROWS_AS(bfn_embed(x(3, 1)), PreconditionError);
    CHECK_THROWS_AS(bfn_act(Endo(2, {x(2, 2), x(2, 1)}), commutator(x(2, 1), x(2, 2))), PreconditionError);
  }

  TEST_CASE("three-term relation") {
    const std::size_t n = 4;
    auto e = [&](int i, int j) { return bfn_embed(commutator(x(n, i), x(n, j))); };
    const BFnElement r = augmentation_generator(n, 1) * e(2, 3) - augmentation_generator(n, 2) * e(1, 3) +
                         augmentation_generator(n, 3) * e(1, 2);
    CHECK(r.is_zero());
  }

  TEST_CASE("B(F_n) properties on random data") {
    gen::Gen g(41);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 3;
      const Word u = g.commutator_word(n, 3), w = g.commutator_word(n, 3);
      // additive on F', since the abelianization of u is trivial
      CHECK(bfn_embed(u * w) == bfn_embed(u) + bfn_embed(w));
      CHECK(bfn_embed(u).in_kernel());
      const Endo a = g.ia(n, 2);
      CHECK(bfn_act(a, u).in_kernel());
      const std::size_t k = g.range(1, 3);
      const Word ku = commutator(x(n, static_cast<int>(k)), u);
      CHECK(bfn_act(a, ku) == augmentation_generator(n, k) * bfn_act(a, u));
      CHECK(bfn_act(Endo::identity(n), u) == bfn_embed(u));
    }
  }
}
