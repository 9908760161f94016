#include <doctest.h>

#include "generators.hpp"
#include "torelli/derivations.hpp"
#include "torelli/error.hpp"
#include "torelli/fox.hpp"
#include "torelli/free_lie.hpp"

using namespace torelli;

namespace {
Word x(std::size_t n, int i) { return Word::generator(n, i); }
LieElement X(std::size_t n, int i) { return LieElement::generator(n, i); }
}  // namespace

TEST_SUITE("free-lie") {
  TEST_CASE("Witt dimensions") {
    const std::vector<std::size_t> w3{3, 3, 8, 18, 48, 116};
    for (std::size_t s = 1; s <= 6; ++s) CHECK(witt_dimension(3, s) == w3[s - 1]);
    CHECK(witt_dimension(2, 8) == 30);
    CHECK(witt_dimension(1, 2) == 0);
    CHECK(witt_dimension(4, 8) == 8160);
  }

  TEST_CASE("Lyndon words") {
    CHECK(lyndon_basis(2, 3) == std::vector<LyndonWord>{{1, 1, 2}, {1, 2, 2}});
    CHECK(is_lyndon({1, 1, 2, 1, 2}));
    CHECK_FALSE(is_lyndon({1, 2, 1, 2}));
    CHECK(standard_factorization({1, 1, 2}) == std::pair<LyndonWord, LyndonWord>{{1}, {1, 2}});
    CHECK(standard_factorization({1, 1, 2, 1, 2}) == std::pair<LyndonWord, LyndonWord>{{1, 1, 2}, {1, 2}});
    CHECK(bracketing_string({1, 1, 2}) == "[1,[1,2]]");
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t s = 1; s <= 6; ++s) {
        const auto& b = lyndon_basis(n, s);
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(lyndon_index(n, b[i]) == i);
      }
  }

  TEST_CASE("brackets in the Lyndon basis") {
    CHECK(bracket(X(2, 1), X(2, 2)) == LieElement::basis(2, {1, 2}));
    CHECK(bracket(X(2, 2), X(2, 1)) == -LieElement::basis(2, {1, 2}));
    CHECK(bracket(bracket(X(2, 1), X(2, 2)), X(2, 1)) == -LieElement::basis(2, {1, 1, 2}));
    CHECK(bracket(X(2, 1), X(2, 1)).is_zero());
  }

  TEST_CASE("Lie identities on random elements") {
    gen::Gen g(21);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = g.range(2, 3);
      const auto a = g.lie(n, g.range(1, 2)), b = g.lie(n, g.range(1, 2)), c = g.lie(n, 1);
      CHECK(bracket(a, b) == -bracket(b, a));
      const LieElement jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
      CHECK(jac.is_zero());
      CHECK(lie_from_tensor(n, a.degree(), a.to_tensor()) == a);
    }
  }

  TEST_CASE("Magnus expansion and classes") {
    const Word c = commutator(x(2, 1), x(2, 2));
    CHECK(magnus_lowest_degree(c, 8) == 2);
    CHECK(magnus_class(c, 2) == LieElement::basis(2, {1, 2}));
    CHECK(magnus_class(commutator(c, x(2, 1)), 3) == -LieElement::basis(2, {1, 1, 2}));
    CHECK(gamma_membership(c, 2));
    CHECK_FALSE(gamma_membership(c, 3));
    CHECK_FALSE(magnus_lowest_degree(Word(2), 8).has_value());
    CHECK_THROWS_AS(magnus_class(c, 3), PreconditionError);
    const auto m = MagnusSeries::of(Word(2, {-1}), 3);
    CHECK(m.coefficient({1, 1, 1}) == -1);
    CHECK(m.coefficient({1}) == -1);
    CHECK(m.coefficient({2}) == 0);
  }

  TEST_CASE("lower central series is filtered") {
    gen::Gen g(8);
    for (int t = 0; t < 25; ++t) {
      const Word a = g.commutator_word(3, 3), b = g.word(3, 4);
      const Word c = commutator(a, b);
      if (c.empty()) continue;
      CHECK(gamma_membership(c, 3));
      CHECK(gamma_membership(a * a.inverse(), 8));
    }
  }

  TEST_CASE("trivial center") {
    CHECK(center_check(2, 4));
    CHECK(center_check(3, 4));
    CHECK_FALSE(center_check(1, 1));
  }
}

TEST_SUITE("derivations-johnson") {
  TEST_CASE("Johnson filtration degree oracles") {
    CHECK(johnson_filtration_degree(Endo::identity(3), 5) == 5);
    CHECK(johnson_filtration_degree(magnus_gen(MagnusGenerator::conj(1, 2), 3), 5) == 1);
    CHECK(johnson_filtration_degree(inner_auto(commutator(x(3, 1), x(3, 2))), 5) >= 2);
  }

  TEST_CASE("Johnson image of a conjugation") {
    const auto d = johnson_image(magnus_gen(MagnusGenerator::conj(1, 2), 2), 1);
    CHECK(ev(d, 1) == -LieElement::basis(2, {1, 2}));
    CHECK(ev(d, 2).is_zero());
    CHECK_THROWS_AS(johnson_image(magnus_gen(MagnusGenerator::conj(1, 2), 2), 2), PreconditionError);
  }

  TEST_CASE("ad and degree-1 ranks") {
    const auto a = ad(X(3, 1));
    CHECK(ev(a, 1).is_zero());
    CHECK(ev(a, 2) == LieElement::basis(3, {1, 2}));
    CHECK(pettet_rank(3) == 9);
    CHECK(pettet_rank(4) == 24);
    CHECK(inner_rank(3, 1) == 3);
    CHECK(derivation_space_dim(3, 1) == 9);
    const auto s = linalg::smith_normal_form(ad_matrix(3, 1));
    CHECK(s.divisors == std::vector<Integer>{1, 1, 1});
  }

  TEST_CASE("psi table") {
    for (std::size_t s = 1; s <= 3; ++s) {
      const auto p = psi_check(3, s);
      CHECK(p.lower_evaluations_vanish);
      CHECK(p.sign == (s % 2 ? -1 : 1));
      CHECK(p.rank_ev_n == witt_dimension(2, s));
      CHECK(p.rank_joint == p.rank_psi + p.rank_ad);
      CHECK(p.outer_nonzero);
    }
    CHECK_THROWS_AS(psi_section({3}, 3), PreconditionError);
  }

  TEST_CASE("derivations satisfy Leibniz") {
    gen::Gen g(4);
    for (int t = 0; t < 15; ++t) {
      const std::size_t n = 3;
      std::vector<LieElement> im;
      for (std::size_t i = 0; i < n; ++i) im.push_back(g.lie(n, 2));
      const GradedDerivation d(n, 1, im);
      const auto a = g.lie(n, 1), b = g.lie(n, 2);
      CHECK(derivation_apply(d, bracket(a, b)) ==
            bracket(derivation_apply(d, a), b) + bracket(a, derivation_apply(d, b)));
      CHECK(GradedDerivation::from_coordinates(n, 1, d.coordinates()) == d);
    }
  }

  TEST_CASE("Johnson homomorphism is additive in degree 1") {
    gen::Gen g(6);
    for (int t = 0; t < 15; ++t) {
      const Endo a = g.ia(3, 2), b = g.ia(3, 2);
      CHECK(johnson_image(compose(a, b), 1) == johnson_image(a, 1) + johnson_image(b, 1));
    }
  }

  TEST_CASE("inner derivations reduce to zero") {
    gen::Gen g(13);
    for (int t = 0; t < 10; ++t) {
      const auto w = g.lie(3, 2);
      CHECK(outer_reduce(ad(w)).is_zero());
      const auto p = psi_image(LieElement::basis(2, {1, 2}), 2);
      CHECK(outer_reduce(p + ad(w)).normal_form == outer_reduce(p).normal_form);
    }
  }

  TEST_CASE("Kaloujnine on random pairs") {
    gen::Gen g(99);
    for (int t = 0; t < 10; ++t) {
      const Endo a = g.ia(3, 1), b = g.ia(3, 1);
      CHECK(johnson_filtration_degree(commutator(a, b), 2) >= 2);
    }
  }
}
