#include <doctest.h>

#include "generators.hpp"
#include "torelli/error.hpp"
#include "torelli/laurent.hpp"
#include "torelli/word.hpp"

using namespace torelli;

namespace {
LaurentPoly t(int e = 1) { return LaurentPoly::variable(1, 1, e); }
}  // namespace

TEST_SUITE("word") {
  TEST_CASE("free reduction") {
    CHECK(Word(2, {1, 2, -2, -1, 2}).letters() == std::vector<int>{2});
    CHECK(Word(3, {1, -1}).empty());
    CHECK_THROWS_AS(Word(2, {3}), PreconditionError);
    CHECK_THROWS_AS(Word(2, {0}), PreconditionError);
    CHECK(Word(2, {1, -2}).to_string() == "x1 X2");
    CHECK(Word(2).to_string() == "1");
  }

  TEST_CASE("commutators and powers") {
    const Word a = Word::generator(2, 1), b = Word::generator(2, 2);
    CHECK(commutator(a, b).letters() == std::vector<int>{1, 2, -1, -2});
    CHECK(commutator(a, b).in_commutator_subgroup());
    CHECK(power(a, -3).letters() == std::vector<int>{-1, -1, -1});
    CHECK(conjugate(a, b).letters() == std::vector<int>{1, 2, -1});
    CHECK((a * b).exponent_sums() == std::vector<long>{1, 1});
  }

  TEST_CASE("Magnus generators") {
    CHECK(all_magnus_generators(3).size() == 9);
    CHECK(all_magnus_generators(4).size() == 24);
    const Endo c = magnus_gen(MagnusGenerator::conj(1, 2), 3);
    CHECK(c.image(1).letters() == std::vector<int>{2, 1, -2});
    CHECK(c.verify_inverse());
    CHECK(c.acts_trivially_on_homology());
    const Endo k = magnus_gen(MagnusGenerator::chain(1, 2, 3), 3);
    CHECK(k.image(1).letters() == std::vector<int>{1, 2, 3, -2, -3});
    CHECK(k.verify_inverse());
  }

  TEST_CASE("composition and inner automorphisms") {
    gen::Gen g(3);
    for (int t = 0; t < 20; ++t) {
      const Endo a = g.ia(3, 3);
      CHECK(a.verify_inverse());
      CHECK(compose(a, a.inverse()) == Endo::identity(3));
      const Word w = g.word(3, 6);
      CHECK(apply_endo(a.inverse(), apply_endo(a, w)) == w);
    }
    const Word x = commutator(Word::generator(3, 1), Word::generator(3, 2));
    const Endo ad = inner_auto(x);
    CHECK(ad.apply(Word::generator(3, 3)) == x * Word::generator(3, 3) * x.inverse());
    CHECK(left_multiply_generator(3, 3, x).image(3) == x * Word::generator(3, 3));
    CHECK_THROWS_AS(left_multiply_generator(3, 1, x), PreconditionError);
  }
}

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic and printing") {
    const LaurentPoly p = t(2) - t() + 1;
    CHECK(p.to_string() == "t^2 - t + 1");
    CHECK((t() + 1) * (t() - 1) == t(2) - 1);
    CHECK((t(-1) * t()) == LaurentPoly(1));
    CHECK(LaurentPoly::variable(2, 2).to_string() == "t2");
    CHECK(augmentation(p) == 1);
    CHECK_THROWS_AS(LaurentPoly::variable(2, 1) + LaurentPoly::variable(3, 1), PreconditionError);
  }

  TEST_CASE("unit normalization") {
    CHECK(normalize_unit(t(-1) - 1) == t() - 1);
    CHECK(normalize_unit(-(t(3) - t(4))) == t() - 1);
    CHECK(normalize_unit(LaurentPoly(-2)) == LaurentPoly(2));
  }

  TEST_CASE("division and gcd oracles") {
    CHECK(exact_divide(t(3) - 1, t() - 1) == t(2) + t() + 1);
    CHECK(divides(t() + 1, t(2) - 1));
    CHECK_FALSE(divides(t() + 2, t(2) - 1));
    CHECK(normalize_unit(laurent_gcd({t(2) - 1, t(3) - 1})) == t() - 1);
    CHECK(normalize_unit(laurent_gcd({LaurentPoly(4), LaurentPoly(6)})) == LaurentPoly(2));
    const auto x = LaurentPoly::variable(2, 1), y = LaurentPoly::variable(2, 2);
    CHECK(normalize_unit(laurent_gcd({(x - 1) * (y + 1), (x - 1) * (y - 1)})) == x - 1);
    CHECK_THROWS_AS(laurent_gcd({LaurentPoly::variable(4, 1), LaurentPoly::variable(4, 2)}), UnsupportedArity);
  }

  TEST_CASE("evaluation at characters") {
    const auto z6 = Character(6, {{Rational(1), 1}});
    CHECK(evaluate(t(2) - t() + 1, z6).is_zero());
    CHECK(evaluate(t(2) - t() + 1, Character::rational({Rational(2)})) == ExactScalar(3));
    CHECK(evaluate(t(-1), Character::rational({ratio(1, 3)})) == ExactScalar(3));
    CHECK(Character(2, {{Rational(-1), 1}}).is_trivial());
  }

  TEST_CASE("ring properties on random polynomials") {
    gen::Gen g(17);
    for (int k = 0; k < 30; ++k) {
      const std::size_t v = g.range(1, 3);
      const auto a = g.poly(v, 4), b = g.poly(v, 3), c = g.poly(v, 3);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(normalize_unit(normalize_unit(a)) == normalize_unit(a));
      if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
      if (!a.is_zero() && !b.is_zero()) {
        const auto d = laurent_gcd({a * c, b * c});
        CHECK(divides(d, a * c));
        CHECK(divides(d, b * c));
        if (!c.is_zero()) CHECK(divides(c, d));
      }
    }
  }
}
