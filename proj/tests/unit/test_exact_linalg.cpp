#include <doctest.h>

#include "generators.hpp"
#include "torelli/error.hpp"
#include "torelli/exact.hpp"
#include "torelli/linalg.hpp"

using namespace torelli;
using linalg::IntMatrix;
using linalg::RatMatrix;

TEST_SUITE("exact") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == ratio(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(ratio(6, -4)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
  }

  TEST_CASE("cyclotomic data") {
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
  }

  TEST_CASE("roots of unity") {
    const auto z3 = ExactScalar::root_of_unity(3, 1);
    CHECK(z3 + z3 * z3 == ExactScalar(-1));
    CHECK(z3.pow(3) == ExactScalar(1));
    CHECK(z3.pow(-1) == z3 * z3);
    const auto i = ExactScalar::root_of_unity(4, 1);
    CHECK(i * i == ExactScalar(-1));
    CHECK(ExactScalar::root_of_unity(2, 1) == ExactScalar(-1));
    CHECK(ExactScalar::root_of_unity(6, 3, Rational(2)) == ExactScalar(-2));
  }

  TEST_CASE("conductor rules") {
    const auto z5 = ExactScalar::root_of_unity(5, 2);
    CHECK((z5 + ExactScalar(ratio(1, 3))).conductor() == 5);
    CHECK(ExactScalar(7).is_rational());
    CHECK_THROWS_AS(ExactScalar::root_of_unity(3, 1) + ExactScalar::root_of_unity(4, 1), DomainMismatch);
  }

  TEST_CASE("inverse in Q(zeta_5)") {
    const auto x = ExactScalar(1) + ExactScalar::root_of_unity(5, 1);
    CHECK(x * x.inverse() == ExactScalar(1));
    CHECK_THROWS(ExactScalar(0).inverse());
  }

  TEST_CASE("field axioms on random elements") {
    gen::Gen g(11);
    for (unsigned m : {1u, 3u, 4u, 5u, 8u, 12u}) {
      for (int t = 0; t < 10; ++t) {
        const auto a = g.scalar(m), b = g.scalar(m), c = g.scalar(m);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == ExactScalar(0));
        if (!a.is_zero()) CHECK(a / a == ExactScalar(1));
      }
    }
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("rank, kernel and determinant oracles") {
    const auto m = RatMatrix::from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(linalg::rank(m) == 2);
    const auto k = linalg::kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rational>{1, -2, 1});
    CHECK(linalg::determinant(IntMatrix::from_dense({{2, 1}, {7, 4}})) == 1);
    CHECK(linalg::determinant(IntMatrix::from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  }

  TEST_CASE("Smith normal form oracles") {
    const auto s = linalg::smith_normal_form(IntMatrix::from_dense({{2, 4}, {6, 8}}));
    CHECK(s.divisors == std::vector<Integer>{2, 4});
    const auto t = linalg::smith_normal_form(IntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(t.divisors == std::vector<Integer>{2, 6, 12});
    CHECK(linalg::smith_normal_form(IntMatrix(3, 2)).divisors.empty());
  }

  TEST_CASE("subsets and minors") {
    CHECK(linalg::subsets(4, 2).size() == 6);
    CHECK(linalg::subsets(3, 0).size() == 1);
    const auto mi = linalg::minors(IntMatrix::from_dense({{1, 2, 3}, {4, 5, 6}}), 2);
    CHECK(mi == std::vector<Integer>{-3, -6, -3});
  }

  TEST_CASE("echelon basis") {
    linalg::EchelonBasis<Rational> e(3);
    CHECK(e.insert({{0, 2}, {1, 2}}));
    CHECK_FALSE(e.insert({{0, 1}, {1, 1}}));
    CHECK(e.insert({{1, 1}, {2, 1}}));
    CHECK(e.contains({{0, 1}, {2, -1}}));
    CHECK(e.coordinates({{0, 1}, {1, 2}, {2, 1}}) == std::vector<Rational>{1, 2});
    CHECK_THROWS(e.coordinates({{0, 5}, {2, 1}}));
  }

  TEST_CASE("rank over Q(zeta)") {
    linalg::ExactMatrix m(2, 2);
    const auto z = ExactScalar::root_of_unity(3, 1);
    m.set(0, 0, ExactScalar(1));
    m.set(0, 1, z);
    m.set(1, 0, z * z);
    m.set(1, 1, ExactScalar(1));
    CHECK(linalg::rank(m) == 1);
    m.set(1, 1, ExactScalar::root_of_unity(4, 1));
    CHECK_THROWS_AS(linalg::rank(m), DomainMismatch);
  }

  TEST_CASE("rank properties on random matrices") {
    gen::Gen g(5);
    for (int t = 0; t < 30; ++t) {
      const std::size_t r = g.range(1, 6), c = g.range(1, 6);
      const auto m = g.rat_matrix(r, c);
      CHECK(linalg::rank(m) == linalg::rank(m.transpose()));
      const auto ker = linalg::kernel_basis_sparse(m);
      CHECK(ker.size() + linalg::rank(m) == c);
      for (const auto& v : ker) CHECK(m.apply(v).empty());
    }
  }

  TEST_CASE("Smith form reconstructs the matrix") {
    gen::Gen g(9);
    for (int t = 0; t < 20; ++t) {
      const auto m = g.int_matrix(g.range(1, 4), g.range(1, 4));
      const auto s = linalg::smith_normal_form(m);
      CHECK(s.U * m * s.V == s.D);
      CHECK(s.divisors.size() == linalg::rank(m));
      for (std::size_t i = 1; i < s.divisors.size(); ++i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
      CHECK(abs(linalg::determinant(s.U)) == 1);
      CHECK(abs(linalg::determinant(s.V)) == 1);
    }
  }
}
