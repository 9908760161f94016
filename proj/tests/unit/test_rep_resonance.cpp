#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "torelli/error.hpp"
#include "torelli/resonance.hpp"
#include "torelli/slnrep.hpp"

using namespace torelli;

TEST_SUITE("slnrep") {
  TEST_CASE("Weyl dimensions") {
    CHECK(weyl_dim({1, 1, 1}, 4) == 64);
    CHECK(weyl_dim({1, 0}, 3) == 3);
    CHECK(weyl_dim({1, 1}, 3) == 8);
    CHECK(weyl_dim({0, 0, 0}, 4) == 1);
    CHECK(weyl_dim({1, 0, 0, 1}, 5) == 24);
    CHECK(weyl_dim({1, 0, 1, 1}, 5) == 175);
    CHECK(weyl_dim({1, 0, 1}, 4) == 15);
    CHECK(weyl_dim({1, 1, 0}, 4) == 20);
    CHECK(weyl_dim({1, 0, 1, 0}, 5) == 45);
    CHECK(dynkin_labels({2, 1, 0, 0}) == std::vector<unsigned>{1, 1, 0});
  }

  TEST_CASE("basic modules") {
    const auto h = RepSpace::standard(3);
    CHECK(h.dim() == 3);
    CHECK(verify_action(h));
    CHECK(verify_action(RepSpace::dual(h)));
    const auto w = RepSpace::wedge2(h);
    CHECK(w.dim() == 3);
    CHECK(verify_action(w));
    CHECK(verify_action(RepSpace::tensor(h, RepSpace::dual(h))));
    CHECK(maximal_vectors(RepSpace::tensor(h, RepSpace::dual(h))).size() == 2);
    CHECK(RepSpace::pair_index(4, 0, 1) == 0);
    CHECK(RepSpace::pair_index(4, 2, 3) == 5);
  }

  TEST_CASE("V = ker ad*") {
    for (std::size_t n : {4, 5}) {
      const auto v = build_V(n);
      CHECK(v.dim() == n * n * (n - 1) / 2 - n);
      CHECK(v.ambient_dim() == n * n * (n - 1) / 2);
      CHECK(verify_action(v));
      const auto mx = maximal_vectors(v);
      REQUIRE(mx.size() == 1);
      CHECK(weight_of(v, mx[0]) == canonical_weight([&] {
              Weight w(n, 0);
              w[0] = 1;
              w[n - 2] = w[n - 1] = -1;
              return w;
            }()));
      CHECK(generate_submodule(v, mx[0]).rank() == v.dim());
    }
    CHECK_THROWS_AS(build_V(3), PreconditionError);
  }

  TEST_CASE("adjoint trace map") {
    const auto m = adjoint_trace_matrix(4);
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 24);
    CHECK(linalg::rank(m) == 4);
  }

  TEST_CASE("subspaces must be invariant") {
    const auto h = RepSpace::standard(3);
    CHECK_THROWS_AS(RepSpace::subspace(h, {{{0, Rational(1)}}}), VerificationFailure);
    CHECK(RepSpace::subspace(h, {{{0, Rational(1)}}, {{1, Rational(1)}}, {{2, Rational(1)}}}).dim() == 3);
  }

  TEST_CASE("exponentials of root operators") {
    const auto h = RepSpace::standard(3);
    // exp(c E_12) e_2 = e_2 + c e_1
    const QVector v = exp_root_apply(h, 1, 2, Rational(5), {{1, Rational(1)}});
    CHECK(v == QVector{{0, Rational(5)}, {1, Rational(1)}});
  }
}

TEST_SUITE("resonance-binf") {
  TEST_CASE("resonance of trivial data") {
    const auto f = CupData::zero(3);
    CHECK(resonance_membership(f, {{0, Rational(1)}}));
    CHECK(resonance_membership(f, {}));
    CHECK_FALSE(resonance_membership(CupData::zero(1), {{0, Rational(2)}}));
    CHECK_FALSE(resonance_membership(CupData::zero(1), {}));
    CHECK_THROWS_AS(resonance_membership(f, {{5, Rational(1)}}), PreconditionError);
  }

  TEST_CASE("exterior algebra data has no resonance") {
    // H² = Λ²H¹ with the identity cup product
    CupData c = CupData::zero(3);
    c.h2 = 3;
    for (std::size_t p = 0; p < 3; ++p) c.columns[p] = {{p, Rational(1)}};
    gen::Gen g(2);
    for (int t = 0; t < 20; ++t) CHECK_FALSE(resonance_membership(c, sample_vector(3, g.rng())));
  }

  TEST_CASE("OA_4 data") {
    const auto d = oan_cup_data(4);
    CHECK(d.V.dim() == 20);
    CHECK(d.L2.dim() == 190);
    CHECK(d.K.rank() == 64);
    CHECK(d.cup.h2 == 126);
    CHECK(d.u0_space_dim == 1);
    CHECK(weight_of(d.L2, d.u0) == d.mu);
    CHECK(lambda_kernel_dim(d.cup, d.v0) == 1);
    CHECK_FALSE(resonance_membership(d.cup, d.v0));
    CHECK_THROWS_AS(oan_cup_data(6), ResourceLimit);
  }

  TEST_CASE("resonance is a cone and SL_n stable on OA_4") {
    const auto d = oan_cup_data(4);
    gen::Gen g(77);
    CupData c = d.cup;
    c.validate();
    for (int t = 0; t < 20; ++t) {
      QVector z = sample_vector(20, g.rng());
      const bool m = resonance_membership(c, z);
      QVector scaled = z;
      linalg::scale(scaled, g.nonzero_rational());
      CHECK(resonance_membership(c, scaled) == m);
      // a random product of root exponentials has determinant 1
      QVector gz = z;
      for (int k = 0; k < 4; ++k) {
        const int l = static_cast<int>(g.range(1, 4));
        int m2 = static_cast<int>(g.range(1, 3));
        if (m2 >= l) ++m2;
        gz = exp_root_apply(d.V, l, m2, g.nonzero_rational(2), gz);
      }
      CHECK(resonance_membership(c, gz) == m);
    }
  }

  TEST_CASE("certificate at n = 4") {
    const auto cert = certify_vanishing_oan(4, 7, 50);
    CHECK(cert.verdict == "vanishing");
    CHECK(cert.dimK == cert.weyl_dim_mu);
    CHECK(cert.ker_lambda_v0_dim == 1);
    REQUIRE(cert.sampling);
    CHECK(cert.sampling->hits == 0);
    CHECK(cert.sampling->trials == 50);
    CHECK_FALSE(cert.reasoning.empty());
  }

  TEST_CASE("exhausted budget yields a partial certificate") {
    const auto cert = certify_vanishing_oan(5, 1, 0, Budget(0.0));
    CHECK(cert.verdict == "inconclusive");
    CHECK(cert.failure_is_resource_limit);
    CHECK_FALSE(cert.failure_stage.empty());
  }

  TEST_CASE("basis cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "torelli-cache-test";
    std::filesystem::remove_all(dir);
    const auto first = oan_cup_data(4, Budget::unlimited(), dir.string());
    CHECK_FALSE(first.K_from_cache);
    const auto second = oan_cup_data(4, Budget::unlimited(), dir.string());
    CHECK(second.K_from_cache);
    CHECK(second.K.rows() == first.K.rows());
    // a damaged file is ignored and rewritten
    for (const auto& f : std::filesystem::directory_iterator(dir)) {
      std::ofstream out(f.path(), std::ios::trunc);
      out << "garbage\n";
    }
    const auto third = oan_cup_data(4, Budget::unlimited(), dir.string());
    CHECK_FALSE(third.K_from_cache);
    CHECK(third.K.rank() == 64);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("infinitesimal Alexander invariant oracles") {
    const auto f2 = binf_from_cup(CupData::zero(2));
    for (std::size_t q = 2; q <= 10; ++q) CHECK(binf_graded_dim(f2, q) == q - 1);
    CHECK(binf_graded_dim(binf_from_cup(CupData::zero(3)), 3) == 8);
    const auto h1 = binf_from_cup(CupData::zero(1));
    CHECK(binf_graded_dim(h1, 2) == 0);
    const auto tot = binf_total_dim(h1, 5);
    CHECK(tot.finite);
    CHECK(tot.total == 0);
    const auto t2 = binf_total_dim(f2, 10);
    CHECK_FALSE(t2.finite);
    CHECK(t2.dims == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS(binf_graded_dim(f2, 1), PreconditionError);
    CHECK(monomial_count(3, 2) == 6);
    CHECK(monomial_count(2, 0) == 1);
  }

  TEST_CASE("delta3 formula") {
    const auto d = delta3(3, 0, 1, 2);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == std::tuple<std::size_t, std::size_t, int>{0, RepSpace::pair_index(3, 1, 2), 1});
    CHECK(d[1] == std::tuple<std::size_t, std::size_t, int>{1, RepSpace::pair_index(3, 0, 2), -1});
    CHECK(d[2] == std::tuple<std::size_t, std::size_t, int>{2, RepSpace::pair_index(3, 0, 1), 1});
    CHECK_THROWS(delta3(3, 1, 0, 2));
  }

  TEST_CASE("holonomy dimensions") {
    const auto f3 = binf_from_cup(CupData::zero(3));
    CHECK(holonomy_bracket_dims(f3, 4) == std::vector<std::size_t>{3, 3, 8, 18});
    // ∂ onto all of Λ²H: the holonomy Lie algebra is abelian
    linalg::RatMatrix all(3, 3);
    for (std::size_t i = 0; i < 3; ++i) all.set(i, i, Rational(1));
    const auto ab = binf_presentation(3, all);
    CHECK(holonomy_bracket_dims(ab, 4) == std::vector<std::size_t>{3, 0, 0, 0});
    CHECK(binf_graded_dim(ab, 2) == 0);
    CHECK_THROWS_AS(holonomy_bracket_dims(f3, 5), ResourceLimit);
  }

  TEST_CASE("graded pieces respect the free bound") {
    gen::Gen g(55);
    for (int t = 0; t < 10; ++t) {
      const std::size_t h = g.range(2, 4);
      const std::size_t h2 = g.range(0, 3);
      const auto p = binf_presentation(h, g.rat_matrix(h * (h - 1) / 2, h2, 0.6));
      for (std::size_t q = 2; q <= 4; ++q)
        CHECK(binf_graded_dim(p, q) <= p.annihilator.size() * monomial_count(h, q - 2));
      // degree 3 of 𝔅 is h_3 of the holonomy Lie algebra
      CHECK(binf_graded_dim(p, 3) == holonomy_bracket_dims(p, 3)[2]);
    }
  }

  TEST_CASE("fnv1a") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  }
}
