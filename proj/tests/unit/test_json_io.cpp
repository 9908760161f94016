#include <doctest.h>

#include "generators.hpp"
#include "json_io.hpp"
#include "torelli/error.hpp"

using namespace torelli;
using io::json;

TEST_SUITE("json-io") {
  TEST_CASE("words and presentations") {
    const Word w = io::word_from_json(json::parse("[1,2,-1,-2]"));
    CHECK(w.rank() == 2);
    CHECK(io::to_json(w).dump() == "[1,2,-1,-2]");
    const auto p = io::presentation_from_json(json::parse(R"({"generators":2,"relators":[[1,2,1,-2,-1,-2]]})"));
    CHECK(p.generators == 2);
    CHECK(io::to_json(p).dump() == R"({"generators":2,"relators":[[1,2,1,-2,-1,-2]]})");
    CHECK_THROWS_AS(io::presentation_from_json(json::parse(R"({"generators":1,"relators":[[2]]})")),
                    PreconditionError);
    CHECK_THROWS_AS(io::parse_text("{"), PreconditionError);
  }

  TEST_CASE("endomorphisms") {
    const Endo e = magnus_gen(MagnusGenerator::chain(1, 2, 3), 3);
    const Endo back = io::endo_from_json(io::to_json(e));
    CHECK(back == e);
    CHECK(back.verify_inverse());
    CHECK_THROWS_AS(io::endo_from_json(json::parse(R"({"rank":1,"images":[[1]],"inverse":[[-1]]})")),
                    PreconditionError);
  }

  TEST_CASE("Laurent polynomials and characters") {
    gen::Gen g(1);
    for (int t = 0; t < 10; ++t) {
      const auto p = g.poly(2, 4);
      CHECK(io::laurent_from_json(io::to_json(p)) == p);
    }
    const Character c(6, {{ratio(2, 3), 1}, {Rational(1), 5}});
    const Character d = io::character_from_json(io::to_json(c));
    CHECK(d.conductor() == 6);
    CHECK(d.value(0) == c.value(0));
    CHECK(d.value(1) == c.value(1));
    CHECK(io::character_from_json(json::parse(R"(["2","1/3"])")).value(1) == ExactScalar(ratio(1, 3)));
  }

  TEST_CASE("Lie elements and derivations") {
    gen::Gen g(2);
    const auto a = g.lie(3, 3);
    CHECK(io::lie_from_json(io::to_json(a)) == a);
    CHECK_THROWS_AS(io::lie_from_json(json::parse(R"({"rank":2,"degree":2,"terms":[{"lyndon":[2,1],"coef":1}]})")),
                    PreconditionError);
    const auto d = johnson_image(magnus_gen(MagnusGenerator::conj(1, 2), 3), 1);
    CHECK(io::derivation_from_json(io::to_json(d)) == d);
  }

  TEST_CASE("certificate schema") {
    const auto j = io::to_json(certify_vanishing_oan(4, 3, 5));
    for (const char* k : {"n", "dimV", "dimK", "weight_v0", "maximal_space_dim", "ker_lambda_v0_dim", "verdict"})
      CHECK(j.contains(k));
    CHECK(j["sampling"]["trials"] == 5);
    CHECK(j["verdict"] == "vanishing");
  }
}
