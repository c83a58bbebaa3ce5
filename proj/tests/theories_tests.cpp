#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "mtc/error.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/theories.hpp"

using namespace mtc;

TEST_CASE("builtin su2 closed forms") {
  SUBCASE("k=1") {
    const auto md = builtin_su2(1);
    REQUIRE(md.rank() == 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(md.s(0, 0) - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(md.s(0, 1) - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(md.s(1, 1) - Complex{-r, 0}) < 1e-12);
    CHECK(md.weights[0] == Rational(0, 1));
    CHECK(md.weights[1] == Rational(1, 4));
    CHECK(md.central_charge == Rational(1, 1));
  }
  SUBCASE("k=2") {
    const auto md = builtin_su2(2);
    REQUIRE(md.rank() == 3);
    const auto d = quantum_dims(md);
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK(d[2] == doctest::Approx(1.0));
    CHECK(md.central_charge == Rational(3, 2));
  }
  SUBCASE("vacuum weight is zero and the vacuum row positive for any k") {
    for (int k = 1; k <= 8; ++k) {
      const auto md = builtin_su2(k);
      CHECK(md.rank() == static_cast<std::size_t>(k) + 1);
      CHECK(md.weights[0] == Rational(0, 1));
      for (std::size_t i = 0; i < md.rank(); ++i) CHECK(md.s(0, i).real() > 0.0);
    }
  }
  SUBCASE("k=0 is a parameter error") { CHECK_THROWS_AS(builtin_su2(0), Error); }
  SUBCASE("self-conjugate spectrum for every k") {
    for (int k = 1; k <= 6; ++k) {
      const auto pi = conjugation(builtin_su2(k));
      for (std::size_t i = 0; i < pi.size(); ++i) CHECK(pi[i] == i);
    }
  }
}

TEST_CASE("builtin ising passes validation and has the Ising ring") {
  const auto md = builtin_ising();
  CHECK(validate(md).all_pass());
  CHECK(quantum_dims(md)[2] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("theory spec URIs") {
  const auto a = parse_theory_spec("builtin:su2?k=3");
  CHECK(a.kind == TheorySpec::Kind::builtin);
  CHECK(a.builtin_name == "su2");
  CHECK(a.level == 3);
  const auto b = parse_theory_spec("builtin:ising");
  CHECK(b.builtin_name == "ising");
  const auto c = parse_theory_spec("some/file.json");
  CHECK(c.kind == TheorySpec::Kind::file);
  CHECK(c.path == "some/file.json");
  CHECK_THROWS_AS(parse_theory_spec("builtin:su2"), Error);
  CHECK_THROWS_AS(parse_theory_spec("builtin:e8"), Error);
}

TEST_CASE("serialize round-trips every built-in") {
  std::vector<ModularData> all = {builtin_trivial(), builtin_ising()};
  for (int k = 1; k <= 5; ++k) all.push_back(builtin_su2(k));
  for (const auto& md : all) {
    const std::string text = serialize_theory(md);
    const ModularData back = parse_theory(text);
    REQUIRE(back.rank() == md.rank());
    CHECK(back.vacuum == md.vacuum);
    CHECK(back.central_charge == md.central_charge);
    for (std::size_t i = 0; i < md.rank(); ++i) {
      CHECK(back.labels[i] == md.labels[i]);
      CHECK(back.weights[i] == md.weights[i]);
    }
    CHECK(back.s.max_abs_diff(md.s) < 1e-12);
    // %.17g round-trips doubles exactly
    CHECK(back.s.max_abs_diff(md.s) == 0.0);
  }
}

TEST_CASE("serialization is deterministic and matches the golden trivial doc") {
  const std::string golden =
      "{\n"
      "  \"name\": \"trivial\",\n"
      "  \"labels\": [\"1\"],\n"
      "  \"vacuum\": 0,\n"
      "  \"central_charge\": {\"num\": 0, \"den\": 1},\n"
      "  \"weights\": [{\"num\": 0, \"den\": 1}],\n"
      "  \"S\": [\n"
      "    [1, 0]\n"
      "  ]\n"
      "}\n";
  CHECK(serialize_theory(builtin_trivial()) == golden);
  CHECK(serialize_theory(builtin_su2(3)) == serialize_theory(builtin_su2(3)));
}

TEST_CASE("parser error surface") {
  SUBCASE("malformed JSON carries a byte offset") {
    CHECK_THROWS_WITH_AS(parse_theory("{\"name\": }"), doctest::Contains("byte"), Error);
  }
  SUBCASE("length mismatch names the field") {
    const std::string doc =
        R"({"name":"x","labels":["a","b","c"],"vacuum":0,
            "central_charge":{"num":0,"den":1},
            "weights":[{"num":0,"den":1},{"num":0,"den":1}],
            "S":[[1,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[1,0]]})";
    CHECK_THROWS_WITH_AS(parse_theory(doc), doctest::Contains("weights"), Error);
  }
  SUBCASE("weights reduce mod 1 with a warning") {
    const std::string doc =
        R"({"name":"x","labels":["a"],"vacuum":0,
            "central_charge":{"num":0,"den":1},
            "weights":[{"num":5,"den":4}],
            "S":[[1,0]]})";
    std::vector<std::string> warnings;
    const auto md = parse_theory(doc, &warnings);
    CHECK(md.weights[0] == Rational(1, 4));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("5/4") != std::string::npos);
  }
  SUBCASE("bad rational names the field") {
    const std::string doc =
        R"({"name":"x","labels":["a"],"vacuum":0,
            "central_charge":{"num":0,"den":0},
            "weights":[{"num":0,"den":1}],
            "S":[[1,0]]})";
    CHECK_THROWS_WITH_AS(parse_theory(doc), doctest::Contains("central_charge"), Error);
  }
  SUBCASE("unknown top-level keys are rejected") {
    const std::string doc =
        R"({"name":"x","labels":["a"],"vacuum":0,
            "central_charge":{"num":0,"den":1},
            "weights":[{"num":0,"den":1}],
            "S":[[1,0]],"extra":1})";
    CHECK_THROWS_WITH_AS(parse_theory(doc), doctest::Contains("extra"), Error);
  }
  SUBCASE("duplicate labels are rejected") {
    const std::string doc =
        R"({"name":"x","labels":["a","a"],"vacuum":0,
            "central_charge":{"num":0,"den":1},
            "weights":[{"num":0,"den":1},{"num":0,"den":1}],
            "S":[[1,0],[0,0],[0,0],[1,0]]})";
    CHECK_THROWS_AS(parse_theory(doc), Error);
  }
  SUBCASE("validation is not raised at parse time") {
    // a syntactically fine document with a non-modular S parses cleanly
    const std::string doc =
        R"({"name":"x","labels":["a","b"],"vacuum":0,
            "central_charge":{"num":0,"den":1},
            "weights":[{"num":0,"den":1},{"num":1,"den":3}],
            "S":[[0.5,0],[0.5,0],[0.5,0],[0.5,0]]})";
    const auto md = parse_theory(doc);
    CHECK_FALSE(validate(md).all_pass());
  }
}

TEST_CASE("round-trip property on randomized documents") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    ModularData md;
    const std::size_t m = 1 + rng() % 5;
    md.name = "rand" + std::to_string(trial);
    for (std::size_t i = 0; i < m; ++i) md.labels.push_back("l" + std::to_string(i));
    md.vacuum = rng() % m;
    md.central_charge = Rational(static_cast<std::int64_t>(rng() % 97) - 48,
                                 1 + static_cast<std::int64_t>(rng() % 16));
    md.s = CMatrix(m);
    for (std::size_t i = 0; i < m; ++i) {
      md.weights.push_back(
          Rational(static_cast<std::int64_t>(rng() % 64), 1 + static_cast<std::int64_t>(rng() % 32))
              .mod1());
      for (std::size_t j = 0; j < m; ++j) md.s(i, j) = Complex{unif(rng), unif(rng)};
    }
    // parse(serialize(md)) must reproduce S bit-exactly and rationals exactly,
    // whether or not the data is modular
    const ModularData back = parse_theory(serialize_theory(md));
    CHECK(back.s.max_abs_diff(md.s) == 0.0);
    CHECK(back.central_charge == md.central_charge);
    CHECK(back.vacuum == md.vacuum);
    for (std::size_t i = 0; i < m; ++i) CHECK(back.weights[i] == md.weights[i]);
  }
}

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-1, 2).mod1() == Rational(1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(3, 2) * Rational(2, 3)) == Rational(1, 1));
  CHECK((Rational(1, 2) / Rational(2, 1)) == Rational(1, 4));
  CHECK(Rational(5, 4).mod1() == Rational(1, 4));
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}
