#include <doctest.h>

#include "expc/corpus.hpp"
#include "expc/errors.hpp"
#include "expc/io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_ideal(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ideal files") {
  CHECK(parse_ideal("vars: 2\ngens:\n3 1\n2 2\n") == ex_small());
  CHECK(parse_ideal("# comment\nvars: 2\n\ngens:\nx1^3*x2\nx1^2 * x2^2\n") == ex_small());
  CHECK(parse_ideal("vars: 3\ngens:\nx1*x1*x3\n") == ideal(3, {{2, 0, 1}}));
  CHECK(serialize_ideal(ex_small()) == "vars: 2\ngens:\n2 2\n3 1\n");
}

TEST_CASE("ideal file errors name the line") {
  CHECK(error_of("vars: 2\ngens:\n3 1\nx1^2\n").find("line 4") == 0);
  CHECK(error_of("vars: 2\ngens:\n3 1\nx1^2\n").find("mixed") != std::string::npos);
  CHECK(error_of("vars: 2\ngens:\n3 1 1\n").find("line 3") == 0);
  CHECK(error_of("vars: 2\ngens:\nx3\n").find("outside") != std::string::npos);
  CHECK(error_of("vars: 2\ngens:\n0 0\n").find("zero generator") != std::string::npos);
  CHECK(error_of("vars: two\ngens:\n1 0\n").find("line 1") == 0);
  CHECK(error_of("vars: 2\n1 0\n").find("gens:") != std::string::npos);
  CHECK(error_of("vars: 2\ngens:\n") == "no generators after \"gens:\"");
  CHECK(error_of("") == "empty ideal file");
  CHECK(error_of("vars: 2\ngens:\n-1 1\n").find("0..255") != std::string::npos);
}

TEST_CASE("matrix files") {
  CHECK(parse_matrix("1 2\n1 1\n") == GradingMatrix(1, 2, {1, 1}));
  CHECK(parse_matrix("2 3\n1 1 1\n0 1 3\n") == GradingMatrix(2, 3, {1, 1, 1, 0, 1, 3}));
  CHECK_THROWS_AS(parse_matrix("1 2\n1 -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_matrix("1 2\n1 x\n"), ValidationError);
  const auto m = generate_generic(5, 3, 4);
  CHECK(parse_matrix(serialize_matrix(m)) == m);
}

TEST_CASE("property: ideal serialization round-trips") {
  CorpusSpec spec{6, 4, 6, 0};
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = corpus_rng(12, i);
    const auto I = random_ideal(rng, spec);
    CAPTURE(i);
    CHECK(parse_ideal(serialize_ideal(I)) == I);
  }
}

TEST_CASE("rationals") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(parse_rational("4/2")) == "2");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
  CHECK(parse_rational_list("1/2,0") == RationalVector{Rational(1, 2), 0});
}

TEST_CASE("json reports") {
  CHECK(to_json(RationalVector{Rational(1, 2), 3}).dump() == R"(["1/2","3"])");
  CHECK(to_json(cx(4, {{1, 2}, {3, 4}})).dump() == "[[1,2],[3,4]]");
  CHECK(to_json(ex_small()).dump() == R"({"vars":2,"gens":[[2,2],[3,1]]})");
  CHECK(to_json(GradingMatrix(1, 2, {1, 1})).dump() == "[[1,1]]");
  const Component c{VertexSet::singleton(1), {1, 0}};
  CHECK(to_json(c).dump() == R"({"sigma":[2],"base":[1,0],"dimension":1})");
  const auto doc = report_document("degree", to_json(ex_small()), nullptr, {{"degree", 3}}, 7);
  CHECK(doc["provenance"]["seed"] == 7);
  CHECK(doc["provenance"]["version"] == kVersion);
  CHECK(doc["results"]["degree"] == 3);
  const auto cm = to_json(is_cohen_macaulay_ideal(ex_small()));
  CHECK(cm["verdict"] == false);
  CHECK(cm["witness_b"].dump() == "[2,1]");
}
