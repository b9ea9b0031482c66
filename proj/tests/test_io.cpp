#include <doctest.h>

#include <random>

#include "hamband/construct.hpp"
#include "hamband/io.hpp"
#include "hamband/oracle.hpp"
#include "support.hpp"

using namespace hamband;

TEST_CASE("arrangement JSON round-trips") {
  std::mt19937_64 rng(31);
  for (Shape s : {Shape{2, 2}, Shape{3, 4}, Shape{2, 3, 4}, Shape{5}}) {
    Arrangement a = testsupport::random_arrangement(s, rng);
    CHECK(arrangement_from_json(to_json(a)) == a);
  }
}

TEST_CASE("arrangement JSON format is the documented object") {
  Arrangement a(Shape{2, 3}, {1, 2, 3, 4, 5, 6});
  CHECK(to_json(a) ==
        R"({"shape":[2,3],"order":"row-major","values":[1,2,3,4,5,6]})");
}

TEST_CASE("JSON parser rejects malformed input") {
  CHECK_THROWS_AS(arrangement_from_json("not json"), ParseError);
  CHECK_THROWS_AS(arrangement_from_json(R"({"shape":[2,2]})"), ParseError);
  CHECK_THROWS_AS(arrangement_from_json(
                      R"({"shape":[2,2],"order":"column-major","values":[1,2,3,4]})"),
                  ParseError);
  CHECK_THROWS_AS(arrangement_from_json(
                      R"({"shape":[3,2],"order":"row-major","values":[1,2,3,4,5,6]})"),
                  ParseError);
  CHECK_THROWS_AS(arrangement_from_json(
                      R"({"shape":[2,2],"order":"row-major","values":[1,2,2,4]})"),
                  ParseError);
  CHECK_THROWS_AS(arrangement_from_json(
                      R"({"shape":[2,2],"order":"row-major","values":[1,2,3]})"),
                  ParseError);
  CHECK_THROWS_AS(arrangement_from_json(
                      R"({"shape":[],"order":"row-major","values":[]})"),
                  ParseError);
}

TEST_CASE("CSV round-trips two-dimensional arrangements") {
  Arrangement a = construct(Shape{3, 4}).arrangement;
  CHECK(to_csv(a) == "1,2,5,6\n3,4,9,10\n7,8,11,12\n");
  CHECK(arrangement_from_csv(to_csv(a)) == a);
}

TEST_CASE("CSV is limited to d = 2 and validates row structure") {
  CHECK_THROWS_AS(to_csv(construct(Shape{2, 2, 2}).arrangement),
                  std::invalid_argument);
  CHECK_THROWS_AS(arrangement_from_csv("1,2,3\n4,5\n"), ParseError);
  CHECK_THROWS_AS(arrangement_from_csv("1,2\n3,4\n5,6\n"), ParseError);  // rows > cols
  CHECK_THROWS_AS(arrangement_from_csv("1,2,3\n"), ParseError);
  CHECK_THROWS_AS(arrangement_from_csv("1,x\n2,3\n"), ParseError);
  CHECK_THROWS_AS(arrangement_from_csv("1,2\n2,4\n"), ParseError);  // not a bijection
}

TEST_CASE("bounds report serialization") {
  CHECK(to_json(bounds_report(Shape{3, 4})) ==
        R"({"shape":[3,4],"lower":7,"upper":7,"construction_spread":null})");
  CHECK(to_json(bounds_report(Shape{3, 4}, Value{7})) ==
        R"({"shape":[3,4],"lower":7,"upper":7,"construction_spread":7})");
}

TEST_CASE("construction result serialization carries the envelope") {
  ConstructionResult r = construct(Shape{2, 3});
  CHECK(to_json(r) ==
        R"({"arrangement":{"shape":[2,3],"order":"row-major","values":[1,2,3,4,5,6]},)"
        R"("spread":3,"lower":3,"upper":3})");
}

TEST_CASE("oracle result serialization includes the witness") {
  OracleResult r = exact_min_spread(Shape{2, 2});
  CHECK(to_json(r) ==
        R"({"shape":[2,2],"optimum":2,)"
        R"("witness":{"shape":[2,2],"order":"row-major","values":[1,2,3,4]},)"
        R"("extensions_visited":2})");
}

TEST_CASE("numbering serialization lists bit strings in order") {
  CHECK(to_json(harper_numbering(2)) == R"(["00","01","10","11"])");
}
