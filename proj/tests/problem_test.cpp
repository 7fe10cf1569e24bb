#include <doctest.h>

#include <string>

#include "xch/error.hpp"
#include "xch/problem.hpp"

using namespace xch;

namespace {

// Returns the message of the ParseError thrown by parse_problem, or "" when
// the text parses.
std::string parse_message(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* two_algebras = R"({
  "algebras": [
    {"name": "K", "basis": ["e"], "mul": [[0, 0, 0, 1]]},
    {"name": "U", "basis": ["a", "b", "c"], "mul": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 2, 1, 1], [2, 2, 2, 1]]}
  ])";

std::string with(const std::string& rest) { return std::string(two_algebras) + rest + "}"; }

}  // namespace

TEST_SUITE("problem") {
  TEST_CASE("catalog") {
    const auto p = load_problem(std::string(XCH_SOURCE_DIR) + "/catalog/catalog.json");
    CHECK(p.field.rational());
    CHECK(p.construction_errors.empty());
    CHECK(p.algebras.size() == 8);
    CHECK(p.crossed_modules.size() == 11);
    CHECK(p.extensions.size() == 1);
    REQUIRE(p.find_crossed_module("X_inc_U2"));
    CHECK(p.find_crossed_module("X_inc_U2")->R.dim() == 1);
    CHECK(p.find_algebra("U2")->dim() == 3);
    CHECK(p.find_crossed_module("nope") == nullptr);
    CHECK_FALSE(p.tasks.empty());
  }

  TEST_CASE("fields") {
    CHECK(parse_field("Q").rational());
    CHECK(parse_field("Fp:7").prime == 7);
    CHECK(parse_field("Fp:1000000007").prime == 1000000007ULL);
    CHECK_THROWS_AS(parse_field("Fp:8"), ParseError);
    CHECK_THROWS_AS(parse_field("Fp:1"), ParseError);
    CHECK_THROWS_AS(parse_field("Fp:x"), ParseError);
    CHECK_THROWS_AS(parse_field("R"), ParseError);
    CHECK(parse_problem(R"({"field": "Fp:5"})").field.prime == 5);
  }

  TEST_CASE("malformed JSON has a position") {
    try {
      parse_problem("{\n  \"algebras\": [\n    {\"name\": \"K\",, }\n  ]\n}");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 0);
    }
  }

  TEST_CASE("structural errors carry a path") {
    CHECK(parse_message(R"([1, 2])").find("expected an object") != std::string::npos);
    CHECK(parse_message(R"({"algebras": [{"name": "K", "basis": ["e", "e"]}]})").find("duplicate label") !=
          std::string::npos);
    CHECK(parse_message(R"({"algebras": [{"name": "K", "basis": ["e"], "mul": [[0, 1, 0, 1]]}]})")
              .find("algebras[0]") != std::string::npos);
    CHECK(parse_message(R"({"algebras": [{"name": "K", "basis": ["e"], "mul": [[0, 0, 0, "1/0"]]}]})") != "");
    CHECK(parse_message(R"({"algebras": [{"name": "K", "basis": ["e"], "mul": [[0, 0, 0, "x"]]}]})") != "");
    CHECK(parse_message(R"({"algebras": [{"name": "K", "basis": ["e"], "mul": [[0, 0, 0, 1], [0, 0, 0, 2]]}]})") !=
          "");
    CHECK(parse_message(R"({"colour": 1})").find("unknown top-level") != std::string::npos);
    CHECK(parse_message(with(R"(, "algebras2": [])")) != "");
  }

  TEST_CASE("names") {
    CHECK(parse_message(with(R"(, "crossed_modules": [{"name": "K", "kind": "identity", "algebra": "K"}])"))
              .find("duplicate") != std::string::npos);
    CHECK(parse_message(with(R"(, "crossed_modules": [{"name": "X", "kind": "identity", "algebra": "V"}])"))
              .find("unknown algebra") != std::string::npos);
    CHECK(parse_message(with(R"(, "crossed_modules": [{"name": "X", "kind": "weird", "algebra": "K"}])"))
              .find("unknown kind") != std::string::npos);
    CHECK(parse_message(with(R"(, "subspaces": [{"name": "s", "algebra": "K", "vectors": [[1, 0]]}])")) != "");
  }

  TEST_CASE("scalars") {
    const auto p = parse_problem(with(
        R"(, "subspaces": [{"name": "s", "algebra": "U", "vectors": [["1/2", "-3/4", 0]]}])"));
    REQUIRE(p.subspaces.size() == 1);
    CHECK(p.subspaces[0].space.dim() == 1);
    CHECK(p.subspaces[0].space.contains(SparseVector{{0, Rational(2)}, {1, Rational(-3)}}));
  }

  TEST_CASE("construction errors are collected") {
    const auto p = parse_problem(with(R"(,
      "subspaces": [{"name": "s", "algebra": "U", "vectors": [[1, 0, 0]]}],
      "crossed_modules": [{"name": "X", "kind": "inclusion", "algebra": "U", "ideal": "s"},
                          {"name": "Y", "kind": "identity", "algebra": "U"}])"));
    REQUIRE(p.construction_errors.size() == 1);
    CHECK(p.construction_errors[0].rfind("X: not a two-sided ideal", 0) == 0);
    CHECK(p.find_crossed_module("X") == nullptr);
    CHECK(p.find_crossed_module("Y") != nullptr);
  }

  TEST_CASE("tasks") {
    const auto p = parse_problem(with(R"(,
      "crossed_modules": [{"name": "X", "kind": "identity", "algebra": "K"}],
      "tasks": [{"command": "compute", "object": "X", "what": "hc", "max_degree": 2},
                {"command": "verify", "theorem": "connes"}])"));
    REQUIRE(p.tasks.size() == 2);
    CHECK(p.tasks[0].max_degree == 2);
    CHECK(p.tasks[1].object.empty());
    CHECK(parse_message(with(R"(, "tasks": [{"command": "plot"}])")).find("tasks[0].command") != std::string::npos);
  }

  TEST_CASE("missing file") { CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), ParseError); }
}
