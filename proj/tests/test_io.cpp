#include <doctest.h>

#include "gmpi/error.hpp"
#include "gmpi/families.hpp"
#include "gmpi/io.hpp"
#include "support.hpp"

using namespace gmpi;
using json = nlohmann::json;

namespace {

json expansion_doc() {
  return json::parse(R"({
    "blocks": [{"name": "x", "size": 2}, {"name": "y", "size": 2}],
    "inducing_ideal": [[2, 1], [1, 2]],
    "substitutions": {
      "x:1": {"family": "power-of-maximal"}, "x:2": {"family": "power-of-maximal"},
      "y:1": {"family": "power-of-maximal"}, "y:2": {"family": "power-of-maximal"}
    }
  })");
}

}  // namespace

TEST_CASE("ideal documents round trip") {
  const auto I = ideal_from_json(json::parse(R"({"variables": ["a", "b"], "generators": [[0, 2], [1, 1], [2, 1]]})"));
  CHECK(I.gens() == std::vector<ExponentVector>{{1, 1}, {0, 2}});
  CHECK(I.to_string() == "(ab, b^2)");
  CHECK(ideal_from_json(ideal_to_json(I)) == I);
  CHECK(ideal_to_json(I)["variables"] == json::array({"a", "b"}));

  const auto B = ideal_from_json(json::parse(R"({"blocks": [{"name": "x", "size": 2}], "generators": [[1, 1]]})"));
  CHECK(ideal_to_json(B).contains("blocks"));
  CHECK(ideal_from_json(ideal_to_json(B)) == B);
  CHECK(generator_strings(B) == json::array({"x1x2"}));
}

TEST_CASE("malformed ideal documents") {
  for (const char* text : {R"([])", R"({"generators": [[1]]})", R"({"variables": [], "generators": []})",
                           R"({"variables": ["x"], "generators": [[1, 0]]})",
                           R"({"variables": ["x"], "generators": [[-1]]})",
                           R"({"variables": ["x"], "generators": [["a"]]})",
                           R"({"variables": ["x", "x"], "generators": [[1, 0]]})",
                           R"({"variables": [1], "generators": [[1]]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(ideal_from_json(json::parse(text)), InputError);
  }
}

TEST_CASE("instance documents") {
  const auto doc = parse_instance_document(expansion_doc());
  CHECK(doc.ring.num_vars() == 4);
  CHECK(doc.inducing.size() == 2);
  CHECK(max_taylor_option(doc) == kDefaultTaylorCap);
  const auto inst = build_instance(doc);
  CHECK(inst.ideal().size() == 12);

  const auto explicit_doc = document_from(inst);
  CHECK(explicit_doc.substitutions.size() == 4);
  const auto again = build_instance(parse_instance_document(to_json(explicit_doc)));
  CHECK(again.ideal() == inst.ideal());
  CHECK(again.inducing() == inst.inducing());

  auto with_options = expansion_doc();
  with_options["options"] = {{"max_taylor", 16}};
  CHECK(max_taylor_option(parse_instance_document(with_options)) == 16);
}

TEST_CASE("instance document errors") {
  auto expect_input_error = [](json doc) { CHECK_THROWS_AS(build_instance(parse_instance_document(doc)), InputError); };
  auto doc = expansion_doc();
  doc["extra"] = 1;
  expect_input_error(doc);
  doc = expansion_doc();
  doc["substitutions"]["z:1"] = json::array({json::array({1})});
  expect_input_error(doc);
  doc = expansion_doc();
  doc["substitutions"]["x1"] = json::array();
  expect_input_error(doc);
  doc = expansion_doc();
  doc["substitutions"]["x:1"] = {{"family", "nope"}};
  expect_input_error(doc);
  doc = expansion_doc();
  doc["substitutions"]["x:1"] = 3;
  expect_input_error(doc);
  doc = expansion_doc();
  doc["options"] = {{"max_taylor", 40}};
  expect_input_error(doc);
  doc = expansion_doc();
  doc["options"] = {{"nesting", "sometimes"}};
  expect_input_error(doc);
  doc = expansion_doc();
  doc["inducing_ideal"] = json::array({json::array({1, 2, 3})});
  expect_input_error(doc);
  doc = expansion_doc();
  doc.erase("blocks");
  expect_input_error(doc);
}

TEST_CASE("instance documents report validation errors") {
  auto doc = expansion_doc();
  doc["substitutions"].erase("y:2");
  try {
    build_instance(parse_instance_document(doc));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::kMissingDegree);
    CHECK(e.witness() == "y:2");
  }

  doc = expansion_doc();
  doc["blocks"] = json::array({{{"name", "x"}, {"size", 2}}, {{"name", "y"}, {"size", 1}}});
  doc["inducing_ideal"] = json::array({json::array({2, 0}), json::array({1, 1}), json::array({0, 2})});
  doc["substitutions"] = {{"x:2", json::array({json::array({2, 0})})},
                          {"x:1", json::array({json::array({0, 1})})},
                          {"y:1", json::array({json::array({1})})},
                          {"y:2", json::array({json::array({2})})}};
  CHECK_THROWS_AS(build_instance(parse_instance_document(doc)), ValidationError);
  doc["options"] = {{"nesting", "bypass"}};
  CHECK_NOTHROW(build_instance(parse_instance_document(doc)));
}

TEST_CASE("lex segment shorthand") {
  auto doc = json::parse(R"({
    "blocks": [{"name": "x", "size": 2}, {"name": "y", "size": 1}],
    "inducing_ideal": [[2, 0], [0, 1]],
    "substitutions": {"x:2": {"family": "lex-segment", "count": 2}, "y:1": {"family": "squarefree-veronese"}}
  })");
  const auto inst = build_instance(parse_instance_document(doc));
  CHECK(inst.family().at(0, 2).gens() == std::vector<ExponentVector>{{2, 0}, {1, 1}});
}

TEST_CASE("betti triangle") {
  const auto ctx = VariableContext::standard(2);
  const auto table = betti_table(minimal_resolution(MonomialIdeal(ctx, {{2, 0}, {0, 2}})));
  CHECK(betti_triangle(table) ==
        "       0 1 2\n"
        "total: 1 2 1\n"
        "    0: 1 . .\n"
        "    1: . 2 .\n"
        "    2: . . 1\n");
  const auto m2 = betti_table(minimal_resolution(MonomialIdeal(ctx, {{2, 0}, {1, 1}, {0, 2}})));
  CHECK(betti_triangle(m2) ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");
  CHECK(betti_triangle(BettiTable{}).empty());
}

TEST_CASE("betti json") {
  const auto ctx = VariableContext::standard(2);
  const auto j = betti_to_json(betti_table(minimal_resolution(MonomialIdeal(ctx, {{1, 0}, {0, 1}}))));
  CHECK(j["graded"] == json::parse("[[0,0,1],[1,1,2],[2,2,1]]"));
  CHECK(j["multigraded"].size() == 4);
  CHECK(j["multigraded"][3] == json::parse("[2,[1,1],1]"));
}

TEST_CASE("family emission") {
  const auto sq = emit_family(json::parse(R"({"family": "squarefree-veronese", "m": 4, "d": 2})"));
  CHECK(ideal_from_json(sq).size() == 6);
  const auto pm = emit_family(json::parse(R"({"family": "power-of-maximal", "m": 2, "d": 3})"));
  CHECK(ideal_from_json(pm).size() == 4);
  const auto lex = emit_family(json::parse(R"({"family": "lex-segment", "m": 2, "d": 2, "count": 2})"));
  CHECK(ideal_from_json(lex).size() == 2);
  const auto vt = emit_family(json::parse(R"({"family": "veronese-type", "caps": [2, 2], "t": 3})"));
  CHECK(ideal_from_json(vt).size() == 2);
  const auto path = emit_family(json::parse(R"({"family": "path-ideal", "parts": [2, 2], "t": 2})"));
  CHECK(ideal_from_json(path).size() == 4);

  const auto mixed =
      emit_family(json::parse(R"({"family": "mixed-product", "sizes": [3, 3], "d": [2, 1], "delta": [1, 2]})"));
  CHECK(build_instance(parse_instance_document(mixed)).ideal().size() == 18);
  const auto ex =
      emit_family(json::parse(R"({"family": "expansion", "sizes": [2, 2], "inducing": [[2, 1], [1, 2]]})"));
  CHECK(build_instance(parse_instance_document(ex)).ideal().size() == 12);
  const auto rnd = emit_family(json::parse(R"({"family": "random", "seed": 5})"));
  CHECK(build_instance(parse_instance_document(rnd)).ideal() == random_instance(5).instance.ideal());

  CHECK_THROWS_AS(emit_family(json::parse(R"({"family": "unknown"})")), InputError);
  CHECK_THROWS_AS(emit_family(json::parse(R"({"m": 2})")), InputError);
  CHECK_THROWS_AS(emit_family(json::parse(R"({"family": "path-ideal", "parts": [], "t": 2})")), InputError);
}
