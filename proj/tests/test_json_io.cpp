#include "doctest.h"

#include <stdexcept>
#include <variant>

#include "gnc/json_io.hpp"
#include "gnc/model.hpp"

using namespace gnc;
using nlohmann::json;

namespace {

IndexSet face(std::initializer_list<int> idx) {
  IndexSet s;
  for (int i : idx) s = s.with(i);
  return s;
}

json triangle_json() {
  return json::parse(R"({"ambient": 3, "facets": [[1,2],[2,3],[1,3]], "boundary": {}})");
}

}  // namespace

TEST_CASE("model files use one-based indices") {
  ModelInput in = parse_model_json(triangle_json());
  CHECK(in.ambient == 3);
  REQUIRE(in.facets.size() == 3);
  CHECK(in.facets[0] == face({0, 1}));
  CHECK(in.facets[1] == face({1, 2}));
  CHECK(in.facets[2] == face({0, 2}));
  CHECK(in.boundary.empty());
}

TEST_CASE("boundary coefficients parse as fractions or integers") {
  json j = json::parse(
      R"({"ambient": 4, "facets": [[1,2,4],[2,3,4],[1,3,4]], "boundary": {"4": "1/2"}})");
  ModelInput in = parse_model_json(j);
  CHECK(in.boundary.at(3) == rat(1, 2));

  j["boundary"]["4"] = 1;
  CHECK(parse_model_json(j).boundary.at(3) == 1);

  j["boundary"]["4"] = "2/4";
  CHECK(parse_model_json(j).boundary.at(3) == rat(1, 2));
}

TEST_CASE("schema violations are rejected with diagnostics") {
  auto reject = [](const char* text) {
    CHECK_THROWS_AS(parse_model_json(json::parse(text)), std::invalid_argument);
  };
  reject(R"({"facets": [[1]], "boundary": {}})");                          // missing ambient
  reject(R"({"ambient": 2, "boundary": {}})");                             // missing facets
  reject(R"({"ambient": 2, "facets": [[1]]})");                            // missing boundary
  reject(R"({"ambient": 2, "facets": [[1]], "boundary": {}, "extra": 1})");
  reject(R"({"ambient": "2", "facets": [[1]], "boundary": {}})");
  reject(R"({"ambient": 2, "facets": [1], "boundary": {}})");
  reject(R"({"ambient": 2, "facets": [[0]], "boundary": {}})");            // indices start at 1
  reject(R"({"ambient": 2, "facets": [[3]], "boundary": {}})");
  reject(R"({"ambient": 2, "facets": [[1,1]], "boundary": {}})");          // duplicate index
  reject(R"({"ambient": 2, "facets": [[1.5]], "boundary": {}})");
  reject(R"({"ambient": 2, "facets": [[1]], "boundary": {"x": "1/2"}})");  // bad key
  reject(R"({"ambient": 2, "facets": [[1]], "boundary": {"3": "1/2"}})");  // key out of range
  reject(R"({"ambient": 2, "facets": [[1]], "boundary": {"1": "1/0"}})");
  reject(R"({"ambient": 2, "facets": [[1]], "boundary": {"1": true}})");
  reject(R"({"ambient": 2, "facets": [[1]], "boundary": {"1": "a/b"}})");
  reject(R"({"ambient": 70, "facets": [[1]], "boundary": {}})");           // index cap
  reject(R"([1,2,3])");
}

TEST_CASE("face_json is one-based and sorted") {
  CHECK(face_json(face({0, 2})) == json::parse("[1,3]"));
  CHECK(face_json(IndexSet{}) == json::parse("[]"));
}

TEST_CASE("the input echo is normalized") {
  ModelInput in = parse_model_json(triangle_json());
  json echo = model_input_json(in);
  CHECK(echo["ambient"] == 3);
  CHECK(echo["facets"] == json::parse("[[1,2],[1,3],[2,3]]"));  // sorted
  CHECK(echo["boundary"] == json::object());

  in.boundary[2] = rat(1, 2);
  in.boundary[0] = rat(0);  // zero values are dropped from the echo
  echo = model_input_json(in);
  CHECK(echo["boundary"] == json::parse(R"({"3": "1/2"})"));
}

TEST_CASE("validated models echo their derived structure") {
  auto r = validate(4, {face({0, 1, 3}), face({1, 2, 3}), face({0, 2, 3})},
                    {{3, rat(1, 2)}});
  json j = model_json(std::get<GncModel>(r));
  CHECK(j["core"] == json::parse("[4]"));
  CHECK(j["reduced_core"] == json::parse("[4]"));
  CHECK(j["facets"].size() == 3);
  CHECK(j["boundary"]["4"] == "1/2");
}

TEST_CASE("validation errors serialize their witness") {
  auto r = validate(4, {face({0, 1}), face({1, 2}), face({2, 3})},
                    {{0, rat(1)}, {3, rat(1)}});
  json j = validation_error_json(std::get<ValidationError>(r));
  CHECK(j["axiom"] == "b");
  CHECK(j["witness"]["tau"] == json::parse("[1]"));
  CHECK(j["witness"]["facet"] == json::parse("[1,2]"));
  CHECK(j["detail"].get<std::string>().find("codimension-one") != std::string::npos);

  auto r2 = validate(3, {face({0}), face({0, 1})}, {});
  json j2 = validation_error_json(std::get<ValidationError>(r2));
  CHECK(j2["axiom"] == "incomparability");
  CHECK(j2["witness"]["facet"] == json::parse("[1]"));
  CHECK(j2["witness"]["other"] == json::parse("[1,2]"));
}

TEST_CASE("model files load from disk") {
  ModelInput in = load_model_file(std::string(GNC_MODELS_DIR) + "/cone.json");
  CHECK(in.ambient == 4);
  CHECK(in.boundary.at(3) == rat(1, 2));
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), std::invalid_argument);
}
