#include "gnc/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace gnc {

using nlohmann::json;

namespace {

constexpr int kMaxAmbient = 60;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("model file: " + what);
}

int parse_index(const json& j, int ambient, const char* where) {
  if (!j.is_number_integer()) bad(std::string(where) + " indices must be integers");
  long long v = j.get<long long>();
  if (v < 1 || v > ambient)
    bad(std::string(where) + " index " + std::to_string(v) + " outside [1," +
        std::to_string(ambient) + "]");
  return static_cast<int>(v - 1);
}

Rat parse_coefficient(const json& j) {
  if (j.is_string()) {
    std::optional<Rat> r = parse_rational(j.get<std::string>());
    if (!r) bad("boundary value \"" + j.get<std::string>() + "\" is not a rational");
    return *r;
  }
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  bad("boundary values must be rational strings like \"1/2\"");
}

}  // namespace

ModelInput parse_model_json(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "ambient" && key != "facets" && key != "boundary")
      bad("unknown field \"" + key + "\"");
  if (!j.contains("ambient") || !j.contains("facets") || !j.contains("boundary"))
    bad("required fields are ambient, facets, boundary");

  ModelInput input;
  if (!j["ambient"].is_number_integer()) bad("ambient must be an integer");
  long long ambient = j["ambient"].get<long long>();
  if (ambient < 1 || ambient > kMaxAmbient)
    bad("ambient must lie in [1," + std::to_string(kMaxAmbient) + "]");
  input.ambient = static_cast<int>(ambient);

  if (!j["facets"].is_array()) bad("facets must be an array of index lists");
  for (const json& facet : j["facets"]) {
    if (!facet.is_array()) bad("each facet must be an index list");
    IndexSet f;
    for (const json& entry : facet) {
      int i = parse_index(entry, input.ambient, "facet");
      if (f.contains(i)) bad("facet repeats index " + std::to_string(i + 1));
      f = f.with(i);
    }
    input.facets.push_back(f);
  }

  if (!j["boundary"].is_object()) bad("boundary must be an object");
  for (const auto& [key, value] : j["boundary"].items()) {
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(key, &used);
      if (used != key.size()) bad("boundary key \"" + key + "\" is not an index");
    } catch (const std::invalid_argument&) {
      bad("boundary key \"" + key + "\" is not an index");
    } catch (const std::out_of_range&) {
      bad("boundary key \"" + key + "\" is not an index");
    }
    if (index < 1 || index > input.ambient)
      bad("boundary key " + key + " outside [1," + std::to_string(input.ambient) + "]");
    Rat b = parse_coefficient(value);
    if (input.boundary.count(index - 1)) bad("boundary repeats index " + key);
    input.boundary[index - 1] = b;
  }
  return input;
}

ModelInput load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(path + ": " + err.what());
  }
  return parse_model_json(j);
}

json face_json(IndexSet s) {
  json out = json::array();
  for (int i : s) out.push_back(i + 1);
  return out;
}

json model_input_json(const ModelInput& input) {
  json facets = json::array();
  std::vector<IndexSet> sorted = input.facets;
  std::sort(sorted.begin(), sorted.end());
  for (IndexSet f : sorted) facets.push_back(face_json(f));
  json boundary = json::object();
  for (const auto& [i, b] : input.boundary)
    if (b != 0) boundary[std::to_string(i + 1)] = rat_str(b);
  return {{"ambient", input.ambient}, {"facets", facets}, {"boundary", boundary}};
}

json model_json(const GncModel& m) {
  json facets = json::array();
  for (IndexSet f : m.facets()) facets.push_back(face_json(f));
  json boundary = json::object();
  for (const auto& [i, b] : m.boundary().coeffs) boundary[std::to_string(i + 1)] = rat_str(b);
  return {{"ambient", m.ambient()},
          {"facets", facets},
          {"boundary", boundary},
          {"core", face_json(m.core())},
          {"reduced_core", face_json(m.reduced_core())}};
}

json validation_error_json(const ValidationError& err) {
  json w;
  if (const auto* pair = std::get_if<WitnessPair>(&err.witness))
    w = {{"facet", face_json(pair->f)}, {"other", face_json(pair->g)}};
  else if (const auto* face = std::get_if<WitnessFace>(&err.witness))
    w = {{"tau", face_json(face->tau)}, {"facet", face_json(face->facet)}};
  else if (const auto* coeff = std::get_if<WitnessCoeff>(&err.witness))
    w = {{"index", coeff->index + 1}, {"value", rat_str(coeff->value)}};
  else
    w = {{"detail", std::get<WitnessFormat>(err.witness).detail}};
  return {{"axiom", axiom_name(err.axiom)}, {"witness", w}, {"detail", err.describe()}};
}

}  // namespace gnc
