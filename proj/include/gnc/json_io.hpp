#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gnc/model.hpp"

namespace gnc {

/* A parsed but not yet validated model file: 1-based indices from disk are
   converted to the library's 0-based sets here and nowhere else. */
struct ModelInput {
  int ambient = 0;
  std::vector<IndexSet> facets;
  std::map<int, Rat> boundary;
};

/* Strict schema {"ambient": int, "facets": [[int]], "boundary": {"i": "p/q"}};
   unknown keys, bad types, and out-of-range indices are rejected with a
   diagnostic (std::invalid_argument). */
ModelInput parse_model_json(const nlohmann::json& j);
ModelInput load_model_file(const std::string& path);

nlohmann::json face_json(IndexSet s);                       // 1-based index list
nlohmann::json model_input_json(const ModelInput& input);   // normalized echo
nlohmann::json model_json(const GncModel& m);               // with derived core data
nlohmann::json validation_error_json(const ValidationError& err);

}  // namespace gnc
