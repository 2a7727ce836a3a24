#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubecomb/median_graph.hpp"

namespace cubecomb {

// Named fixture: "grid" with params {3,3}, or "product" with two factors.
struct GeneratorSpec {
  std::string name;
  std::vector<int> params;
  std::vector<GeneratorSpec> factors;

  bool operator==(const GeneratorSpec&) const = default;
};

struct GraphDocument {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<GeneratorSpec> generator;
};

// Strict schema: unknown fields are rejected (SCHEMA_ERROR).
GraphDocument parse_document(const nlohmann::json& j);
GraphDocument parse_document_text(std::string_view text);
nlohmann::json to_json(const GraphDocument& doc);

// "grid:3,3", "path:5", or a product of such specs joined by '*'
// ("path:2*tree:3,1").
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

// Resolves the generator, or builds the explicit vertex/edge list. The result
// is connected and simple but not validated.
MedianGraph load_graph(const GraphDocument& doc);

// Canonical compact JSON of the document, hashed with 64-bit FNV-1a.
std::string document_digest(const GraphDocument& doc);

}  // namespace cubecomb
