#include "cubecomb/document.hpp"

#include <charconv>
#include <cstdio>
#include <set>

#include "cubecomb/error.hpp"
#include "cubecomb/generators.hpp"

namespace cubecomb {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(ErrorCode::kSchema, message);
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) schema_error("unknown field '" + key + "' in " + std::string(where));
  }
}

GeneratorSpec parse_generator_object(const json& j) {
  if (!j.is_object()) schema_error("generator must be an object");
  reject_unknown(j, {"name", "params", "factors"}, "generator");
  if (!j.contains("name") || !j["name"].is_string()) schema_error("generator.name must be a string");
  GeneratorSpec spec;
  spec.name = j["name"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_array()) schema_error("generator.params must be an array");
    for (const auto& p : j["params"]) {
      if (!p.is_number_integer()) schema_error("generator.params must hold integers");
      spec.params.push_back(p.get<int>());
    }
  }
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) schema_error("generator.factors must be an array");
    for (const auto& f : j["factors"]) spec.factors.push_back(parse_generator_object(f));
  }
  return spec;
}

json generator_to_json(const GeneratorSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["params"] = spec.params;
  if (!spec.factors.empty()) {
    j["factors"] = json::array();
    for (const auto& f : spec.factors) j["factors"].push_back(generator_to_json(f));
  }
  return j;
}

GeneratorSpec parse_single_spec(std::string_view text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw Error(ErrorCode::kBadParams, "empty generator name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kBadParams, "bad generator parameter '" + std::string(token) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

}  // namespace

GraphDocument parse_document(const json& j) {
  if (!j.is_object()) schema_error("document must be a JSON object");
  reject_unknown(j, {"vertices", "edges", "generator"}, "document");
  GraphDocument doc;
  if (j.contains("generator")) {
    if (j.contains("vertices") || j.contains("edges")) {
      schema_error("document must hold either a generator or a vertex/edge list, not both");
    }
    doc.generator = parse_generator_object(j["generator"]);
    return doc;
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) schema_error("missing vertices array");
  if (!j.contains("edges") || !j["edges"].is_array()) schema_error("missing edges array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) schema_error("vertices must be strings");
    doc.vertices.push_back(v.get<std::string>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      schema_error("edges must be [string, string] pairs");
    }
    doc.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return doc;
}

GraphDocument parse_document_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

json to_json(const GraphDocument& doc) {
  json j;
  if (doc.generator) {
    j["generator"] = generator_to_json(*doc.generator);
    return j;
  }
  j["vertices"] = doc.vertices;
  j["edges"] = json::array();
  for (const auto& [a, b] : doc.edges) j["edges"].push_back(json::array({a, b}));
  return j;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  std::vector<GeneratorSpec> factors;
  while (true) {
    const auto star = text.find('*');
    factors.push_back(parse_single_spec(text.substr(0, star)));
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  if (factors.size() == 1) return factors.front();
  GeneratorSpec product;
  product.name = "product";
  product.factors = std::move(factors);
  return product;
}

std::string to_string(const GeneratorSpec& spec) {
  if (spec.name == "product" && !spec.factors.empty()) {
    std::string out;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      if (i > 0) out += '*';
      out += to_string(spec.factors[i]);
    }
    return out;
  }
  std::string out = spec.name;
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(spec.params[i]);
  }
  return out;
}

MedianGraph load_graph(const GraphDocument& doc) {
  if (doc.generator) return generate(*doc.generator);
  return MedianGraph(doc.vertices, doc.edges);
}

std::string document_digest(const GraphDocument& doc) {
  const std::string canonical = to_json(doc).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

}  // namespace cubecomb
