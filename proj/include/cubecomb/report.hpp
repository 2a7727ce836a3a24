#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubecomb/contact.hpp"
#include "cubecomb/convexity.hpp"
#include "cubecomb/dilworth.hpp"
#include "cubecomb/dynamics.hpp"
#include "cubecomb/median_graph.hpp"
#include "cubecomb/walls.hpp"

namespace cubecomb {

using nlohmann::json;

// Vertices go out by label everywhere; walls by id plus a representative edge.
json vertex_list(const MedianGraph& g, const std::vector<Vertex>& vs);
json vertex_set(const MedianGraph& g, const VertexSet& s);
json edge_json(const MedianGraph& g, const Edge& e);
json halfspace_json(const Halfspace& h);

json to_json(const MedianGraph& g, const MedianReport& r);
json wall_json(const MedianGraph& g, const WallSet& w, WallId h);
json walls_json(const MedianGraph& g, const WallSet& w);
json to_json(const MedianGraph& g, const WallSet& w, const ContactGraph& c);
json to_json(const MedianGraph& g, const HierarchyPath& p);
json to_json(const HierarchyAudit& a);
json to_json(const RamseyValue& k);
json to_json(const ChainExtraction& e);
json to_json(const MedianGraph& g, const GeodesicCrossing& c);
json to_json(const MedianGraph& g, const MaxCrossing& m);
json to_json(const GeodesicChain& c);
json to_json(const MedianGraph& g, const EmbeddingResult& r);
json to_json(const MedianGraph& g, const RestrictionQuotient& q);
json to_json(const QuarterspaceReport& q);

json to_json(const SlopeReport& s);
json to_json(const ProjectionBound& p);
json to_json(const SkeweringReport& s);
json to_json(const Classification& c);
json to_json(const EssentialityProfile& p);
json to_json(const WallShape& s);
json to_json(const GrowthRow& r);

// "exact", "upper-bound", or "unused" when no Ramsey value entered the report.
std::string ramsey_provenance(const std::optional<RamseyValue>& k);

// Wraps a command result with the metadata every report carries.
json envelope(const std::string& command, const std::string& source, const std::string& digest,
              const std::optional<RamseyValue>& k, const std::string& status, json result);

std::string tool_version();

// Pretty JSON (keys sorted, two-space indent) with a trailing newline.
std::string render_json(const json& report);

// Plain tables for humans. Arrays of objects become column tables.
std::string render_text(const json& report);

}  // namespace cubecomb
