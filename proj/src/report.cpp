#include "cubecomb/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifndef CUBECOMB_VERSION
#define CUBECOMB_VERSION "0.0.0"
#endif

namespace cubecomb {

json vertex_list(const MedianGraph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

json vertex_set(const MedianGraph& g, const VertexSet& s) { return vertex_list(g, members(s)); }

json edge_json(const MedianGraph& g, const Edge& e) { return json::array({g.label(e.u), g.label(e.v)}); }

json halfspace_json(const Halfspace& h) { return json{{"wall", h.wall}, {"side", h.side}}; }

namespace {

json halfspaces_json(const std::vector<Halfspace>& hs) {
  json out = json::array();
  for (const auto& h : hs) out.push_back(halfspace_json(h));
  return out;
}

json mask_ids(const WallMask& m) {
  json out = json::array();
  for (auto h = m.find_first(); h != WallMask::npos; h = m.find_next(h)) out.push_back(h);
  return out;
}

}  // namespace

json to_json(const MedianGraph& g, const MedianReport& r) {
  json out{{"pass", r.pass},
           {"method", r.method},
           {"detail", r.detail},
           {"vertices", g.size()},
           {"edges", g.edge_count()}};
  if (r.witness) {
    out["witness"] = vertex_list(g, {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
    out["witness_median_count"] = r.witness_median_count;
  }
  return out;
}

json wall_json(const MedianGraph& g, const WallSet& w, WallId h) {
  const Wall& wall = w.wall(h);
  const auto ones = wall.side1.count();
  return json{{"id", h},
              {"edge", edge_json(g, wall.edges.front())},
              {"dual_edges", wall.edges.size()},
              {"halfspace_sizes", json::array({g.size() - ones, ones})},
              {"crossing", mask_ids(w.crossing_row(h))}};
}

json walls_json(const MedianGraph& g, const WallSet& w) {
  json out = json::array();
  for (WallId h = 0; h < w.size(); ++h) out.push_back(wall_json(g, w, h));
  return out;
}

json to_json(const MedianGraph& g, const WallSet& w, const ContactGraph& c) {
  json adj = json::array();
  std::size_t edges = 0;
  std::uint32_t diam = 0;
  for (WallId h = 0; h < c.size(); ++h) {
    const auto nbrs = c.neighbors(h);
    edges += nbrs.size();
    adj.push_back(json{{"wall", h}, {"edge", edge_json(g, w.wall(h).edges.front())}, {"contacts", nbrs}});
    for (auto d : c.distances_from(h)) diam = std::max(diam, d);
  }
  return json{{"walls", c.size()},
              {"edges", edges / 2},
              {"diameter", diam},
              {"provenance", c.provenance()},
              {"definitions_agree", true},
              {"adjacency", adj}};
}

json to_json(const MedianGraph& g, const HierarchyPath& p) {
  json pieces = json::array();
  for (const auto& piece : p.pieces) pieces.push_back(vertex_list(g, piece));
  json edges = json::array();
  const auto path = p.path();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    edges.push_back(json::array({g.label(path[i]), g.label(path[i + 1])}));
  }
  return json{{"walls", p.walls},
              {"anchors", vertex_list(g, p.anchors)},
              {"pieces", pieces},
              {"edges", edges},
              {"reductions", p.reductions}};
}

json to_json(const HierarchyAudit& a) {
  return json{{"geodesic", a.geodesic},
              {"contact_geodesic", a.contact_geodesic},
              {"in_carriers", a.in_carriers},
              {"piece_bounds", a.piece_bounds},
              {"ok", a.ok()}};
}

json to_json(const RamseyValue& k) {
  return json{{"value", k.value}, {"provenance", k.exact ? "exact" : "upper-bound"}};
}

json to_json(const ChainExtraction& e) {
  return json{{"chain", e.chain},
              {"halfspaces", halfspaces_json(e.halfspaces)},
              {"partition", e.partition},
              {"antichain", e.antichain},
              {"wall_count", e.wall_count},
              {"dimension", e.dimension},
              {"facing_bound", e.facing_bound},
              {"K", to_json(e.k)},
              {"facing_found", e.facing_found},
              {"facing_certified", e.facing_certified},
              {"guarantee", e.guarantee()}};
}

json to_json(const MedianGraph& g, const GeodesicCrossing& c) {
  return json{{"path", vertex_list(g, c.path)}, {"crossed", c.crossed}, {"extraction", to_json(c.extraction)}};
}

json to_json(const MedianGraph& g, const MaxCrossing& m) {
  return json{{"crossed", m.crossed}, {"x", g.label(m.x)}, {"y", g.label(m.y)}};
}

json to_json(const GeodesicChain& c) {
  return json{{"chain", c.chain},
              {"separating", c.separating},
              {"dimension", c.dimension},
              {"bound", c.bound},
              {"meets_bound", c.chain.size() >= c.bound}};
}

json to_json(const MedianGraph& g, const EmbeddingResult& r) {
  json out{{"basepoint", g.label(r.basepoint)},
           {"radius", r.radius},
           {"facing_bound", r.facing_bound},
           {"ball_walls", r.ball_walls},
           {"dimension", r.dimension},
           {"K", to_json(r.k)},
           {"facing_certified", r.facing_certified},
           {"walls_within_bound", r.walls_within_bound()}};
  if (r.facing_tuple) out["facing_tuple"] = halfspaces_json(*r.facing_tuple);
  if (r.embedding) {
    const auto& e = *r.embedding;
    json table = json::object();
    for (std::size_t i = 0; i < e.domain.size(); ++i) table[g.label(e.domain[i])] = e.coordinates[i];
    out["embedding"] = json{{"L", e.dimension_l},
                            {"chains", e.chains},
                            {"coordinates", table},
                            {"isometric", e.isometric}};
    out["chains_within_k"] = r.chains_within_k();
  }
  return out;
}

json to_json(const MedianGraph& g, const RestrictionQuotient& q) {
  json edges = json::array();
  for (const auto& e : q.graph.edges()) edges.push_back(edge_json(q.graph, e));
  json classes = json::object();
  for (Vertex v = 0; v < q.class_of.size(); ++v) classes[g.label(v)] = q.graph.label(q.class_of[v]);
  return json{{"walls", q.walls},
              {"vertices", q.graph.labels()},
              {"edges", edges},
              {"class_of", classes},
              {"median", q.graph.validated()}};
}

json to_json(const QuarterspaceReport& q) {
  json quarters = json::array();
  for (const auto& s : q.quarters) {
    quarters.push_back(json{{"side_h", s.side_h},
                            {"side_v", s.side_v},
                            {"vertices", s.vertex_count},
                            {"walls", s.walls}});
  }
  return json{{"h", q.h}, {"v", q.v}, {"quarters", quarters}, {"nonempty", q.nonempty_count()}};
}

json to_json(const SlopeReport& s) {
  return json{{"radius", s.radius}, {"distances", s.distances}, {"slopes", s.slopes}};
}

json to_json(const ProjectionBound& p) {
  return json{{"per_step", p.per_step}, {"argmax", p.argmax}, {"max", p.max}};
}

json to_json(const SkeweringReport& s) {
  json out{{"skewers", s.skewers}, {"wall", s.wall}, {"reason", s.reason}};
  if (s.image) out["image"] = *s.image;
  if (s.skewers) {
    out["side"] = s.side;
    out["image_side"] = s.image_side;
  }
  if (s.strict_witness) out["strict_witness"] = *s.strict_witness;
  return out;
}

json to_json(const Classification& c) {
  json stabilized{{"decided", c.stabilized.decided}};
  if (c.stabilized.found) {
    stabilized["wall"] = c.stabilized.found->wall;
    stabilized["period"] = c.stabilized.found->period;
  }
  json out{{"complex", c.complex},
           {"automorphism", c.automorphism},
           {"nmax", c.nmax},
           {"radius", c.radius},
           {"window_vertices", c.window_vertices},
           {"window_walls", c.window_walls},
           {"slope", to_json(c.slope)},
           {"stabilized", stabilized},
           {"wall", c.wall},
           {"wall_edge", c.wall_edge},
           {"contact_growth", c.contact_growth},
           {"orbit_diameter", c.orbit_diameter},
           {"projection", to_json(c.projection)},
           {"skewering", to_json(c.skewering)},
           {"verdict", to_string(c.verdict)},
           {"rationale", c.rationale}};
  out["contact_growth_half"] = c.contact_growth_half ? json(*c.contact_growth_half) : json(nullptr);
  return out;
}

json to_json(const EssentialityProfile& p) {
  json rows = json::array();
  for (const auto& r : p.rows) rows.push_back(json{{"edge", r.edge}, {"depths", r.depths}});
  return json{{"radii", p.radii}, {"rows", rows}, {"min_depth", p.min_depth}};
}

json to_json(const WallShape& s) {
  return json{{"wall", s.wall},
              {"edge", s.edge},
              {"dual_edges", s.dual_edges},
              {"edge_class_diameter", s.edge_class_diameter},
              {"cells", s.cells},
              {"diameter", s.diameter}};
}

json to_json(const GrowthRow& r) {
  return json{{"radius", r.radius},
              {"volume", r.volume},
              {"wall_volume", r.wall_volume},
              {"facing", r.facing},
              {"facing_certified", r.facing_certified}};
}

std::string ramsey_provenance(const std::optional<RamseyValue>& k) {
  if (!k) return "unused";
  return k->exact ? "exact" : "upper-bound";
}

std::string tool_version() { return CUBECOMB_VERSION; }

json envelope(const std::string& command, const std::string& source, const std::string& digest,
              const std::optional<RamseyValue>& k, const std::string& status, json result) {
  json bounds{{"ramsey", ramsey_provenance(k)}};
  if (k) bounds["K"] = k->value;
  return json{{"command", command},
              {"version", tool_version()},
              {"input", json{{"source", source}, {"digest", digest}}},
              {"bounds", bounds},
              {"status", status},
              {"result", std::move(result)}};
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const json& j) {
  return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

void render(std::ostringstream& os, const std::string& prefix, const json& j);

void render_table(std::ostringstream& os, const std::string& prefix, const json& rows) {
  std::vector<std::string> columns;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (seen.insert(key).second) columns.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = row.find(columns[i]);
      line.push_back(it == row.end() ? "-" : scalar_text(*it));
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  os << prefix << ":\n";
  auto emit = [&](const std::vector<std::string>& line) {
    os << " ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << ' ' << line[i] << std::string(width[i] - line[i].size(), ' ');
    }
    os << '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void render(std::ostringstream& os, const std::string& prefix, const json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render(os, prefix.empty() ? key : prefix + "." + key, value);
  } else if (j.is_array() && !j.empty() && !is_flat(j) &&
             std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); })) {
    render_table(os, prefix, j);
  } else {
    os << prefix << ": " << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "cubecomb " << report.value("command", "") << "  version " << report.value("version", "")
     << "  status " << report.value("status", "") << '\n';
  json rest = report;
  rest.erase("command");
  rest.erase("version");
  rest.erase("status");
  render(os, "", rest);
  return os.str();
}

}  // namespace cubecomb
