#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubecomb/convexity.hpp"
#include "cubecomb/median_graph.hpp"
#include "cubecomb/walls.hpp"

namespace cubecomb {

// Graph on walls, h ~ k iff their carriers meet. Built twice (carrier
// intersection, and "no third wall separates h from k"); construction throws
// DEFINITION_MISMATCH if the two disagree.
class ContactGraph {
 public:
  ContactGraph(const MedianGraph& g, const WallSet& w);

  std::size_t size() const { return adjacency_.size(); }
  bool adjacent(WallId h, WallId k) const { return adjacency_[h].test(k); }
  const WallMask& row(WallId h) const { return adjacency_[h]; }
  std::vector<WallId> neighbors(WallId h) const;

  // Which definition produced the stored adjacency; the other one is compared
  // against it.
  const std::string& provenance() const { return provenance_; }

  // kUnreachable if disconnected (never for a connected graph).
  std::uint32_t distance(WallId h, WallId k) const;
  std::vector<std::uint32_t> distances_from(WallId h) const;

  // Lexicographically least geodesic h..k, by wall ids.
  std::vector<WallId> geodesic(WallId h, WallId k) const;

 private:
  std::vector<WallMask> adjacency_;
  std::string provenance_;
};

// Adjacency from shared carrier vertices alone.
std::vector<WallMask> contact_by_carriers(const MedianGraph& g, const WallSet& w);
// Adjacency from the absence of a separating third wall.
std::vector<WallMask> contact_by_separation(const WallSet& w);

// pi(x): walls whose carrier contains x, ascending.
std::vector<WallId> project_vertex(const MedianGraph& g, const WallSet& w, Vertex x);

struct SinglePointReport {
  WallId v = 0;
  WallId h = 0;
  std::uint32_t contact_distance = 0;
  VertexSet image;                 // gate of N(h) onto N(v)
  std::vector<WallId> crossing;    // walls other than v crossing the image
  std::vector<Edge> wall_image;    // dual edges of v meeting the image
  bool single_point = false;       // no wall of the image besides v
};

// Throws SAME_WALL when v == h.
SinglePointReport single_point_check(const MedianGraph& g, const WallSet& w,
                                     const ContactGraph& c, WallId v, WallId h);

struct HierarchyPath {
  std::vector<WallId> walls;                // h_1..h_k
  std::vector<Vertex> anchors;              // x_1..x_{k+1}
  std::vector<std::vector<Vertex>> pieces;  // gamma_i from x_i to x_{i+1}
  std::size_t reductions = 0;

  std::vector<Vertex> path() const;  // concatenation of the pieces
};

// Anchors by successive gating onto carriers along a contact geodesic, then
// replacement moves until no wall is dual to two edges of the path. Defaults
// for h_x, h_y: least wall of pi(x), pi(y).
HierarchyPath hierarchy_path(const MedianGraph& g, const WallSet& w, const ContactGraph& c,
                             Vertex x, Vertex y, std::optional<WallId> hx = std::nullopt,
                             std::optional<WallId> hy = std::nullopt);

struct HierarchyAudit {
  bool geodesic = false;          // |gamma| = d(x,y) and consecutive vertices adjacent
  bool contact_geodesic = false;  // consecutive walls adjacent, k = d_C(h_1,h_k) + 1
  bool in_carriers = false;       // gamma_i inside N(h_i)
  bool piece_bounds = false;      // |gamma_i| <= d(gate_i(x), gate_i(y))

  bool ok() const { return geodesic && contact_geodesic && in_carriers && piece_bounds; }
};

HierarchyAudit check_hierarchy_path(const MedianGraph& g, const WallSet& w,
                                    const ContactGraph& c, Vertex x, Vertex y,
                                    const HierarchyPath& p);

// Gromov four-point constant of the contact graph, doubled so it stays an
// integer. Quartic; refuses more than 60 walls (BAD_PARAMS).
std::uint32_t four_point_delta_twice(const ContactGraph& c);

}  // namespace cubecomb
