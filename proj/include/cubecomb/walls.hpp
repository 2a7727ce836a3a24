#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubecomb/median_graph.hpp"

namespace cubecomb {

using WallId = std::uint32_t;
using WallMask = boost::dynamic_bitset<std::uint64_t>;

// A hyperplane, seen as the parallelism class of its dual edges. Side 0 is the
// halfspace holding vertex 0 of the graph.
struct Wall {
  WallId id = 0;
  std::vector<Edge> edges;  // sorted; edges.front() is the representative
  VertexSet side1;
  VertexSet carrier;
};

// One of the two halfspaces of a wall.
struct Halfspace {
  WallId wall = 0;
  int side = 0;

  auto operator<=>(const Halfspace&) const = default;
};

// Walls of a median graph together with the pairwise relations every other
// module queries. Immutable once built.
class WallSet {
 public:
  std::size_t size() const { return walls_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }

  // Throws UNKNOWN_WALL.
  const Wall& wall(WallId h) const;
  const std::vector<Wall>& walls() const { return walls_; }
  void check_wall(WallId h) const;

  int side(WallId h, Vertex v) const { return walls_[h].side1.test(v) ? 1 : 0; }
  VertexSet halfspace(WallId h, int side) const;
  VertexSet halfspace(Halfspace hs) const { return halfspace(hs.wall, hs.side); }
  const VertexSet& carrier(WallId h) const { return walls_[h].carrier; }

  WallId wall_of_edge(std::size_t edge_index) const { return edge_wall_[edge_index]; }
  WallId wall_of_edge(const MedianGraph& g, Vertex a, Vertex b) const;

  // Symmetric; false on the diagonal.
  bool cross(WallId h, WallId k) const { return crossing_[h].test(k); }
  const WallMask& crossing_row(WallId h) const { return crossing_[h]; }

  // For distinct non-crossing walls: the side of h containing k (equivalently
  // its carrier). nullopt when h == k or they cross.
  std::optional<int> side_of_wall(WallId h, WallId k) const;

  // Bit h set iff v lies on side 1 of h. Hamming distance of signatures is the
  // graph distance.
  const WallMask& signature(Vertex v) const { return signatures_[v]; }
  std::uint32_t distance(Vertex a, Vertex b) const;

  WallMask empty_mask() const { return WallMask(size()); }

 private:
  friend WallSet compute_walls(const MedianGraph& g);

  std::size_t vertex_count_ = 0;
  std::vector<Wall> walls_;
  std::vector<WallId> edge_wall_;
  std::vector<WallMask> crossing_;
  std::vector<std::int8_t> side_of_wall_;  // row-major, -1 when undefined
  std::vector<WallMask> signatures_;
};

// Union-find over the square relation, then a two-component check per class
// (NOT_TWO_SIDED otherwise). Walls are numbered by their least edge.
WallSet compute_walls(const MedianGraph& g);

bool separates(const WallSet& w, WallId h, Vertex x, Vertex y);

// W(x,y), ascending.
std::vector<WallId> separating_set(const WallSet& w, Vertex x, Vertex y);

// Quarterspace definition. Throws SAME_WALL when h == k.
bool crosses(const WallSet& w, WallId h, WallId k);

// Pairs of walls that meet in a common square; the square-witness form of
// crossing, computed straight from the graph.
std::vector<std::pair<WallId, WallId>> square_crossings(const MedianGraph& g, const WallSet& w);

// l separates h from k: all three distinct, h and k on opposite sides of l.
bool separates_walls(const WallSet& w, WallId l, WallId h, WallId k);

std::size_t dimension(const WallSet& w);

struct FacingCheck {
  bool facing = false;
  // Pairwise disjoint halfspace choice, one per input wall, in input order.
  std::vector<Halfspace> assignment;
};

// Pairwise disjoint walls none of which separates two others.
FacingCheck is_facing_tuple(const WallSet& w, std::span<const WallId> walls);

// Direct form of the same notion: some choice of halfspaces is pairwise
// disjoint. Exponential in |walls|; meant for small sets.
std::optional<std::vector<Halfspace>> disjoint_halfspace_choice(const WallSet& w,
                                                                std::span<const WallId> walls);

struct FacingSearch {
  std::vector<Halfspace> tuple;
  bool certified = false;  // false: tuple is only a lower bound
  std::uint64_t nodes = 0;
};

// Candidate sets at or below this size are always searched to completion.
inline constexpr std::size_t kExhaustiveFacingLimit = 25;
inline constexpr std::uint64_t kFacingNodeBudget = 2'000'000;

// Maximum facing tuple among `candidates`. With `stop_at`, returns as soon as a
// tuple of that size is found (certified in the sense that it exists).
FacingSearch max_facing_tuple(const WallSet& w, std::span<const WallId> candidates,
                              std::optional<std::size_t> stop_at = std::nullopt);

// Singletons are chains; a pair is a chain iff the walls are disjoint; longer
// sequences need every interior wall to separate its neighbours.
bool is_chain(const WallSet& w, std::span<const WallId> sequence);

// Halfspace choice h_1 < h_2 < ... strictly nested, if one exists for the
// sequence in the given order.
std::optional<std::vector<Halfspace>> nested_orientation(const WallSet& w,
                                                         std::span<const WallId> sequence);

// Longest chain inside `walls`, via longest path in the strict-inclusion DAG
// on both halfspaces of every wall. Returned in nesting order.
std::vector<WallId> longest_chain(const WallSet& w, std::span<const WallId> walls);

struct Quarterspace {
  int side_h = 0;
  int side_v = 0;
  std::size_t vertex_count = 0;
  std::vector<WallId> walls;  // walls whose carrier lies inside
};

struct QuarterspaceReport {
  WallId h = 0;
  WallId v = 0;
  std::array<Quarterspace, 4> quarters;

  std::size_t nonempty_count() const;
};

// Throws NOT_CROSSING.
QuarterspaceReport quarterspace_audit(const WallSet& w, WallId h, WallId v);

// Disjoint and crossed by no common wall. Throws SAME_WALL.
bool strongly_separated(const WallSet& w, WallId h, WallId v);

// Every wall id, ascending.
std::vector<WallId> all_walls(const WallSet& w);

}  // namespace cubecomb
