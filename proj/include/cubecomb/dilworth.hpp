#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubecomb/clique.hpp"
#include "cubecomb/median_graph.hpp"
#include "cubecomb/walls.hpp"

namespace cubecomb {

// Ramsey number R(s,t) or an upper bound for it.
struct RamseyValue {
  std::uint64_t value = 0;
  bool exact = false;
};

// Exact for the known small values, C(s+t-2, s-1) otherwise. BAD_PARAMS for
// s or t below 1.
RamseyValue ramsey_bound(int s, int t);

// K(D,N) = R(D+1, N+1) - 1, carrying the exactness flag of the Ramsey value.
RamseyValue facing_constant(int dimension, int facing);

// Finite strict order, below[j].test(i) iff i < j. Must be transitive.
struct Poset {
  std::vector<NodeMask> below;

  std::size_t size() const { return below.size(); }
  bool less(std::size_t i, std::size_t j) const { return below[j].test(i); }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }
};

struct Antichain {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending
};

// Exact, through minimum chain cover and Koenig's theorem.
Antichain antichain_max(const Poset& p);

// Minimum chain cover; every chain ascending, chains ordered by their least
// element. Its size equals antichain_max(p).size.
std::vector<std::vector<std::size_t>> dilworth_partition(const Poset& p);

// One halfspace per wall, ordered by strict inclusion of vertex sets.
struct HalfspacePoset {
  std::vector<Halfspace> elements;
  Poset order;
};

HalfspacePoset make_halfspace_poset(const WallSet& w, std::vector<Halfspace> elements);

enum class OrientationPolicy { kLexLeast, kTowardBasepoint, kRandom };

struct Orientation {
  OrientationPolicy policy = OrientationPolicy::kLexLeast;
  Vertex basepoint = 0;     // kTowardBasepoint
  std::uint64_t seed = 0;   // kRandom
};

std::string to_string(OrientationPolicy p);
OrientationPolicy parse_orientation_policy(const std::string& name);

// kLexLeast keeps the side holding the vertex with the least label;
// kTowardBasepoint the side holding the basepoint; kRandom draws one bit per
// wall, in id order, from mt19937_64.
std::vector<Halfspace> orient(const MedianGraph& g, const WallSet& w,
                              const std::vector<WallId>& walls, const Orientation& o);

struct ChainExtraction {
  std::vector<WallId> chain;            // nesting order
  std::vector<Halfspace> halfspaces;    // chosen halfspace of each chain wall
  std::vector<std::vector<WallId>> partition;
  std::vector<WallId> antichain;        // maximum antichain witness
  std::size_t wall_count = 0;
  std::size_t dimension = 0;
  int facing_bound = 0;
  RamseyValue k;
  std::size_t facing_found = 0;         // largest facing tuple seen in the pre-check
  bool facing_certified = false;

  // ceil(wall_count / K)
  std::uint64_t guarantee() const;
};

// Dilworth on the oriented walls; the longest chain of the partition, first
// one on ties. FACING_BOUND_VIOLATED if a facing (N+1)-tuple exists in walls.
ChainExtraction extract_chain(const MedianGraph& g, const WallSet& w,
                              const std::vector<WallId>& walls, int facing_bound,
                              const Orientation& o = {});

struct GeodesicCrossing {
  std::vector<Vertex> path;
  std::size_t crossed = 0;
  ChainExtraction extraction;
};

// x in the least chain halfspace, y outside the greatest, picked to cross as
// many of `walls` as possible (ties: lowest indices).
GeodesicCrossing geodesic_crossing_chain(const MedianGraph& g, const WallSet& w,
                                         const std::vector<WallId>& walls,
                                         const Orientation& o = {});

struct MaxCrossing {
  std::size_t crossed = 0;
  Vertex x = 0;
  Vertex y = 0;
};

// Largest |W(x,y) & walls| over all vertex pairs. Every geodesic from x to y
// crosses exactly W(x,y), so this is the maximum over all geodesics too.
MaxCrossing max_geodesic_crossing(const WallSet& w, const std::vector<WallId>& walls);

struct GeodesicChain {
  std::vector<WallId> chain;
  std::size_t separating = 0;
  std::size_t dimension = 0;
  std::size_t bound = 0;  // ceil(separating / dimension)
};

// Walls of W(x,y) oriented toward x. BAD_PARAMS when x == y.
GeodesicChain chain_in_geodesic(const MedianGraph& g, const WallSet& w, Vertex x, Vertex y);

VertexSet ball(const MedianGraph& g, Vertex x0, std::uint32_t radius);

// Walls with ball vertices on both sides, ascending.
std::vector<WallId> hyperplanes_in_ball(const MedianGraph& g, const WallSet& w, Vertex x0,
                                        std::uint32_t radius);

struct RestrictionQuotient {
  MedianGraph graph;
  std::vector<Vertex> class_of;  // original vertex -> quotient vertex
  std::vector<WallId> walls;     // the subset, ascending
};

// BAD_PARAMS on an empty subset.
RestrictionQuotient restriction_quotient(const MedianGraph& g, const WallSet& w,
                                         const std::vector<WallId>& subset);

struct GridEmbedding {
  std::size_t dimension_l = 0;
  std::vector<std::vector<WallId>> chains;
  std::vector<Vertex> domain;                 // ball vertices, ascending
  std::vector<std::vector<int>> coordinates;  // parallel to domain
  bool isometric = false;
};

struct EmbeddingResult {
  Vertex basepoint = 0;
  std::uint32_t radius = 0;
  int facing_bound = 0;
  std::vector<WallId> ball_walls;  // H_R
  std::size_t dimension = 0;
  RamseyValue k;
  // Exactly one of these is set.
  std::optional<std::vector<Halfspace>> facing_tuple;
  std::optional<GridEmbedding> embedding;
  bool facing_certified = false;  // search finished or found the tuple

  bool chains_within_k() const;     // L <= K(D,N)
  bool walls_within_bound() const;  // |H_R| <= 2 R K(D,N)
};

// Either a facing (N+1)-tuple in H_R or an l1 embedding of the ball by chain
// heights relative to the basepoint. EMBEDDING_VERIFICATION_FAILED if the
// embedding is not isometric.
EmbeddingResult grid_embedding(const MedianGraph& g, const WallSet& w, Vertex x0,
                               std::uint32_t radius, int facing_bound,
                               const Orientation& o = {});

}  // namespace cubecomb
