#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cubecomb {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// 1-skeleton of a finite CAT(0) cube complex. Immutable after construction
// apart from the validation flag, which verify_median() sets once.
class MedianGraph {
 public:
  MedianGraph() = default;

  // Throws DUPLICATE_VERTEX, DUPLICATE_EDGE, SELF_LOOP, DANGLING_EDGE, DISCONNECTED.
  MedianGraph(std::vector<std::string> labels,
              const std::vector<std::pair<std::string, std::string>>& edges);

  // Same checks, with endpoints already resolved to indices.
  static MedianGraph from_indices(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Throws UNKNOWN_VERTEX.
  Vertex vertex(std::string_view label) const;
  std::optional<Vertex> find(std::string_view label) const;
  void check_vertex(Vertex v) const;

  bool adjacent(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool validated() const { return validated_; }
  void mark_validated() { validated_ = true; }

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet singleton(Vertex v) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  bool validated_ = false;
};

std::vector<std::uint32_t> bfs_distances(const MedianGraph& g, Vertex source);

std::uint32_t distance(const MedianGraph& g, Vertex x, Vertex y);

// I(a,b) = {c : d(a,b) = d(a,c) + d(c,b)}.
VertexSet interval(const MedianGraph& g, Vertex a, Vertex b);

// Throws NOT_MEDIAN_GRAPH when the triple has zero or several medians.
Vertex median(const MedianGraph& g, Vertex a, Vertex b, Vertex c);

// Shortest x-y path; among geodesics, each step goes to the lowest-index
// admissible neighbour. With `within`, the path is confined to that vertex set.
std::vector<Vertex> shortest_path(const MedianGraph& g, Vertex x, Vertex y,
                                  const VertexSet* within = nullptr);

// All-pairs BFS table. Quadratic memory; intended for graphs of a few thousand
// vertices at most.
class DistanceTable {
 public:
  explicit DistanceTable(const MedianGraph& g);

  std::uint32_t operator()(Vertex a, Vertex b) const { return table_[a * n_ + b]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
};

struct MedianReport {
  bool pass = false;
  // Triple with zero or at least two medians.
  std::optional<std::array<Vertex, 3>> witness;
  std::size_t witness_median_count = 0;
  std::string method;
  std::string detail;
};

// Exhaustive triple scan with precomputed intervals.
MedianReport check_median_brute_force(const MedianGraph& g);

// Bipartite + quadrangle condition from every base vertex + no two vertices
// with three common neighbours (modular and K_{2,3}-free). Produces a witness
// triple on failure.
MedianReport check_median_local(const MedianGraph& g);

inline constexpr std::size_t kBruteForceMedianLimit = 512;

// Brute force up to kBruteForceMedianLimit vertices, local criterion beyond.
MedianReport check_median(const MedianGraph& g);

// check_median() plus the one-time validation flag flip on PASS.
MedianReport verify_median(MedianGraph& g);

// Induced subgraph on `keep`. `old_of_new` receives the original index of each
// new vertex. Throws DISCONNECTED if the induced subgraph is disconnected.
MedianGraph induced_subgraph(const MedianGraph& g, const VertexSet& keep,
                             std::vector<Vertex>* old_of_new = nullptr);

std::vector<Vertex> members(const VertexSet& s);
VertexSet make_set(std::size_t n, std::span<const Vertex> vs);

}  // namespace cubecomb
