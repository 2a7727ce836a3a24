#pragma once

#include <cstddef>
#include <vector>

namespace cubecomb {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct Matching {
  std::vector<std::size_t> left;   // partner of each left node, or kUnmatched
  std::vector<std::size_t> right;  // partner of each right node, or kUnmatched
  std::size_t size = 0;
};

// Hopcroft-Karp. Neighbour lists are scanned in the given order, so equal
// inputs give equal matchings.
Matching max_bipartite_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t right_count);

// Koenig: a minimum vertex cover read off a maximum matching.
// left[i] / right[j] mark the chosen nodes.
struct VertexCover {
  std::vector<bool> left;
  std::vector<bool> right;
};

VertexCover min_vertex_cover(const std::vector<std::vector<std::size_t>>& adjacency,
                             std::size_t right_count, const Matching& m);

}  // namespace cubecomb
