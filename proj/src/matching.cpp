#include "cubecomb/matching.hpp"

#include <deque>
#include <limits>

namespace cubecomb {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count)
      : adj_(adj), dist_(adj.size()), next_(adj.size()) {
    m_.left.assign(adj.size(), kUnmatched);
    m_.right.assign(right_count, kUnmatched);
  }

  Matching run() {
    while (layer()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) next_[u] = 0;
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (m_.left[u] == kUnmatched && augment(u)) ++m_.size;
      }
    }
    return m_;
  }

 private:
  // BFS layering from free left nodes; true if some free right node is reachable.
  bool layer() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (m_.left[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = m_.right[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool augment(std::size_t u) {
    for (; next_[u] < adj_[u].size(); ++next_[u]) {
      const std::size_t v = adj_[u][next_[u]];
      const std::size_t w = m_.right[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && augment(w))) {
        m_.left[u] = v;
        m_.right[v] = u;
        ++next_[u];
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_;
  Matching m_;
};

}  // namespace

Matching max_bipartite_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t right_count) {
  return HopcroftKarp(adjacency, right_count).run();
}

VertexCover min_vertex_cover(const std::vector<std::vector<std::size_t>>& adjacency,
                             std::size_t right_count, const Matching& m) {
  // Alternating reachability Z from free left nodes; cover = (L \ Z) + (R & Z).
  std::vector<bool> seen_left(adjacency.size(), false);
  std::vector<bool> seen_right(right_count, false);
  std::deque<std::size_t> queue;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    if (m.left[u] == kUnmatched) {
      seen_left[u] = true;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adjacency[u]) {
      if (seen_right[v] || m.left[u] == v) continue;
      seen_right[v] = true;
      const std::size_t w = m.right[v];
      if (w != kUnmatched && !seen_left[w]) {
        seen_left[w] = true;
        queue.push_back(w);
      }
    }
  }
  VertexCover cover;
  cover.left.resize(adjacency.size());
  cover.right = seen_right;
  for (std::size_t u = 0; u < adjacency.size(); ++u) cover.left[u] = !seen_left[u];
  return cover;
}

}  // namespace cubecomb
