#include "cubecomb/median_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cubecomb/error.hpp"

namespace cubecomb {

namespace {

void require_connected(const std::vector<std::vector<Vertex>>& adjacency) {
  if (adjacency.empty()) return;
  std::vector<char> seen(adjacency.size(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != adjacency.size()) {
    throw Error(ErrorCode::kDisconnected, "graph has " + std::to_string(adjacency.size() - reached) +
                                              " vertices unreachable from the first vertex");
  }
}

}  // namespace

MedianGraph::MedianGraph(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::kDuplicateVertex, "vertex '" + labels[i] + "' listed twice");
    }
  }
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorCode::kDanglingEdge,
                  "edge (" + a + ", " + b + ") references an unknown vertex");
    }
    resolved.push_back(Edge{ia->second, ib->second});
  }
  *this = from_indices(std::move(labels), std::move(resolved));
}

MedianGraph MedianGraph::from_indices(std::vector<std::string> labels, std::vector<Edge> edges) {
  MedianGraph g;
  g.labels_ = std::move(labels);
  for (Vertex i = 0; i < g.labels_.size(); ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw Error(ErrorCode::kDuplicateVertex, "vertex '" + g.labels_[i] + "' listed twice");
    }
  }
  const auto n = static_cast<Vertex>(g.labels_.size());
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kDanglingEdge, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "loop at vertex '" + g.labels_[e.u] + "'");
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::kDuplicateEdge, "edge (" + g.labels_[dup->u] + ", " + g.labels_[dup->v] +
                                               ") listed twice");
  }
  g.edges_ = std::move(edges);
  g.adjacency_.assign(n, {});
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  require_connected(g.adjacency_);
  return g;
}

Vertex MedianGraph::vertex(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::kUnknownVertex, "no vertex labelled '" + std::string(label) + "'");
}

std::optional<Vertex> MedianGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void MedianGraph::check_vertex(Vertex v) const {
  if (v >= size()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  }
}

bool MedianGraph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> MedianGraph::edge_index(Vertex a, Vertex b) const {
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet MedianGraph::singleton(Vertex v) const {
  VertexSet s(size());
  s.set(v);
  return s;
}

std::vector<std::uint32_t> bfs_distances(const MedianGraph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::uint32_t> dist(g.size(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.size());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::uint32_t distance(const MedianGraph& g, Vertex x, Vertex y) {
  g.check_vertex(y);
  return bfs_distances(g, x)[y];
}

VertexSet interval(const MedianGraph& g, Vertex a, Vertex b) {
  const auto da = bfs_distances(g, a);
  const auto db = bfs_distances(g, b);
  VertexSet out(g.size());
  for (Vertex c = 0; c < g.size(); ++c) {
    if (da[c] + db[c] == da[b]) out.set(c);
  }
  return out;
}

Vertex median(const MedianGraph& g, Vertex a, Vertex b, Vertex c) {
  const auto da = bfs_distances(g, a);
  const auto db = bfs_distances(g, b);
  const auto dc = bfs_distances(g, c);
  std::optional<Vertex> found;
  std::size_t count = 0;
  for (Vertex m = 0; m < g.size(); ++m) {
    if (da[m] + db[m] == da[b] && db[m] + dc[m] == db[c] && da[m] + dc[m] == da[c]) {
      if (!found) found = m;
      ++count;
    }
  }
  if (count != 1) {
    throw Error(ErrorCode::kNotMedianGraph, "triple (" + g.label(a) + ", " + g.label(b) + ", " +
                                                g.label(c) + ") has " + std::to_string(count) +
                                                " medians");
  }
  return *found;
}

std::vector<Vertex> shortest_path(const MedianGraph& g, Vertex x, Vertex y, const VertexSet* within) {
  g.check_vertex(x);
  g.check_vertex(y);
  // Distances to y, restricted to `within` when given.
  std::vector<std::uint32_t> dist(g.size(), kUnreachable);
  std::vector<Vertex> queue{y};
  dist[y] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] != kUnreachable) continue;
      if (within != nullptr && !within->test(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  if (dist[x] == kUnreachable) {
    throw Error(ErrorCode::kInternal, "no path from '" + g.label(x) + "' to '" + g.label(y) + "'");
  }
  std::vector<Vertex> path{x};
  Vertex cur = x;
  while (cur != y) {
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] != kUnreachable && dist[w] + 1 == dist[cur]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

DistanceTable::DistanceTable(const MedianGraph& g) : n_(g.size()), table_(n_ * n_) {
  for (Vertex v = 0; v < n_; ++v) {
    const auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(v * n_));
  }
}

MedianReport check_median_brute_force(const MedianGraph& g) {
  MedianReport report;
  report.method = "brute-force";
  const std::size_t n = g.size();
  const DistanceTable d(g);
  // Upper-triangular interval table, I(a,b) for a < b.
  std::vector<VertexSet> intervals(n * n);
  auto slot = [n](Vertex a, Vertex b) { return a * n + b; };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      VertexSet s(n);
      const auto dab = d(a, b);
      for (Vertex c = 0; c < n; ++c) {
        if (d(a, c) + d(c, b) == dab) s.set(c);
      }
      intervals[slot(a, b)] = std::move(s);
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        VertexSet common = intervals[slot(a, b)] & intervals[slot(a, c)];
        common &= intervals[slot(b, c)];
        const auto count = common.count();
        if (count != 1) {
          report.witness = std::array<Vertex, 3>{a, b, c};
          report.witness_median_count = count;
          report.detail = "triple has " + std::to_string(count) + " medians";
          return report;
        }
      }
    }
  }
  report.pass = true;
  return report;
}

MedianReport check_median_local(const MedianGraph& g) {
  MedianReport report;
  report.method = "local";
  const std::size_t n = g.size();
  if (n == 0) {
    report.pass = true;
    return report;
  }

  // Bipartite: an edge inside a BFS layer gives a triple without medians.
  {
    const auto dist = bfs_distances(g, 0);
    for (const auto& e : g.edges()) {
      if (dist[e.u] == dist[e.v]) {
        report.witness = std::array<Vertex, 3>{0, e.u, e.v};
        report.witness_median_count = 0;
        report.detail = "odd cycle: adjacent vertices equidistant from the base vertex";
        return report;
      }
    }
  }

  // No two vertices with three common neighbours.
  {
    std::vector<std::uint32_t> count(n, 0);
    std::vector<Vertex> touched;
    for (Vertex a = 0; a < n; ++a) {
      touched.clear();
      for (Vertex mid : g.neighbors(a)) {
        for (Vertex b : g.neighbors(mid)) {
          if (b <= a) continue;
          if (count[b]++ == 0) touched.push_back(b);
          if (count[b] == 3) {
            std::vector<Vertex> common;
            for (Vertex c : g.neighbors(a)) {
              if (g.adjacent(c, b)) common.push_back(c);
              if (common.size() == 3) break;
            }
            report.witness = std::array<Vertex, 3>{common[0], common[1], common[2]};
            report.witness_median_count = 2;
            report.detail = "vertices '" + g.label(a) + "' and '" + g.label(b) +
                            "' share three neighbours";
            return report;
          }
        }
      }
      for (Vertex b : touched) count[b] = 0;
    }
  }

  // Quadrangle condition from every base vertex.
  for (Vertex u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex z = 0; z < n; ++z) {
      const auto nz = g.neighbors(z);
      for (std::size_t i = 0; i < nz.size(); ++i) {
        const Vertex v = nz[i];
        if (dist[v] + 1 != dist[z]) continue;
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
          const Vertex w = nz[j];
          if (dist[w] + 1 != dist[z]) continue;
          bool found = false;
          for (Vertex x : g.neighbors(v)) {
            if (dist[x] + 1 == dist[v] && g.adjacent(x, w)) {
              found = true;
              break;
            }
          }
          if (!found) {
            report.witness = std::array<Vertex, 3>{u, v, w};
            report.witness_median_count = 0;
            report.detail = "quadrangle condition fails";
            return report;
          }
        }
      }
    }
  }
  report.pass = true;
  return report;
}

MedianReport check_median(const MedianGraph& g) {
  return g.size() <= kBruteForceMedianLimit ? check_median_brute_force(g) : check_median_local(g);
}

MedianReport verify_median(MedianGraph& g) {
  auto report = check_median(g);
  if (report.pass) g.mark_validated();
  return report;
}

MedianGraph induced_subgraph(const MedianGraph& g, const VertexSet& keep,
                             std::vector<Vertex>* old_of_new) {
  std::vector<Vertex> new_of_old(g.size(), kUnreachable);
  std::vector<std::string> labels;
  std::vector<Vertex> order;
  for (auto v = keep.find_first(); v != VertexSet::npos; v = keep.find_next(v)) {
    new_of_old[v] = static_cast<Vertex>(labels.size());
    labels.push_back(g.label(static_cast<Vertex>(v)));
    order.push_back(static_cast<Vertex>(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep.test(e.u) && keep.test(e.v)) edges.push_back(Edge{new_of_old[e.u], new_of_old[e.v]});
  }
  if (old_of_new != nullptr) *old_of_new = std::move(order);
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet make_set(std::size_t n, std::span<const Vertex> vs) {
  VertexSet s(n);
  for (Vertex v : vs) s.set(v);
  return s;
}

}  // namespace cubecomb
