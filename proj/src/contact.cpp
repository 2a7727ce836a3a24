#include "cubecomb/contact.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cubecomb/error.hpp"

namespace cubecomb {

std::vector<WallMask> contact_by_carriers(const MedianGraph& g, const WallSet& w) {
  std::vector<WallMask> adj(w.size(), w.empty_mask());
  for (Vertex x = 0; x < g.size(); ++x) {
    const auto pi = project_vertex(g, w, x);
    for (WallId h : pi) {
      for (WallId k : pi) {
        if (h != k) adj[h].set(k);
      }
    }
  }
  return adj;
}

std::vector<WallMask> contact_by_separation(const WallSet& w) {
  const std::size_t n = w.size();
  // toward[l][s]: walls lying on side s of l.
  std::vector<std::array<WallMask, 2>> toward(n, {w.empty_mask(), w.empty_mask()});
  for (WallId l = 0; l < n; ++l) {
    for (WallId k = 0; k < n; ++k) {
      if (const auto s = w.side_of_wall(l, k)) toward[l][std::size_t(*s)].set(k);
    }
  }
  std::vector<WallMask> separated(n, w.empty_mask());
  for (WallId l = 0; l < n; ++l) {
    for (int s = 0; s < 2; ++s) {
      const WallMask& near = toward[l][std::size_t(s)];
      const WallMask& far = toward[l][std::size_t(1 - s)];
      for (auto h = near.find_first(); h != WallMask::npos; h = near.find_next(h)) {
        separated[h] |= far;
      }
    }
  }
  std::vector<WallMask> adj(n, w.empty_mask());
  for (WallId h = 0; h < n; ++h) {
    adj[h] = ~separated[h];
    adj[h].reset(h);
  }
  return adj;
}

ContactGraph::ContactGraph(const MedianGraph& g, const WallSet& w)
    : adjacency_(contact_by_carriers(g, w)), provenance_("carrier-intersection") {
  const auto other = contact_by_separation(w);
  for (WallId h = 0; h < w.size(); ++h) {
    if (other[h] != adjacency_[h]) {
      const WallMask diff = other[h] ^ adjacency_[h];
      throw Error(ErrorCode::kDefinitionMismatch,
                  "contact definitions disagree on walls " + std::to_string(h) + " and " +
                      std::to_string(diff.find_first()));
    }
  }
}

std::vector<WallId> ContactGraph::neighbors(WallId h) const {
  std::vector<WallId> out;
  for (auto k = adjacency_[h].find_first(); k != WallMask::npos; k = adjacency_[h].find_next(k)) {
    out.push_back(WallId(k));
  }
  return out;
}

std::vector<std::uint32_t> ContactGraph::distances_from(WallId h) const {
  std::vector<std::uint32_t> dist(size(), kUnreachable);
  if (h >= size()) throw Error(ErrorCode::kUnknownWall, "wall " + std::to_string(h) + " does not exist");
  std::deque<WallId> queue{h};
  dist[h] = 0;
  while (!queue.empty()) {
    const WallId a = queue.front();
    queue.pop_front();
    for (auto b = adjacency_[a].find_first(); b != WallMask::npos; b = adjacency_[a].find_next(b)) {
      if (dist[b] != kUnreachable) continue;
      dist[b] = dist[a] + 1;
      queue.push_back(WallId(b));
    }
  }
  return dist;
}

std::uint32_t ContactGraph::distance(WallId h, WallId k) const {
  if (k >= size()) throw Error(ErrorCode::kUnknownWall, "wall " + std::to_string(k) + " does not exist");
  return distances_from(h)[k];
}

std::vector<WallId> ContactGraph::geodesic(WallId h, WallId k) const {
  const auto to_k = distances_from(k);
  if (h >= size()) throw Error(ErrorCode::kUnknownWall, "wall " + std::to_string(h) + " does not exist");
  if (to_k[h] == kUnreachable) throw Error(ErrorCode::kInternal, "contact graph is disconnected");
  std::vector<WallId> out{h};
  while (out.back() != k) {
    const WallId a = out.back();
    for (auto b = adjacency_[a].find_first(); b != WallMask::npos; b = adjacency_[a].find_next(b)) {
      if (to_k[b] + 1 == to_k[a]) {
        out.push_back(WallId(b));
        break;
      }
    }
  }
  return out;
}

std::vector<WallId> project_vertex(const MedianGraph& g, const WallSet& w, Vertex x) {
  g.check_vertex(x);
  std::vector<WallId> out;
  for (Vertex y : g.neighbors(x)) out.push_back(w.wall_of_edge(g, x, y));
  std::sort(out.begin(), out.end());
  return out;
}

SinglePointReport single_point_check(const MedianGraph& /*g*/, const WallSet& w,
                                     const ContactGraph& c, WallId v, WallId h) {
  w.check_wall(v);
  w.check_wall(h);
  if (v == h) throw Error(ErrorCode::kSameWall, "single point check needs two walls");
  SinglePointReport out;
  out.v = v;
  out.h = h;
  out.contact_distance = c.distance(v, h);
  out.image = gate_projection(w, carrier_subcomplex(w, v), carrier_subcomplex(w, h)).vertices;
  const WallMask crossing = walls_crossing(w, out.image);
  for (auto a = crossing.find_first(); a != WallMask::npos; a = crossing.find_next(a)) {
    if (a != v) out.crossing.push_back(WallId(a));
  }
  for (const auto& e : w.wall(v).edges) {
    if (out.image.test(e.u) || out.image.test(e.v)) out.wall_image.push_back(e);
  }
  out.single_point = out.crossing.empty();
  return out;
}

std::vector<Vertex> HierarchyPath::path() const {
  std::vector<Vertex> out;
  for (const auto& piece : pieces) {
    if (piece.empty()) continue;
    auto begin = piece.begin();
    if (!out.empty() && out.back() == piece.front()) ++begin;
    out.insert(out.end(), begin, piece.end());
  }
  return out;
}

namespace {

// Recompute anchors x_{from+1}.. and pieces gamma_from.. after walls changed.
void regate(const MedianGraph& g, const WallSet& w, HierarchyPath& p, std::size_t from, Vertex y) {
  const std::size_t k = p.walls.size();
  for (std::size_t i = from + 1; i < k; ++i) {
    p.anchors[i] = gate(w, carrier_subcomplex(w, p.walls[i]), p.anchors[i - 1]);
  }
  p.anchors[k] = y;
  for (std::size_t i = from; i < k; ++i) {
    p.pieces[i] = shortest_path(g, p.anchors[i], p.anchors[i + 1], &w.carrier(p.walls[i]));
  }
}

}  // namespace

HierarchyPath hierarchy_path(const MedianGraph& g, const WallSet& w, const ContactGraph& c,
                             Vertex x, Vertex y, std::optional<WallId> hx,
                             std::optional<WallId> hy) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw Error(ErrorCode::kBadParams, "hierarchy path needs distinct endpoints");
  const auto pix = project_vertex(g, w, x);
  const auto piy = project_vertex(g, w, y);
  const WallId start = hx.value_or(pix.front());
  const WallId end = hy.value_or(piy.front());
  if (!w.carrier(start).test(x) || !w.carrier(end).test(y)) {
    throw Error(ErrorCode::kBadParams, "chosen walls must have the endpoints in their carriers");
  }

  HierarchyPath p;
  p.walls = c.geodesic(start, end);
  const std::size_t k = p.walls.size();
  p.anchors.assign(k + 1, x);
  p.pieces.assign(k, {});
  regate(g, w, p, 0, y);

  std::size_t total = 0;
  for (const auto& piece : p.pieces) total += piece.size();
  const std::size_t cap = std::max<std::size_t>(1, w.size() * total);

  for (;;) {
    // First wall dual to edges in two different pieces, scanning in path order.
    std::map<WallId, std::size_t> seen;
    std::optional<std::pair<std::size_t, std::size_t>> clash;
    WallId culprit = 0;
    for (std::size_t i = 0; i < k && !clash; ++i) {
      const auto& piece = p.pieces[i];
      for (std::size_t s = 0; s + 1 < piece.size(); ++s) {
        const WallId h = w.wall_of_edge(g, piece[s], piece[s + 1]);
        const auto [it, fresh] = seen.emplace(h, i);
        if (!fresh) {
          clash = std::pair{it->second, i};
          culprit = h;
          break;
        }
      }
    }
    if (!clash) break;
    if (++p.reductions > cap) throw Error(ErrorCode::kInternal, "hierarchy reduction did not terminate");
    const auto [i, j] = *clash;
    if (j != i + 2) {
      throw Error(ErrorCode::kInternal, "wall " + std::to_string(culprit) + " is dual to pieces " +
                                            std::to_string(i) + " and " + std::to_string(j));
    }
    p.walls[i + 1] = culprit;
    regate(g, w, p, i, y);
  }
  return p;
}

HierarchyAudit check_hierarchy_path(const MedianGraph& g, const WallSet& w,
                                    const ContactGraph& c, Vertex x, Vertex y,
                                    const HierarchyPath& p) {
  HierarchyAudit a;
  const auto gamma = p.path();
  a.geodesic = !gamma.empty() && gamma.front() == x && gamma.back() == y &&
               gamma.size() == std::size_t(w.distance(x, y)) + 1;
  for (std::size_t s = 0; a.geodesic && s + 1 < gamma.size(); ++s) {
    a.geodesic = g.adjacent(gamma[s], gamma[s + 1]);
  }

  const std::size_t k = p.walls.size();
  a.contact_geodesic = k > 0 && w.carrier(p.walls.front()).test(x) &&
                       w.carrier(p.walls.back()).test(y) &&
                       c.distance(p.walls.front(), p.walls.back()) + 1 == k;
  for (std::size_t i = 0; a.contact_geodesic && i + 1 < k; ++i) {
    a.contact_geodesic = c.adjacent(p.walls[i], p.walls[i + 1]);
  }

  a.in_carriers = p.pieces.size() == k;
  a.piece_bounds = a.in_carriers;
  for (std::size_t i = 0; a.in_carriers && i < k; ++i) {
    const auto& piece = p.pieces[i];
    const VertexSet& carrier = w.carrier(p.walls[i]);
    a.in_carriers = !piece.empty() &&
                    std::all_of(piece.begin(), piece.end(), [&](Vertex v) { return carrier.test(v); });
    if (!a.in_carriers) break;
    const auto y_set = carrier_subcomplex(w, p.walls[i]);
    const auto bound = w.distance(gate(w, y_set, x), gate(w, y_set, y));
    if (piece.size() - 1 > bound) a.piece_bounds = false;
  }
  return a;
}

std::uint32_t four_point_delta_twice(const ContactGraph& c) {
  const std::size_t n = c.size();
  if (n > 60) throw Error(ErrorCode::kBadParams, "four-point check is limited to 60 walls");
  std::vector<std::vector<std::uint32_t>> d(n);
  for (WallId h = 0; h < n; ++h) d[h] = c.distances_from(h);
  std::uint32_t delta = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t e = b + 1; e < n; ++e) {
        for (std::size_t f = e + 1; f < n; ++f) {
          std::array<std::uint32_t, 3> sums{d[a][b] + d[e][f], d[a][e] + d[b][f], d[a][f] + d[b][e]};
          std::sort(sums.begin(), sums.end());
          delta = std::max(delta, sums[2] - sums[1]);
        }
      }
    }
  }
  return delta;
}

}  // namespace cubecomb
