#include "cubecomb/walls.hpp"

#include <algorithm>
#include <numeric>

#include <boost/pending/disjoint_sets.hpp>

#include "cubecomb/clique.hpp"
#include "cubecomb/error.hpp"

namespace cubecomb {

namespace {

// Vertices reachable from `start` without using edges of the given class.
VertexSet component_without(const MedianGraph& g, const std::vector<WallId>& edge_class,
                            WallId cls, Vertex start) {
  VertexSet seen(g.size());
  std::vector<Vertex> stack{start};
  seen.set(start);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (seen.test(w)) continue;
      if (edge_class[*g.edge_index(v, w)] == cls) continue;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

const Wall& WallSet::wall(WallId h) const {
  check_wall(h);
  return walls_[h];
}

void WallSet::check_wall(WallId h) const {
  if (h >= walls_.size()) {
    throw Error(ErrorCode::kUnknownWall, "wall " + std::to_string(h) + " does not exist");
  }
}

VertexSet WallSet::halfspace(WallId h, int side) const {
  check_wall(h);
  return side == 1 ? walls_[h].side1 : ~walls_[h].side1;
}

WallId WallSet::wall_of_edge(const MedianGraph& g, Vertex a, Vertex b) const {
  const auto idx = g.edge_index(a, b);
  if (!idx) {
    throw Error(ErrorCode::kUnknownVertex,
                "no edge between '" + g.label(a) + "' and '" + g.label(b) + "'");
  }
  return edge_wall_[*idx];
}

std::optional<int> WallSet::side_of_wall(WallId h, WallId k) const {
  const auto s = side_of_wall_[std::size_t(h) * size() + k];
  if (s < 0) return std::nullopt;
  return s;
}

std::uint32_t WallSet::distance(Vertex a, Vertex b) const {
  return static_cast<std::uint32_t>((signatures_[a] ^ signatures_[b]).count());
}

WallSet compute_walls(const MedianGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> rank(m), parent(m);
  boost::disjoint_sets<std::size_t*, std::size_t*> classes(rank.data(), parent.data());
  for (std::size_t e = 0; e < m; ++e) classes.make_set(e);

  auto edge = [&](Vertex a, Vertex b) { return *g.edge_index(a, b); };
  for (Vertex a = 0; a < g.size(); ++a) {
    const auto nbrs = g.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex b = nbrs[i];
        const Vertex c = nbrs[j];
        if (g.adjacent(b, c)) continue;  // chord
        for (Vertex d : g.neighbors(b)) {
          if (d <= a || !g.adjacent(c, d) || g.adjacent(a, d)) continue;
          classes.union_set(edge(a, b), edge(c, d));
          classes.union_set(edge(a, c), edge(b, d));
        }
      }
    }
  }

  WallSet w;
  w.vertex_count_ = g.size();
  w.edge_wall_.assign(m, 0);
  std::vector<std::size_t> root_to_wall(m, SIZE_MAX);
  for (std::size_t e = 0; e < m; ++e) {
    const auto root = classes.find_set(e);
    if (root_to_wall[root] == SIZE_MAX) {
      root_to_wall[root] = w.walls_.size();
      Wall wall;
      wall.id = static_cast<WallId>(w.walls_.size());
      w.walls_.push_back(std::move(wall));
    }
    const auto id = static_cast<WallId>(root_to_wall[root]);
    w.edge_wall_[e] = id;
    w.walls_[id].edges.push_back(g.edges()[e]);
  }

  for (auto& wall : w.walls_) {
    const VertexSet side0 = component_without(g, w.edge_wall_, wall.id, 0);
    const Edge rep = wall.edges.front();
    const Vertex other = side0.test(rep.u) ? rep.v : rep.u;
    const VertexSet side1 = component_without(g, w.edge_wall_, wall.id, other);
    if (side0.intersects(side1) || (side0 | side1).count() != g.size()) {
      throw Error(ErrorCode::kNotTwoSided,
                  "removing the class of edge (" + g.label(rep.u) + ", " + g.label(rep.v) +
                      ") does not leave exactly two components");
    }
    wall.carrier = VertexSet(g.size());
    for (const auto& e : wall.edges) {
      if (side0.test(e.u) == side0.test(e.v)) {
        throw Error(ErrorCode::kNotTwoSided, "edge (" + g.label(e.u) + ", " + g.label(e.v) +
                                                 ") does not cross its own class");
      }
      wall.carrier.set(e.u);
      wall.carrier.set(e.v);
    }
    wall.side1 = side1;
  }

  const std::size_t n_walls = w.walls_.size();
  w.signatures_.assign(g.size(), WallMask(n_walls));
  for (const auto& wall : w.walls_) {
    for (auto v = wall.side1.find_first(); v != VertexSet::npos; v = wall.side1.find_next(v)) {
      w.signatures_[v].set(wall.id);
    }
  }

  w.crossing_.assign(n_walls, WallMask(n_walls));
  w.side_of_wall_.assign(n_walls * n_walls, -1);
  for (WallId h = 0; h < n_walls; ++h) {
    const VertexSet& a1 = w.walls_[h].side1;
    const VertexSet a0 = ~a1;
    for (WallId k = h + 1; k < n_walls; ++k) {
      const VertexSet& b1 = w.walls_[k].side1;
      const bool cross = a1.intersects(b1) && a0.intersects(b1) && a1.intersects(~b1) &&
                         a0.intersects(~b1);
      if (cross) {
        w.crossing_[h].set(k);
        w.crossing_[k].set(h);
        continue;
      }
      const Edge rh = w.walls_[h].edges.front();
      const Edge rk = w.walls_[k].edges.front();
      w.side_of_wall_[std::size_t(h) * n_walls + k] = static_cast<std::int8_t>(w.side(h, rk.u));
      w.side_of_wall_[std::size_t(k) * n_walls + h] = static_cast<std::int8_t>(w.side(k, rh.u));
    }
  }
  return w;
}

bool separates(const WallSet& w, WallId h, Vertex x, Vertex y) {
  w.check_wall(h);
  return w.side(h, x) != w.side(h, y);
}

std::vector<WallId> separating_set(const WallSet& w, Vertex x, Vertex y) {
  const WallMask diff = w.signature(x) ^ w.signature(y);
  std::vector<WallId> out;
  for (auto h = diff.find_first(); h != WallMask::npos; h = diff.find_next(h)) {
    out.push_back(static_cast<WallId>(h));
  }
  return out;
}

bool crosses(const WallSet& w, WallId h, WallId k) {
  w.check_wall(h);
  w.check_wall(k);
  if (h == k) throw Error(ErrorCode::kSameWall, "a wall is not compared with itself");
  return w.cross(h, k);
}

std::vector<std::pair<WallId, WallId>> square_crossings(const MedianGraph& g, const WallSet& w) {
  std::vector<std::pair<WallId, WallId>> out;
  for (Vertex a = 0; a < g.size(); ++a) {
    const auto nbrs = g.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        for (Vertex d : g.neighbors(nbrs[i])) {
          if (d == a || !g.adjacent(nbrs[j], d)) continue;
          auto h = w.wall_of_edge(g, a, nbrs[i]);
          auto k = w.wall_of_edge(g, a, nbrs[j]);
          out.emplace_back(std::min(h, k), std::max(h, k));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool separates_walls(const WallSet& w, WallId l, WallId h, WallId k) {
  if (l == h || l == k || h == k) return false;
  const auto sh = w.side_of_wall(l, h);
  const auto sk = w.side_of_wall(l, k);
  return sh && sk && *sh != *sk;
}

std::size_t dimension(const WallSet& w) {
  if (w.size() == 0) return 0;
  NodeMask all(w.size());
  all.set();
  std::vector<NodeMask> adjacency;
  adjacency.reserve(w.size());
  for (WallId h = 0; h < w.size(); ++h) adjacency.push_back(w.crossing_row(h));
  return max_clique(adjacency, all).members.size();
}

FacingCheck is_facing_tuple(const WallSet& w, std::span<const WallId> walls) {
  FacingCheck out;
  for (WallId h : walls) w.check_wall(h);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      if (walls[i] == walls[j] || w.cross(walls[i], walls[j])) return out;
    }
  }
  for (std::size_t i = 0; i < walls.size(); ++i) {
    std::optional<int> towards_others;
    for (std::size_t j = 0; j < walls.size(); ++j) {
      if (i == j) continue;
      const int s = *w.side_of_wall(walls[i], walls[j]);
      if (towards_others && *towards_others != s) return out;  // walls[i] separates two others
      towards_others = s;
    }
    out.assignment.push_back(Halfspace{walls[i], towards_others ? 1 - *towards_others : 0});
  }
  out.facing = true;
  return out;
}

std::optional<std::vector<Halfspace>> disjoint_halfspace_choice(const WallSet& w,
                                                                std::span<const WallId> walls) {
  if (walls.size() > 20) throw Error(ErrorCode::kBadParams, "too many walls for exhaustive choice");
  std::vector<std::array<VertexSet, 2>> sides;
  for (WallId h : walls) sides.push_back({w.halfspace(h, 0), w.halfspace(h, 1)});
  for (std::uint32_t mask = 0; mask < (1u << walls.size()); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < walls.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < walls.size() && ok; ++j) {
        ok = walls[i] != walls[j] &&
             !sides[i][(mask >> i) & 1].intersects(sides[j][(mask >> j) & 1]);
      }
    }
    if (ok) {
      std::vector<Halfspace> out;
      for (std::size_t i = 0; i < walls.size(); ++i) {
        out.push_back(Halfspace{walls[i], int((mask >> i) & 1)});
      }
      return out;
    }
  }
  return std::nullopt;
}

FacingSearch max_facing_tuple(const WallSet& w, std::span<const WallId> candidates,
                              std::optional<std::size_t> stop_at) {
  for (WallId h : candidates) w.check_wall(h);
  std::vector<WallId> walls(candidates.begin(), candidates.end());
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());

  // Node 2i+s is halfspace s of walls[i]; edges join disjoint halfspaces.
  const std::size_t n = walls.size();
  std::vector<NodeMask> adjacency(2 * n, NodeMask(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto si = w.side_of_wall(walls[i], walls[j]);
      if (!si) continue;
      const int sj = *w.side_of_wall(walls[j], walls[i]);
      const std::size_t a = 2 * i + std::size_t(1 - *si);
      const std::size_t b = 2 * j + std::size_t(1 - sj);
      adjacency[a].set(b);
      adjacency[b].set(a);
    }
  }
  NodeMask all(2 * n);
  all.set();
  const std::uint64_t budget = n <= kExhaustiveFacingLimit ? 0 : kFacingNodeBudget;
  const auto clique = max_clique(adjacency, all, budget, stop_at);

  FacingSearch out;
  out.certified = clique.complete;
  out.nodes = clique.nodes;
  for (auto node : clique.members) out.tuple.push_back(Halfspace{walls[node / 2], int(node % 2)});
  return out;
}

bool is_chain(const WallSet& w, std::span<const WallId> sequence) {
  for (WallId h : sequence) w.check_wall(h);
  if (sequence.empty()) return false;
  if (sequence.size() == 1) return true;
  if (sequence.size() == 2) {
    return sequence[0] != sequence[1] && !w.cross(sequence[0], sequence[1]);
  }
  for (std::size_t i = 1; i + 1 < sequence.size(); ++i) {
    if (!separates_walls(w, sequence[i], sequence[i - 1], sequence[i + 1])) return false;
  }
  return true;
}

std::optional<std::vector<Halfspace>> nested_orientation(const WallSet& w,
                                                         std::span<const WallId> sequence) {
  for (WallId h : sequence) w.check_wall(h);
  if (sequence.empty()) return std::nullopt;
  std::vector<Halfspace> out;
  if (sequence.size() == 1) return std::vector<Halfspace>{Halfspace{sequence[0], 0}};
  const WallId first = sequence[0];
  const auto away = w.side_of_wall(first, sequence[1]);
  if (!away) return std::nullopt;
  out.push_back(Halfspace{first, 1 - *away});
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    const auto s = w.side_of_wall(sequence[i], first);
    if (!s) return std::nullopt;
    out.push_back(Halfspace{sequence[i], *s});
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (!w.halfspace(out[i]).is_proper_subset_of(w.halfspace(out[i + 1]))) return std::nullopt;
  }
  return out;
}

std::vector<WallId> longest_chain(const WallSet& w, std::span<const WallId> walls) {
  std::vector<WallId> ids(walls.begin(), walls.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (WallId h : ids) w.check_wall(h);
  const std::size_t n = ids.size();
  if (n == 0) return {};

  // below[x] lists nodes strictly contained in node x (node 2i+s).
  std::vector<std::vector<std::size_t>> below(2 * n);
  std::vector<std::size_t> size(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s1 = w.wall(ids[i]).side1.count();
    size[2 * i + 1] = s1;
    size[2 * i] = w.vertex_count() - s1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto toward_j = w.side_of_wall(ids[i], ids[j]);
      if (!toward_j) continue;
      const int toward_i = *w.side_of_wall(ids[j], ids[i]);
      // The side of j away from i sits inside the side of i holding j.
      below[2 * i + std::size_t(*toward_j)].push_back(2 * j + std::size_t(1 - toward_i));
    }
  }
  std::vector<std::size_t> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return size[a] < size[b]; });
  std::vector<std::size_t> length(2 * n, 1);
  std::vector<std::size_t> prev(2 * n, SIZE_MAX);
  for (std::size_t x : order) {
    for (std::size_t y : below[x]) {
      if (length[y] + 1 > length[x] || (length[y] + 1 == length[x] && y < prev[x])) {
        length[x] = length[y] + 1;
        prev[x] = y;
      }
    }
  }
  std::size_t top = 0;
  for (std::size_t x = 1; x < 2 * n; ++x) {
    if (length[x] > length[top]) top = x;
  }
  std::vector<WallId> chain;
  for (std::size_t x = top; x != SIZE_MAX; x = prev[x]) chain.push_back(ids[x / 2]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::size_t QuarterspaceReport::nonempty_count() const {
  return static_cast<std::size_t>(std::count_if(
      quarters.begin(), quarters.end(), [](const Quarterspace& q) { return !q.walls.empty(); }));
}

QuarterspaceReport quarterspace_audit(const WallSet& w, WallId h, WallId v) {
  if (!crosses(w, h, v)) {
    throw Error(ErrorCode::kNotCrossing,
                "walls " + std::to_string(h) + " and " + std::to_string(v) + " do not cross");
  }
  QuarterspaceReport report;
  report.h = h;
  report.v = v;
  std::size_t q = 0;
  for (int sh = 0; sh < 2; ++sh) {
    for (int sv = 0; sv < 2; ++sv, ++q) {
      const VertexSet quarter = w.halfspace(h, sh) & w.halfspace(v, sv);
      auto& out = report.quarters[q];
      out.side_h = sh;
      out.side_v = sv;
      out.vertex_count = quarter.count();
      for (WallId a = 0; a < w.size(); ++a) {
        if (a == h || a == v) continue;
        if (w.carrier(a).is_subset_of(quarter)) out.walls.push_back(a);
      }
    }
  }
  return report;
}

bool strongly_separated(const WallSet& w, WallId h, WallId v) {
  if (crosses(w, h, v)) return false;
  return !w.crossing_row(h).intersects(w.crossing_row(v));
}

std::vector<WallId> all_walls(const WallSet& w) {
  std::vector<WallId> out(w.size());
  std::iota(out.begin(), out.end(), WallId{0});
  return out;
}

}  // namespace cubecomb
