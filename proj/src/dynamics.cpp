#include "cubecomb/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cubecomb/clique.hpp"
#include "cubecomb/convexity.hpp"
#include "cubecomb/error.hpp"

namespace cubecomb {

namespace {

void require_nmax(int nmax) {
  if (nmax < 1) throw Error(ErrorCode::kBadParams, "nmax must be at least 1");
}

[[noreturn]] void too_small(const Window& win, const std::string& what) {
  throw Error(ErrorCode::kWindowTooSmall,
              what + " leaves the window of radius " + std::to_string(win.radius()));
}

WallId orbit_wall(const Window& win, const Automorphism& g, WallId h, int power) {
  const auto image = win.wall_image(g, h, power);
  if (!image) too_small(win, "g^" + std::to_string(power) + " of wall " + std::to_string(h));
  return *image;
}

std::vector<std::uint32_t> bfs_from_set(const MedianGraph& g, const VertexSet& sources) {
  std::vector<std::uint32_t> dist(g.size(), kUnreachable);
  std::deque<Vertex> queue;
  for (auto v = sources.find_first(); v != VertexSet::npos; v = sources.find_next(v)) {
    dist[v] = 0;
    queue.push_back(Vertex(v));
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::uint32_t graph_diameter(const MedianGraph& g) {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto d = bfs_distances(g, v);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

// Maximal cliques of a small graph, Bron-Kerbosch with pivoting.
void maximal_cliques(const std::vector<NodeMask>& adj, NodeMask r, NodeMask p, NodeMask x,
                     std::vector<NodeMask>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  const NodeMask px = p | x;
  const auto pivot = px.find_first();
  NodeMask todo = p & ~adj[pivot];
  for (auto v = todo.find_first(); v != NodeMask::npos; v = todo.find_next(v)) {
    NodeMask r2 = r;
    r2.set(v);
    maximal_cliques(adj, r2, p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  }
}

// Diameter of the graph of maximal cubes (adjacent when they share a vertex).
std::pair<std::size_t, std::uint32_t> cell_diameter(const MedianGraph& h) {
  const WallSet w = compute_walls(h);
  std::set<VertexSet> cubes;
  for (Vertex v = 0; v < h.size(); ++v) {
    const auto nbrs = h.neighbors(v);
    const std::size_t k = nbrs.size();
    // Link of v: two neighbours are joined when they span a square with v.
    std::vector<NodeMask> link(k, NodeMask(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (Vertex c : h.neighbors(nbrs[i])) {
          if (c != v && h.adjacent(c, nbrs[j])) {
            link[i].set(j);
            link[j].set(i);
            break;
          }
        }
      }
    }
    std::vector<NodeMask> cliques;
    NodeMask all(k);
    all.set();
    maximal_cliques(link, NodeMask(k), all, NodeMask(k), cliques);
    for (const auto& clique : cliques) {
      WallMask span = w.empty_mask();
      for (auto i = clique.find_first(); i != NodeMask::npos; i = clique.find_next(i)) {
        span.set(w.wall_of_edge(h, v, nbrs[i]));
      }
      VertexSet cube(h.size());
      for (Vertex u = 0; u < h.size(); ++u) {
        if ((w.signature(u) ^ w.signature(v)).is_subset_of(span)) cube.set(u);
      }
      cubes.insert(cube);
    }
  }
  const std::vector<VertexSet> list(cubes.begin(), cubes.end());
  std::uint32_t best = 0;
  for (std::size_t s = 0; s < list.size(); ++s) {
    std::vector<std::uint32_t> dist(list.size(), kUnreachable);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const auto a = queue.front();
      queue.pop_front();
      best = std::max(best, dist[a]);
      for (std::size_t b = 0; b < list.size(); ++b) {
        if (dist[b] == kUnreachable && list[a].intersects(list[b])) {
          dist[b] = dist[a] + 1;
          queue.push_back(b);
        }
      }
    }
  }
  return {list.size(), best};
}

// Wall of `win` whose dual edge has these labels, if present.
std::optional<WallId> wall_by_edge(const Window& win, const std::string& a, const std::string& b) {
  const auto u = win.find(a);
  const auto v = win.find(b);
  if (!u || !v || !win.graph().adjacent(*u, *v)) return std::nullopt;
  return win.walls().wall_of_edge(win.graph(), *u, *v);
}

}  // namespace

std::string edge_name(const MedianGraph& g, const Edge& e) {
  return g.label(e.u) + "~" + g.label(e.v);
}

SlopeReport translation_slope(const Window& win, const Automorphism& g, int nmax) {
  require_nmax(nmax);
  SlopeReport out;
  out.radius = win.radius();
  const Vertex x0 = win.basepoint();
  for (int n = 1; n <= nmax; ++n) {
    const auto y = win.vertex_image(g, x0, n);
    if (!y) too_small(win, "g^" + std::to_string(n) + " x0");
    out.distances.push_back(win.walls().distance(x0, *y));
    out.slopes.push_back(double(out.distances.back()) / n);
  }
  return out;
}

SlopeReport translation_slope(const LazyComplex& x, const Automorphism& g, int nmax) {
  require_nmax(nmax);
  for (std::uint32_t r = std::uint32_t(nmax); r <= 16u * std::uint32_t(nmax); r *= 2) {
    const Window win(x, r);
    try {
      return translation_slope(win, g, nmax);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kWindowTooSmall) throw;
    }
  }
  throw Error(ErrorCode::kWindowTooSmall,
              "orbit segment does not fit in windows up to radius " + std::to_string(16 * nmax));
}

StabilizedSearch stabilized_wall_search(const Window& win, const Automorphism& g, int nmax) {
  require_nmax(nmax);
  StabilizedSearch out;
  for (WallId h = 0; h < win.walls().size(); ++h) {
    for (int p = 1; p <= nmax; ++p) {
      const auto image = win.wall_image(g, h, p);
      if (!image) continue;
      ++out.decided;
      if (*image == h) {
        out.found = StabilizedWall{h, p};
        return out;
      }
    }
  }
  if (out.decided == 0) too_small(win, "every wall image");
  return out;
}

WallId default_wall(const Window& win) {
  return project_vertex(win.graph(), win.walls(), win.basepoint()).front();
}

std::vector<std::uint32_t> contact_orbit_growth(const Window& win, const Automorphism& g,
                                                WallId h, int nmax) {
  require_nmax(nmax);
  win.walls().check_wall(h);
  const auto dist = win.contact().distances_from(h);
  std::vector<std::uint32_t> out;
  for (int n = 0; n <= nmax; ++n) out.push_back(dist[orbit_wall(win, g, h, n)]);
  return out;
}

std::uint32_t wall_gate_distance(const Window& win, WallId h, Vertex x, Vertex y) {
  const auto carrier = carrier_subcomplex(win.walls(), h);
  const Vertex gx = gate(win.walls(), carrier, x);
  const Vertex gy = gate(win.walls(), carrier, y);
  const auto d = win.walls().distance(gx, gy);
  return separates(win.walls(), h, gx, gy) ? d - 1 : d;
}

ProjectionBound projection_bound(const Window& win, const Automorphism& g, Vertex x, int nmax) {
  require_nmax(nmax);
  win.graph().check_vertex(x);
  ProjectionBound out;
  for (int n = 1; n <= nmax; ++n) {
    const auto y = win.vertex_image(g, x, n);
    if (!y) too_small(win, "g^" + std::to_string(n) + " x");
    std::uint32_t best = 0;
    WallId arg = 0;
    for (WallId h = 0; h < win.walls().size(); ++h) {
      const auto d = wall_gate_distance(win, h, x, *y);
      if (d > best) {
        best = d;
        arg = h;
      }
    }
    out.per_step.push_back(best);
    out.argmax.push_back(arg);
    out.max = std::max(out.max, best);
  }
  return out;
}

SkeweringReport skewering_check(const Window& win, const Automorphism& g, WallId h) {
  const WallSet& w = win.walls();
  w.check_wall(h);
  SkeweringReport out;
  out.wall = h;
  // A dual edge of h whose image is inside tells us g h and how g acts on sides.
  std::optional<Edge> edge;
  for (const auto& e : w.wall(h).edges) {
    const auto a = win.vertex_image(g, e.u, 1);
    const auto b = win.vertex_image(g, e.v, 1);
    if (a && b && win.graph().adjacent(*a, *b)) {
      edge = e;
      out.image = w.wall_of_edge(win.graph(), *a, *b);
      break;
    }
  }
  if (!edge) too_small(win, "g of wall " + std::to_string(h));
  const WallId gh = *out.image;
  if (gh == h) {
    out.reason = "g stabilizes the wall";
    return out;
  }
  if (w.cross(h, gh)) {
    out.reason = "g h crosses h";
    return out;
  }
  out.side = *w.side_of_wall(h, gh);
  const Vertex inside = w.side(h, edge->u) == out.side ? edge->u : edge->v;
  out.image_side = w.side(gh, *win.vertex_image(g, inside, 1));
  const VertexSet half = w.halfspace(h, out.side);
  const VertexSet image = w.halfspace(gh, out.image_side);
  if (!image.is_subset_of(half)) {
    out.reason = "g maps the halfspace toward g h outside itself";
    return out;
  }
  const VertexSet rest = half - image;
  if (rest.none()) {
    out.reason = "containment is not strict inside the window";
    return out;
  }
  out.strict_witness = win.graph().label(Vertex(rest.find_first()));
  out.skewers = true;
  out.reason = "g maps the halfspace toward g h strictly into itself";
  return out;
}

std::uint32_t orbit_contact_diameter(const Window& win, const Automorphism& g, WallId h,
                                     int nmax) {
  require_nmax(nmax);
  std::vector<WallId> orbit;
  for (int i = -nmax; i <= nmax; ++i) orbit.push_back(orbit_wall(win, g, h, i));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  std::uint32_t best = 0;
  for (WallId a : orbit) {
    const auto dist = win.contact().distances_from(a);
    for (WallId b : orbit) best = std::max(best, dist[b]);
  }
  return best;
}

std::array<std::uint32_t, 2> halfspace_depths(const Window& win, WallId h) {
  std::array<std::uint32_t, 2> out{0, 0};
  for (int s = 0; s < 2; ++s) {
    const VertexSet side = win.walls().halfspace(h, s);
    const auto dist = bfs_from_set(win.graph(), win.walls().halfspace(h, 1 - s));
    for (auto v = side.find_first(); v != VertexSet::npos; v = side.find_next(v)) {
      out[std::size_t(s)] = std::max(out[std::size_t(s)], dist[v]);
    }
  }
  return out;
}

EssentialityProfile essentiality_profile(const LazyComplex& x, std::vector<std::uint32_t> radii) {
  if (radii.empty()) throw Error(ErrorCode::kBadParams, "essentiality profile needs radii");
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  EssentialityProfile out;
  out.radii = radii;
  std::vector<std::pair<std::string, std::string>> tracked;
  {
    const Window smallest(x, radii.front());
    for (const auto& wall : smallest.walls().walls()) {
      const Edge e = wall.edges.front();
      tracked.emplace_back(smallest.graph().label(e.u), smallest.graph().label(e.v));
      out.rows.push_back(DepthRow{edge_name(smallest.graph(), e), {}});
    }
  }
  for (std::uint32_t r : radii) {
    const Window win(x, r);
    std::uint32_t least = kUnreachable;
    for (std::size_t i = 0; i < tracked.size(); ++i) {
      const auto h = wall_by_edge(win, tracked[i].first, tracked[i].second);
      if (!h) throw Error(ErrorCode::kInternal, "window of radius " + std::to_string(r) +
                                                    " lost edge " + out.rows[i].edge);
      const auto d = halfspace_depths(win, *h);
      out.rows[i].depths.push_back(d);
      least = std::min({least, d[0], d[1]});
    }
    out.min_depth.push_back(tracked.empty() ? 0 : least);
  }
  return out;
}

std::vector<WallShape> hyperplane_essentiality_profile(const Window& win) {
  const MedianGraph& g = win.graph();
  const WallSet& w = win.walls();
  std::vector<WallShape> out;
  for (const auto& wall : w.walls()) {
    WallShape shape;
    shape.wall = wall.id;
    shape.edge = edge_name(g, wall.edges.front());
    shape.dual_edges = wall.edges.size();
    // Orient every dual edge as (side 0 end, side 1 end).
    std::vector<std::pair<Vertex, Vertex>> ends;
    std::vector<std::string> labels;
    for (const auto& e : wall.edges) {
      ends.push_back(w.side(wall.id, e.u) == 0 ? std::pair{e.u, e.v} : std::pair{e.v, e.u});
      labels.push_back(edge_name(g, e));
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < ends.size(); ++i) {
      for (Vertex j = i + 1; j < ends.size(); ++j) {
        if (g.adjacent(ends[i].first, ends[j].first) && g.adjacent(ends[i].second, ends[j].second)) {
          edges.push_back(Edge{i, j});
        }
      }
    }
    const auto h = MedianGraph::from_indices(std::move(labels), std::move(edges));
    shape.edge_class_diameter = graph_diameter(h);
    std::tie(shape.cells, shape.diameter) = cell_diameter(h);
    out.push_back(std::move(shape));
  }
  return out;
}

std::vector<GrowthRow> growth_profile(const LazyComplex& x, const std::vector<std::uint32_t>& radii) {
  std::vector<GrowthRow> out;
  for (std::uint32_t r : radii) {
    const Window win(x, r);
    GrowthRow row;
    row.radius = r;
    row.volume = win.ball().count();
    const WallMask crossing = walls_crossing(win.walls(), win.ball());
    std::vector<WallId> hr;
    for (auto h = crossing.find_first(); h != WallMask::npos; h = crossing.find_next(h)) {
      hr.push_back(WallId(h));
    }
    row.wall_volume = hr.size();
    const auto facing = max_facing_tuple(win.walls(), hr);
    row.facing = facing.tuple.size();
    row.facing_certified = facing.certified;
    out.push_back(row);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kLoxodromicConsistent: return "LOXODROMIC-CONSISTENT";
    case Verdict::kStabilizedWall: return "STABILIZED-WALL";
    case Verdict::kBoundedOrbit: return "BOUNDED-ORBIT";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Classification classify(const LazyComplex& x, const Automorphism& g, int nmax,
                        std::uint32_t radius) {
  require_nmax(nmax);
  Classification out;
  out.complex = x.name();
  out.automorphism = g.name;
  out.nmax = nmax;
  out.radius = radius;
  const Window win(x, radius);
  out.window_vertices = win.graph().size();
  out.window_walls = win.walls().size();
  out.slope = translation_slope(win, g, nmax);
  out.stabilized = stabilized_wall_search(win, g, nmax);
  out.wall = default_wall(win);
  out.wall_edge = edge_name(win.graph(), win.walls().wall(out.wall).edges.front());
  out.contact_growth = contact_orbit_growth(win, g, out.wall, nmax);
  if (radius >= 2) {
    try {
      const Window half(x, radius / 2);
      const Edge e = win.walls().wall(out.wall).edges.front();
      if (const auto h = wall_by_edge(half, win.graph().label(e.u), win.graph().label(e.v))) {
        out.contact_growth_half = contact_orbit_growth(half, g, *h, nmax);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kWindowTooSmall) throw;
    }
  }
  out.orbit_diameter = orbit_contact_diameter(win, g, out.wall, nmax);
  out.projection = projection_bound(win, g, win.basepoint(), nmax);
  out.skewering = skewering_check(win, g, out.wall);

  double min_rate = 1e300;
  for (int n = 1; n <= nmax; ++n) {
    min_rate = std::min(min_rate, double(out.contact_growth[std::size_t(n)]) / n);
  }
  const auto half_steps = std::size_t(std::max(1, nmax / 2));
  const auto early = *std::max_element(out.projection.per_step.begin(),
                                       out.projection.per_step.begin() + long(half_steps));
  if (out.stabilized.found) {
    out.verdict = Verdict::kStabilizedWall;
    out.rationale = "g^" + std::to_string(out.stabilized.found->period) + " fixes wall " +
                    std::to_string(out.stabilized.found->wall);
  } else if (out.orbit_diameter <= 3) {
    out.verdict = Verdict::kBoundedOrbit;
    out.rationale = "orbit of wall " + std::to_string(out.wall) + " has contact diameter " +
                    std::to_string(out.orbit_diameter);
  } else if (min_rate > 0 && early == out.projection.max) {
    out.verdict = Verdict::kLoxodromicConsistent;
    out.rationale = "contact distance grows at rate >= " + std::to_string(min_rate) +
                    " and gate displacement stays at " + std::to_string(out.projection.max);
  } else {
    out.verdict = Verdict::kInconclusive;
    out.rationale = "no criterion matched within the window";
  }
  return out;
}

}  // namespace cubecomb
