#include "cubecomb/dilworth.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cubecomb/convexity.hpp"
#include "cubecomb/error.hpp"
#include "cubecomb/matching.hpp"

namespace cubecomb {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (out > UINT64_MAX / num) return UINT64_MAX;
    out = out * num / i;
  }
  return out;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

std::vector<std::vector<std::size_t>> upward_lists(const Poset& p) {
  std::vector<std::vector<std::size_t>> adj(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (auto i = p.below[j].find_first(); i != NodeMask::npos; i = p.below[j].find_next(i)) {
      adj[i].push_back(j);
    }
  }
  return adj;
}

std::size_t longest_index(const std::vector<std::vector<std::size_t>>& chains) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < chains.size(); ++c) {
    if (chains[c].size() > chains[best].size()) best = c;
  }
  return best;
}

}  // namespace

RamseyValue ramsey_bound(int s, int t) {
  if (s < 1 || t < 1) throw Error(ErrorCode::kBadParams, "Ramsey arguments must be at least 1");
  if (s > t) std::swap(s, t);
  if (s == 1) return {1, true};
  if (s == 2) return {std::uint64_t(t), true};
  static const std::map<std::pair<int, int>, std::uint64_t> known{
      {{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23},
      {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25},
  };
  if (const auto it = known.find({s, t}); it != known.end()) return {it->second, true};
  return {binomial(std::uint64_t(s + t - 2), std::uint64_t(s - 1)), false};
}

RamseyValue facing_constant(int dimension, int facing) {
  if (dimension < 1 || facing < 1) throw Error(ErrorCode::kBadParams, "K(D,N) needs D, N >= 1");
  auto r = ramsey_bound(dimension + 1, facing + 1);
  r.value -= 1;
  return r;
}

std::vector<std::vector<std::size_t>> dilworth_partition(const Poset& p) {
  const auto adj = upward_lists(p);
  const auto m = max_bipartite_matching(adj, p.size());
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (m.right[i] != kUnmatched) continue;  // has a predecessor
    std::vector<std::size_t> chain;
    for (std::size_t v = i; v != kUnmatched; v = m.left[v]) chain.push_back(v);
    chains.push_back(std::move(chain));
  }
  return chains;
}

Antichain antichain_max(const Poset& p) {
  const auto adj = upward_lists(p);
  const auto m = max_bipartite_matching(adj, p.size());
  const auto cover = min_vertex_cover(adj, p.size(), m);
  Antichain out;
  out.size = p.size() - m.size;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!cover.left[i] && !cover.right[i]) out.witness.push_back(i);
  }
  if (out.witness.size() != out.size) {
    throw Error(ErrorCode::kInternal, "antichain witness does not match the chain cover");
  }
  return out;
}

HalfspacePoset make_halfspace_poset(const WallSet& w, std::vector<Halfspace> elements) {
  HalfspacePoset out;
  const std::size_t n = elements.size();
  std::vector<VertexSet> sets;
  sets.reserve(n);
  for (const auto& hs : elements) sets.push_back(w.halfspace(hs));
  out.order.below.assign(n, NodeMask(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && sets[i].is_proper_subset_of(sets[j])) out.order.below[j].set(i);
    }
  }
  out.elements = std::move(elements);
  return out;
}

std::string to_string(OrientationPolicy p) {
  switch (p) {
    case OrientationPolicy::kLexLeast: return "lex-least";
    case OrientationPolicy::kTowardBasepoint: return "basepoint";
    case OrientationPolicy::kRandom: return "random";
  }
  return "lex-least";
}

OrientationPolicy parse_orientation_policy(const std::string& name) {
  if (name == "lex-least") return OrientationPolicy::kLexLeast;
  if (name == "basepoint") return OrientationPolicy::kTowardBasepoint;
  if (name == "random") return OrientationPolicy::kRandom;
  throw Error(ErrorCode::kBadParams, "unknown orientation policy '" + name + "'");
}

std::vector<Halfspace> orient(const MedianGraph& g, const WallSet& w,
                              const std::vector<WallId>& walls, const Orientation& o) {
  std::vector<Halfspace> out;
  out.reserve(walls.size());
  switch (o.policy) {
    case OrientationPolicy::kLexLeast: {
      const auto& labels = g.labels();
      const auto least = Vertex(std::min_element(labels.begin(), labels.end()) - labels.begin());
      for (WallId h : walls) out.push_back(Halfspace{h, w.side(h, least)});
      break;
    }
    case OrientationPolicy::kTowardBasepoint:
      g.check_vertex(o.basepoint);
      for (WallId h : walls) out.push_back(Halfspace{h, w.side(h, o.basepoint)});
      break;
    case OrientationPolicy::kRandom: {
      std::mt19937_64 rng(o.seed);
      for (WallId h : walls) out.push_back(Halfspace{h, int(rng() & 1u)});
      break;
    }
  }
  return out;
}

std::uint64_t ChainExtraction::guarantee() const { return ceil_div(wall_count, k.value); }

ChainExtraction extract_chain(const MedianGraph& g, const WallSet& w,
                              const std::vector<WallId>& walls, int facing_bound,
                              const Orientation& o) {
  if (facing_bound < 1) throw Error(ErrorCode::kBadParams, "facing bound N must be at least 1");
  for (WallId h : walls) w.check_wall(h);
  ChainExtraction out;
  out.wall_count = walls.size();
  out.facing_bound = facing_bound;
  out.dimension = std::max<std::size_t>(1, dimension(w));
  out.k = facing_constant(int(out.dimension), facing_bound);

  const auto facing = max_facing_tuple(w, walls, std::size_t(facing_bound) + 1);
  out.facing_found = facing.tuple.size();
  out.facing_certified = facing.certified;
  if (facing.tuple.size() > std::size_t(facing_bound)) {
    std::string ids;
    for (const auto& hs : facing.tuple) ids += (ids.empty() ? "" : ",") + std::to_string(hs.wall);
    throw Error(ErrorCode::kFacingBoundViolated,
                "facing " + std::to_string(facing.tuple.size()) + "-tuple {" + ids +
                    "} exceeds N=" + std::to_string(facing_bound));
  }
  if (walls.empty()) return out;

  const auto poset = make_halfspace_poset(w, orient(g, w, walls, o));
  const auto chains = dilworth_partition(poset.order);
  for (const auto& chain : chains) {
    std::vector<WallId> ids;
    for (auto i : chain) ids.push_back(poset.elements[i].wall);
    out.partition.push_back(std::move(ids));
  }
  const auto best = longest_index(chains);
  for (auto i : chains[best]) {
    out.chain.push_back(poset.elements[i].wall);
    out.halfspaces.push_back(poset.elements[i]);
  }
  for (auto i : antichain_max(poset.order).witness) out.antichain.push_back(poset.elements[i].wall);
  return out;
}

GeodesicCrossing geodesic_crossing_chain(const MedianGraph& g, const WallSet& w,
                                         const std::vector<WallId>& walls, const Orientation& o) {
  if (walls.empty()) throw Error(ErrorCode::kBadParams, "geodesic search needs at least one wall");
  GeodesicCrossing out;
  out.extraction = extract_chain(g, w, walls, 2, o);
  const VertexSet start = w.halfspace(out.extraction.halfspaces.front());
  const VertexSet finish = ~w.halfspace(out.extraction.halfspaces.back());
  WallMask mask = w.empty_mask();
  for (WallId h : walls) mask.set(h);

  Vertex bx = 0, by = 0;
  bool have = false;
  for (auto x = start.find_first(); x != VertexSet::npos; x = start.find_next(x)) {
    for (auto y = finish.find_first(); y != VertexSet::npos; y = finish.find_next(y)) {
      const std::size_t c = ((w.signature(Vertex(x)) ^ w.signature(Vertex(y))) & mask).count();
      if (!have || c > out.crossed) {
        have = true;
        out.crossed = c;
        bx = Vertex(x);
        by = Vertex(y);
      }
    }
  }
  out.path = shortest_path(g, bx, by);
  return out;
}

MaxCrossing max_geodesic_crossing(const WallSet& w, const std::vector<WallId>& walls) {
  WallMask mask = w.empty_mask();
  for (WallId h : walls) {
    w.check_wall(h);
    mask.set(h);
  }
  MaxCrossing out;
  const auto n = Vertex(w.vertex_count());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const std::size_t c = ((w.signature(x) ^ w.signature(y)) & mask).count();
      if (c > out.crossed) out = MaxCrossing{c, x, y};
    }
  }
  return out;
}

GeodesicChain chain_in_geodesic(const MedianGraph& g, const WallSet& w, Vertex x, Vertex y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw Error(ErrorCode::kBadParams, "chain_in_geodesic needs distinct endpoints");
  GeodesicChain out;
  const auto walls = separating_set(w, x, y);
  out.separating = walls.size();
  out.dimension = std::max<std::size_t>(1, dimension(w));
  out.bound = std::size_t(ceil_div(out.separating, out.dimension));
  Orientation toward_x{OrientationPolicy::kTowardBasepoint, x, 0};
  const auto poset = make_halfspace_poset(w, orient(g, w, walls, toward_x));
  const auto chains = dilworth_partition(poset.order);
  for (auto i : chains[longest_index(chains)]) out.chain.push_back(poset.elements[i].wall);
  return out;
}

VertexSet ball(const MedianGraph& g, Vertex x0, std::uint32_t radius) {
  g.check_vertex(x0);
  const auto d = bfs_distances(g, x0);
  VertexSet out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    if (d[v] <= radius) out.set(v);
  }
  return out;
}

std::vector<WallId> hyperplanes_in_ball(const MedianGraph& g, const WallSet& w, Vertex x0,
                                        std::uint32_t radius) {
  const WallMask crossing = walls_crossing(w, ball(g, x0, radius));
  std::vector<WallId> out;
  for (auto h = crossing.find_first(); h != WallMask::npos; h = crossing.find_next(h)) {
    out.push_back(WallId(h));
  }
  return out;
}

RestrictionQuotient restriction_quotient(const MedianGraph& g, const WallSet& w,
                                         const std::vector<WallId>& subset) {
  if (subset.empty()) throw Error(ErrorCode::kBadParams, "restriction quotient needs walls");
  RestrictionQuotient out;
  WallMask mask = w.empty_mask();
  for (WallId h : subset) {
    w.check_wall(h);
    mask.set(h);
  }
  for (auto h = mask.find_first(); h != WallMask::npos; h = mask.find_next(h)) {
    out.walls.push_back(WallId(h));
  }

  std::map<WallMask, Vertex> class_index;
  std::vector<WallMask> keys;
  std::vector<std::string> labels;
  out.class_of.resize(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const WallMask key = w.signature(v) & mask;
    const auto [it, fresh] = class_index.emplace(key, Vertex(keys.size()));
    if (fresh) {
      keys.push_back(key);
      labels.push_back(g.label(v));
    }
    out.class_of[v] = it->second;
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < keys.size(); ++a) {
    for (Vertex b = a + 1; b < keys.size(); ++b) {
      if ((keys[a] ^ keys[b]).count() == 1) edges.push_back(Edge{a, b});
    }
  }
  out.graph = MedianGraph::from_indices(std::move(labels), std::move(edges));
  const auto report = verify_median(out.graph);
  if (!report.pass) throw Error(ErrorCode::kInternal, "restriction quotient is not median");
  return out;
}

bool EmbeddingResult::chains_within_k() const {
  return embedding && embedding->dimension_l <= k.value;
}

bool EmbeddingResult::walls_within_bound() const {
  return ball_walls.size() <= 2 * std::uint64_t(radius) * k.value;
}

EmbeddingResult grid_embedding(const MedianGraph& g, const WallSet& w, Vertex x0,
                               std::uint32_t radius, int facing_bound, const Orientation& o) {
  if (facing_bound < 1) throw Error(ErrorCode::kBadParams, "facing bound N must be at least 1");
  EmbeddingResult out;
  out.basepoint = x0;
  out.radius = radius;
  out.facing_bound = facing_bound;
  const VertexSet domain = ball(g, x0, radius);
  out.ball_walls = hyperplanes_in_ball(g, w, x0, radius);
  out.dimension = std::max<std::size_t>(1, dimension(w));
  out.k = facing_constant(int(out.dimension), facing_bound);

  const auto facing = max_facing_tuple(w, out.ball_walls, std::size_t(facing_bound) + 1);
  out.facing_certified = facing.certified;
  if (facing.tuple.size() > std::size_t(facing_bound)) {
    out.facing_tuple = std::vector<Halfspace>(facing.tuple.begin(),
                                              facing.tuple.begin() + facing_bound + 1);
    return out;
  }

  GridEmbedding emb;
  const auto poset = make_halfspace_poset(w, orient(g, w, out.ball_walls, o));
  const auto chains = dilworth_partition(poset.order);
  emb.dimension_l = chains.size();
  for (const auto& chain : chains) {
    std::vector<WallId> ids;
    for (auto i : chain) ids.push_back(poset.elements[i].wall);
    emb.chains.push_back(std::move(ids));
  }
  // Height of v in a chain: how many of its halfspaces miss v.
  auto heights = [&](Vertex v) {
    std::vector<int> h(chains.size(), 0);
    for (std::size_t c = 0; c < chains.size(); ++c) {
      for (auto i : chains[c]) {
        const auto& hs = poset.elements[i];
        if (w.side(hs.wall, v) != hs.side) ++h[c];
      }
    }
    return h;
  };
  const auto base = heights(x0);
  emb.domain = members(domain);
  for (Vertex v : emb.domain) {
    auto h = heights(v);
    for (std::size_t c = 0; c < h.size(); ++c) h[c] -= base[c];
    emb.coordinates.push_back(std::move(h));
  }
  for (std::size_t a = 0; a < emb.domain.size(); ++a) {
    for (std::size_t b = a + 1; b < emb.domain.size(); ++b) {
      std::uint32_t l1 = 0;
      for (std::size_t c = 0; c < chains.size(); ++c) {
        l1 += std::uint32_t(std::abs(emb.coordinates[a][c] - emb.coordinates[b][c]));
      }
      if (l1 != w.distance(emb.domain[a], emb.domain[b])) {
        throw Error(ErrorCode::kEmbeddingVerificationFailed,
                    "l1 distance " + std::to_string(l1) + " differs from graph distance between '" +
                        g.label(emb.domain[a]) + "' and '" + g.label(emb.domain[b]) + "'");
      }
    }
  }
  emb.isometric = true;
  out.embedding = std::move(emb);
  return out;
}

}  // namespace cubecomb
