#include <doctest.h>

#include "cubecomb/dilworth.hpp"
#include "cubecomb/error.hpp"
#include "cubecomb/matching.hpp"
#include "support.hpp"

using namespace cubecomb;

namespace {

std::size_t brute_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t i,
                           std::vector<bool>& used) {
  if (i == adj.size()) return 0;
  std::size_t best = brute_matching(adj, i + 1, used);
  for (auto j : adj[i]) {
    if (used[j]) continue;
    used[j] = true;
    best = std::max(best, 1 + brute_matching(adj, i + 1, used));
    used[j] = false;
  }
  return best;
}

// Random strict order: a random DAG on 0..n-1 (edges upward), transitively closed.
Poset random_poset(testing::Rng& rng, std::size_t n, double p) {
  Poset out;
  out.below.assign(n, NodeMask(n));
  std::bernoulli_distribution coin(p);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (coin(rng)) {
        out.below[j].set(i);
        out.below[j] |= out.below[i];
      }
  return out;
}

std::size_t brute_antichain(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((s >> i & 1u) && (s >> j & 1u) && p.comparable(i, j)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::size_t(__builtin_popcount(s)));
  }
  return best;
}

}  // namespace

TEST_CASE("property: Hopcroft-Karp is maximum and Koenig covers every edge") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto nl = std::size_t(testing::uniform(rng, 0, 8));
    const auto nr = std::size_t(testing::uniform(rng, 1, 8));
    std::vector<std::vector<std::size_t>> adj(nl);
    for (auto& row : adj)
      for (std::size_t j = 0; j < nr; ++j)
        if (testing::uniform(rng, 0, 2) == 0) row.push_back(j);
    const auto m = max_bipartite_matching(adj, nr);
    std::vector<bool> used(nr, false);
    CHECK(m.size == brute_matching(adj, 0, used));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < nl; ++i)
      if (m.left[i] != kUnmatched) {
        ++pairs;
        CHECK(m.right[m.left[i]] == i);
      }
    CHECK(pairs == m.size);
    const auto cover = min_vertex_cover(adj, nr, m);
    std::size_t size = 0;
    for (bool b : cover.left) size += b;
    for (bool b : cover.right) size += b;
    CHECK(size == m.size);
    for (std::size_t i = 0; i < nl; ++i)
      for (auto j : adj[i]) CHECK((cover.left[i] || cover.right[j]));
  }
}

TEST_CASE("property: Dilworth partition size equals the maximum antichain") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = random_poset(rng, std::size_t(testing::uniform(rng, 1, 11)), 0.3);
    const auto chains = dilworth_partition(p);
    const auto anti = antichain_max(p);
    const auto brute = brute_antichain(p);
    CHECK(chains.size() == brute);
    CHECK(anti.size == brute);
    CHECK(anti.witness.size() == brute);
    for (std::size_t i = 0; i < anti.witness.size(); ++i)
      for (std::size_t j = i + 1; j < anti.witness.size(); ++j)
        CHECK_FALSE(p.comparable(anti.witness[i], anti.witness[j]));
    std::vector<int> seen(p.size(), 0);
    for (const auto& c : chains) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        ++seen[c[i]];
        if (i + 1 < c.size()) CHECK(p.less(c[i], c[i + 1]));
      }
    }
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("Ramsey values and facing constants") {
  CHECK(ramsey_bound(3, 3).value == 6);
  CHECK(ramsey_bound(3, 3).exact);
  CHECK(ramsey_bound(4, 3).value == 9);
  CHECK(ramsey_bound(4, 4).value == 18);
  CHECK(ramsey_bound(1, 7).value == 1);
  CHECK(ramsey_bound(2, 7).value == 7);
  const auto big = ramsey_bound(6, 6);
  CHECK_FALSE(big.exact);
  CHECK(big.value >= 102);
  CHECK(facing_constant(2, 2).value == 5);
  CHECK(facing_constant(3, 2).value == 8);
  try {
    ramsey_bound(0, 3);
    FAIL("expected BAD_PARAMS");
  } catch (const cubecomb::Error& e) {
    CHECK(e.code() == ErrorCode::kBadParams);
  }
}

TEST_CASE("orientation policies") {
  const MedianGraph g = testing::make("path:4");
  const WallSet w = compute_walls(g);
  const auto ids = all_walls(w);
  for (const auto& h : orient(g, w, ids, {})) CHECK(h.side == w.side(h.wall, g.vertex("v0")));
  Orientation toward;
  toward.policy = OrientationPolicy::kTowardBasepoint;
  toward.basepoint = g.vertex("v4");
  for (const auto& h : orient(g, w, ids, toward)) CHECK(h.side == w.side(h.wall, g.vertex("v4")));
  Orientation random;
  random.policy = OrientationPolicy::kRandom;
  random.seed = 9;
  CHECK(orient(g, w, ids, random) == orient(g, w, ids, random));
  CHECK(parse_orientation_policy(to_string(OrientationPolicy::kRandom)) == OrientationPolicy::kRandom);
  CHECK_THROWS(parse_orientation_policy("sideways"));
}

TEST_CASE("chain extraction") {
  const MedianGraph st = testing::make("staircase:10");
  const WallSet w = compute_walls(st);
  const auto e = extract_chain(st, w, all_walls(w), 2);
  CHECK(e.wall_count == 20);
  CHECK(e.k.value == 5);
  CHECK(e.guarantee() == 4);
  CHECK(e.chain.size() >= 4);
  CHECK(is_chain(w, e.chain));
  CHECK(e.partition.size() == e.antichain.size());
  const MedianGraph tree = testing::make("tree:3,2");
  const WallSet tw = compute_walls(tree);
  try {
    extract_chain(tree, tw, all_walls(tw), 2);
    FAIL("expected FACING_BOUND_VIOLATED");
  } catch (const cubecomb::Error& err) {
    CHECK(err.code() == ErrorCode::kFacingBoundViolated);
  }
}

TEST_CASE("geodesic crossings and pencils") {
  const MedianGraph g = testing::make("grid:3,3");
  const WallSet w = compute_walls(g);
  const auto c = geodesic_crossing_chain(g, w, all_walls(w));
  CHECK(c.crossed == 6);
  CHECK(g.label(c.path.front()) == "(0,0)");
  CHECK(g.label(c.path.back()) == "(3,3)");
  const auto m = max_geodesic_crossing(w, all_walls(w));
  CHECK(m.crossed == 6);
  const auto p = chain_in_geodesic(g, w, g.vertex("(0,0)"), g.vertex("(3,1)"));
  CHECK(p.separating == 4);
  CHECK(p.bound == 2);
  CHECK(p.chain.size() == 3);
  CHECK_THROWS(chain_in_geodesic(g, w, 0, 0));
}

TEST_CASE("balls and their walls") {
  const MedianGraph g = testing::make("grid:4,4");
  const WallSet w = compute_walls(g);
  const Vertex c = g.vertex("(2,2)");
  CHECK(ball(g, c, 1).count() == 5);
  CHECK(ball(g, c, 2).count() == 13);
  CHECK(hyperplanes_in_ball(g, w, c, 1).size() == 4);
  CHECK(hyperplanes_in_ball(g, w, c, 2).size() == 8);
}

TEST_CASE("restriction quotients") {
  const MedianGraph g = testing::make("grid:2,2");
  const WallSet w = compute_walls(g);
  const WallId v = w.wall_of_edge(g, g.vertex("(0,0)"), g.vertex("(1,0)"));
  const WallId h = w.wall_of_edge(g, g.vertex("(0,0)"), g.vertex("(0,1)"));
  const auto q = restriction_quotient(g, w, {v, h});
  CHECK(q.graph.size() == 4);
  CHECK(q.graph.validated());
  CHECK(q.class_of.size() == g.size());
  const auto one = restriction_quotient(g, w, {v});
  CHECK(one.graph.size() == 2);
  CHECK_THROWS(restriction_quotient(g, w, {}));
}

TEST_CASE("property: restriction quotients are median with one wall per kept wall") {
  testing::Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const MedianGraph g = testing::random_median_graph(rng);
    const WallSet w = compute_walls(g);
    auto ids = all_walls(w);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(std::size_t(testing::uniform(rng, 1, int(ids.size()))));
    std::sort(ids.begin(), ids.end());
    const auto q = restriction_quotient(g, w, ids);
    CHECK(q.graph.validated());
    CHECK(compute_walls(q.graph).size() == ids.size());
  }
}

TEST_CASE("grid embeddings") {
  const MedianGraph g = testing::make("grid:3,3");
  const WallSet w = compute_walls(g);
  const auto r = grid_embedding(g, w, g.vertex("(1,1)"), 2, 2);
  REQUIRE(r.embedding.has_value());
  CHECK(r.embedding->isometric);
  CHECK(r.embedding->dimension_l == 2);
  CHECK(r.chains_within_k());
  const MedianGraph t = testing::make("tree:3,3");
  const auto f = grid_embedding(t, compute_walls(t), 0, 1, 2);
  CHECK(f.facing_tuple.has_value());
  CHECK_FALSE(f.embedding.has_value());
}
