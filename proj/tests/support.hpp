#pragma once

// Shared test fixtures and brute-force oracles. The oracles avoid the
// library's own algorithms and work from BFS distance tables and enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubecomb/document.hpp"
#include "cubecomb/generators.hpp"
#include "cubecomb/median_graph.hpp"

namespace testing {

using cubecomb::Edge;
using cubecomb::MedianGraph;
using cubecomb::Vertex;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline MedianGraph make(const std::string& spec) {
  return cubecomb::generate(cubecomb::parse_generator_spec(spec));
}

// Median fixtures used across suites. Kept small enough for quartic oracles.
inline const std::vector<std::string>& fixture_specs() {
  static const std::vector<std::string> specs{
      "path:9",         "grid:3,3",          "grid:2,2,2",        "grid:4,2",
      "tree:3,3",       "tree:3,4",          "staircase:8",       "staircase:10",
      "cyclic_squares:5", "cyclic_squares:6", "cyclic_squares:7", "cyclic_squares:8",
      "cyclic_squares:9", "path:2*tree:3,2",   "path:1*cyclic_squares:5"};
  return specs;
}

// Plain all-pairs distances by BFS.
inline std::vector<std::vector<int>> all_distances(const MedianGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> queue{s};
    d[s][s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex v = queue[i];
      for (Vertex w : g.neighbors(v)) {
        if (d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return d;
}

// Number of vertices lying on geodesics between each pair of a triple.
inline std::size_t median_count(const std::vector<std::vector<int>>& d, Vertex a, Vertex b, Vertex c) {
  std::size_t count = 0;
  for (Vertex m = 0; m < d.size(); ++m) {
    if (d[a][m] + d[m][b] == d[a][b] && d[b][m] + d[m][c] == d[b][c] && d[a][m] + d[m][c] == d[a][c]) {
      ++count;
    }
  }
  return count;
}

inline bool brute_is_median(const MedianGraph& g) {
  const auto d = all_distances(g);
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b = a; b < g.size(); ++b)
      for (Vertex c = b; c < g.size(); ++c)
        if (median_count(d, a, b, c) != 1) return false;
  return true;
}

// Djokovic-Winkler classes: edges ab, xy related iff
// d(a,x) + d(b,y) != d(a,y) + d(b,x). Transitive on median graphs.
inline std::vector<std::set<std::size_t>> theta_classes(const MedianGraph& g,
                                                        const std::vector<std::vector<int>>& d) {
  const auto& edges = g.edges();
  std::vector<int> cls(edges.size(), -1);
  std::vector<std::set<std::size_t>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = int(out.size());
    out.push_back({i});
    const auto [a, b] = std::pair{edges[i].u, edges[i].v};
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [x, y] = std::pair{edges[j].u, edges[j].v};
      if (d[a][x] + d[b][y] != d[a][y] + d[b][x]) {
        cls[j] = cls[i];
        out.back().insert(j);
      }
    }
  }
  return out;
}

// Side of vertex v with respect to the class containing edge ab: the end it is
// closer to.
inline int theta_side(const std::vector<std::vector<int>>& d, const Edge& e, Vertex v) {
  return d[v][e.u] < d[v][e.v] ? 0 : 1;
}

// Down-sets of a random poset on k elements, joined when they differ in one
// element. Distributive lattices are median graphs, so this is a generator of
// irregular median graphs.
inline MedianGraph random_ideal_lattice(Rng& rng, int k, double density) {
  std::vector<std::uint32_t> below(std::size_t(k), 0);  // transitive
  std::bernoulli_distribution coin(density);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng)) below[std::size_t(j)] |= (1u << i) | below[std::size_t(i)];
    }
  }
  std::vector<std::uint32_t> ideals;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    bool closed = true;
    for (int j = 0; j < k && closed; ++j) {
      if ((s >> j & 1u) && (below[std::size_t(j)] & ~s)) closed = false;
    }
    if (closed) ideals.push_back(s);
  }
  std::map<std::uint32_t, Vertex> index;
  std::vector<std::string> labels;
  for (auto s : ideals) {
    index[s] = Vertex(labels.size());
    std::string label = "{";
    for (int j = 0; j < k; ++j)
      if (s >> j & 1u) label += std::to_string(j) + ",";
    if (label.back() == ',') label.pop_back();
    labels.push_back(label + "}");
  }
  std::vector<Edge> edges;
  for (auto s : ideals) {
    for (int j = 0; j < k; ++j) {
      const std::uint32_t t = s | (1u << j);
      if (t != s && index.count(t)) edges.push_back(Edge{index[s], index[t]});
    }
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

// Random tree on n vertices (each new vertex hangs off a uniform earlier one).
inline MedianGraph random_tree(Rng& rng, int n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    labels.push_back("n" + std::to_string(i));
    if (i > 0) edges.push_back(Edge{Vertex(uniform(rng, 0, i - 1)), Vertex(i)});
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

// Mix of the above, plus products of two random trees.
inline MedianGraph random_median_graph(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return random_tree(rng, uniform(rng, 2, 14));
    case 1: return cubecomb::product_graph(random_tree(rng, uniform(rng, 2, 5)), random_tree(rng, uniform(rng, 2, 5)));
    case 2: return random_ideal_lattice(rng, uniform(rng, 2, 7), 0.35);
    default: {
      const std::vector<std::string> specs = fixture_specs();
      return make(specs[std::size_t(uniform(rng, 0, int(specs.size()) - 1))]);
    }
  }
}

// Every geodesic from x to y, as vertex sequences. Exponential; small inputs only.
inline void all_geodesics(const MedianGraph& g, const std::vector<std::vector<int>>& d, Vertex x, Vertex y,
                          std::vector<Vertex>& prefix, std::vector<std::vector<Vertex>>& out) {
  const Vertex v = prefix.back();
  if (v == y) {
    out.push_back(prefix);
    return;
  }
  for (Vertex w : g.neighbors(v)) {
    if (d[w][y] + 1 == d[v][y]) {
      prefix.push_back(w);
      all_geodesics(g, d, x, y, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace testing
