#include <doctest.h>

#include "cubecomb/document.hpp"
#include "cubecomb/error.hpp"
#include "cubecomb/generators.hpp"
#include "cubecomb/median_graph.hpp"
#include "support.hpp"

using namespace cubecomb;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const cubecomb::Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("construction rejects malformed graphs") {
  using P = std::vector<std::pair<std::string, std::string>>;
  CHECK(code_of([] { MedianGraph({"a", "a"}, P{}); }) == ErrorCode::kDuplicateVertex);
  CHECK(code_of([] { MedianGraph({"a", "b"}, P{{"a", "b"}, {"b", "a"}}); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([] { MedianGraph({"a"}, P{{"a", "a"}}); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([] { MedianGraph({"a", "b"}, P{{"a", "c"}}); }) == ErrorCode::kDanglingEdge);
  CHECK(code_of([] { MedianGraph({"a", "b"}, P{}); }) == ErrorCode::kDisconnected);
  const MedianGraph g({"a", "b"}, P{{"a", "b"}});
  CHECK(code_of([&] { g.vertex("zz"); }) == ErrorCode::kUnknownVertex);
  CHECK(to_string(ErrorCode::kDanglingEdge) == "DANGLING_EDGE");
}

TEST_CASE("median of a triple in a grid is the coordinatewise median") {
  const MedianGraph g = testing::make("grid:3,3");
  CHECK(g.label(median(g, g.vertex("(0,0)"), g.vertex("(3,1)"), g.vertex("(1,3)"))) == "(1,1)");
  CHECK(interval(g, g.vertex("(0,0)"), g.vertex("(1,1)")).count() == 4);
  const auto p = shortest_path(g, g.vertex("(0,0)"), g.vertex("(2,2)"));
  CHECK(p.size() == 5);
  MedianGraph c6 = testing::make("cycle:6");
  CHECK(code_of([&] { median(c6, 0, 2, 4); }) == ErrorCode::kNotMedianGraph);
}

TEST_CASE("known median and non-median fixtures") {
  for (const auto& spec : testing::fixture_specs()) {
    MedianGraph g = testing::make(spec);
    CAPTURE(spec);
    CHECK(verify_median(g).pass);
    CHECK(g.validated());
  }
  for (const char* spec : {"cycle:6", "complete:4", "cycle:5", "complete:3"}) {
    MedianGraph g = testing::make(spec);
    CAPTURE(spec);
    const auto r = verify_median(g);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.has_value());
    CHECK_FALSE(g.validated());
  }
}

TEST_CASE("property: brute force, local criterion and oracle agree") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    // Median graphs, and random edge additions or deletions that usually break them.
    MedianGraph g = testing::random_median_graph(rng);
    if (g.size() > 90) continue;
    if (trial % 2 == 1 && g.size() >= 4) {
      std::vector<Edge> edges = g.edges();
      const auto a = Vertex(testing::uniform(rng, 0, int(g.size()) - 1));
      const auto b = Vertex(testing::uniform(rng, 0, int(g.size()) - 1));
      if (a != b && !g.adjacent(a, b)) edges.push_back(make_edge(a, b));
      g = MedianGraph::from_indices(g.labels(), edges);
    }
    const bool oracle = testing::brute_is_median(g);
    const auto brute = check_median_brute_force(g);
    const auto local = check_median_local(g);
    CAPTURE(trial);
    CHECK(brute.pass == oracle);
    CHECK(local.pass == oracle);
    if (!oracle) {
      REQUIRE(brute.witness.has_value());
      const auto d = testing::all_distances(g);
      const auto& w = *brute.witness;
      CHECK(testing::median_count(d, w[0], w[1], w[2]) != 1);
    }
  }
}

TEST_CASE("large grids go through the local criterion") {
  MedianGraph g = testing::make("grid:9,9,9");
  const auto r = check_median(g);
  CHECK(r.pass);
  CHECK(r.method != "brute-force");
}

TEST_CASE("documents: explicit and generator forms") {
  const auto doc = parse_document_text(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
  const MedianGraph g = load_graph(doc);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);
  const auto gen = parse_document_text(R"({"generator":{"name":"grid","params":[2,3]}})");
  CHECK(load_graph(gen).size() == 12);
  CHECK(code_of([] { parse_document_text(R"({"vertices":[],"edges":[],"extra":1})"); }) == ErrorCode::kSchema);
  CHECK(code_of([] { parse_document_text("[1,2]"); }) == ErrorCode::kSchema);
  CHECK(code_of([] { parse_document_text("{not json"); }) == ErrorCode::kSchema);
  // Digest: stable, and sensitive to content.
  CHECK(document_digest(doc) == document_digest(parse_document(to_json(doc))));
  CHECK(document_digest(doc) != document_digest(gen));
  CHECK(document_digest(doc).rfind("fnv1a64:", 0) == 0);
  CHECK(document_digest(doc).size() == 8 + 16);
}

TEST_CASE("generator specs round trip") {
  for (const char* text : {"grid:3,3", "path:5", "tree:3,2", "path:2*tree:3,1", "staircase"}) {
    CHECK(to_string(parse_generator_spec(text)) == text);
  }
  CHECK(parse_generator_spec("path:2*tree:3,1").factors.size() == 2);
  CHECK(code_of([] { generate(parse_generator_spec("nosuch:3")); }) == ErrorCode::kBadParams);
  CHECK(code_of([] { generate(parse_generator_spec("grid:-1")); }) == ErrorCode::kBadParams);
}

TEST_CASE("generator sizes") {
  CHECK(testing::make("path:9").size() == 10);
  CHECK(testing::make("grid:4,4,4").size() == 125);
  CHECK(testing::make("tree:3,4").size() == 1 + 3 + 6 + 12 + 24);
  CHECK(testing::make("staircase:8").size() == 25);
  CHECK(testing::make("cyclic_squares:5").size() == 11);
  CHECK(testing::make("path:2*tree:3,1").size() == 12);
}

TEST_CASE("induced subgraph and sets") {
  const MedianGraph g = testing::make("grid:2,2");
  std::vector<Vertex> old;
  const auto row = make_set(g.size(), std::vector<Vertex>{0, 1, 2});
  const MedianGraph s = induced_subgraph(g, row, &old);
  CHECK(s.size() == 3);
  CHECK(old == std::vector<Vertex>{0, 1, 2});
  CHECK(members(row) == std::vector<Vertex>{0, 1, 2});
  CHECK(code_of([&] { induced_subgraph(g, make_set(g.size(), std::vector<Vertex>{0, 8})); }) ==
        ErrorCode::kDisconnected);
  const DistanceTable d(g);
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b = 0; b < g.size(); ++b) CHECK(d(a, b) == distance(g, a, b));
}
