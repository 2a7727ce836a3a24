#include <doctest.h>

#include "cubecomb/contact.hpp"
#include "cubecomb/error.hpp"
#include "support.hpp"

using namespace cubecomb;

TEST_CASE("property: both contact definitions agree on random median graphs") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const MedianGraph g = testing::random_median_graph(rng);
    const WallSet w = compute_walls(g);
    CAPTURE(trial);
    CHECK(contact_by_carriers(g, w) == contact_by_separation(w));
    const ContactGraph c(g, w);
    CHECK(c.provenance() == "carrier-intersection");
    for (WallId h = 0; h < w.size(); ++h) {
      // Crossing walls are in contact.
      for (WallId k = 0; k < w.size(); ++k)
        if (w.cross(h, k)) CHECK(c.adjacent(h, k));
      const auto d = c.distances_from(h);
      for (WallId k = 0; k < w.size(); ++k) {
        CHECK(d[k] == c.distance(h, k));
        const auto path = c.geodesic(h, k);
        CHECK(path.size() == d[k] + 1);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(c.adjacent(path[i], path[i + 1]));
      }
    }
  }
}

TEST_CASE("property: hierarchy paths pass their audit") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    const MedianGraph g = testing::random_median_graph(rng);
    if (g.size() < 2) continue;
    const WallSet w = compute_walls(g);
    const ContactGraph c(g, w);
    Vertex x = 0, y = 0;
    while (x == y) {
      x = Vertex(testing::uniform(rng, 0, int(g.size()) - 1));
      y = Vertex(testing::uniform(rng, 0, int(g.size()) - 1));
    }
    const auto p = hierarchy_path(g, w, c, x, y);
    const auto a = check_hierarchy_path(g, w, c, x, y, p);
    CAPTURE(trial);
    CHECK(a.geodesic);
    CHECK(a.contact_geodesic);
    CHECK(a.in_carriers);
    CHECK(a.piece_bounds);
    CHECK(p.anchors.front() == x);
    CHECK(p.anchors.back() == y);
    CHECK(p.pieces.size() == p.walls.size());
    // Chosen end walls must carry the endpoints; a bad choice is refused.
    const auto px = project_vertex(g, w, x);
    CHECK(p.walls.front() == px.front());
  }
}

TEST_CASE("hierarchy path arguments") {
  const MedianGraph g = testing::make("path:4");
  const WallSet w = compute_walls(g);
  const ContactGraph c(g, w);
  try {
    hierarchy_path(g, w, c, 0, 0);
    FAIL("expected BAD_PARAMS");
  } catch (const cubecomb::Error& e) {
    CHECK(e.code() == ErrorCode::kBadParams);
  }
  try {
    hierarchy_path(g, w, c, 0, 4, WallId(3));
    FAIL("expected BAD_PARAMS");
  } catch (const cubecomb::Error& e) {
    CHECK(e.code() == ErrorCode::kBadParams);
  }
  const auto p = hierarchy_path(g, w, c, 0, 4);
  CHECK(p.walls == std::vector<WallId>{0, 1, 2, 3});
  CHECK(p.path().size() == 5);
}

TEST_CASE("projections of vertices and single points") {
  const MedianGraph g = testing::make("path:9");
  const WallSet w = compute_walls(g);
  const ContactGraph c(g, w);
  CHECK(project_vertex(g, w, g.vertex("v0")) == std::vector<WallId>{0});
  CHECK(project_vertex(g, w, g.vertex("v3")).size() == 2);
  const auto far = single_point_check(g, w, c, 0, 5);
  CHECK(far.contact_distance == 5);
  CHECK(far.single_point);
  CHECK(far.image.count() == 1);
  const auto near = single_point_check(g, w, c, 0, 1);
  CHECK(near.contact_distance == 1);
  try {
    single_point_check(g, w, c, 2, 2);
    FAIL("expected SAME_WALL");
  } catch (const cubecomb::Error& e) {
    CHECK(e.code() == ErrorCode::kSameWall);
  }
  // A grid: the projection of a parallel wall's carrier onto a carrier spans a wall.
  const MedianGraph gg = testing::make("grid:2,2");
  const WallSet gw = compute_walls(gg);
  const ContactGraph gc(gg, gw);
  const WallId a = gw.wall_of_edge(gg, gg.vertex("(0,0)"), gg.vertex("(1,0)"));
  const WallId b = gw.wall_of_edge(gg, gg.vertex("(1,0)"), gg.vertex("(2,0)"));
  const auto r = single_point_check(gg, gw, gc, a, b);
  CHECK_FALSE(r.single_point);
  CHECK(r.crossing.size() == 2);
}

TEST_CASE("four point constant") {
  const MedianGraph tree = testing::make("tree:3,2");
  const WallSet w = compute_walls(tree);
  const ContactGraph c(tree, w);
  CHECK(four_point_delta_twice(c) <= 2);
  const MedianGraph path = testing::make("path:6");
  const WallSet pw = compute_walls(path);
  CHECK(four_point_delta_twice(ContactGraph(path, pw)) == 0);
  const MedianGraph big = testing::make("grid:70,1");
  const WallSet bw = compute_walls(big);
  try {
    four_point_delta_twice(ContactGraph(big, bw));
    FAIL("expected BAD_PARAMS");
  } catch (const cubecomb::Error& e) {
    CHECK(e.code() == ErrorCode::kBadParams);
  }
}
