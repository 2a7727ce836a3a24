#include <doctest.h>

#include "cubecomb/dynamics.hpp"
#include "cubecomb/error.hpp"
#include "cubecomb/lazy_complex.hpp"
#include "support.hpp"

using namespace cubecomb;

namespace {

std::unique_ptr<LazyComplex> lazy(const std::string& spec) { return make_lazy_complex(parse_generator_spec(spec)); }

}  // namespace

TEST_CASE("property: neighbour oracles are symmetric and automorphisms preserve them") {
  testing::Rng rng(51);
  for (const char* name : {"line", "grid", "grid:3", "staircase", "tree", "tree:4", "line*tree"}) {
    const auto x = lazy(name);
    const auto g = x->automorphism(parse_generator_spec("shift"));
    // Random walk from the basepoint, checking each visited vertex.
    std::string v = x->basepoint();
    for (int step = 0; step < 200; ++step) {
      const auto nbrs = x->neighbors(v);
      REQUIRE_FALSE(nbrs.empty());
      for (const auto& n : nbrs) {
        const auto back = x->neighbors(n);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
      std::set<std::string> mapped;
      for (const auto& n : nbrs) mapped.insert(g.forward(n));
      const auto image = x->neighbors(g.forward(v));
      CHECK(mapped == std::set<std::string>(image.begin(), image.end()));
      CHECK(g.inverse(g.forward(v)) == v);
      CHECK(g.apply(g.apply(v, 3), -3) == v);
      v = nbrs[std::size_t(testing::uniform(rng, 0, int(nbrs.size()) - 1))];
    }
  }
}

TEST_CASE("lazy complex names and errors") {
  CHECK(lazy("tree")->name() == "tree:3");
  CHECK(lazy("grid")->name() == "grid:2");
  CHECK_THROWS(lazy("grid:7"));
  CHECK_THROWS(lazy("tree:1"));
  CHECK_THROWS(lazy("hyperbolic"));
  CHECK_THROWS(lazy("line")->automorphism(parse_generator_spec("rotate")));
  CHECK_THROWS(lazy("grid")->automorphism(parse_generator_spec("shift:1,2,3")));
  CHECK(lazy("grid")->automorphism(parse_generator_spec("identity")).forward("(3,4)") == "(3,4)");
}

TEST_CASE("windows are validated convex hulls of balls") {
  const auto line = lazy("line");
  const Window w(*line, 5);
  CHECK(w.graph().size() == 11);
  CHECK(w.walls().size() == 10);
  CHECK(w.graph().validated());
  CHECK(w.graph().label(w.basepoint()) == line->basepoint());
  const auto grid = lazy("grid");
  const Window gw(*grid, 2);
  CHECK(gw.ball().count() == 13);
  CHECK(gw.graph().size() == 25);  // the hull of a diamond is the box
  const auto st = lazy("staircase");
  const Window sw(*st, 3);
  CHECK(sw.graph().validated());
  try {
    Window(*lazy("tree:20"), 6);
    FAIL("expected BAD_PARAMS");
  } catch (const cubecomb::Error& e) {
    CHECK(e.code() == ErrorCode::kBadParams);
  }
}

TEST_CASE("images inside windows") {
  const auto line = lazy("line");
  const Window w(*line, 4);
  const auto g = line->automorphism(parse_generator_spec("shift:2"));
  const Vertex x0 = w.basepoint();
  const auto y = w.vertex_image(g, x0, 1);
  REQUIRE(y.has_value());
  CHECK(w.graph().label(*y) == "2");
  CHECK_FALSE(w.vertex_image(g, x0, 3).has_value());
  const WallId h = default_wall(w);
  const auto gh = w.wall_image(g, h, 1);
  REQUIRE(gh.has_value());
  CHECK(*gh != h);
}

TEST_CASE("translation slopes") {
  const auto grid = lazy("grid");
  const auto s = translation_slope(*grid, grid->automorphism(parse_generator_spec("shift:1,1")), 4);
  CHECK(s.distances == std::vector<std::uint32_t>{2, 4, 6, 8});
  CHECK(s.slopes.back() == doctest::Approx(2.0));
  const auto tree = lazy("tree");
  const auto t = translation_slope(*tree, tree->automorphism(parse_generator_spec("shift:0,1")), 2);
  CHECK(t.distances == std::vector<std::uint32_t>{2, 4});
  const Window small(*grid, 2);
  try {
    translation_slope(small, grid->automorphism(parse_generator_spec("shift:1,1")), 4);
    FAIL("expected WINDOW_TOO_SMALL");
  } catch (const cubecomb::Error& e) {
    CHECK(e.code() == ErrorCode::kWindowTooSmall);
  }
}

TEST_CASE("stabilized walls, orbits and skewering") {
  const auto grid = lazy("grid");
  const Window w(*grid, 6);
  const auto along = grid->automorphism(parse_generator_spec("shift:1,0"));
  const auto found = stabilized_wall_search(w, along, 3);
  REQUIRE(found.found.has_value());
  CHECK(found.found->period == 1);
  CHECK(w.wall_image(along, found.found->wall, 1) == found.found->wall);
  const auto line = lazy("line");
  const Window lw(*line, 10);
  const auto shift = line->automorphism(parse_generator_spec("shift"));
  CHECK_FALSE(stabilized_wall_search(lw, shift, 3).found.has_value());
  const WallId h = default_wall(lw);
  CHECK(contact_orbit_growth(lw, shift, h, 3) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(orbit_contact_diameter(lw, shift, h, 2) == 4);
  const auto sk = skewering_check(lw, shift, h);
  CHECK(sk.skewers);
  CHECK(sk.strict_witness.has_value());
  const auto identity = line->automorphism(parse_generator_spec("identity"));
  CHECK_FALSE(skewering_check(lw, identity, h).skewers);
}

TEST_CASE("wall gate distances") {
  const auto grid = lazy("grid");
  const Window w(*grid, 4);
  const auto& g = w.graph();
  const WallId v = w.walls().wall_of_edge(g, *w.find("(0,0)"), *w.find("(1,0)"));
  // Both gates land on the carrier; only the vertical offset counts.
  CHECK(wall_gate_distance(w, v, *w.find("(-2,0)"), *w.find("(3,2)")) == 2);
  CHECK(wall_gate_distance(w, v, *w.find("(0,0)"), *w.find("(1,0)")) == 0);
}

TEST_CASE("halfspace depth and wall shapes") {
  const auto st = lazy("staircase");
  const Window w(*st, 6);
  for (WallId h = 0; h < w.walls().size(); ++h) {
    const auto d = halfspace_depths(w, h);
    CHECK(d[0] >= 1);
    CHECK(d[1] >= 1);
  }
  for (const auto& s : hyperplane_essentiality_profile(w)) {
    CHECK(s.diameter == 0);
    CHECK(s.cells == 1);
    CHECK(s.edge_class_diameter <= 1);
  }
  const auto grid = lazy("grid");
  const Window gw(*grid, 3);
  std::uint32_t widest = 0;
  for (const auto& s : hyperplane_essentiality_profile(gw)) widest = std::max(widest, s.diameter);
  CHECK(widest >= 2);
  const auto prof = essentiality_profile(*st, {3, 1, 2});
  CHECK(prof.radii == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(prof.min_depth.size() == 3);
  CHECK(prof.min_depth[2] >= 2);
}

TEST_CASE("growth profiles") {
  const auto line = lazy("line");
  const auto rows = growth_profile(*line, {1, 2, 3});
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].volume == 7);
  CHECK(rows[2].wall_volume == 6);
  CHECK(rows[2].facing == 2);
  const auto tree = lazy("tree");
  const auto trows = growth_profile(*tree, {1, 2});
  CHECK(trows[0].facing == 3);
  CHECK(trows[1].facing == 6);
  CHECK(trows[1].facing_certified);
}

TEST_CASE("verdicts") {
  const auto line = lazy("line");
  const auto c = classify(*line, line->automorphism(parse_generator_spec("shift")), 4, 16);
  CHECK(c.verdict == Verdict::kLoxodromicConsistent);
  CHECK(c.contact_growth_half.has_value());
  const auto id = classify(*line, line->automorphism(parse_generator_spec("identity")), 4, 16);
  CHECK(id.verdict == Verdict::kStabilizedWall);
  const auto tree = lazy("tree");
  const auto t = classify(*tree, tree->automorphism(parse_generator_spec("shift:0,1")), 3, 8);
  CHECK(t.verdict == Verdict::kLoxodromicConsistent);
  CHECK(to_string(Verdict::kBoundedOrbit) == "BOUNDED-ORBIT");
  CHECK(to_string(Verdict::kInconclusive) == "INCONCLUSIVE");
  CHECK_THROWS(classify(*line, line->automorphism(parse_generator_spec("shift")), 0, 16));
}
