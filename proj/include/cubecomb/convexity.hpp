#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cubecomb/median_graph.hpp"
#include "cubecomb/walls.hpp"

namespace cubecomb {

// Median-closed vertex set of a fixed graph. Build through make_convex,
// convex_hull or carrier_subcomplex so the invariant holds.
struct ConvexSubcomplex {
  VertexSet vertices;
};

struct ConvexityCheck {
  bool convex = false;
  // a, b inside, m = an interval vertex between them lying outside the set.
  std::optional<std::array<Vertex, 3>> witness;
};

// A set is convex iff it contains I(a,b) for every a, b in it. Throws EMPTY_SET.
ConvexityCheck is_convex(const MedianGraph& g, const WallSet& w, const VertexSet& s);

// Throws EMPTY_SET or NOT_CONVEX.
ConvexSubcomplex make_convex(const MedianGraph& g, const WallSet& w, const VertexSet& s);

// Intersection of every halfspace containing s. Throws EMPTY_SET.
ConvexSubcomplex convex_hull(const WallSet& w, const VertexSet& s);

// Closure of s under intervals, computed from a distance table. Slow; used to
// cross-check convex_hull.
VertexSet convex_hull_by_medians(const DistanceTable& d, const VertexSet& s);

ConvexSubcomplex carrier_subcomplex(const WallSet& w, WallId h);

// Unique vertex of y nearest to x, found as the minimum-Hamming signature
// over y. Throws NOT_CONVEX when the minimum is not unique.
Vertex gate(const WallSet& w, const ConvexSubcomplex& y, Vertex x);

// {gate(y, z) : z in z_set}.
ConvexSubcomplex gate_projection(const WallSet& w, const ConvexSubcomplex& y,
                                 const ConvexSubcomplex& z);

// Walls with vertices of the set on both sides.
WallMask walls_crossing(const WallSet& w, const VertexSet& s);

// Walls separating x from the set (all of it on the far side).
WallMask walls_separating(const WallSet& w, Vertex x, const VertexSet& s);

std::uint32_t diameter(const WallSet& w, const VertexSet& s);

}  // namespace cubecomb
