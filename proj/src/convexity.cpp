#include "cubecomb/convexity.hpp"

#include "cubecomb/error.hpp"

namespace cubecomb {

namespace {

void require_nonempty(const VertexSet& s) {
  if (s.none()) throw Error(ErrorCode::kEmptySet, "vertex set is empty");
}

}  // namespace

WallMask walls_crossing(const WallSet& w, const VertexSet& s) {
  WallMask out = w.empty_mask();
  const auto first = s.find_first();
  if (first == VertexSet::npos) return out;
  // A wall crosses s iff some member's signature differs from the first's.
  for (auto v = s.find_next(first); v != VertexSet::npos; v = s.find_next(v)) {
    out |= w.signature(Vertex(first)) ^ w.signature(Vertex(v));
  }
  return out;
}

WallMask walls_separating(const WallSet& w, Vertex x, const VertexSet& s) {
  WallMask out = w.empty_mask();
  const auto first = s.find_first();
  if (first == VertexSet::npos) return out;
  out = (w.signature(x) ^ w.signature(Vertex(first))) & ~walls_crossing(w, s);
  return out;
}

ConvexityCheck is_convex(const MedianGraph& g, const WallSet& w, const VertexSet& s) {
  require_nonempty(s);
  ConvexityCheck out;
  if (convex_hull(w, s).vertices == s) {
    out.convex = true;
    return out;
  }
  const auto vs = members(s);
  // m lies in I(a,b) iff it agrees with a and b wherever they agree.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const WallMask& sa = w.signature(vs[i]);
      const WallMask agree = ~(sa ^ w.signature(vs[j]));
      for (Vertex m = 0; m < g.size(); ++m) {
        if (s.test(m)) continue;
        if (((w.signature(m) ^ sa) & agree).none()) {
          out.witness = std::array<Vertex, 3>{vs[i], vs[j], m};
          return out;
        }
      }
    }
  }
  throw Error(ErrorCode::kInternal, "hull differs from the set but no interval witness found");
}

ConvexSubcomplex make_convex(const MedianGraph& g, const WallSet& w, const VertexSet& s) {
  const auto check = is_convex(g, w, s);
  if (!check.convex) {
    const auto& t = *check.witness;
    throw Error(ErrorCode::kNotConvex, "vertex '" + g.label(t[2]) + "' lies between '" +
                                           g.label(t[0]) + "' and '" + g.label(t[1]) +
                                           "' but outside the set");
  }
  return ConvexSubcomplex{s};
}

ConvexSubcomplex convex_hull(const WallSet& w, const VertexSet& s) {
  require_nonempty(s);
  const WallMask crossing = walls_crossing(w, s);
  const Vertex first = Vertex(s.find_first());
  VertexSet hull(w.vertex_count());
  hull.set();
  for (WallId h = 0; h < w.size(); ++h) {
    if (!crossing.test(h)) hull &= w.halfspace(h, w.side(h, first));
  }
  return ConvexSubcomplex{hull};
}

VertexSet convex_hull_by_medians(const DistanceTable& d, const VertexSet& s) {
  require_nonempty(s);
  VertexSet hull = s;
  const std::size_t n = d.size();
  bool grew = true;
  while (grew) {
    grew = false;
    const auto vs = members(hull);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        const auto dab = d(vs[i], vs[j]);
        for (Vertex c = 0; c < n; ++c) {
          if (!hull.test(c) && d(vs[i], c) + d(c, vs[j]) == dab) {
            hull.set(c);
            grew = true;
          }
        }
      }
    }
  }
  return hull;
}

ConvexSubcomplex carrier_subcomplex(const WallSet& w, WallId h) {
  return ConvexSubcomplex{w.wall(h).carrier};
}

Vertex gate(const WallSet& w, const ConvexSubcomplex& y, Vertex x) {
  require_nonempty(y.vertices);
  const WallMask& sx = w.signature(x);
  std::size_t best = SIZE_MAX;
  Vertex arg = 0;
  bool tie = false;
  for (auto v = y.vertices.find_first(); v != VertexSet::npos; v = y.vertices.find_next(v)) {
    const std::size_t dist = (sx ^ w.signature(Vertex(v))).count();
    if (dist < best) {
      best = dist;
      arg = Vertex(v);
      tie = false;
    } else if (dist == best) {
      tie = true;
    }
  }
  if (tie) throw Error(ErrorCode::kNotConvex, "target set has no unique nearest vertex");
  return arg;
}

ConvexSubcomplex gate_projection(const WallSet& w, const ConvexSubcomplex& y,
                                 const ConvexSubcomplex& z) {
  require_nonempty(z.vertices);
  VertexSet image(w.vertex_count());
  for (auto v = z.vertices.find_first(); v != VertexSet::npos; v = z.vertices.find_next(v)) {
    image.set(gate(w, y, Vertex(v)));
  }
  return ConvexSubcomplex{image};
}

std::uint32_t diameter(const WallSet& w, const VertexSet& s) {
  std::uint32_t best = 0;
  const auto vs = members(s);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) best = std::max(best, w.distance(vs[i], vs[j]));
  }
  return best;
}

}  // namespace cubecomb
