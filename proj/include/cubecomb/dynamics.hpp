#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubecomb/lazy_complex.hpp"

namespace cubecomb {

struct SlopeReport {
  std::uint32_t radius = 0;              // window that held the orbit segment
  std::vector<std::uint32_t> distances;  // d(x0, g^n x0), n = 1..nmax
  std::vector<double> slopes;            // distances[n-1] / n
};

// Grows the window (doubling from nmax) until x0..g^nmax x0 fit inside.
// WINDOW_TOO_SMALL if they never do below 16 * nmax.
SlopeReport translation_slope(const LazyComplex& x, const Automorphism& g, int nmax);

// Same series read off a fixed window.
SlopeReport translation_slope(const Window& win, const Automorphism& g, int nmax);

struct StabilizedWall {
  WallId wall = 0;
  int period = 0;
};

struct StabilizedSearch {
  std::optional<StabilizedWall> found;
  std::size_t decided = 0;  // (wall, power) pairs whose image fell inside the window
};

// First wall h, in id order, with g^p h = h for some 1 <= p <= nmax.
// WINDOW_TOO_SMALL if no pair could be decided inside the window.
StabilizedSearch stabilized_wall_search(const Window& win, const Automorphism& g, int nmax);

// Least wall of pi(x0).
WallId default_wall(const Window& win);

// d_C(h, g^n h) for n = 0..nmax in the window's contact graph. These can only
// overestimate the ambient values. WINDOW_TOO_SMALL if an orbit wall leaves.
std::vector<std::uint32_t> contact_orbit_growth(const Window& win, const Automorphism& g,
                                                WallId h, int nmax);

// Number of walls other than h separating the gates of x and y onto N(h):
// their distance inside the wall h itself.
std::uint32_t wall_gate_distance(const Window& win, WallId h, Vertex x, Vertex y);

struct ProjectionBound {
  std::vector<std::uint32_t> per_step;  // n = 1..nmax, max over walls
  std::vector<WallId> argmax;           // least wall reaching each maximum
  std::uint32_t max = 0;
};

ProjectionBound projection_bound(const Window& win, const Automorphism& g, Vertex x, int nmax);

struct SkeweringReport {
  bool skewers = false;
  WallId wall = 0;
  std::optional<WallId> image;  // g h
  int side = 0;                 // side of h holding g h
  int image_side = 0;           // side of g h equal to g of that halfspace
  std::optional<std::string> strict_witness;  // label; in the halfspace of h, outside its image
  std::string reason;
};

SkeweringReport skewering_check(const Window& win, const Automorphism& g, WallId h);

// Diameter of {g^i h : |i| <= nmax} in the window contact graph.
std::uint32_t orbit_contact_diameter(const Window& win, const Automorphism& g, WallId h,
                                     int nmax);

// Per side, the largest distance from a vertex of that halfspace to the
// opposite halfspace.
std::array<std::uint32_t, 2> halfspace_depths(const Window& win, WallId h);

struct DepthRow {
  std::string edge;  // representative dual edge "a~b" from the smallest window
  std::vector<std::array<std::uint32_t, 2>> depths;  // one entry per radius
};

struct EssentialityProfile {
  std::vector<std::uint32_t> radii;  // ascending
  std::vector<DepthRow> rows;
  std::vector<std::uint32_t> min_depth;  // per radius, over every row and side
};

// Walls of the smallest window, followed through the larger ones.
EssentialityProfile essentiality_profile(const LazyComplex& x, std::vector<std::uint32_t> radii);

struct WallShape {
  WallId wall = 0;
  std::string edge;
  std::size_t dual_edges = 0;
  std::uint32_t edge_class_diameter = 0;  // graph diameter of the dual edges
  std::size_t cells = 0;                  // maximal cubes of the wall
  std::uint32_t diameter = 0;             // steps between maximal cubes
};

// Each wall seen as a cube complex in its own right: its dual edges, joined
// when opposite in a square.
std::vector<WallShape> hyperplane_essentiality_profile(const Window& win);

struct GrowthRow {
  std::uint32_t radius = 0;
  std::size_t volume = 0;        // |B_R(x0)|
  std::size_t wall_volume = 0;   // |H_R|
  std::size_t facing = 0;
  bool facing_certified = false;
};

std::vector<GrowthRow> growth_profile(const LazyComplex& x, const std::vector<std::uint32_t>& radii);

enum class Verdict { kLoxodromicConsistent, kStabilizedWall, kBoundedOrbit, kInconclusive };

std::string to_string(Verdict v);

struct Classification {
  std::string complex;
  std::string automorphism;
  int nmax = 0;
  std::uint32_t radius = 0;
  std::size_t window_vertices = 0;
  std::size_t window_walls = 0;
  SlopeReport slope;
  StabilizedSearch stabilized;
  WallId wall = 0;
  std::string wall_edge;
  std::vector<std::uint32_t> contact_growth;
  std::optional<std::vector<std::uint32_t>> contact_growth_half;  // window of radius R/2
  std::uint32_t orbit_diameter = 0;
  ProjectionBound projection;
  SkeweringReport skewering;
  Verdict verdict = Verdict::kInconclusive;
  std::string rationale;
};

inline constexpr int kDefaultNmax = 8;

// Verdicts, first match wins: a stabilized wall; orbit contact diameter at
// most 3; positive contact growth rate with the projection maximum already
// reached by nmax/2; otherwise inconclusive.
Classification classify(const LazyComplex& x, const Automorphism& g, int nmax,
                        std::uint32_t radius);

// "a~b" with labels of the wall's representative edge.
std::string edge_name(const MedianGraph& g, const Edge& e);

}  // namespace cubecomb
