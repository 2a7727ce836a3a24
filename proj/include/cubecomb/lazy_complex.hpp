#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubecomb/contact.hpp"
#include "cubecomb/document.hpp"
#include "cubecomb/median_graph.hpp"
#include "cubecomb/walls.hpp"

namespace cubecomb {

// A vertex map and its inverse, both on labels.
struct Automorphism {
  std::string name;
  std::function<std::string(const std::string&)> forward;
  std::function<std::string(const std::string&)> inverse;

  // g^power, negative powers through the inverse.
  std::string apply(const std::string& v, int power) const;
};

// Locally finite infinite complex given by a neighbour oracle. Oracles are
// pure, so a shared instance may be queried from several threads.
class LazyComplex {
 public:
  virtual ~LazyComplex() = default;

  virtual std::string name() const = 0;
  virtual std::string basepoint() const = 0;
  virtual std::vector<std::string> neighbors(const std::string& v) const = 0;

  // "shift", "shift:params" or "identity". BAD_PARAMS otherwise.
  virtual Automorphism automorphism(const GeneratorSpec& spec) const = 0;
};

// line, grid:d, staircase, tree:d, and products "A*B". BAD_PARAMS otherwise.
std::unique_ptr<LazyComplex> make_lazy_complex(const GeneratorSpec& spec);

// Convex hull of the ball B_R(x0), as a finite validated median graph.
class Window {
 public:
  Window(const LazyComplex& complex, std::uint32_t radius);

  std::uint32_t radius() const { return radius_; }
  std::uint32_t cap() const { return 3 * radius_; }
  const MedianGraph& graph() const { return graph_; }
  const WallSet& walls() const { return walls_; }
  const ContactGraph& contact() const;
  Vertex basepoint() const { return basepoint_; }
  const VertexSet& ball() const { return ball_; }

  std::optional<Vertex> find(const std::string& label) const { return graph_.find(label); }

  // g^power(v) when the image lies in the window.
  std::optional<Vertex> vertex_image(const Automorphism& g, Vertex v, int power) const;

  // Wall g^power(h), read off any dual edge of h whose image stays inside.
  std::optional<WallId> wall_image(const Automorphism& g, WallId h, int power) const;

 private:
  std::uint32_t radius_;
  MedianGraph graph_;
  WallSet walls_;
  Vertex basepoint_ = 0;
  VertexSet ball_;
  mutable std::unique_ptr<ContactGraph> contact_;
};

// Windows larger than this are refused (BAD_PARAMS).
inline constexpr std::size_t kWindowVertexLimit = 50'000;

}  // namespace cubecomb
