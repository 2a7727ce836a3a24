#include "cubecomb/generators.hpp"

#include <map>

#include "cubecomb/error.hpp"

namespace cubecomb {

namespace {

std::string coordinate_label(std::span<const int> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kBadParams, message);
}

}  // namespace

MedianGraph path_graph(int n) {
  require(n >= 0, "path length must be non-negative");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.push_back(Edge{Vertex(i), Vertex(i + 1)});
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph grid_graph(std::span<const int> widths) {
  require(!widths.empty(), "grid needs at least one width");
  for (int w : widths) require(w >= 0, "grid widths must be non-negative");
  const std::size_t dim = widths.size();
  // Mixed-radix enumeration, first coordinate slowest.
  std::vector<std::size_t> stride(dim, 1);
  for (std::size_t i = dim - 1; i > 0; --i) stride[i - 1] = stride[i] * std::size_t(widths[i] + 1);
  const std::size_t total = stride[0] * std::size_t(widths[0] + 1);

  std::vector<std::string> labels;
  std::vector<Edge> edges;
  labels.reserve(total);
  std::vector<int> coords(dim, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < dim; ++i) {
      coords[i] = int(rest / stride[i]);
      rest %= stride[i];
    }
    labels.push_back(coordinate_label(coords));
    for (std::size_t i = 0; i < dim; ++i) {
      if (coords[i] < widths[i]) edges.push_back(Edge{Vertex(idx), Vertex(idx + stride[i])});
    }
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph tree_graph(int degree, int depth) {
  require(degree >= 1, "tree degree must be at least 1");
  require(depth >= 0, "tree depth must be non-negative");
  require(degree >= 2 || depth <= 1, "degree-1 trees have depth at most 1");
  std::vector<std::string> labels{"t"};
  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  for (int level = 0; level < depth; ++level) {
    std::vector<Vertex> next;
    const int children = level == 0 ? degree : degree - 1;
    for (Vertex parent : frontier) {
      for (int c = 0; c < children; ++c) {
        const auto child = Vertex(labels.size());
        labels.push_back(labels[parent] + "." + std::to_string(c));
        edges.push_back(Edge{parent, child});
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph staircase_graph(int n) {
  require(n >= 1, "staircase needs at least one square");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto label = [](int x, int y) {
    const int c[2] = {x, y};
    return coordinate_label(c);
  };
  labels.push_back(label(0, 0));
  for (int i = 0; i < n; ++i) {
    const auto corner = Vertex(labels.size() - 1);  // (i,i)
    const auto right = Vertex(labels.size());        // (i+1,i)
    const auto up = right + 1;                       // (i,i+1)
    const auto far = right + 2;                      // (i+1,i+1)
    labels.push_back(label(i + 1, i));
    labels.push_back(label(i, i + 1));
    labels.push_back(label(i + 1, i + 1));
    edges.push_back(Edge{corner, right});
    edges.push_back(Edge{corner, up});
    edges.push_back(Edge{right, far});
    edges.push_back(Edge{up, far});
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph cyclic_squares_graph(int k) {
  require(k >= 4, "cyclic_squares needs at least 4 squares");
  std::vector<std::string> labels{"c"};
  for (int i = 0; i < k; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i < k; ++i) labels.push_back("o" + std::to_string(i));
  auto inner = [](int i) { return Vertex(1 + i); };
  auto outer = [k](int i) { return Vertex(1 + k + i); };
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back(Edge{0, inner(i)});
    edges.push_back(Edge{inner(i), outer(i)});
    edges.push_back(Edge{outer(i), inner((i + 1) % k)});
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph product_graph(const MedianGraph& a, const MedianGraph& b) {
  const auto nb = Vertex(b.size());
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (Vertex i = 0; i < a.size(); ++i) {
    for (Vertex j = 0; j < nb; ++j) labels.push_back(a.label(i) + "|" + b.label(j));
  }
  std::vector<Edge> edges;
  for (const auto& e : a.edges()) {
    for (Vertex j = 0; j < nb; ++j) edges.push_back(Edge{e.u * nb + j, e.v * nb + j});
  }
  for (Vertex i = 0; i < a.size(); ++i) {
    for (const auto& e : b.edges()) edges.push_back(Edge{i * nb + e.u, i * nb + e.v});
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    edges.push_back(Edge{Vertex(i), Vertex((i + 1) % n)});
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph complete_graph(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    for (int j = 0; j < i; ++j) edges.push_back(Edge{Vertex(j), Vertex(i)});
  }
  return MedianGraph::from_indices(std::move(labels), std::move(edges));
}

MedianGraph generate(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t n) {
    require(p.size() == n, spec.name + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (spec.name == "product") {
    require(p.empty(), "product takes factors, not parameters");
    require(spec.factors.size() >= 2, "product needs at least two factors");
    MedianGraph out = generate(spec.factors[0]);
    for (std::size_t i = 1; i < spec.factors.size(); ++i) {
      out = product_graph(out, generate(spec.factors[i]));
    }
    return out;
  }
  require(spec.factors.empty(), spec.name + " does not take factors");
  if (spec.name == "path") {
    arity(1);
    return path_graph(p[0]);
  }
  if (spec.name == "grid") return grid_graph(p);
  if (spec.name == "tree") {
    arity(2);
    return tree_graph(p[0], p[1]);
  }
  if (spec.name == "staircase") {
    arity(1);
    return staircase_graph(p[0]);
  }
  if (spec.name == "cyclic_squares") {
    arity(1);
    return cyclic_squares_graph(p[0]);
  }
  if (spec.name == "cycle") {
    arity(1);
    return cycle_graph(p[0]);
  }
  if (spec.name == "complete") {
    arity(1);
    return complete_graph(p[0]);
  }
  throw Error(ErrorCode::kBadParams, "unknown generator '" + spec.name + "'");
}

}  // namespace cubecomb
