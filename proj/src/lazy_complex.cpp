#include "cubecomb/lazy_complex.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "cubecomb/error.hpp"

namespace cubecomb {

std::string Automorphism::apply(const std::string& v, int power) const {
  std::string out = v;
  for (int i = 0; i < power; ++i) out = forward(out);
  for (int i = 0; i > power; --i) out = inverse(out);
  return out;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kBadParams, message);
}

long long parse_int(std::string_view s) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kUnknownVertex, "bad integer label '" + std::string(s) + "'");
  }
  return out;
}

std::vector<long long> parse_coords(const std::string& label, std::size_t dim) {
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') {
    throw Error(ErrorCode::kUnknownVertex, "bad coordinate label '" + label + "'");
  }
  std::vector<long long> out;
  std::string_view body(label);
  body = body.substr(1, body.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    out.push_back(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (out.size() != dim) throw Error(ErrorCode::kUnknownVertex, "wrong dimension in '" + label + "'");
  return out;
}

std::string coords_label(const std::vector<long long>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

Automorphism identity_map() {
  auto id = [](const std::string& v) { return v; };
  return Automorphism{"identity", id, id};
}

// Z with unit steps; labels are decimal integers.
class Line : public LazyComplex {
 public:
  std::string name() const override { return "line"; }
  std::string basepoint() const override { return "0"; }
  std::vector<std::string> neighbors(const std::string& v) const override {
    const auto n = parse_int(v);
    return {std::to_string(n - 1), std::to_string(n + 1)};
  }
  Automorphism automorphism(const GeneratorSpec& spec) const override {
    if (spec.name == "identity") return identity_map();
    require(spec.name == "shift" && spec.params.size() <= 1, "line takes shift or shift:k");
    const long long k = spec.params.empty() ? 1 : spec.params[0];
    return Automorphism{
        "shift:" + std::to_string(k),
        [k](const std::string& v) { return std::to_string(parse_int(v) + k); },
        [k](const std::string& v) { return std::to_string(parse_int(v) - k); }};
  }
};

// Standard cubulation of Z^d.
class Grid : public LazyComplex {
 public:
  explicit Grid(std::size_t dim) : dim_(dim) {}
  std::string name() const override { return "grid:" + std::to_string(dim_); }
  std::string basepoint() const override { return coords_label(std::vector<long long>(dim_, 0)); }
  std::vector<std::string> neighbors(const std::string& v) const override {
    auto c = parse_coords(v, dim_);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (long long step : {-1LL, 1LL}) {
        c[i] += step;
        out.push_back(coords_label(c));
        c[i] -= step;
      }
    }
    return out;
  }
  Automorphism automorphism(const GeneratorSpec& spec) const override {
    if (spec.name == "identity") return identity_map();
    require(spec.name == "shift", "grid takes shift or shift:v1,..,vd");
    std::vector<long long> t(dim_, 0);
    if (spec.params.empty()) {
      t[0] = 1;
    } else {
      require(spec.params.size() == dim_, "grid shift needs one entry per coordinate");
      for (std::size_t i = 0; i < dim_; ++i) t[i] = spec.params[i];
    }
    const std::size_t dim = dim_;
    auto move = [dim, t](const std::string& v, long long sign) {
      auto c = parse_coords(v, dim);
      for (std::size_t i = 0; i < dim; ++i) c[i] += sign * t[i];
      return coords_label(c);
    };
    std::string name = "shift:";
    for (std::size_t i = 0; i < dim_; ++i) name += (i ? "," : "") + std::to_string(t[i]);
    return Automorphism{name, [move](const std::string& v) { return move(v, 1); },
                        [move](const std::string& v) { return move(v, -1); }};
  }

 private:
  std::size_t dim_;
};

// Unit squares [i,i+1]^2 glued corner to corner: points of Z^2 with |x-y| <= 1.
class Staircase : public LazyComplex {
 public:
  std::string name() const override { return "staircase"; }
  std::string basepoint() const override { return "(0,0)"; }
  std::vector<std::string> neighbors(const std::string& v) const override {
    const auto c = parse_coords(v, 2);
    std::vector<std::string> out;
    const long long steps[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (const auto& s : steps) {
      const long long x = c[0] + s[0];
      const long long y = c[1] + s[1];
      if (x - y <= 1 && y - x <= 1) out.push_back(coords_label({x, y}));
    }
    return out;
  }
  Automorphism automorphism(const GeneratorSpec& spec) const override {
    if (spec.name == "identity") return identity_map();
    require(spec.name == "shift" && spec.params.size() <= 1, "staircase takes shift or shift:k");
    const long long k = spec.params.empty() ? 1 : spec.params[0];
    auto move = [k](const std::string& v, long long sign) {
      auto c = parse_coords(v, 2);
      return coords_label({c[0] + sign * k, c[1] + sign * k});
    };
    return Automorphism{"shift:" + std::to_string(k),
                        [move](const std::string& v) { return move(v, 1); },
                        [move](const std::string& v) { return move(v, -1); }};
  }
};

// Cayley graph of the free product of d copies of Z/2: the d-regular tree.
// Vertices are reduced words over a, b, ...; the identity is "e".
class Tree : public LazyComplex {
 public:
  explicit Tree(int degree) : degree_(degree) {}
  std::string name() const override { return "tree:" + std::to_string(degree_); }
  std::string basepoint() const override { return "e"; }
  std::vector<std::string> neighbors(const std::string& v) const override {
    const std::string w = word(v, degree_);
    std::vector<std::string> out;
    for (int i = 0; i < degree_; ++i) out.push_back(label(reduce(w + char('a' + i))));
    return out;
  }
  Automorphism automorphism(const GeneratorSpec& spec) const override {
    if (spec.name == "identity") return identity_map();
    require(spec.name == "shift", "tree takes shift or shift:i,j,...");
    std::vector<int> letters = spec.params.empty() ? std::vector<int>{0, 1} : spec.params;
    std::string u;
    for (int l : letters) {
      require(l >= 0 && l < degree_, "tree shift letters must be below the degree");
      u += char('a' + l);
    }
    const std::string inv(u.rbegin(), u.rend());
    const std::string forward_word = reduce(u);
    const std::string inverse_word = reduce(inv);
    return Automorphism{
        "shift:" + label(forward_word),
        [d = degree_, forward_word](const std::string& v) {
          return label(reduce(forward_word + word(v, d)));
        },
        [d = degree_, inverse_word](const std::string& v) {
          return label(reduce(inverse_word + word(v, d)));
        }};
  }

 private:
  static std::string word(const std::string& v, int degree) {
    if (v == "e") return "";
    for (char ch : v) {
      if (ch < 'a' || ch >= 'a' + degree) throw Error(ErrorCode::kUnknownVertex, "bad word '" + v + "'");
    }
    return v;
  }
  static std::string reduce(const std::string& w) {
    std::string out;
    for (char ch : w) {
      if (!out.empty() && out.back() == ch) {
        out.pop_back();
      } else {
        out.push_back(ch);
      }
    }
    return out;
  }
  static std::string label(const std::string& w) { return w.empty() ? "e" : w; }

  int degree_;
};

// Cartesian product; labels "a|b", split at the last '|'.
class Product : public LazyComplex {
 public:
  Product(std::unique_ptr<LazyComplex> a, std::unique_ptr<LazyComplex> b)
      : a_(std::move(a)), b_(std::move(b)) {}
  std::string name() const override { return a_->name() + "*" + b_->name(); }
  std::string basepoint() const override { return a_->basepoint() + "|" + b_->basepoint(); }
  std::vector<std::string> neighbors(const std::string& v) const override {
    const auto [x, y] = split(v);
    std::vector<std::string> out;
    for (const auto& n : a_->neighbors(x)) out.push_back(n + "|" + y);
    for (const auto& n : b_->neighbors(y)) out.push_back(x + "|" + n);
    return out;
  }
  // The automorphism acts on the first factor and fixes the second.
  Automorphism automorphism(const GeneratorSpec& spec) const override {
    auto inner = a_->automorphism(spec);
    auto fwd = inner.forward;
    auto inv = inner.inverse;
    return Automorphism{inner.name + "*identity",
                        [fwd](const std::string& v) {
                          const auto [x, y] = split(v);
                          return fwd(x) + "|" + y;
                        },
                        [inv](const std::string& v) {
                          const auto [x, y] = split(v);
                          return inv(x) + "|" + y;
                        }};
  }

 private:
  static std::pair<std::string, std::string> split(const std::string& v) {
    const auto bar = v.rfind('|');
    if (bar == std::string::npos) throw Error(ErrorCode::kUnknownVertex, "bad product label '" + v + "'");
    return {v.substr(0, bar), v.substr(bar + 1)};
  }

  std::unique_ptr<LazyComplex> a_;
  std::unique_ptr<LazyComplex> b_;
};

}  // namespace

std::unique_ptr<LazyComplex> make_lazy_complex(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  if (spec.name == "product") {
    require(spec.factors.size() >= 2, "product needs at least two factors");
    auto out = make_lazy_complex(spec.factors[0]);
    for (std::size_t i = 1; i < spec.factors.size(); ++i) {
      out = std::make_unique<Product>(std::move(out), make_lazy_complex(spec.factors[i]));
    }
    return out;
  }
  if (spec.name == "line") {
    require(p.empty(), "line takes no parameters");
    return std::make_unique<Line>();
  }
  if (spec.name == "grid") {
    require(p.size() <= 1, "grid takes its dimension");
    const int dim = p.empty() ? 2 : p[0];
    require(dim >= 1 && dim <= 4, "grid dimension must be between 1 and 4");
    return std::make_unique<Grid>(std::size_t(dim));
  }
  if (spec.name == "staircase") {
    require(p.empty(), "staircase takes no parameters");
    return std::make_unique<Staircase>();
  }
  if (spec.name == "tree") {
    require(p.size() <= 1, "tree takes its degree");
    const int degree = p.empty() ? 3 : p[0];
    require(degree >= 2 && degree <= 26, "tree degree must be between 2 and 26");
    return std::make_unique<Tree>(degree);
  }
  throw Error(ErrorCode::kBadParams, "unknown periodic complex '" + spec.name + "'");
}

Window::Window(const LazyComplex& complex, std::uint32_t radius) : radius_(radius) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> depth;  // BFS depth, or an upper bound
  auto add = [&](const std::string& v, std::uint32_t d) {
    depth.emplace(v, d);
    labels.push_back(v);
    if (labels.size() > kWindowVertexLimit) {
      throw Error(ErrorCode::kBadParams, "window of radius " + std::to_string(radius) +
                                             " exceeds " + std::to_string(kWindowVertexLimit) +
                                             " vertices");
    }
  };

  add(complex.basepoint(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::uint32_t d = depth.at(labels[i]);
    if (d == radius) continue;
    for (const auto& n : complex.neighbors(labels[i])) {
      if (!depth.count(n)) add(n, d + 1);
    }
  }
  const std::size_t ball_size = labels.size();

  // Local convexity closure: whenever u, w in the set are at distance 2, all
  // their common neighbours join.
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string u = labels[i];
    const auto nu = complex.neighbors(u);
    for (const auto& m : nu) {
      for (const auto& w : complex.neighbors(m)) {
        if (w == u || !depth.count(w)) continue;
        const auto nw = complex.neighbors(w);
        for (const auto& c : nu) {
          if (depth.count(c) || std::find(nw.begin(), nw.end(), c) == nw.end()) continue;
          const std::uint32_t d = std::min(depth.at(u), depth.at(w)) + 1;
          if (d > cap()) {
            throw Error(ErrorCode::kMedianClosureOverflow,
                        "hull of the radius-" + std::to_string(radius) + " ball reaches '" + c +
                            "' beyond distance " + std::to_string(cap()));
          }
          add(c, d);
        }
      }
    }
  }

  std::vector<Edge> edges;
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  for (Vertex v = 0; v < labels.size(); ++v) {
    for (const auto& n : complex.neighbors(labels[v])) {
      const auto it = index.find(n);
      if (it != index.end() && v < it->second) edges.push_back(Edge{v, it->second});
    }
  }
  graph_ = MedianGraph::from_indices(std::move(labels), std::move(edges));
  const auto report = verify_median(graph_);
  if (!report.pass) {
    throw Error(ErrorCode::kNotMedianGraph, "window of " + complex.name() + " is not median: " +
                                                report.detail);
  }
  walls_ = compute_walls(graph_);
  ball_ = VertexSet(graph_.size());
  for (std::size_t v = 0; v < ball_size; ++v) ball_.set(v);
}

const ContactGraph& Window::contact() const {
  if (!contact_) contact_ = std::make_unique<ContactGraph>(graph_, walls_);
  return *contact_;
}

std::optional<Vertex> Window::vertex_image(const Automorphism& g, Vertex v, int power) const {
  return graph_.find(g.apply(graph_.label(v), power));
}

std::optional<WallId> Window::wall_image(const Automorphism& g, WallId h, int power) const {
  for (const auto& e : walls_.wall(h).edges) {
    const auto a = vertex_image(g, e.u, power);
    const auto b = vertex_image(g, e.v, power);
    if (a && b && graph_.adjacent(*a, *b)) return walls_.wall_of_edge(graph_, *a, *b);
  }
  return std::nullopt;
}

}  // namespace cubecomb
