#include "cubecomb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "cubecomb/contact.hpp"
#include "cubecomb/convexity.hpp"
#include "cubecomb/dilworth.hpp"
#include "cubecomb/document.hpp"
#include "cubecomb/dynamics.hpp"
#include "cubecomb/error.hpp"
#include "cubecomb/lazy_complex.hpp"
#include "cubecomb/report.hpp"
#include "cubecomb/walls.hpp"

namespace cubecomb {

namespace {

// Bad flag value; the message names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string generator;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  int facing = 2;
  std::string orient = "lex-least";
  std::string basepoint;
  std::vector<std::string> set;
  std::string vertex;
  std::string x;
  std::string y;
  std::optional<WallId> hx;
  std::optional<WallId> hy;
  std::optional<std::uint32_t> radius;
  std::vector<WallId> walls;
  std::optional<WallId> h;
  std::optional<WallId> v;
  std::string automorphism = "shift";
  int nmax = kDefaultNmax;
};

// Result of one subcommand before it is wrapped.
struct Outcome {
  std::string status = "PASS";
  json result;
  std::optional<RamseyValue> k;
  int code = kExitOk;
};

// Finite input, loaded and validated.
struct Loaded {
  std::string source;
  std::string digest;
  MedianGraph graph;
  MedianReport median;
  std::optional<WallSet> walls;
};

bool is_usage(ErrorCode c) {
  return c == ErrorCode::kBadParams || c == ErrorCode::kUnknownVertex ||
         c == ErrorCode::kUnknownWall || c == ErrorCode::kSameWall;
}

template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (is_usage(e.code())) throw UsageError(flag + ": " + e.what());
    throw;
  }
}

GeneratorSpec parse_spec(const std::string& flag, const std::string& text) {
  return with_flag(flag, [&] { return parse_generator_spec(text); });
}

Vertex resolve(const MedianGraph& g, const std::string& flag, const std::string& label) {
  if (const auto v = g.find(label)) return *v;
  throw UsageError(flag + ": unknown vertex '" + label + "'");
}

WallId resolve_wall(const WallSet& w, const std::string& flag, WallId h) {
  if (h >= w.size()) {
    throw UsageError(flag + ": unknown wall " + std::to_string(h) + " (there are " +
                     std::to_string(w.size()) + ")");
  }
  return h;
}

std::vector<WallId> every_wall(const WallSet& w) { return all_walls(w); }

Orientation orientation(const Options& o, const MedianGraph& g) {
  Orientation out;
  out.policy = with_flag("--orient", [&] { return parse_orientation_policy(o.orient); });
  out.seed = o.seed;
  if (!o.basepoint.empty()) out.basepoint = resolve(g, "--basepoint", o.basepoint);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("--input: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads and validates; on validation failure `median.pass` is false and no
// walls are computed.
Loaded load(const Options& o) {
  Loaded out;
  GraphDocument doc;
  if (!o.input.empty()) {
    doc = parse_document_text(read_file(o.input));
    out.source = "file:" + o.input;
  } else {
    doc.generator = parse_spec("--generator", o.generator);
    out.source = "generator:" + to_string(*doc.generator);
  }
  out.digest = document_digest(doc);
  out.graph = doc.generator ? with_flag("--generator", [&] { return load_graph(doc); }) : load_graph(doc);
  out.median = verify_median(out.graph);
  if (out.median.pass) out.walls = compute_walls(out.graph);
  return out;
}

using Handler = std::function<Outcome(const Options&, Loaded&)>;

Outcome validate_cmd(const Options&, Loaded& in) {
  Outcome out;
  out.result = to_json(in.graph, in.median);
  if (!in.median.pass) {
    out.status = "FAIL";
    out.code = kExitValidation;
  } else {
    out.result["walls"] = in.walls->size();
    out.result["dimension"] = dimension(*in.walls);
  }
  return out;
}

Outcome walls_cmd(const Options&, Loaded& in) {
  const WallSet& w = *in.walls;
  Outcome out;
  std::size_t crossing_pairs = 0;
  for (WallId h = 0; h < w.size(); ++h) crossing_pairs += w.crossing_row(h).count();
  crossing_pairs /= 2;
  const auto squares = square_crossings(in.graph, w);
  out.result = json{{"count", w.size()},
                    {"dimension", dimension(w)},
                    {"crossing_pairs", crossing_pairs},
                    {"square_witnessed_pairs", squares.size()},
                    {"walls", walls_json(in.graph, w)}};
  return out;
}

Outcome contact_cmd(const Options&, Loaded& in) {
  const ContactGraph c(in.graph, *in.walls);
  Outcome out;
  out.result = to_json(in.graph, *in.walls, c);
  if (c.size() <= 60) out.result["delta_twice"] = four_point_delta_twice(c);
  return out;
}

VertexSet input_set(const Options& o, const MedianGraph& g) {
  VertexSet s = g.empty_set();
  for (const auto& label : o.set) s.set(resolve(g, "--set", label));
  if (s.none()) throw UsageError("--set: at least one vertex is required");
  return s;
}

Outcome hull_cmd(const Options& o, Loaded& in) {
  const VertexSet s = input_set(o, in.graph);
  const auto check = is_convex(in.graph, *in.walls, s);
  const auto hull = convex_hull(*in.walls, s);
  Outcome out;
  out.result = json{{"input", vertex_set(in.graph, s)},
                    {"input_convex", check.convex},
                    {"hull", vertex_set(in.graph, hull.vertices)},
                    {"hull_size", hull.vertices.count()},
                    {"diameter", diameter(*in.walls, hull.vertices)}};
  if (check.witness) {
    const auto& wt = *check.witness;
    out.result["witness"] = vertex_list(in.graph, {wt[0], wt[1], wt[2]});
  }
  if (in.graph.size() <= 1500) {
    const DistanceTable table(in.graph);
    out.result["agrees_with_interval_closure"] = convex_hull_by_medians(table, s) == hull.vertices;
  }
  return out;
}

Outcome gate_cmd(const Options& o, Loaded& in) {
  const VertexSet s = input_set(o, in.graph);
  if (o.vertex.empty()) throw UsageError("--vertex: required");
  const Vertex x = resolve(in.graph, "--vertex", o.vertex);
  Outcome out;
  const auto check = is_convex(in.graph, *in.walls, s);
  if (!check.convex) {
    const auto& wt = *check.witness;
    out.status = "FAIL";
    out.code = kExitValidation;
    out.result = json{{"error", json{{"code", "NOT_CONVEX"}, {"message", "target set is not convex"}}},
                      {"witness", vertex_list(in.graph, {wt[0], wt[1], wt[2]})}};
    return out;
  }
  const ConvexSubcomplex y{s};
  const Vertex g = gate(*in.walls, y, x);
  std::vector<WallId> sep;
  const auto mask = walls_separating(*in.walls, x, s);
  for (auto h = mask.find_first(); h != WallMask::npos; h = mask.find_next(h)) sep.push_back(WallId(h));
  out.result = json{{"vertex", in.graph.label(x)},
                    {"target", vertex_set(in.graph, s)},
                    {"gate", in.graph.label(g)},
                    {"distance", in.walls->distance(x, g)},
                    {"separating", sep}};
  return out;
}

std::string guarantee_line(const ChainExtraction& e) {
  return "≥ " + std::to_string(e.guarantee()) + " = ⌈" + std::to_string(e.wall_count) + "/" +
         std::to_string(e.k.value) + "⌉";
}

Outcome chains_cmd(const Options& o, Loaded& in) {
  const WallSet& w = *in.walls;
  const auto walls = every_wall(w);
  const auto policy = orientation(o, in.graph);
  if (o.facing < 1) throw UsageError("--N: facing bound must be at least 1");
  Outcome out;
  try {
    const auto e = extract_chain(in.graph, w, walls, o.facing, policy);
    const auto longest = longest_chain(w, walls);
    out.k = e.k;
    out.result = json{{"orientation", to_string(policy.policy)},
                      {"extraction", to_json(e)},
                      {"guarantee_line", guarantee_line(e)},
                      {"meets_guarantee", e.chain.size() >= e.guarantee()},
                      {"max_chain", longest.size()},
                      {"max_chain_walls", longest}};
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kFacingBoundViolated) throw;
    const auto found = max_facing_tuple(w, walls, std::size_t(o.facing) + 1);
    out.status = "FAIL";
    out.code = kExitValidation;
    json tuple = json::array();
    for (const auto& h : found.tuple) tuple.push_back(halfspace_json(h));
    out.result = json{{"error", json{{"code", "FACING_BOUND_VIOLATED"}, {"message", err.what()}}},
                      {"witness", tuple}};
  }
  return out;
}

Outcome geodesic_cmd(const Options& o, Loaded& in) {
  const WallSet& w = *in.walls;
  Outcome out;
  if (o.x.empty() != o.y.empty()) throw UsageError(o.x.empty() ? "--x: required with --y" : "--y: required with --x");
  if (!o.x.empty()) {
    const Vertex x = resolve(in.graph, "--x", o.x);
    const Vertex y = resolve(in.graph, "--y", o.y);
    if (x == y) throw UsageError("--y: must differ from --x");
    const auto c = chain_in_geodesic(in.graph, w, x, y);
    out.result = json{{"x", o.x}, {"y", o.y}, {"pencil", to_json(c)},
                      {"path", vertex_list(in.graph, shortest_path(in.graph, x, y))}};
    return out;
  }
  const auto walls = every_wall(w);
  const auto crossing = geodesic_crossing_chain(in.graph, w, walls, orientation(o, in.graph));
  out.k = crossing.extraction.k;
  out.result = json{{"crossing", to_json(in.graph, crossing)},
                    {"max_crossing", to_json(in.graph, max_geodesic_crossing(w, walls))},
                    {"walls", walls.size()}};
  return out;
}

Outcome embed_cmd(const Options& o, Loaded& in) {
  const Vertex x0 = o.basepoint.empty() ? 0 : resolve(in.graph, "--basepoint", o.basepoint);
  if (o.facing < 1) throw UsageError("--N: facing bound must be at least 1");
  const auto r = grid_embedding(in.graph, *in.walls, x0, o.radius.value_or(2), o.facing, orientation(o, in.graph));
  Outcome out;
  out.k = r.k;
  out.result = to_json(in.graph, r);
  out.result["outcome"] = r.embedding ? "embedding" : "facing-tuple";
  return out;
}

Outcome quotient_cmd(const Options& o, Loaded& in) {
  if (o.walls.empty()) throw UsageError("--walls: at least one wall id is required");
  std::vector<WallId> subset;
  for (WallId h : o.walls) subset.push_back(resolve_wall(*in.walls, "--walls", h));
  Outcome out;
  out.result = to_json(in.graph, restriction_quotient(in.graph, *in.walls, subset));
  return out;
}

Outcome quarterspaces_cmd(const Options& o, Loaded& in) {
  const WallSet& w = *in.walls;
  std::optional<std::pair<WallId, WallId>> pair;
  if (o.h || o.v) {
    if (!o.h || !o.v) throw UsageError(o.h ? "--v: required with --h" : "--h: required with --v");
    pair = {resolve_wall(w, "--h", *o.h), resolve_wall(w, "--v", *o.v)};
    if (pair->first == pair->second) throw UsageError("--v: must differ from --h");
  } else {
    for (WallId h = 0; h < w.size() && !pair; ++h) {
      const auto row = w.crossing_row(h);
      const auto k = row.find_next(h);
      if (k != WallMask::npos) pair = {h, WallId(k)};
    }
  }
  Outcome out;
  if (!pair || !w.cross(pair->first, pair->second)) {
    out.status = "FAIL";
    out.code = kExitValidation;
    out.result = json{{"error", json{{"code", "NOT_CROSSING"},
                                     {"message", pair ? "the walls do not cross" : "no crossing pair"}}}};
    return out;
  }
  out.result = to_json(quarterspace_audit(w, pair->first, pair->second));
  out.result["strongly_separated_pairs"] = [&] {
    std::size_t n = 0;
    for (WallId a = 0; a < w.size(); ++a)
      for (WallId b = a + 1; b < w.size(); ++b) n += strongly_separated(w, a, b);
    return n;
  }();
  return out;
}

Outcome hierarchy_cmd(const Options& o, Loaded& in) {
  const WallSet& w = *in.walls;
  const Vertex x = o.x.empty() ? 0 : resolve(in.graph, "--x", o.x);
  Vertex y = 0;
  if (o.y.empty()) {
    const auto d = bfs_distances(in.graph, x);
    y = Vertex(std::max_element(d.begin(), d.end()) - d.begin());
  } else {
    y = resolve(in.graph, "--y", o.y);
  }
  if (x == y) throw UsageError("--y: must differ from --x");
  std::optional<WallId> hx, hy;
  if (o.hx) hx = resolve_wall(w, "--hx", *o.hx);
  if (o.hy) hy = resolve_wall(w, "--hy", *o.hy);
  const ContactGraph c(in.graph, w);
  const auto p = with_flag("--hx/--hy", [&] { return hierarchy_path(in.graph, w, c, x, y, hx, hy); });
  const auto audit = check_hierarchy_path(in.graph, w, c, x, y, p);
  Outcome out;
  out.result = json{{"x", in.graph.label(x)},
                    {"y", in.graph.label(y)},
                    {"distance", w.distance(x, y)},
                    {"path", to_json(in.graph, p)},
                    {"audit", to_json(audit)}};
  if (!audit.ok()) {
    out.status = "FAIL";
    out.code = kExitValidation;
  }
  return out;
}

Outcome finite_growth(const Options& o, Loaded& in) {
  const std::uint32_t rmax = o.radius.value_or(4);
  const Vertex x0 = o.basepoint.empty() ? 0 : resolve(in.graph, "--basepoint", o.basepoint);
  json rows = json::array();
  for (std::uint32_t r = 1; r <= rmax; ++r) {
    const auto hr = hyperplanes_in_ball(in.graph, *in.walls, x0, r);
    const auto facing = max_facing_tuple(*in.walls, hr);
    rows.push_back(to_json(GrowthRow{r, ball(in.graph, x0, r).count(), hr.size(),
                                     facing.tuple.size(), facing.certified}));
  }
  Outcome out;
  out.result = json{{"basepoint", in.graph.label(x0)}, {"rows", rows}};
  return out;
}

// Commands on lazy complexes; they never touch a finite graph.
struct LazyInput {
  std::string source;
  std::string digest;
  std::unique_ptr<LazyComplex> complex;
};

LazyInput load_lazy(const Options& o) {
  if (!o.input.empty()) throw UsageError("--input: this command needs --generator naming an infinite complex");
  LazyInput out;
  GraphDocument doc;
  doc.generator = parse_spec("--generator", o.generator);
  out.source = "generator:" + to_string(*doc.generator);
  out.digest = document_digest(doc);
  out.complex = with_flag("--generator", [&] { return make_lazy_complex(*doc.generator); });
  return out;
}

Outcome dynamics_cmd(const Options& o, const LazyInput& in) {
  if (o.nmax < 1) throw UsageError("--nmax: must be at least 1");
  const auto g = with_flag("--auto", [&] {
    return in.complex->automorphism(parse_generator_spec(o.automorphism));
  });
  const std::uint32_t r = o.radius.value_or(4u * std::uint32_t(o.nmax));
  const auto c = with_flag("--R", [&] { return classify(*in.complex, g, o.nmax, r); });
  Outcome out;
  out.result = to_json(c);
  json table = json::array();
  for (int n = 1; n <= o.nmax; ++n) {
    const auto i = std::size_t(n - 1);
    table.push_back(json{{"n", n},
                         {"displacement", c.slope.distances[i]},
                         {"contact", c.contact_growth[i + 1]},
                         {"projection", c.projection.per_step[i]}});
  }
  out.result["series"] = table;
  return out;
}

Outcome lazy_growth(const Options& o, const LazyInput& in) {
  const std::uint32_t rmax = o.radius.value_or(4);
  if (rmax < 1) throw UsageError("--R: must be at least 1");
  std::vector<std::uint32_t> radii;
  for (std::uint32_t r = 1; r <= rmax; ++r) radii.push_back(r);
  json rows = json::array();
  for (const auto& row : with_flag("--R", [&] { return growth_profile(*in.complex, radii); })) {
    rows.push_back(to_json(row));
  }
  const Window win(*in.complex, rmax);
  json shapes = json::array();
  for (const auto& s : hyperplane_essentiality_profile(win)) shapes.push_back(to_json(s));
  Outcome out;
  out.result = json{{"complex", in.complex->name()},
                    {"rows", rows},
                    {"essentiality", to_json(essentiality_profile(*in.complex, radii))},
                    {"wall_shapes", shapes}};
  return out;
}

json error_json(const Error& e) {
  return json{{"error", json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

int emit(const Options& o, const json& report, std::ostream& out, std::ostream& err) {
  const std::string text = o.format == "text" ? render_text(report) : render_json(report);
  if (o.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(o.out, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: --out: cannot write '" << o.out << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cubecomb: hyperplanes, contact graphs and chains on median graphs"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  Options o;

  const std::map<std::string, std::string> finite_cmds{
      {"validate", "check the median property, with a witness triple on failure"},
      {"walls", "list walls with representative edges, halfspace sizes and crossings"},
      {"contact", "contact graph of the walls"},
      {"hull", "convex hull of --set"},
      {"gate", "gate of --vertex onto the convex set --set"},
      {"chains", "Dilworth chain extraction under a facing bound --N"},
      {"geodesic", "chains crossed by a geodesic"},
      {"embed", "ball embedding into a grid, or a facing tuple"},
      {"quotient", "restriction quotient to --walls"},
      {"quarterspaces", "quarterspace audit of a crossing pair"},
      {"hierarchy", "hierarchy path from --x to --y with its audit"},
      {"dynamics", "classify an automorphism of an infinite complex"},
      {"growth", "ball, wall and facing growth with essentiality profiles"}};

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : finite_cmds) {
    auto* sub = app.add_subcommand(name, help);
    auto* input = sub->add_option("--input", o.input, "GraphDocument JSON file");
    auto* gen = sub->add_option("--generator", o.generator, "generator spec such as grid:3,3");
    input->excludes(gen);
    sub->add_option("--out", o.out, "write the report here instead of standard output");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", o.seed, "seed for randomized choices");
    subs[name] = sub;
  }
  for (const char* name : {"chains", "embed", "geodesic"}) {
    subs[name]->add_option("--orient", o.orient, "lex-least, basepoint or random");
    subs[name]->add_option("--N", o.facing, "facing bound");
  }
  for (const char* name : {"chains", "embed", "geodesic", "growth"}) {
    subs[name]->add_option("--basepoint", o.basepoint, "basepoint vertex label");
  }
  subs["hull"]->add_option("--set", o.set, "vertex labels")->required();
  subs["gate"]->add_option("--set", o.set, "vertex labels of a convex set")->required();
  subs["gate"]->add_option("--vertex", o.vertex, "vertex to project")->required();
  for (const char* name : {"geodesic", "hierarchy"}) {
    subs[name]->add_option("--x", o.x, "start vertex label");
    subs[name]->add_option("--y", o.y, "end vertex label");
  }
  subs["hierarchy"]->add_option("--hx", o.hx, "wall through --x");
  subs["hierarchy"]->add_option("--hy", o.hy, "wall through --y");
  for (const char* name : {"embed", "dynamics", "growth"}) {
    subs[name]->add_option("--R", o.radius, "radius");
  }
  subs["quotient"]->add_option("--walls", o.walls, "wall ids to keep")->required();
  subs["quarterspaces"]->add_option("--h", o.h, "first wall id");
  subs["quarterspaces"]->add_option("--v", o.v, "second wall id");
  subs["dynamics"]->add_option("--auto", o.automorphism, "automorphism, e.g. shift or shift:1,1");
  subs["dynamics"]->add_option("--nmax", o.nmax, "largest power examined");

  const std::map<std::string, Handler> finite_handlers{
      {"validate", validate_cmd}, {"walls", walls_cmd},       {"contact", contact_cmd},
      {"hull", hull_cmd},         {"gate", gate_cmd},         {"chains", chains_cmd},
      {"geodesic", geodesic_cmd}, {"embed", embed_cmd},       {"quotient", quotient_cmd},
      {"quarterspaces", quarterspaces_cmd},                   {"hierarchy", hierarchy_cmd},
      {"growth", finite_growth}};

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool lazy = command == "dynamics" || (command == "growth" && o.input.empty() && [&] {
                      // growth runs on the infinite complex when the name has one
                      try {
                        return make_lazy_complex(parse_generator_spec(o.generator)) != nullptr;
                      } catch (const Error&) {
                        return false;
                      }
                    }());
  if (o.input.empty() && o.generator.empty()) {
    err << "error: --input or --generator is required\n";
    return kExitUsage;
  }

  std::string source;
  std::string digest;
  Outcome result;
  try {
    if (lazy) {
      const auto in = load_lazy(o);
      source = in.source;
      digest = in.digest;
      result = command == "dynamics" ? dynamics_cmd(o, in) : lazy_growth(o, in);
    } else {
      Loaded in = load(o);
      source = in.source;
      digest = in.digest;
      if (!in.median.pass && command != "validate") {
        result.status = "FAIL";
        result.code = kExitValidation;
        result.result = json{{"error", json{{"code", "NOT_MEDIAN_GRAPH"}, {"message", in.median.detail}}},
                             {"median", to_json(in.graph, in.median)}};
      } else {
        result = finite_handlers.at(command)(o, in);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (is_usage(e.code())) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    result = Outcome{"FAIL", error_json(e), std::nullopt, kExitValidation};
  }

  const json report = envelope(command, source, digest, result.k, result.status, result.result);
  if (emit(o, report, out, err) != 0) return kExitUsage;
  return result.code;
}

}  // namespace cubecomb
