#include "tensorbrick/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "tensorbrick/brickfamily.hpp"
#include "tensorbrick/errors.hpp"
#include "tensorbrick/io.hpp"
#include "tensorbrick/sttilt.hpp"
#include "tensorbrick/tensor.hpp"

namespace tensorbrick {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string left;
  std::string right;
  std::string out;
  std::string dot;
  std::string export_dir;
  std::string field_override;
  std::string lambdas;
  std::uint64_t seed = 0;
  std::size_t cap = 10000;
  bool timing = false;
};

std::optional<Field> override_field(const Options& o) {
  if (o.field_override.empty()) return std::nullopt;
  return Field::parse(o.field_override);
}

std::vector<Scalar> parse_lambdas(const std::string& text) {
  std::vector<Scalar> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(Scalar::parse(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad lambda value '" + item + "'");
    }
  }
  return out;
}

Json algebra_summary(const BoundAlgebra& a) {
  Json j;
  j["field"] = a.field().name();
  j["vertices"] = a.vertex_count();
  j["arrows"] = a.quiver().arrow_count();
  j["dimension"] = a.dimension();
  j["bound"] = a.bound();
  return j;
}

Json header(const std::string& command, const Json& inputs, const Options& o) {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["field_override"] = o.field_override.empty() ? Json(nullptr) : Json(o.field_override);
  j["seed"] = o.seed;
  return j;
}

void emit(Json r, const Options& o, std::ostream& out, Clock::time_point start) {
  if (o.timing)
    r["timing_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  const std::string text = r.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    write_file_atomically(o.out, text);
    out << "report written to " << o.out << "\n";
  }
}

int cmd_tensor(const Options& o, std::ostream& out) {
  auto field = override_field(o);
  AlgebraPtr a = read_algebra_file(o.left, field);
  AlgebraPtr b = read_algebra_file(o.right, field);
  TensorProduct tp = tensor_product_algebra(a, b);
  const std::string text = serialize_algebra(*tp.algebra());
  const std::string line = std::to_string(tp.algebra()->dimension()) + " = " + std::to_string(a->dimension()) +
                           " * " + std::to_string(b->dimension());
  if (o.out.empty()) {
    out << text << "# " << line << "\n";
  } else {
    write_file_atomically(o.out, text);
    out << line << "\n";
  }
  return tp.algebra()->dimension() == a->dimension() * b->dimension() ? kExitDefinite : kExitError;
}

Json brick_json(const BrickCheck& b) {
  Json j;
  j["lambda"] = b.lambda.to_string();
  j["dims"] = b.dims;
  j["relations"] = b.relations;
  j["indecomposable"] = b.indecomposable;
  j["field_extension"] = b.field_extension;
  j["socle_criterion"] = b.socle_criterion;
  j["brick"] = b.brick;
  j["end_dimension"] = b.end_dimension;
  j["socle_matches_prediction"] = b.socle_matches;
  return j;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  auto field = override_field(o);
  AlgebraPtr a = read_algebra_file(o.left, field);
  AlgebraPtr b = read_algebra_file(o.right, field);
  std::vector<Scalar> lambdas = parse_lambdas(o.lambdas);
  if (lambdas.empty()) lambdas = default_lambdas(a->field());
  Certificate cert = certify_tensor(a, b, lambdas, o.seed);

  Json report = header("certify", Json{{"left", o.left}, {"right", o.right}}, o);
  Json ls = Json::array();
  for (const auto& l : lambdas) ls.push_back(l.to_string());
  report["lambdas"] = ls;
  report["left"] = algebra_summary(*a);
  report["right"] = algebra_summary(*b);
  report["algebra"] = std::filesystem::path(o.left).stem().string() + " (x) " +
                      std::filesystem::path(o.right).stem().string();
  report["verdict"] = to_string(cert.verdict);
  report["evidence"] = cert.evidence;
  report["warnings"] = cert.warnings;
  if (!cert.multiple_arrow.empty()) report["multiple_arrow"] = cert.multiple_arrow;
  if (cert.spec) {
    const FamilySpec& s = *cert.spec;
    const Quiver& qa = s.tensor->left()->quiver();
    const Quiver& qb = s.tensor->right()->quiver();
    Json cycles;
    cycles["n"] = s.n;
    cycles["m"] = s.m;
    cycles["swapped"] = s.swapped;
    Json ca = Json::array(), cb = Json::array();
    for (auto arrow : s.cycle_a.arrows) ca.push_back(qa.arrow(arrow).id);
    for (auto arrow : s.cycle_b.arrows) cb.push_back(qb.arrow(arrow).id);
    cycles["cycle_a"] = ca;
    cycles["cycle_b"] = cb;
    report["cycles"] = cycles;
    Json u;
    u["dims"] = s.u.module.dims();
    u["l"] = s.l;
    u["minimality"] = s.u.minimality_note;
    report["quotient_u"] = u;
  }
  Json bricks = Json::array();
  for (const auto& bc : cert.bricks) bricks.push_back(brick_json(bc));
  report["bricks"] = bricks;
  Json pairs = Json::array();
  for (const auto& [i, j] : cert.non_isomorphic_pairs)
    pairs.push_back(Json::array({cert.bricks[i].lambda.to_string(), cert.bricks[j].lambda.to_string()}));
  report["non_isomorphic_pairs"] = pairs;
  report["failure"] = cert.failure ? Json(*cert.failure) : Json(nullptr);
  report["note"] = cert.note ? Json(*cert.note) : Json(nullptr);
  report["log"] = cert.log;

  if (!o.export_dir.empty() && cert.spec) {
    std::filesystem::create_directories(o.export_dir);
    const std::filesystem::path dir(o.export_dir);
    write_file_atomically((dir / "tensor.alg").string(), serialize_algebra(*cert.spec->tensor->algebra()));
    Json files = Json::array();
    for (std::size_t i = 0; i < cert.bricks.size(); ++i) {
      if (!cert.bricks[i].relations) continue;
      const std::string name = "member_" + std::to_string(i + 1) + ".rep";
      write_file_atomically((dir / name).string(),
                            serialize_representation(build_family_member(*cert.spec, cert.bricks[i].lambda)));
      files.push_back(name);
    }
    report["exported"] = Json{{"directory", o.export_dir}, {"algebra", "tensor.alg"}, {"members", files}};
  }
  emit(std::move(report), o, out, start);
  return cert.verdict == Verdict::TauTiltingInfinite ? kExitDefinite : kExitInconclusive;
}

Json graph_json(const ExchangeGraph& g) {
  std::vector<GKey> keys;
  for (const auto& node : g.nodes) keys.push_back(node.key());
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  Json j;
  j["nodes"] = g.nodes.size();
  j["complete"] = g.complete;
  j["verdict"] = g.verdict();
  Json nodes = Json::array();
  for (std::size_t i : order) {
    Json n;
    n["g_vectors"] = key_to_string(keys[i]);
    n["summands"] = g.nodes[i].summands().size();
    n["excluded"] = g.nodes[i].excluded().size();
    nodes.push_back(n);
  }
  j["pairs"] = nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges) edges.emplace_back(key_to_string(keys[e.from]), key_to_string(keys[e.to]));
  std::sort(edges.begin(), edges.end());
  Json hasse = Json::array();
  for (const auto& [from, to] : edges) hasse.push_back(Json{{"above", from}, {"below", to}});
  j["hasse_edges"] = hasse;
  return j;
}

int cmd_sttilt(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  AlgebraPtr a = read_algebra_file(o.left, override_field(o));
  ExchangeGraph g = explore(a, o.cap);
  Json report = header("sttilt", Json{{"algebra", o.left}}, o);
  report["cap"] = o.cap;
  report["algebra"] = algebra_summary(*a);
  report["graph"] = graph_json(g);
  if (!o.dot.empty()) {
    write_file_atomically(o.dot, to_dot(g));
    report["dot"] = o.dot;
  }
  emit(std::move(report), o, out, start);
  return g.complete ? kExitDefinite : kExitInconclusive;
}

int cmd_poset_compare(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  auto field = override_field(o);
  AlgebraPtr a = read_algebra_file(o.left, field);
  AlgebraPtr b = read_algebra_file(o.right, field);
  ExchangeGraph ga = explore(a, o.cap);
  ExchangeGraph gb = explore(b, o.cap);
  Json report = header("poset-compare", Json{{"left", o.left}, {"right", o.right}}, o);
  report["cap"] = o.cap;
  report["left"] = Json{{"nodes", ga.nodes.size()}, {"complete", ga.complete}};
  report["right"] = Json{{"nodes", gb.nodes.size()}, {"complete", gb.complete}};
  int code = kExitDefinite;
  try {
    auto witness = poset_isomorphism(ga, gb);
    report["verdict"] = witness ? "isomorphic" : "not isomorphic";
    if (witness) {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (std::size_t i = 0; i < witness->size(); ++i)
        pairs.emplace_back(key_to_string(ga.nodes[i].key()), key_to_string(gb.nodes[(*witness)[i]].key()));
      std::sort(pairs.begin(), pairs.end());
      Json w = Json::array();
      for (const auto& [x, y] : pairs) w.push_back(Json{{"left", x}, {"right", y}});
      report["witness"] = w;
    }
  } catch (const Incomplete& e) {
    report["verdict"] = "incomplete";
    report["reason"] = std::string("Incomplete: ") + e.what();
    code = kExitInconclusive;
  }
  emit(std::move(report), o, out, start);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for tensor products of bound quiver algebras.\n"
               "Algebra files (.alg) list 'field', 'vertex', 'arrow id: s -> t', 'relation', "
               "'zero-paths-of-length' and 'bound' lines; paths compose left to right, written a.b.c.",
               "tensorbrick"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field-override", o.field_override, "Reinterpret inputs over Q or GF(p)");
    sub->add_option("--out", o.out, "Write the result to this file");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
    sub->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
  };

  CLI::App* tensor = app.add_subcommand("tensor", "Presentation of A (x) B");
  tensor->add_option("left", o.left, "Algebra A")->required();
  tensor->add_option("right", o.right, "Algebra B")->required();
  add_common(tensor);

  CLI::App* certify = app.add_subcommand("certify", "Certify tau-tilting infiniteness of A (x) B via a brick family");
  certify->add_option("left", o.left, "Algebra A")->required();
  certify->add_option("right", o.right, "Algebra B")->required();
  certify->add_option("--lambdas", o.lambdas, "Comma-separated nonzero family parameters");
  certify->add_option("--export-reps", o.export_dir, "Directory for the product algebra and family members");
  add_common(certify);
  add_seed(certify);

  CLI::App* sttilt = app.add_subcommand("sttilt", "Explore support tau-tilting pairs by mutation");
  sttilt->add_option("algebra", o.left, "Algebra")->required();
  sttilt->add_option("--cap", o.cap, "Maximum number of pairs")->capture_default_str()->check(CLI::PositiveNumber);
  sttilt->add_option("--dot", o.dot, "Write the Hasse diagram in DOT format");
  add_common(sttilt);
  add_seed(sttilt);

  CLI::App* compare = app.add_subcommand("poset-compare", "Compare support tau-tilting posets");
  compare->add_option("left", o.left, "First algebra")->required();
  compare->add_option("right", o.right, "Second algebra")->required();
  compare->add_option("--cap", o.cap, "Maximum number of pairs per side")->capture_default_str()->check(
      CLI::PositiveNumber);
  add_common(compare);
  add_seed(compare);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitDefinite : kExitError;
  }

  try {
    if (tensor->parsed()) return cmd_tensor(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (sttilt->parsed()) return cmd_sttilt(o, out);
    if (compare->parsed()) return cmd_poset_compare(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const FieldMismatch& e) {
    err << "FieldMismatch: " << e.what() << "\n";
  } catch (const NotAdmissible& e) {
    err << "NotAdmissible: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace tensorbrick
