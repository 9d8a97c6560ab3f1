#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tensorbrick/cli.hpp"
#include "tensorbrick/io.hpp"
#include "tensorbrick/tensor.hpp"

using namespace tensorbrick;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TENSORBRICK_DATA_DIR) + "/" + name; }

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "tensorbrick_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string product_file(const std::string& a, const std::string& b, const std::string& name) {
  const std::string path = (scratch() / name).string();
  REQUIRE(run({"tensor", data(a), data(b), "--out", path}).code == 0);
  return path;
}

}  // namespace

TEST_CASE("tensor command on the example pair") {
  const std::string path = (scratch() / "ab.alg").string();
  Run r = run({"tensor", data("exampleA.alg"), data("exampleB.alg"), "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out == "72 = 6 * 12\n");
  AlgebraPtr p = read_algebra_file(path);
  CHECK(p->vertex_count() == 6);
  CHECK(p->quiver().arrow_count() == 12);
  CHECK(p->dimension() == 72);

  Run inline_run = run({"tensor", data("exampleA.alg"), data("exampleB.alg")});
  CHECK(inline_run.code == 0);
  CHECK(inline_run.out == slurp(path) + "# 72 = 6 * 12\n");
}

TEST_CASE("tensor with the point algebra only renames") {
  const std::string path = product_file("exampleA.alg", "point.alg", "a_point.alg");
  std::string text = slurp(path);
  for (const std::string v : {"1", "2"}) {
    const std::string from = "(" + v + ",1)";
    for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from)) text.replace(pos, from.size(), v);
  }
  for (const std::string a : {"alpha1", "alpha2"}) {
    const std::string from = "(" + a + ",e:1)";
    for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from)) text.replace(pos, from.size(), a);
  }
  AlgebraPtr renamed = parse_algebra_text(text);
  AlgebraPtr original = read_algebra_file(data("exampleA.alg"));
  CHECK(renamed->quiver() == original->quiver());
  CHECK(renamed->basis() == original->basis());
  CHECK(renamed->dimension() == original->dimension());
}

TEST_CASE("mismatched fields and bad input exit with 1") {
  Run r = run({"tensor", data("exampleA.alg"), data("nakayama23_gf3.alg")});
  CHECK(r.code == 1);
  CHECK(r.err.find("FieldMismatch") != std::string::npos);
  CHECK(run({"tensor", data("exampleA.alg"), data("nakayama23_gf3.alg"), "--field-override", "GF(3)"}).code == 0);

  const std::string bad = (scratch() / "bad.alg").string();
  {
    std::ofstream out(bad);
    out << "vertex 1\narrow a: 1 -> 2\nbound 2\n";
  }
  Run parse = run({"sttilt", bad});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("bad.alg:2:") != std::string::npos);
  CHECK(run({}).code == 1);
  CHECK(run({"sttilt"}).code == 1);
  CHECK(run({"sttilt", data("a2.alg"), "--cap", "0"}).code == 1);
  CHECK(run({"certify", data("exampleA.alg"), data("exampleB.alg"), "--lambdas", "1,x"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("certify command") {
  Run r = run({"certify", data("exampleA.alg"), data("exampleB.alg")});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "tau-tilting infinite");
  CHECK(j["bricks"].size() == 3);
  CHECK(j["seed"] == 0);
  CHECK(j["non_isomorphic_pairs"].size() == 3);
  CHECK_FALSE(j.contains("timing_seconds"));

  Run local = run({"certify", data("local.alg"), data("exampleB.alg")});
  CHECK(local.code == 2);
  Json l = Json::parse(local.out);
  CHECK(l["verdict"] == "inconclusive");
  bool warned = false;
  for (const auto& w : l["warnings"]) warned |= w.get<std::string>().find("hypothesis violated: local factor") == 0;
  CHECK(warned);

  Run kron = run({"certify", data("kronecker.alg"), data("exampleA.alg")});
  CHECK(kron.code == 0);
  CHECK(Json::parse(kron.out)["evidence"] == "multiple-arrow");

  Run timed = run({"certify", data("exampleA.alg"), data("exampleB.alg"), "--timing", "--lambdas", "1,-1"});
  CHECK(timed.code == 0);
  CHECK(Json::parse(timed.out).contains("timing_seconds"));
}

TEST_CASE("certify exports family members") {
  const auto dir = scratch() / "export";
  std::filesystem::remove_all(dir);
  Run r = run({"certify", data("exampleA.alg"), data("exampleB.alg"), "--lambdas", "2,5", "--export-reps",
               dir.string(), "--out", (scratch() / "cert.json").string()});
  CHECK(r.code == 0);
  AlgebraPtr product = read_algebra_file((dir / "tensor.alg").string());
  std::ifstream in(dir / "member_2.rep");
  Representation m = parse_representation(in, product);
  CHECK(m.total_dimension() == 5);
  CHECK(check_relations(m));
  CHECK(Json::parse(slurp(scratch() / "cert.json"))["exported"]["members"].size() == 2);
}

TEST_CASE("sttilt command") {
  Run local = run({"sttilt", data("local.alg")});
  CHECK(local.code == 0);
  Json l = Json::parse(local.out);
  CHECK(l["graph"]["nodes"] == 2);
  CHECK(l["graph"]["complete"] == true);

  const std::string dot = (scratch() / "a2.dot").string();
  Run a2 = run({"sttilt", data("a2.alg"), "--dot", dot});
  CHECK(a2.code == 0);
  Json j = Json::parse(a2.out);
  CHECK(j["graph"]["nodes"] == 5);
  CHECK(j["graph"]["hasse_edges"].size() == 5);
  const std::string text = slurp(dot);
  std::size_t edges = 0;
  for (auto pos = text.find("->"); pos != std::string::npos; pos = text.find("->", pos + 1)) ++edges;
  CHECK(edges == 5);

  const std::string ab = product_file("exampleA.alg", "exampleB.alg", "ab_sttilt.alg");
  Run big = run({"sttilt", ab, "--cap", "500"});
  CHECK(big.code == 2);
  Json b = Json::parse(big.out);
  CHECK(b["graph"]["complete"] == false);
  CHECK(b["graph"]["verdict"].get<std::string>().find("cap exceeded") != std::string::npos);
}

TEST_CASE("poset-compare command") {
  const std::string al = product_file("exampleA.alg", "local.alg", "a_local.alg");
  Run iso = run({"poset-compare", data("exampleA.alg"), al});
  CHECK(iso.code == 0);
  Json j = Json::parse(iso.out);
  CHECK(j["verdict"] == "isomorphic");
  CHECK(j["witness"].size() == j["left"]["nodes"]);

  Run diff = run({"poset-compare", data("a2.alg"), data("local.alg")});
  CHECK(diff.code == 0);
  CHECK(Json::parse(diff.out)["verdict"] == "not isomorphic");

  Run capped = run({"poset-compare", data("a2.alg"), data("kronecker.alg"), "--cap", "20"});
  CHECK(capped.code == 2);
  CHECK(Json::parse(capped.out)["verdict"] == "incomplete");
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"certify", data("exampleA.alg"), data("exampleB.alg"), "--seed", "17"},
      {"sttilt", data("a2.alg")},
      {"poset-compare", data("a2.alg"), data("local.alg")},
  };
  for (const auto& c : commands) CHECK(run(c).out == run(c).out);
}
