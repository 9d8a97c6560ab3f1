#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "tensorbrick/algebra.hpp"
#include "tensorbrick/brickfamily.hpp"
#include "tensorbrick/catalog.hpp"
#include "tensorbrick/cli.hpp"
#include "tensorbrick/errors.hpp"
#include "tensorbrick/io.hpp"
#include "tensorbrick/sttilt.hpp"
#include "tensorbrick/tensor.hpp"

namespace py = pybind11;
using namespace tensorbrick;

namespace {

std::optional<Field> maybe_field(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  return Field::parse(*name);
}

Field field_or_q(const std::string& name) { return Field::parse(name); }

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["verdict"] = to_string(c.verdict);
  d["evidence"] = c.evidence;
  d["multiple_arrow"] = c.multiple_arrow;
  d["warnings"] = c.warnings;
  py::list bricks;
  for (const auto& b : c.bricks) {
    py::dict x;
    x["lambda"] = b.lambda.to_string();
    x["dims"] = b.dims;
    x["relations"] = b.relations;
    x["indecomposable"] = b.indecomposable;
    x["socle_criterion"] = b.socle_criterion;
    x["brick"] = b.brick;
    x["end_dimension"] = b.end_dimension;
    x["socle_matches_prediction"] = b.socle_matches;
    bricks.append(x);
  }
  d["bricks"] = bricks;
  d["non_isomorphic_pairs"] = c.non_isomorphic_pairs;
  d["failure"] = c.failure;
  d["note"] = c.note;
  d["log"] = c.log;
  if (c.spec) {
    d["n"] = c.spec->n;
    d["m"] = c.spec->m;
    d["swapped"] = c.spec->swapped;
  }
  return d;
}

py::dict graph_dict(const ExchangeGraph& g) {
  py::dict d;
  d["nodes"] = g.nodes.size();
  d["complete"] = g.complete;
  d["verdict"] = g.verdict();
  std::vector<std::string> keys;
  for (const auto& n : g.nodes) keys.push_back(key_to_string(n.key()));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges) edges.emplace_back(keys[e.from], keys[e.to]);
  std::sort(keys.begin(), keys.end());
  std::sort(edges.begin(), edges.end());
  d["keys"] = keys;
  d["edges"] = edges;
  return d;
}

std::vector<Scalar> to_scalars(const std::vector<std::string>& values) {
  std::vector<Scalar> out;
  for (const auto& v : values) out.push_back(Scalar::parse(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for tensor products of bound quiver algebras";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<FieldMismatch>(m, "FieldMismatch", error.ptr());
  py::register_exception<NotAdmissible>(m, "NotAdmissible", error.ptr());
  py::register_exception<Incomplete>(m, "Incomplete", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());

  py::class_<BoundAlgebra, std::shared_ptr<BoundAlgebra>>(m, "Algebra")
      .def_static(
          "from_text",
          [](const std::string& text, std::optional<std::string> field) {
            return std::const_pointer_cast<BoundAlgebra>(parse_algebra_text(text, maybe_field(field)));
          },
          py::arg("text"), py::arg("field") = py::none())
      .def_static(
          "from_file",
          [](const std::string& path, std::optional<std::string> field) {
            return std::const_pointer_cast<BoundAlgebra>(read_algebra_file(path, maybe_field(field)));
          },
          py::arg("path"), py::arg("field") = py::none())
      .def_property_readonly("dimension", &BoundAlgebra::dimension)
      .def_property_readonly("vertex_count", &BoundAlgebra::vertex_count)
      .def_property_readonly("arrow_count", [](const BoundAlgebra& a) { return a.quiver().arrow_count(); })
      .def_property_readonly("bound", &BoundAlgebra::bound)
      .def_property_readonly("field", [](const BoundAlgebra& a) { return a.field().name(); })
      .def_property_readonly("vertices", [](const BoundAlgebra& a) { return a.quiver().vertices(); })
      .def("to_text", [](const BoundAlgebra& a) { return serialize_algebra(a); })
      .def("__repr__", [](const BoundAlgebra& a) {
        std::ostringstream out;
        out << "<Algebra over " << a.field().name() << ": " << a.vertex_count() << " vertices, "
            << a.quiver().arrow_count() << " arrows, dimension " << a.dimension() << ">";
        return out.str();
      });

  auto wrap = [](AlgebraPtr a) { return std::const_pointer_cast<BoundAlgebra>(a); };
  m.def("nakayama", [wrap](std::size_t n, std::size_t l, const std::string& field) {
    return wrap(nakayama_algebra(n, l, field_or_q(field)));
  }, py::arg("n"), py::arg("loewy_length"), py::arg("field") = "Q");
  m.def("truncated_polynomial", [wrap](std::size_t l, const std::string& field) {
    return wrap(truncated_polynomial_algebra(l, field_or_q(field)));
  }, py::arg("l"), py::arg("field") = "Q");
  m.def("linear_path", [wrap](std::size_t n, const std::string& field) {
    return wrap(linear_path_algebra(n, field_or_q(field)));
  }, py::arg("n"), py::arg("field") = "Q");
  m.def("kronecker", [wrap](const std::string& field) { return wrap(kronecker_algebra(field_or_q(field))); },
        py::arg("field") = "Q");

  m.def("tensor", [wrap](std::shared_ptr<BoundAlgebra> a, std::shared_ptr<BoundAlgebra> b) {
    return wrap(tensor_product_algebra(a, b).algebra());
  });
  m.def("is_symmetric", [](std::shared_ptr<BoundAlgebra> a, std::uint64_t seed) {
    return to_string(is_symmetric(*a, seed).decision);
  }, py::arg("algebra"), py::arg("seed") = 0);
  m.def("certify", [](std::shared_ptr<BoundAlgebra> a, std::shared_ptr<BoundAlgebra> b,
                      const std::vector<std::string>& lambdas, std::uint64_t seed) {
    return certificate_dict(certify_tensor(a, b, to_scalars(lambdas), seed));
  }, py::arg("left"), py::arg("right"), py::arg("lambdas") = std::vector<std::string>{}, py::arg("seed") = 0);
  m.def("explore", [](std::shared_ptr<BoundAlgebra> a, std::size_t cap) { return graph_dict(explore(a, cap)); },
        py::arg("algebra"), py::arg("cap") = 10000);
  m.def("poset_isomorphic", [](std::shared_ptr<BoundAlgebra> a, std::shared_ptr<BoundAlgebra> b, std::size_t cap) {
    return poset_isomorphic(explore(a, cap), explore(b, cap));
  }, py::arg("left"), py::arg("right"), py::arg("cap") = 10000);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
