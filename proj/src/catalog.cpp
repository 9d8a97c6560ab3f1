#include "tensorbrick/catalog.hpp"

namespace tensorbrick {

std::vector<Relation> zero_paths_of_length(const Quiver& q, std::size_t length,
                                           const std::vector<std::size_t>* allowed_arrows) {
  std::vector<Relation> out;
  for (auto& p : paths_of_length(q, length, allowed_arrows)) out.push_back(Relation{{Term{Scalar(1), p}}});
  return out;
}

AlgebraPtr nakayama_algebra(std::size_t n, std::size_t loewy_length, const Field& field,
                            const std::string& arrow_prefix) {
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) q.add_arrow(arrow_prefix + std::to_string(i + 1), i, (i + 1) % n);
  auto rels = zero_paths_of_length(q, loewy_length);
  return BoundAlgebra::build(std::move(q), std::move(rels), field, loewy_length);
}

AlgebraPtr linear_path_algebra(std::size_t n, const Field& field) {
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), i - 1, i);
  return BoundAlgebra::build(std::move(q), {}, field, n);
}

AlgebraPtr truncated_polynomial_algebra(std::size_t l, const Field& field) {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("x", 0, 0);
  auto rels = zero_paths_of_length(q, l);
  return BoundAlgebra::build(std::move(q), std::move(rels), field, l);
}

AlgebraPtr point_algebra(const Field& field) {
  Quiver q;
  q.add_vertex("1");
  return BoundAlgebra::build(std::move(q), {}, field, 1);
}

AlgebraPtr kronecker_algebra(const Field& field) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 0, 1);
  return BoundAlgebra::build(std::move(q), {}, field, 2);
}

}  // namespace tensorbrick
