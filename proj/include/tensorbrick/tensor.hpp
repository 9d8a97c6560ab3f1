#pragma once

#include "tensorbrick/algebra.hpp"

namespace tensorbrick {

// Presentation of A (x) B. Vertex (a, b) has index a * |B_0| + b and id "(a,b)".
// Horizontal arrow (alpha, e_b) runs (s(alpha), b) -> (t(alpha), b); vertical
// arrow (e_a, beta) runs (a, s(beta)) -> (a, t(beta)). Horizontal arrows come
// first, ordered by (alpha, b); vertical ones follow, ordered by (a, beta).
class TensorProduct {
 public:
  TensorProduct(AlgebraPtr left, AlgebraPtr right);

  const AlgebraPtr& algebra() const { return product_; }
  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }

  std::size_t vertex(std::size_t a, std::size_t b) const { return a * nb0_ + b; }
  std::size_t horizontal_arrow(std::size_t alpha, std::size_t b) const { return alpha * nb0_ + b; }
  std::size_t vertical_arrow(std::size_t a, std::size_t beta) const { return na1_ * nb0_ + a * nb1_ + beta; }
  std::pair<std::size_t, std::size_t> vertex_pair(std::size_t v) const { return {v / nb0_, v % nb0_}; }

  // Arrow-by-arrow lift of a path of A at the B-vertex b, and the vertical twin.
  Path lift_horizontal(const Path& p, std::size_t b) const;
  Path lift_vertical(std::size_t a, const Path& p) const;

  std::size_t horizontal_relation_count() const { return horizontal_relations_; }
  std::size_t vertical_relation_count() const { return vertical_relations_; }
  std::size_t commutativity_relation_count() const { return commutativity_relations_; }

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  AlgebraPtr product_;
  std::size_t nb0_ = 0;
  std::size_t nb1_ = 0;
  std::size_t na1_ = 0;
  std::size_t horizontal_relations_ = 0;
  std::size_t vertical_relations_ = 0;
  std::size_t commutativity_relations_ = 0;
};

// Throws FieldMismatch when the factors live over different fields.
TensorProduct tensor_product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace tensorbrick
