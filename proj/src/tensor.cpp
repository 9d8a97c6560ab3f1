#include "tensorbrick/tensor.hpp"

#include "tensorbrick/errors.hpp"

namespace tensorbrick {

TensorProduct::TensorProduct(AlgebraPtr left, AlgebraPtr right) : left_(std::move(left)), right_(std::move(right)) {
  if (left_->field() != right_->field())
    throw FieldMismatch("cannot tensor an algebra over " + left_->field().name() + " with one over " +
                        right_->field().name());
  const Quiver& qa = left_->quiver();
  const Quiver& qb = right_->quiver();
  nb0_ = qb.vertex_count();
  nb1_ = qb.arrow_count();
  na1_ = qa.arrow_count();

  Quiver q;
  for (const auto& a : qa.vertices())
    for (const auto& b : qb.vertices()) q.add_vertex("(" + a + "," + b + ")");
  for (std::size_t alpha = 0; alpha < qa.arrow_count(); ++alpha) {
    const Arrow& x = qa.arrow(alpha);
    for (std::size_t b = 0; b < nb0_; ++b)
      q.add_arrow("(" + x.id + ",e:" + qb.vertex_id(b) + ")", vertex(x.source, b), vertex(x.target, b));
  }
  for (std::size_t a = 0; a < qa.vertex_count(); ++a) {
    for (std::size_t beta = 0; beta < nb1_; ++beta) {
      const Arrow& y = qb.arrow(beta);
      q.add_arrow("(e:" + qa.vertex_id(a) + "," + y.id + ")", vertex(a, y.source), vertex(a, y.target));
    }
  }

  std::vector<Relation> rels;
  for (const auto& r : left_->relations()) {
    for (std::size_t b = 0; b < nb0_; ++b) {
      Relation lifted;
      for (const auto& t : r.terms) lifted.terms.push_back({t.coeff, lift_horizontal(t.path, b)});
      rels.push_back(std::move(lifted));
      ++horizontal_relations_;
    }
  }
  for (const auto& r : right_->relations()) {
    for (std::size_t a = 0; a < qa.vertex_count(); ++a) {
      Relation lifted;
      for (const auto& t : r.terms) lifted.terms.push_back({t.coeff, lift_vertical(a, t.path)});
      rels.push_back(std::move(lifted));
      ++vertical_relations_;
    }
  }
  for (std::size_t alpha = 0; alpha < na1_; ++alpha) {
    const Arrow& x = qa.arrow(alpha);
    for (std::size_t beta = 0; beta < nb1_; ++beta) {
      const Arrow& y = qb.arrow(beta);
      Path first{vertex(x.source, y.source), vertex(x.target, y.target),
                 {horizontal_arrow(alpha, y.source), vertical_arrow(x.target, beta)}};
      Path second{vertex(x.source, y.source), vertex(x.target, y.target),
                  {vertical_arrow(x.source, beta), horizontal_arrow(alpha, y.target)}};
      rels.push_back(Relation{{Term{Scalar(1), first}, Term{Scalar(-1), second}}});
      ++commutativity_relations_;
    }
  }
  product_ = BoundAlgebra::build(std::move(q), std::move(rels), left_->field(), left_->bound() + right_->bound());
}

Path TensorProduct::lift_horizontal(const Path& p, std::size_t b) const {
  Path out{vertex(p.source, b), vertex(p.target, b), {}};
  for (std::size_t alpha : p.arrows) out.arrows.push_back(horizontal_arrow(alpha, b));
  return out;
}

Path TensorProduct::lift_vertical(std::size_t a, const Path& p) const {
  Path out{vertex(a, p.source), vertex(a, p.target), {}};
  for (std::size_t beta : p.arrows) out.arrows.push_back(vertical_arrow(a, beta));
  return out;
}

TensorProduct tensor_product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return TensorProduct(a, b); }

}  // namespace tensorbrick
