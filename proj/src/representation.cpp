#include "tensorbrick/representation.hpp"

#include <numeric>

#include "tensorbrick/errors.hpp"
#include "tensorbrick/linalg.hpp"

namespace tensorbrick {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = algebra_->quiver();
  if (dims_.size() != q.vertex_count()) throw ShapeMismatch("dimension vector has the wrong length");
  if (maps_.size() != q.arrow_count()) throw ShapeMismatch("one matrix per arrow is required");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix& m = maps_[a];
    if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source])
      throw ShapeMismatch("matrix for arrow " + arrow.id + " is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(dims_[arrow.target]) + "x" +
                          std::to_string(dims_[arrow.source]));
    if (m.field() != algebra_->field() && !m.empty())
      throw FieldMismatch("matrix for arrow " + arrow.id + " is over the wrong field");
    if (m.field() != algebra_->field()) maps_[a] = Matrix(algebra_->field(), m.rows(), m.cols());
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<Matrix> maps(q.arrow_count(), Matrix(algebra->field(), 0, 0));
  return Representation(algebra, std::vector<std::size_t>(q.vertex_count(), 0), std::move(maps));
}

std::size_t Representation::total_dimension() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix Representation::evaluate(const Path& p) const {
  Matrix out = Matrix::identity(field(), dims_[p.source]);
  for (std::size_t a : p.arrows) out = maps_[a] * out;
  return out;
}

Matrix Representation::evaluate(const SparseVector& element, std::size_t s, std::size_t t) const {
  const Field& f = field();
  Matrix out(f, dims_[t], dims_[s]);
  for (const auto& [idx, c] : element) {
    const Path& p = algebra_->basis()[idx];
    if (p.source != s || p.target != t) continue;
    out = out + scaled(evaluate(p), c);
  }
  return out;
}

bool Morphism::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<std::size_t> SubspaceFamily::dims() const {
  std::vector<std::size_t> d;
  for (const auto& b : bases) d.push_back(b.cols());
  return d;
}

bool check_relations(const Representation& m) {
  const BoundAlgebra& alg = *m.algebra();
  const Field& f = alg.field();
  for (const auto& rel : alg.relations()) {
    const Path& first = rel.terms.front().path;
    Matrix acc(f, m.dim(first.target), m.dim(first.source));
    for (const auto& t : rel.terms) acc = acc + scaled(m.evaluate(t.path), t.coeff);
    if (!acc.is_zero()) return false;
  }
  return true;
}

Representation simple_rep(const AlgebraPtr& algebra, std::size_t vertex) {
  const Quiver& q = algebra->quiver();
  if (vertex >= q.vertex_count()) throw std::out_of_range("simple_rep: no such vertex");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(algebra->field(), dims[a.target], dims[a.source]);
  return Representation(algebra, dims, std::move(maps));
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const AlgebraPtr& alg = parts.front().algebra();
  const Field& f = alg->field();
  std::vector<std::size_t> dims(alg->vertex_count(), 0);
  for (const auto& p : parts) {
    if (p.algebra() != alg) throw std::invalid_argument("direct_sum: representations of different algebras");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg->quiver().arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(a));
    maps.push_back(block_diagonal(blocks, f));
  }
  return Representation(alg, dims, std::move(maps));
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum({a, b}); }

bool is_morphism(const Representation& m, const Representation& n, const Morphism& f) {
  const Quiver& q = m.algebra()->quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (f.components[v].rows() != n.dim(v) || f.components[v].cols() != m.dim(v)) return false;
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (f.components[arrow.target] * m.map(a) != n.map(a) * f.components[arrow.source]) return false;
  }
  return true;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) f.components.push_back(Matrix::identity(m.field(), m.dim(v)));
  return f;
}

Morphism zero_morphism(const Representation& m, const Representation& n) {
  Morphism f;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) f.components.emplace_back(m.field(), n.dim(v), m.dim(v));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(f.components[v] + g.components[v]);
  return h;
}

Morphism scale(const Morphism& f, const Scalar& s) {
  Morphism h;
  for (const auto& c : f.components) h.components.push_back(scaled(c, s));
  return h;
}

Matrix total_matrix(const Field& field, const Morphism& f) { return block_diagonal(f.components, field); }

bool is_subrepresentation(const Representation& m, const SubspaceFamily& s) {
  const Quiver& q = m.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix& target = s.bases[arrow.target];
    Matrix moved = m.map(a) * s.bases[arrow.source];
    if (rank(hstack({target, moved}, m.field(), m.dim(arrow.target))) != target.cols()) return false;
  }
  return true;
}

SubspaceFamily kernel(const Representation& m, const Representation&, const Morphism& f) {
  SubspaceFamily s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) s.bases.push_back(kernel_matrix(f.components[v]));
  return s;
}

SubspaceFamily image(const Representation&, const Representation& n, const Morphism& f) {
  SubspaceFamily s;
  for (std::size_t v = 0; v < n.vertex_count(); ++v) s.bases.push_back(column_space(f.components[v]));
  return s;
}

SubspaceFamily generated_subfamily(const Representation& m,
                                   const std::vector<std::pair<std::size_t, Vector>>& generators) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Subspace> spans;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) spans.emplace_back(m.field(), m.dim(v));
  std::vector<std::pair<std::size_t, Vector>> stack(generators.rbegin(), generators.rend());
  while (!stack.empty()) {
    auto [v, x] = std::move(stack.back());
    stack.pop_back();
    if (!spans[v].insert(x)) continue;
    for (std::size_t a : q.outgoing(v)) stack.emplace_back(q.arrow(a).target, matvec(m.map(a), x));
  }
  SubspaceFamily s;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    s.bases.push_back(Matrix::from_columns(m.field(), spans[v].basis(), m.dim(v)));
  return s;
}

SubspaceFamily sum(const Representation& m, const SubspaceFamily& a, const SubspaceFamily& b) {
  SubspaceFamily s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    s.bases.push_back(column_space(hstack({a.bases[v], b.bases[v]}, m.field(), m.dim(v))));
  return s;
}

SubRepresentation restrict_to(const Representation& m, const SubspaceFamily& s) {
  const AlgebraPtr& alg = m.algebra();
  const Quiver& q = alg->quiver();
  std::vector<Matrix> lefts;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    lefts.push_back(left_inverse(s.bases[v]));
    dims.push_back(s.bases[v].cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    maps.push_back(lefts[arrow.target] * m.map(a) * s.bases[arrow.source]);
  }
  return {Representation(alg, dims, std::move(maps)), Morphism{s.bases}};
}

QuotientRepresentation quotient(const Representation& m, const SubspaceFamily& s) {
  const AlgebraPtr& alg = m.algebra();
  const Field& f = alg->field();
  const Quiver& q = alg->quiver();
  std::vector<Matrix> complements, projections;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix c = complement_columns(s.bases[v]);
    auto inv = inverse(hstack({s.bases[v], c}, f, m.dim(v)));
    if (!inv) throw std::invalid_argument("quotient: subspace basis is not independent");
    const std::size_t k = s.bases[v].cols();
    projections.push_back(inv->block(k, 0, c.cols(), m.dim(v)));
    dims.push_back(c.cols());
    complements.push_back(std::move(c));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    maps.push_back(projections[arrow.target] * m.map(a) * complements[arrow.source]);
  }
  return {Representation(alg, dims, std::move(maps)), Morphism{std::move(projections)}};
}

QuotientRepresentation cokernel(const Representation& m, const Representation& n, const Morphism& f) {
  return quotient(n, image(m, n, f));
}

SubspaceFamily socle_family(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  SubspaceFamily s;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix> outs;
    for (std::size_t a : q.outgoing(v)) outs.push_back(m.map(a));
    if (outs.empty()) {
      s.bases.push_back(Matrix::identity(m.field(), m.dim(v)));
    } else {
      s.bases.push_back(kernel_matrix(vstack(outs, m.field(), m.dim(v))));
    }
  }
  return s;
}

SubspaceFamily radical_family(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  SubspaceFamily s;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix> ins;
    for (std::size_t a : q.incoming(v)) ins.push_back(m.map(a));
    s.bases.push_back(column_space(hstack(ins, m.field(), m.dim(v))));
  }
  return s;
}

SubRepresentation socle(const Representation& m) { return restrict_to(m, socle_family(m)); }
SubRepresentation radical(const Representation& m) { return restrict_to(m, radical_family(m)); }
QuotientRepresentation top(const Representation& m) { return quotient(m, radical_family(m)); }

std::vector<std::size_t> composition_factors(const Representation& m) { return m.dims(); }

std::vector<std::size_t> support(const Representation& m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.dim(v) > 0) out.push_back(v);
  return out;
}

}  // namespace tensorbrick
