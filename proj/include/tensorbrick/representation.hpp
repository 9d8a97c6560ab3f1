#pragma once

#include <string>
#include <vector>

#include "tensorbrick/algebra.hpp"
#include "tensorbrick/matrix.hpp"

namespace tensorbrick {

// Right module over a bound algebra: a space per vertex and a matrix per arrow,
// of shape dim(target) x dim(source). The path a1.a2 acts as map(a2) * map(a1).
class Representation {
 public:
  Representation() = default;
  // Throws ShapeMismatch when a matrix has the wrong shape or field.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);
  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t vertex_count() const { return dims_.size(); }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  Matrix evaluate(const Path& p) const;
  // Action of an algebra element restricted to paths from s to t.
  Matrix evaluate(const SparseVector& element, std::size_t s, std::size_t t) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

// Family of per-vertex matrices; component v has shape dim N_v x dim M_v.
struct Morphism {
  std::vector<Matrix> components;

  bool is_zero() const;
  friend bool operator==(const Morphism& a, const Morphism& b) { return a.components == b.components; }
};

// Per-vertex column bases of a subspace family; usually a subrepresentation.
struct SubspaceFamily {
  std::vector<Matrix> bases;
  std::vector<std::size_t> dims() const;
};

// Throws ShapeMismatch when shapes are inconsistent.
bool check_relations(const Representation& m);
Representation simple_rep(const AlgebraPtr& algebra, std::size_t vertex);
Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);

bool is_morphism(const Representation& m, const Representation& n, const Morphism& f);
Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& m, const Representation& n);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Scalar& s);
// Whole morphism as one block-diagonal matrix (vertex order).
Matrix total_matrix(const Field& field, const Morphism& f);

bool is_subrepresentation(const Representation& m, const SubspaceFamily& s);
SubspaceFamily kernel(const Representation& m, const Representation& n, const Morphism& f);
SubspaceFamily image(const Representation& m, const Representation& n, const Morphism& f);
// Smallest subrepresentation containing the given (vertex, vector) pairs.
SubspaceFamily generated_subfamily(const Representation& m,
                                   const std::vector<std::pair<std::size_t, Vector>>& generators);
SubspaceFamily sum(const Representation& m, const SubspaceFamily& a, const SubspaceFamily& b);

struct SubRepresentation {
  Representation module;
  Morphism inclusion;
};
struct QuotientRepresentation {
  Representation module;
  Morphism projection;
};
SubRepresentation restrict_to(const Representation& m, const SubspaceFamily& s);
// Quotient coordinates are taken along unit vectors complementing s.
QuotientRepresentation quotient(const Representation& m, const SubspaceFamily& s);
QuotientRepresentation cokernel(const Representation& m, const Representation& n, const Morphism& f);

SubspaceFamily socle_family(const Representation& m);
SubspaceFamily radical_family(const Representation& m);
SubRepresentation socle(const Representation& m);
SubRepresentation radical(const Representation& m);
QuotientRepresentation top(const Representation& m);
// Multiplicity of the simple at each vertex (= the dimension vector).
std::vector<std::size_t> composition_factors(const Representation& m);
std::vector<std::size_t> support(const Representation& m);

}  // namespace tensorbrick
