#pragma once

#include <vector>

#include "tensorbrick/representation.hpp"

namespace tensorbrick {

// Hom(M, N) as the solution space of the intertwining equations. Unknowns are
// the entries of every component, vertex by vertex, row-major. Basis vector k
// has a 1 in free unknown k and zeros in the other free unknowns, so the
// coordinates of any morphism are its entries at the free unknowns.
class HomSpace {
 public:
  HomSpace(const Representation& m, const Representation& n);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Morphism>& basis() const { return basis_; }
  Vector coordinates(const Morphism& f) const;
  Morphism combination(const Vector& coeffs) const;

 private:
  Field field_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> cols_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> free_vertex_;
  std::vector<Morphism> basis_;
};

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dimension(const Representation& m, const Representation& n);

}  // namespace tensorbrick
