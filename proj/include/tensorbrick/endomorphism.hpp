#pragma once

#include <cstdint>
#include <vector>

#include "tensorbrick/hom.hpp"

namespace tensorbrick {

// End(M) with structure constants: product(i, j) = coordinates of basis_i o basis_j.
class EndomorphismAlgebra {
 public:
  explicit EndomorphismAlgebra(const Representation& m);

  const Representation& module() const { return module_; }
  const HomSpace& space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dimension() + j]; }
  // Block-diagonal matrix of an element acting on M.
  Matrix action(const Vector& coeffs) const;
  // Basis (in End coordinates) of the Jacobson radical.
  const std::vector<Vector>& radical() const { return radical_; }

 private:
  Representation module_;
  HomSpace space_;
  std::vector<Matrix> actions_;
  std::vector<Vector> products_;
  std::vector<Vector> radical_;
};

struct Indecomposability {
  bool indecomposable = false;
  // End/rad is larger than the field but no splitting idempotent was found:
  // over an extension field M might split.
  bool field_extension = false;
  std::size_t end_dimension = 0;
  std::size_t radical_dimension = 0;
  std::size_t top_dimension() const { return end_dimension - radical_dimension; }
};

Indecomposability analyze_indecomposability(const Representation& m, std::uint64_t seed = 0);
// Throws std::invalid_argument for the zero module.
bool is_indecomposable(const Representation& m, std::uint64_t seed = 0);

struct Decomposition {
  std::vector<Representation> summands;
  bool field_extension = false;
};
Decomposition decompose(const Representation& m, std::uint64_t seed = 0);

bool is_brick(const Representation& m);
// Multiplicity-free socle whose factors do not occur in M / soc M.
// Throws NotIndecomposable unless M is indecomposable.
bool brick_criterion_socle(const Representation& m);
// Throws Undecided only when some summand could not be split over the ground
// field and no isomorphism was found by sampling.
bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 0,
                   std::size_t sample_budget = 64);
// Composition pairing test for indecomposables with equal dimension vectors.
bool indecomposables_isomorphic(const Representation& x, const Representation& y);
// Is N a quotient of a direct sum of copies of M?
bool in_fac(const Representation& m, const Representation& n);

}  // namespace tensorbrick
