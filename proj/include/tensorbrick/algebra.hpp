#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorbrick/field.hpp"
#include "tensorbrick/linalg.hpp"
#include "tensorbrick/quiver.hpp"

namespace tensorbrick {

struct Term {
  Scalar coeff;
  Path path;
};

// Linear combination of parallel paths; one generator of the ideal.
struct Relation {
  std::vector<Term> terms;
};

// Dense coordinates in the path basis of an algebra.
using Element = Vector;

// kQ/I presented by generators of I together with a nilpotency bound N
// (every path of length N lies in I). Immutable once built.
class BoundAlgebra {
 public:
  // Throws NotAdmissible if a path of length N survives, std::invalid_argument
  // for malformed relations.
  static std::shared_ptr<const BoundAlgebra> build(Quiver quiver, std::vector<Relation> relations, Field field,
                                                   std::size_t bound);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t bound() const { return bound_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }

  const std::vector<Path>& basis() const { return basis_; }
  std::optional<std::size_t> basis_index(const Path& p) const;
  // Basis indices of the paths from s to t, in basis order.
  const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const {
    return blocks_[s * quiver_.vertex_count() + t];
  }
  // Position of a basis element inside its (source, target) block.
  std::size_t local_index(std::size_t basis_idx) const { return local_index_[basis_idx]; }
  std::size_t trivial_index(std::size_t v) const { return trivial_index_[v]; }

  // Normal form of any path, as a sparse combination of basis indices.
  SparseVector normal_form(const Path& p) const;
  bool is_zero_path(const Path& p) const { return normal_form(p).empty(); }
  // Structure constants: basis_i * basis_j.
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * basis_.size() + j]; }

  Element multiply(const Element& a, const Element& b) const;
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  Element unit() const;
  Element basis_element(std::size_t i) const;

 private:
  BoundAlgebra() = default;

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  std::size_t bound_ = 0;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> basis_lookup_;
  std::map<Path, SparseVector> reductions_;  // non-basis paths shorter than the bound
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> local_index_;
  std::vector<std::size_t> trivial_index_;
  std::vector<SparseVector> products_;
};

using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

// Every path of the given length, optionally restricted to a set of arrows.
std::vector<Path> paths_of_length(const Quiver& q, std::size_t length,
                                  const std::vector<std::size_t>* allowed_arrows = nullptr);

// A^op: opposite quiver with reversed relation paths, same bound and field.
AlgebraPtr opposite_algebra(const BoundAlgebra& a);
// Image of x in A^op under the anti-isomorphism reversing paths.
SparseVector to_opposite(const BoundAlgebra& a, const BoundAlgebra& op, const SparseVector& x);

struct Cycle {
  std::vector<std::size_t> arrows;    // arrows[i] leaves vertices[i]
  std::vector<std::size_t> vertices;  // cycle position (0-based) -> quiver vertex
  std::size_t base() const { return vertices.front(); }
  std::size_t length() const { return arrows.size(); }
};

// Shortest non-loop cycle whose composite is nonzero; ties broken by base
// vertex, then arrow sequence (declaration order).
std::optional<Cycle> find_minimal_nonzero_cycle(const BoundAlgebra& a);
// Every non-loop simple cycle of exactly this length with nonzero composite, in tie-break order.
std::vector<Cycle> nonzero_cycles_of_length(const BoundAlgebra& a, std::size_t length);

enum class Decision { Yes, No, Undecided };
std::string to_string(Decision d);

struct SymmetryResult {
  Decision decision = Decision::Undecided;
  std::string method;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t functional_dimension = 0;
};

// Existence of a nondegenerate symmetric associative form f(ab).
SymmetryResult is_symmetric(const BoundAlgebra& a, std::uint64_t seed = 0, std::size_t sample_budget = 64,
                            std::size_t exhaustive_budget = 20000);

bool is_local(const BoundAlgebra& a);

}  // namespace tensorbrick
