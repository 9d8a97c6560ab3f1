#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tensorbrick/matrix.hpp"

namespace tensorbrick {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

// Basis of the right null space. Vector k has a 1 in the k-th free column and
// zeros in the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

// One solution of m x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Pivot columns of m: a basis of its column space, as an n x rank matrix.
Matrix column_space(const Matrix& m);
// Kernel basis vectors as the columns of a cols x nullity matrix.
Matrix kernel_matrix(const Matrix& m);
// L with L * b = identity, for b of full column rank.
Matrix left_inverse(const Matrix& b);
// Unit vectors completing the columns of b (full column rank) to a basis.
Matrix complement_columns(const Matrix& b);
// Columns spanning the intersection of the column spaces of a and b.
Matrix intersect_columns(const Matrix& a, const Matrix& b);

Matrix power(const Matrix& m, std::size_t exponent);
bool is_nilpotent(const Matrix& m);
// Coefficients c_0..c_n of det(t I - m), via reduction to Hessenberg form.
Vector characteristic_polynomial(const Matrix& m);
Scalar evaluate_polynomial(const Field& f, const Vector& coeffs, const Scalar& x);

// Subspace of F^n kept as a fully reduced row echelon basis.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  // Returns true when v was not already in the span.
  bool insert(const Vector& v);
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;
  // Coordinates of a member of the subspace relative to basis().
  Vector coordinates(const Vector& v) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

// Sparse vector: (index, value) pairs with strictly increasing indices and no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector sparse_axpy(const Field& f, const SparseVector& x, const Scalar& a, const SparseVector& y);  // x - a*y
SparseVector sparse_scale(const Field& f, const SparseVector& x, const Scalar& a);
SparseVector sparse_add(const Field& f, const SparseVector& x, const SparseVector& y);

// Incremental sparse Gaussian elimination. The leading entry of each stored
// row is 1 and is the row's pivot; finalize() makes the echelon form fully reduced.
class SparseEchelon {
 public:
  SparseEchelon(Field field, std::size_t ambient) : field_(field), pivot_row_(ambient, -1) {}

  bool insert(SparseVector v);
  SparseVector reduce(SparseVector v) const;
  void finalize();

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return pivot_row_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  // Row whose pivot is col (nullptr if col is free).
  const SparseVector* row_for_pivot(std::size_t col) const {
    return pivot_row_[col] >= 0 ? &rows_[static_cast<std::size_t>(pivot_row_[col])] : nullptr;
  }
  const std::vector<SparseVector>& rows() const { return rows_; }
  // Treating stored rows as homogeneous equations: null space basis, one
  // vector per free column. Requires finalize().
  std::vector<Vector> kernel_basis() const;
  std::vector<std::size_t> free_columns() const;

 private:
  Field field_;
  std::vector<SparseVector> rows_;
  std::vector<long> pivot_row_;
  bool reduced_ = true;
};

}  // namespace tensorbrick
