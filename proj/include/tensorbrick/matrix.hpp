#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tensorbrick/field.hpp"

namespace tensorbrick {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over a Field. Entries are kept canonical for the field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = std::move(v); }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix transpose() const;
  // Rows [r0, r0+nr) x cols [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, const Scalar& s);
Vector matvec(const Matrix& a, const Vector& v);
Matrix hstack(const std::vector<Matrix>& blocks, const Field& field, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, const Field& field, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks, const Field& field);
Scalar trace(const Matrix& a);

bool is_zero_vector(const Vector& v);

}  // namespace tensorbrick
