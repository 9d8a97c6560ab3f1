#include <doctest.h>

#include <random>

#include "tensorbrick/linalg.hpp"

using namespace tensorbrick;

namespace {

Matrix mat(const Field& f, std::vector<std::vector<std::int64_t>> rows) {
  std::vector<Vector> vs;
  for (auto& r : rows) {
    Vector v;
    for (auto x : r) v.push_back(f.from_int(x));
    vs.push_back(v);
  }
  return Matrix::from_rows(f, vs, rows.empty() ? 0 : rows[0].size());
}

Matrix random_matrix(const Field& f, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays exact across the 64-bit boundary") {
  Scalar big = Scalar(std::int64_t(1) << 62);
  Scalar sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq / big).is_small());
  CHECK(Scalar::parse("22/7") == Scalar::fraction(44, 14));
  CHECK(Scalar::parse("-3").to_string() == "-3");
  CHECK((Scalar::fraction(1, 3) + Scalar::fraction(2, 3)).is_one());
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(5);
  CHECK(f.add(Scalar(3), Scalar(4)) == Scalar(2));
  CHECK(f.mul(f.inv(Scalar(3)), Scalar(3)) == Scalar(1));
  CHECK(f.from_rational(Scalar::fraction(1, 2)) == Scalar(3));
  CHECK(f.from_int(-1) == Scalar(4));
  CHECK_THROWS(Field::prime(6));
  CHECK(Field::parse("GF(7)") == Field::prime(7));
  CHECK(Field::parse("Q") == Field::rationals());
}

TEST_CASE("rref examples") {
  Field q = Field::rationals();
  auto id = rref(Matrix::identity(q, 2));
  CHECK(id.reduced == Matrix::identity(q, 2));
  CHECK(id.rank == 2);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  auto z = rref(Matrix(q, 3, 3));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.reduced.is_zero());

  auto r = rref(mat(q, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == mat(q, {{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
}

TEST_CASE("kernel examples") {
  Field q = Field::rationals();
  CHECK(kernel_basis(Matrix::identity(q, 3)).empty());
  CHECK(kernel_basis(Matrix(q, 2, 3)).size() == 3);

  Field f5 = Field::prime(5);
  auto k = kernel_basis(mat(f5, {{1, 1}}));
  REQUIRE(k.size() == 1);
  // scale so that the first coordinate is 1
  Scalar s = f5.inv(k[0][0]);
  CHECK(f5.mul(s, k[0][0]) == Scalar(1));
  CHECK(f5.mul(s, k[0][1]) == Scalar(4));
}

TEST_CASE("solve examples") {
  Field q = Field::rationals();
  Vector b{Scalar(3), Scalar::fraction(-1, 2)};
  auto x = solve(Matrix::identity(q, 2), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto y = solve(mat(q, {{1, 1}}), Vector{Scalar(1)});
  REQUIRE(y);
  CHECK((*y)[0] + (*y)[1] == Scalar(1));

  CHECK_FALSE(solve(mat(q, {{1}, {1}}), Vector{Scalar(0), Scalar(1)}));
}

TEST_CASE("rank-nullity, idempotence and exact solving on random matrices") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix m = random_matrix(f, rng, r, c);
      auto red = rref(m);
      CHECK(rref(red.reduced).reduced == red.reduced);
      auto ker = kernel_basis(m);
      CHECK(red.rank + ker.size() == c);
      for (auto& v : ker) CHECK(is_zero_vector(matvec(m, v)));
      Vector x0(c);
      for (auto& e : x0) e = f.from_int(static_cast<std::int64_t>(rng() % 5));
      Vector b = matvec(m, x0);
      auto x = solve(m, b);
      REQUIRE(x);
      CHECK(matvec(m, *x) == b);
    }
  }
}

TEST_CASE("determinant and inverse") {
  Field q = Field::rationals();
  Matrix m = mat(q, {{2, 1}, {7, 4}});
  CHECK(determinant(m) == Scalar(1));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(q, 2));
  CHECK_FALSE(inverse(mat(q, {{1, 2}, {2, 4}})));
}

TEST_CASE("sparse echelon agrees with dense rank") {
  std::mt19937_64 rng(11);
  Field f = Field::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(f, rng, 5, 7);
    SparseEchelon e(f, 7);
    for (std::size_t i = 0; i < 5; ++i) {
      SparseVector v;
      for (std::size_t j = 0; j < 7; ++j)
        if (!m(i, j).is_zero()) v.emplace_back(j, m(i, j));
      e.insert(v);
    }
    e.finalize();
    CHECK(e.rank() == rank(m));
    for (auto& v : e.kernel_basis()) CHECK(is_zero_vector(matvec(m, v)));
  }
}

TEST_CASE("characteristic polynomial matches determinants") {
  std::mt19937_64 rng(5);
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % 6;
      Matrix m = random_matrix(f, rng, n, n);
      if (trial % 3 == 0) m(n - 1, 0) = Scalar(0);
      auto poly = characteristic_polynomial(m);
      REQUIRE(poly.size() == n + 1);
      CHECK(poly[n] == Scalar(1));
      for (std::int64_t c = -2; c <= 2; ++c) {
        Scalar x = f.from_int(c);
        Matrix shifted = scaled(Matrix::identity(f, n), x) - m;
        CHECK(evaluate_polynomial(f, poly, x) == determinant(shifted));
      }
    }
  }
}

TEST_CASE("column space helpers") {
  Field q = Field::rationals();
  Matrix b = mat(q, {{1, 0}, {2, 1}, {0, 3}});
  Matrix l = left_inverse(b);
  CHECK(l * b == Matrix::identity(q, 2));
  Matrix c = complement_columns(b);
  CHECK(c.cols() == 1);
  CHECK(rank(hstack({b, c}, q, 3)) == 3);
  Matrix x = mat(q, {{1, 0}, {0, 1}, {0, 0}});
  Matrix y = mat(q, {{1, 0}, {0, 0}, {0, 1}});
  Matrix both = intersect_columns(x, y);
  CHECK(both.cols() == 1);
  CHECK(both(1, 0).is_zero());
  CHECK(both(2, 0).is_zero());
  CHECK(is_nilpotent(mat(q, {{0, 1}, {0, 0}})));
  CHECK_FALSE(is_nilpotent(mat(q, {{1, 1}, {0, 0}})));
}
