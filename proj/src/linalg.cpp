#include "tensorbrick/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tensorbrick {

RrefResult rref(Matrix m) {
  const Field f = m.field();
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar piv_inv = f.inv(m(r, c));
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      m(r, j) = f.mul(m(r, j), piv_inv);
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j : nz) m(i, j) = f.sub_mul(m(i, j), factor, m(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Field f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < rr.rank; ++k) v[rr.pivots[k]] = f.neg(rr.reduced(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, m.cols()) = b[i];
  RrefResult rr = rref(std::move(aug));
  Vector x(m.cols());
  for (std::size_t k = 0; k < rr.rank; ++k) {
    if (rr.pivots[k] == m.cols()) return std::nullopt;
    x[rr.pivots[k]] = rr.reduced(k, m.cols());
  }
  return x;
}

Scalar determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Scalar inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) = f.sub_mul(m(i, j), factor, m(c, j));
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(m.field(), 0, 0);
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = Scalar(1);
  RrefResult rr = rref(std::move(aug));
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

// ---------------------------------------------------------------- Subspace

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    const Vector& row = rows_[k];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j] = field_.sub_mul(v[j], factor, row[j]);
    }
  }
  return v;
}

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && r[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const Scalar inv = field_.inv(r[p]);
  for (std::size_t j = p; j < ambient_; ++j) {
    if (!r[j].is_zero()) r[j] = field_.mul(r[j], inv);
  }
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar factor = row[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!r[j].is_zero()) row[j] = field_.sub_mul(row[j], factor, r[j]);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

// ------------------------------------------------------------ sparse rows

SparseVector sparse_axpy(const Field& f, const SparseVector& x, const Scalar& a, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Scalar v = f.neg(f.mul(a, y[j].second));
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = f.sub_mul(x[i].second, a, y[j].second);
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector sparse_scale(const Field& f, const SparseVector& x, const Scalar& a) {
  SparseVector out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, f.mul(v, a));
  return out;
}

SparseVector sparse_add(const Field& f, const SparseVector& x, const SparseVector& y) {
  return sparse_axpy(f, x, f.neg(f.one()), y);
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    const long r = pivot_row_[v[i].first];
    if (r < 0) {
      ++i;
      continue;
    }
    const Scalar factor = v[i].second;
    v = sparse_axpy(field_, v, factor, rows_[static_cast<std::size_t>(r)]);
  }
  return v;
}

bool SparseEchelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Scalar inv = field_.inv(v.front().second);
  if (!inv.is_one()) v = sparse_scale(field_, v, inv);
  pivot_row_[v.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  reduced_ = false;
  return true;
}

void SparseEchelon::finalize() {
  if (reduced_) return;
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
  for (std::size_t idx : order) {
    SparseVector& row = rows_[idx];
    SparseVector tail(row.begin() + 1, row.end());
    tail = reduce(std::move(tail));
    tail.insert(tail.begin(), row.front());
    row = std::move(tail);
  }
  reduced_ = true;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivot_row_.size(); ++c) {
    if (pivot_row_[c] < 0) out.push_back(c);
  }
  return out;
}

std::vector<Vector> SparseEchelon::kernel_basis() const {
  if (!reduced_) throw std::logic_error("SparseEchelon::kernel_basis before finalize");
  const std::size_t n = pivot_row_.size();
  std::vector<long> free_index(n, -1);
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row_[c] >= 0) continue;
    free_index[c] = static_cast<long>(basis.size());
    Vector v(n);
    v[c] = Scalar(1);
    basis.push_back(std::move(v));
  }
  for (const auto& row : rows_) {
    const std::size_t pivot = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const long fi = free_index[row[k].first];
      if (fi >= 0) basis[static_cast<std::size_t>(fi)][pivot] = field_.neg(row[k].second);
    }
  }
  return basis;
}

}  // namespace tensorbrick

namespace tensorbrick {

Matrix column_space(const Matrix& m) {
  auto rr = rref(m);
  Matrix out(m.field(), m.rows(), rr.rank);
  for (std::size_t k = 0; k < rr.rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, rr.pivots[k]);
  return out;
}

Matrix kernel_matrix(const Matrix& m) { return Matrix::from_columns(m.field(), kernel_basis(m), m.cols()); }

Matrix left_inverse(const Matrix& b) {
  const Field& f = b.field();
  const std::size_t n = b.rows(), k = b.cols();
  Matrix aug(f, k, n + k);
  aug.set_block(0, 0, b.transpose());
  aug.set_block(0, n, Matrix::identity(f, k));
  auto rr = rref(std::move(aug));
  if (rr.rank != k || (k > 0 && rr.pivots.back() >= n))
    throw std::invalid_argument("left_inverse: columns are not independent");
  // rows of rref: E b^T = R with pivots; solve b^T x = e_j for each j
  Matrix out(f, k, n);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t r = 0; r < k; ++r) out(j, rr.pivots[r]) = rr.reduced(r, n + j);
  }
  return out;
}

Matrix complement_columns(const Matrix& b) {
  const Field& f = b.field();
  auto rr = rref(b.transpose());
  std::vector<bool> pivot(b.rows(), false);
  for (auto c : rr.pivots) pivot[c] = true;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (pivot[i]) continue;
    Vector e(b.rows());
    e[i] = Scalar(1);
    cols.push_back(std::move(e));
  }
  return Matrix::from_columns(f, cols, b.rows());
}

Matrix intersect_columns(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  // a x = b y  <=>  [a | -b] (x, y) = 0
  Matrix joint = hstack({column_space(a), scaled(column_space(b), f.neg(Scalar(1)))}, f, a.rows());
  const std::size_t ka = column_space(a).cols();
  Matrix ca = column_space(a);
  std::vector<Vector> out;
  for (auto& v : kernel_basis(joint)) {
    Vector x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ka));
    out.push_back(matvec(ca, x));
  }
  return column_space(Matrix::from_columns(f, out, a.rows()));
}

Matrix power(const Matrix& m, std::size_t exponent) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

bool is_nilpotent(const Matrix& m) { return power(m, m.rows()).is_zero(); }

Vector characteristic_polynomial(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const Field f = input.field();
  const std::size_t n = input.rows();
  Matrix h = input;
  // similarity reduction to upper Hessenberg form
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t p = c + 1;
    while (p < n && h(p, c).is_zero()) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
    }
    const Scalar piv_inv = f.inv(h(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h(i, c).is_zero()) continue;
      const Scalar factor = f.mul(h(i, c), piv_inv);
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub_mul(h(i, j), factor, h(c + 1, j));
      for (std::size_t r = 0; r < n; ++r) h(r, c + 1) = f.add(h(r, c + 1), f.mul(factor, h(r, i)));
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
  std::vector<Vector> polys(n + 1);
  polys[0] = Vector{Scalar(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t kk = k - 1;
    Vector next(k + 1);
    for (std::size_t d = 0; d < polys[k - 1].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], polys[k - 1][d]);
      next[d] = f.sub(next[d], f.mul(h(kk, kk), polys[k - 1][d]));
    }
    Scalar prod(1);
    for (std::size_t i = kk; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod.is_zero()) break;
      const Scalar coeff = f.mul(h(i, kk), prod);
      if (coeff.is_zero()) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d) next[d] = f.sub(next[d], f.mul(coeff, polys[i][d]));
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

Scalar evaluate_polynomial(const Field& f, const Vector& coeffs, const Scalar& x) {
  Scalar acc;
  for (std::size_t d = coeffs.size(); d-- > 0;) acc = f.add(f.mul(acc, x), coeffs[d]);
  return acc;
}

}  // namespace tensorbrick
