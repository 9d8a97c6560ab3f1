#include "tensorbrick/hom.hpp"

#include <algorithm>

#include "tensorbrick/errors.hpp"
#include "tensorbrick/linalg.hpp"

namespace tensorbrick {

HomSpace::HomSpace(const Representation& m, const Representation& n) : field_(m.field()) {
  if (m.algebra() != n.algebra() && !(m.algebra()->quiver() == n.algebra()->quiver()))
    throw std::invalid_argument("hom space between representations of different algebras");
  const Quiver& q = m.algebra()->quiver();
  const Field& f = field_;
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    offsets_.push_back(unknowns);
    cols_.push_back(m.dim(v));
    unknowns += n.dim(v) * m.dim(v);
  }
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return offsets_[v] + i * m.dim(v) + j; };

  // f_t * M_a - N_a * f_s = 0, entry (i, j)
  SparseEchelon eqs(f, unknowns);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    for (std::size_t i = 0; i < n.dim(t); ++i) {
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        std::vector<std::pair<std::size_t, Scalar>> raw;
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (!ma(k, j).is_zero()) raw.emplace_back(var(t, i, k), ma(k, j));
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (!na(i, k).is_zero()) raw.emplace_back(var(s, k, j), f.neg(na(i, k)));
        if (raw.empty()) continue;
        std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVector row;
        for (auto& [idx, val] : raw) {
          if (!row.empty() && row.back().first == idx) {
            row.back().second = f.add(row.back().second, val);
            if (row.back().second.is_zero()) row.pop_back();
          } else {
            row.emplace_back(idx, val);
          }
        }
        if (!row.empty()) eqs.insert(std::move(row));
      }
    }
  }
  eqs.finalize();
  free_ = eqs.free_columns();
  for (std::size_t x : free_) {
    std::size_t v = q.vertex_count() - 1;
    while (offsets_[v] > x || n.dim(v) * m.dim(v) == 0) --v;
    free_vertex_.push_back(v);
  }
  for (const auto& vec : eqs.kernel_basis()) {
    Morphism g;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      Matrix c(f, n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) c(i, j) = vec[var(v, i, j)];
      g.components.push_back(std::move(c));
    }
    basis_.push_back(std::move(g));
  }
}

Vector HomSpace::coordinates(const Morphism& g) const {
  Vector out;
  out.reserve(free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) {
    const std::size_t local = free_[k] - offsets_[free_vertex_[k]];
    out.push_back(g.components[free_vertex_[k]](local / cols_[free_vertex_[k]], local % cols_[free_vertex_[k]]));
  }
  return out;
}

Morphism HomSpace::combination(const Vector& coeffs) const {
  if (coeffs.size() != basis_.size()) throw std::invalid_argument("combination: coefficient count mismatch");
  if (basis_.empty()) throw std::invalid_argument("combination in a zero hom space");
  Morphism out = scale(basis_[0], coeffs[0]);
  for (std::size_t k = 1; k < basis_.size(); ++k) {
    if (!coeffs[k].is_zero()) out = add(out, scale(basis_[k], coeffs[k]));
  }
  return out;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) { return HomSpace(m, n).basis(); }

std::size_t hom_dimension(const Representation& m, const Representation& n) { return HomSpace(m, n).dimension(); }

}  // namespace tensorbrick
