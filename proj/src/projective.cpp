#include "tensorbrick/projective.hpp"

#include <algorithm>

#include "tensorbrick/errors.hpp"
#include "tensorbrick/hom.hpp"
#include "tensorbrick/linalg.hpp"

namespace tensorbrick {
namespace {

// offsets[w][k]: first row of summand k inside the vertex-w component of a sum.
std::vector<std::vector<std::size_t>> summand_offsets(const BoundAlgebra& a, const std::vector<std::size_t>& vertices,
                                                      bool projective) {
  const std::size_t n = a.vertex_count();
  std::vector<std::vector<std::size_t>> off(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t acc = 0;
    for (std::size_t v : vertices) {
      off[w].push_back(acc);
      acc += projective ? a.basis_between(v, w).size() : a.basis_between(w, v).size();
    }
    off[w].push_back(acc);
  }
  return off;
}

}  // namespace

Representation projective_rep(const AlgebraPtr& algebra, std::size_t i) {
  const BoundAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const Field& f = a.field();
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims.push_back(a.basis_between(i, j).size());
  std::vector<Matrix> maps;
  for (std::size_t arrow = 0; arrow < q.arrow_count(); ++arrow) {
    const std::size_t s = q.arrow(arrow).source, t = q.arrow(arrow).target;
    Matrix m(f, dims[t], dims[s]);
    for (std::size_t idx : a.basis_between(i, s)) {
      for (const auto& [k, c] : a.normal_form(concat(a.basis()[idx], arrow_path(q, arrow))))
        m(a.local_index(k), a.local_index(idx)) = c;
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, dims, std::move(maps));
}

Representation injective_rep(const AlgebraPtr& algebra, std::size_t i) {
  const BoundAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const Field& f = a.field();
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims.push_back(a.basis_between(j, i).size());
  std::vector<Matrix> maps;
  for (std::size_t arrow = 0; arrow < q.arrow_count(); ++arrow) {
    const std::size_t s = q.arrow(arrow).source, t = q.arrow(arrow).target;
    // (phi . a)(q) = phi(a q) for q a path from t to i
    Matrix m(f, dims[t], dims[s]);
    for (std::size_t idx : a.basis_between(t, i)) {
      for (const auto& [k, c] : a.normal_form(concat(arrow_path(q, arrow), a.basis()[idx])))
        m(a.local_index(idx), a.local_index(k)) = c;
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, dims, std::move(maps));
}

Representation regular_rep(const AlgebraPtr& algebra) {
  std::vector<std::size_t> all;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) all.push_back(v);
  return sum_of_projectives(algebra, all);
}

Representation sum_of_projectives(const AlgebraPtr& algebra, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return Representation::zero(algebra);
  std::vector<Representation> parts;
  for (std::size_t v : vertices) parts.push_back(projective_rep(algebra, v));
  return direct_sum(parts);
}

Representation sum_of_injectives(const AlgebraPtr& algebra, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return Representation::zero(algebra);
  std::vector<Representation> parts;
  for (std::size_t v : vertices) parts.push_back(injective_rep(algebra, v));
  return direct_sum(parts);
}

Morphism projective_map(const AlgebraPtr& algebra, const std::vector<std::size_t>& sources,
                        const std::vector<std::size_t>& targets, const std::vector<std::vector<SparseVector>>& x) {
  const BoundAlgebra& a = *algebra;
  const Field& f = a.field();
  auto src = summand_offsets(a, sources, true);
  auto dst = summand_offsets(a, targets, true);
  Morphism out;
  for (std::size_t w = 0; w < a.vertex_count(); ++w) {
    Matrix m(f, dst[w].back(), src[w].back());
    for (std::size_t r = 0; r < sources.size(); ++r) {
      for (std::size_t qi : a.basis_between(sources[r], w)) {
        const std::size_t col = src[w][r] + a.local_index(qi);
        for (std::size_t s = 0; s < targets.size(); ++s) {
          for (const auto& [k, c] : a.multiply(x[r][s], SparseVector{{qi, Scalar(1)}}))
            m(dst[w][s] + a.local_index(k), col) = f.add(m(dst[w][s] + a.local_index(k), col), c);
        }
      }
    }
    out.components.push_back(std::move(m));
  }
  return out;
}

Morphism nakayama_map(const AlgebraPtr& algebra, const std::vector<std::size_t>& sources,
                      const std::vector<std::size_t>& targets, const std::vector<std::vector<SparseVector>>& x) {
  const BoundAlgebra& a = *algebra;
  const Field& f = a.field();
  auto src = summand_offsets(a, sources, false);
  auto dst = summand_offsets(a, targets, false);
  Morphism out;
  for (std::size_t w = 0; w < a.vertex_count(); ++w) {
    // entry [(s, q)][(r, p)] = coefficient of p in q x[r][s], q: w -> targets[s]
    Matrix m(f, dst[w].back(), src[w].back());
    for (std::size_t s = 0; s < targets.size(); ++s) {
      for (std::size_t qi : a.basis_between(w, targets[s])) {
        const std::size_t row = dst[w][s] + a.local_index(qi);
        for (std::size_t r = 0; r < sources.size(); ++r) {
          for (const auto& [k, c] : a.multiply(SparseVector{{qi, Scalar(1)}}, x[r][s]))
            m(row, src[w][r] + a.local_index(k)) = f.add(m(row, src[w][r] + a.local_index(k)), c);
        }
      }
    }
    out.components.push_back(std::move(m));
  }
  return out;
}

namespace {

struct Cover {
  std::vector<std::size_t> vertices;
  std::vector<Vector> generators;  // generator k lives at vertices[k]
  Morphism map;                    // sum_of_projectives(vertices) -> M
};

Cover projective_cover(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  const BoundAlgebra& a = *alg;
  const Field& f = a.field();
  auto rad = radical_family(m);
  Cover c;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    Matrix comp = complement_columns(rad.bases[v]);
    for (std::size_t k = 0; k < comp.cols(); ++k) {
      c.vertices.push_back(v);
      c.generators.push_back(comp.column(k));
    }
  }
  for (std::size_t w = 0; w < a.vertex_count(); ++w) {
    std::vector<Vector> cols;
    for (std::size_t g = 0; g < c.vertices.size(); ++g)
      for (std::size_t pi : a.basis_between(c.vertices[g], w))
        cols.push_back(matvec(m.evaluate(a.basis()[pi]), c.generators[g]));
    c.map.components.push_back(Matrix::from_columns(f, cols, m.dim(w)));
  }
  return c;
}

}  // namespace

ProjectivePresentation min_projective_presentation(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  const BoundAlgebra& a = *alg;
  ProjectivePresentation out;
  Cover c0 = projective_cover(m);
  out.p0 = c0.vertices;
  out.cover = c0.map;
  Representation p0 = sum_of_projectives(alg, out.p0);
  auto ker = kernel(p0, m, c0.map);
  if (ker.dims() == std::vector<std::size_t>(a.vertex_count(), 0)) return out;
  auto k = restrict_to(p0, ker);
  Cover c1 = projective_cover(k.module);
  auto offsets = summand_offsets(a, out.p0, true);
  out.p1 = c1.vertices;
  for (std::size_t r = 0; r < c1.vertices.size(); ++r) {
    const std::size_t v = c1.vertices[r];
    Vector in_p0 = matvec(k.inclusion.components[v], c1.generators[r]);
    std::vector<SparseVector> row;
    for (std::size_t s = 0; s < out.p0.size(); ++s) {
      SparseVector x;
      const auto& block = a.basis_between(out.p0[s], v);
      for (std::size_t l = 0; l < block.size(); ++l) {
        const Scalar& c = in_p0[offsets[v][s] + l];
        if (!c.is_zero()) x.emplace_back(block[l], c);
      }
      std::sort(x.begin(), x.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      for (const auto& [idx, c] : x)
        if (a.basis()[idx].is_trivial()) throw std::logic_error("presentation is not minimal");
      row.push_back(std::move(x));
    }
    out.map.push_back(std::move(row));
  }
  return out;
}

bool is_projective(const Representation& m) { return m.is_zero() || min_projective_presentation(m).p1.empty(); }

std::vector<long> g_vector(const ProjectivePresentation& p, std::size_t vertex_count) {
  std::vector<long> g(vertex_count, 0);
  for (auto v : p.p0) ++g[v];
  for (auto v : p.p1) --g[v];
  return g;
}

Representation tau(const Representation& m) {
  if (m.is_zero()) return m;
  return tau(m, min_projective_presentation(m));
}

Representation tau(const Representation& m, const ProjectivePresentation& p) {
  const AlgebraPtr& alg = m.algebra();
  if (p.p1.empty()) return Representation::zero(alg);
  Representation i1 = sum_of_injectives(alg, p.p1);
  Representation i0 = sum_of_injectives(alg, p.p0);
  Morphism nu = nakayama_map(alg, p.p1, p.p0, p.map);
  return restrict_to(i1, kernel(i1, i0, nu)).module;
}

Representation transpose(const Representation& m, const ProjectivePresentation& p, const AlgebraPtr& op) {
  const BoundAlgebra& a = *m.algebra();
  if (p.p1.empty()) return Representation::zero(op);
  // p1* : P^op(p0) -> P^op(p1), generator s goes to (op(x[r][s]))_r
  std::vector<std::vector<SparseVector>> y(p.p0.size(), std::vector<SparseVector>(p.p1.size()));
  for (std::size_t r = 0; r < p.p1.size(); ++r)
    for (std::size_t s = 0; s < p.p0.size(); ++s) y[s][r] = to_opposite(a, *op, p.map[r][s]);
  Representation src = sum_of_projectives(op, p.p0);
  Representation dst = sum_of_projectives(op, p.p1);
  return cokernel(src, dst, projective_map(op, p.p0, p.p1, y)).module;
}

Representation dual(const Representation& m, const AlgebraPtr& op) {
  std::vector<Matrix> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  return Representation(op, m.dims(), std::move(maps));
}

bool is_tau_rigid(const Representation& m) {
  if (m.is_zero()) return true;
  return hom_dimension(m, tau(m)) == 0;
}

}  // namespace tensorbrick
