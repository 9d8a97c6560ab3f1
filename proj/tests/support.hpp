#pragma once

#include <random>

#include "tensorbrick/linalg.hpp"
#include "tensorbrick/projective.hpp"

namespace tensorbrick::testing {

inline Scalar small_scalar(const Field& f, std::mt19937_64& rng, int spread = 2) {
  return f.from_int(static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread);
}

inline Vector random_vector(const Field& f, std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = small_scalar(f, rng);
  return v;
}

inline Matrix random_invertible(const Field& f, std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small_scalar(f, rng);
    if (!determinant(m).is_zero()) return m;
  }
}

// Same module in a random basis at every vertex.
inline Representation random_base_change(const Representation& m, std::mt19937_64& rng) {
  const Field& f = m.field();
  std::vector<Matrix> g, ginv;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    g.push_back(random_invertible(f, rng, m.dim(v)));
    ginv.push_back(*inverse(g.back()));
  }
  std::vector<Matrix> maps;
  const Quiver& q = m.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.push_back(g[q.arrow(a).target] * m.map(a) * ginv[q.arrow(a).source]);
  return Representation(m.algebra(), m.dims(), std::move(maps));
}

// Quotient of a random sum of projectives by the submodule generated by random vectors.
inline Representation random_quotient(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_summands = 2,
                                      std::size_t max_relations = 2) {
  const std::size_t n = alg->vertex_count();
  std::vector<std::size_t> vs;
  const std::size_t count = 1 + rng() % max_summands;
  for (std::size_t k = 0; k < count; ++k) vs.push_back(rng() % n);
  Representation p = sum_of_projectives(alg, vs);
  std::vector<std::pair<std::size_t, Vector>> gens;
  const std::size_t rels = rng() % (max_relations + 1);
  for (std::size_t k = 0; k < rels; ++k) {
    const std::size_t v = rng() % n;
    if (p.dim(v) == 0) continue;
    gens.emplace_back(v, random_vector(alg->field(), rng, p.dim(v)));
  }
  return quotient(p, generated_subfamily(p, gens)).module;
}

}  // namespace tensorbrick::testing
