#include <doctest.h>

#include "support.hpp"
#include "tensorbrick/catalog.hpp"
#include "tensorbrick/endomorphism.hpp"
#include "tensorbrick/hom.hpp"

using namespace tensorbrick;
using namespace tensorbrick::testing;

namespace {

Representation syzygy(const Representation& m) {
  auto p = min_projective_presentation(m);
  auto p0 = sum_of_projectives(m.algebra(), p.p0);
  return restrict_to(p0, kernel(p0, m, p.cover)).module;
}

}  // namespace

TEST_CASE("projectives") {
  auto b = nakayama_algebra(3, 4);
  CHECK(projective_rep(b, 0).dims() == std::vector<std::size_t>{2, 1, 1});
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  auto semisimple = BoundAlgebra::build(q, {}, Field::rationals(), 1);
  CHECK(projective_rep(semisimple, 1) == simple_rep(semisimple, 1));
  auto a2 = linear_path_algebra(2);
  CHECK(projective_rep(a2, 0).dims() == std::vector<std::size_t>{1, 1});
  CHECK(injective_rep(a2, 1).dims() == std::vector<std::size_t>{1, 1});
  CHECK(regular_rep(b).total_dimension() == b->dimension());
  for (auto alg : {b, a2, kronecker_algebra(), nakayama_algebra(2, 3, Field::prime(5))})
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      CHECK(check_relations(projective_rep(alg, v)));
      CHECK(check_relations(injective_rep(alg, v)));
      CHECK(is_indecomposable(projective_rep(alg, v)));
    }
}

TEST_CASE("minimal presentations") {
  auto a2 = linear_path_algebra(2);
  auto p = min_projective_presentation(simple_rep(a2, 0));
  CHECK(p.p0 == std::vector<std::size_t>{0});
  CHECK(p.p1 == std::vector<std::size_t>{1});
  CHECK(min_projective_presentation(projective_rep(a2, 0)).p1.empty());

  auto b = nakayama_algebra(3, 4);
  auto pt = min_projective_presentation(simple_rep(b, 0));
  CHECK(pt.p0 == std::vector<std::size_t>{0});
  CHECK(pt.p1 == std::vector<std::size_t>{1});
}

TEST_CASE("presentations present their module") {
  std::mt19937_64 rng(31);
  for (auto alg : {nakayama_algebra(3, 4), linear_path_algebra(3), kronecker_algebra(Field::prime(3))}) {
    for (int t = 0; t < 8; ++t) {
      auto m = random_quotient(alg, rng);
      if (m.is_zero()) continue;
      auto p = min_projective_presentation(m);
      auto p0 = sum_of_projectives(alg, p.p0);
      auto p1 = sum_of_projectives(alg, p.p1);
      CHECK(is_morphism(p0, m, p.cover));
      auto q = cokernel(p1, p0, projective_map(alg, p.p1, p.p0, p.map));
      CHECK(is_isomorphic(q.module, m));
      CHECK(top(p0).module.dims() == top(m).module.dims());
    }
  }
}

TEST_CASE("tau of projectives vanishes") {
  for (auto alg : {nakayama_algebra(3, 4), nakayama_algebra(2, 3), linear_path_algebra(3), kronecker_algebra(),
                   truncated_polynomial_algebra(2)})
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      CHECK(tau(projective_rep(alg, v)).is_zero());
      CHECK(is_tau_rigid(projective_rep(alg, v)));
    }
}

TEST_CASE("tau on A2") {
  auto a2 = linear_path_algebra(2);
  CHECK(is_isomorphic(tau(simple_rep(a2, 0)), simple_rep(a2, 1)));
}

TEST_CASE("tau equals the second syzygy over symmetric algebras") {
  std::mt19937_64 rng(41);
  for (auto alg : {nakayama_algebra(3, 4), nakayama_algebra(2, 3), truncated_polynomial_algebra(3)}) {
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      auto s = simple_rep(alg, v);
      CHECK(is_isomorphic(tau(s), syzygy(syzygy(s))));
    }
    for (int t = 0; t < 6; ++t) {
      auto m = random_quotient(alg, rng, 1, 1);
      if (m.is_zero() || is_projective(m)) continue;
      auto d = decompose(m);
      bool has_projective = false;
      for (auto& x : d.summands) has_projective = has_projective || is_projective(x);
      if (has_projective) continue;
      CHECK(is_isomorphic(tau(m), syzygy(syzygy(m))));
    }
  }
  auto b = nakayama_algebra(3, 4);
  CHECK(tau(simple_rep(b, 0)).dims() == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("tau is D of the transpose") {
  std::mt19937_64 rng(43);
  for (auto alg : {linear_path_algebra(3), kronecker_algebra(), nakayama_algebra(3, 3)}) {
    auto op = opposite_algebra(*alg);
    for (int t = 0; t < 8; ++t) {
      auto m = random_quotient(alg, rng, 1, 2);
      if (m.is_zero()) continue;
      auto p = min_projective_presentation(m);
      auto tr = transpose(m, p, op);
      CHECK(check_relations(tr));
      CHECK(is_isomorphic(tau(m, p), dual(tr, alg)));
    }
  }
}

TEST_CASE("injectives represent duals") {
  auto b = nakayama_algebra(3, 5);
  auto op = opposite_algebra(*b);
  for (std::size_t v = 0; v < 3; ++v) CHECK(is_isomorphic(injective_rep(b, v), dual(projective_rep(op, v), b)));
}

TEST_CASE("g-vectors") {
  auto a2 = linear_path_algebra(2);
  CHECK(g_vector(min_projective_presentation(simple_rep(a2, 0)), 2) == std::vector<long>{1, -1});
  CHECK(g_vector(min_projective_presentation(projective_rep(a2, 1)), 2) == std::vector<long>{0, 1});
}
