#include <doctest.h>

#include <map>
#include <set>

#include "tensorbrick/brickfamily.hpp"
#include "tensorbrick/catalog.hpp"
#include "tensorbrick/endomorphism.hpp"
#include "tensorbrick/errors.hpp"
#include "tensorbrick/linalg.hpp"
#include "tensorbrick/projective.hpp"

using namespace tensorbrick;

namespace {

AlgebraPtr example_a(const Field& f = Field::rationals()) { return nakayama_algebra(2, 3, f, "alpha"); }
AlgebraPtr example_b(const Field& f = Field::rationals()) { return nakayama_algebra(3, 4, f, "beta"); }

std::vector<std::vector<Scalar>> canonical(const SubspaceFamily& s) {
  std::vector<std::vector<Scalar>> key;
  for (const auto& b : s.bases) {
    RrefResult r = rref(b.transpose());
    key.push_back(r.reduced.entries());
  }
  return key;
}

// Every submodule of m over GF(2), reached by adding cyclic submodules one at a time.
std::vector<SubspaceFamily> all_submodules_gf2(const Representation& m) {
  SubspaceFamily zero;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) zero.bases.emplace_back(m.field(), m.dim(v), 0);
  std::map<std::vector<std::vector<Scalar>>, SubspaceFamily> seen{{canonical(zero), zero}};
  std::vector<SubspaceFamily> queue{zero};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      const std::size_t d = m.dim(v);
      for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << d); ++bits) {
        Vector x(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = Scalar(std::int64_t(bits >> i & 1));
        SubspaceFamily next = sum(m, queue[head], generated_subfamily(m, {{v, x}}));
        auto key = canonical(next);
        if (seen.emplace(key, next).second) queue.push_back(next);
      }
    }
  }
  return queue;
}

std::size_t brute_force_minimal_quotient(const AlgebraPtr& alg, std::size_t head, std::size_t target) {
  Representation p = projective_rep(alg, head);
  std::size_t best = p.total_dimension() + 1;
  for (const auto& s : all_submodules_gf2(p)) {
    if (p.dim(target) - s.bases[target].cols() != 1) continue;
    std::size_t d = p.total_dimension();
    for (const auto& b : s.bases) d -= b.cols();
    best = std::min(best, d);
  }
  return best;
}

std::size_t tensor_vertex(const TensorProduct& tp, const std::string& a, const std::string& b) {
  return tp.vertex(*tp.left()->quiver().find_vertex(a), *tp.right()->quiver().find_vertex(b));
}

}  // namespace

TEST_CASE("minimal quotient of the projective is uniserial for the example cycle") {
  auto b = example_b();
  auto cycle = find_minimal_nonzero_cycle(*b);
  REQUIRE(cycle);
  auto choice = minimal_quotient_U(b, *cycle, 3);
  CHECK(choice.module.dims() == std::vector<std::size_t>{1, 1, 1});
  CHECK(choice.minimality_certified);
  CHECK(socle_family(choice.module).dims() == std::vector<std::size_t>{0, 0, 1});
  CHECK(top(choice.module).module.dims() == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("equal cycle lengths kill only the socle of P(T_1)") {
  auto b = example_a();
  auto cycle = find_minimal_nonzero_cycle(*b);
  REQUIRE(cycle);
  auto choice = minimal_quotient_U(b, *cycle, 2);
  CHECK(choice.module.dims() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("target already simple in the socle leaves P(T_1) untouched") {
  auto b = nakayama_algebra(3, 3);
  Cycle c;
  c.vertices = {0, 1, 2};
  c.arrows = {0, 1, 2};
  auto choice = minimal_quotient_U(b, c, 3);
  CHECK(choice.module == projective_rep(b, 0));
}

TEST_CASE("missing composition factor is reported") {
  auto b = nakayama_algebra(3, 2);
  Cycle c;
  c.vertices = {0, 1, 2};
  c.arrows = {0, 1, 2};
  CHECK_THROWS_AS(minimal_quotient_U(b, c, 3), NotFound);
}

TEST_CASE("minimal quotient agrees with exhaustive submodule enumeration over GF(2)") {
  const Field f = Field::prime(2);
  std::vector<AlgebraPtr> algebras = {nakayama_algebra(3, 4, f), nakayama_algebra(2, 5, f), nakayama_algebra(3, 7, f),
                                      tensor_product_algebra(nakayama_algebra(2, 3, f),
                                                             truncated_polynomial_algebra(2, f))
                                          .algebra()};
  for (const auto& alg : algebras) {
    auto cycle = find_minimal_nonzero_cycle(*alg);
    REQUIRE(cycle);
    for (std::size_t pos = 1; pos <= cycle->length(); ++pos) {
      const std::size_t target = cycle->vertices[pos - 1];
      const std::size_t expected = brute_force_minimal_quotient(alg, cycle->base(), target);
      auto choice = minimal_quotient_U(alg, *cycle, pos);
      CHECK(choice.module.total_dimension() == expected);
      CHECK(choice.module.dim(target) == 1);
    }
  }
}

TEST_CASE("family member for the example tensor algebra") {
  FamilySpec spec = make_family_spec(example_a(), example_b());
  CHECK_FALSE(spec.swapped);
  CHECK(spec.n == 2);
  CHECK(spec.m == 3);
  CHECK(spec.l == 1);
  const TensorProduct& tp = *spec.tensor;
  const Quiver& q = tp.algebra()->quiver();
  Representation m = build_family_member(spec, Scalar(7));

  const std::vector<std::pair<std::string, std::string>> order = {{"1", "1"}, {"2", "1"}, {"1", "2"},
                                                                  {"1", "3"}, {"2", "2"}, {"2", "3"}};
  std::vector<std::size_t> dims;
  for (const auto& [a, b] : order) dims.push_back(m.dim(tensor_vertex(tp, a, b)));
  CHECK(dims == std::vector<std::size_t>{1, 1, 1, 1, 0, 1});

  auto alpha = [&](const std::string& id) { return *tp.left()->quiver().find_arrow(id); };
  auto beta = [&](const std::string& id) { return *tp.right()->quiver().find_arrow(id); };
  auto vert = [&](const std::string& id) { return *tp.left()->quiver().find_vertex(id); };
  auto bvert = [&](const std::string& id) { return *tp.right()->quiver().find_vertex(id); };
  std::map<std::size_t, Scalar> expected = {
      {tp.horizontal_arrow(alpha("alpha1"), bvert("1")), Scalar(7)},
      {tp.vertical_arrow(vert("1"), beta("beta1")), Scalar(1)},
      {tp.vertical_arrow(vert("1"), beta("beta2")), Scalar(1)},
      {tp.horizontal_arrow(alpha("alpha2"), bvert("3")), Scalar(1)},
      {tp.vertical_arrow(vert("2"), beta("beta3")), Scalar(1)},
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto it = expected.find(a);
    if (it == expected.end()) {
      CHECK_MESSAGE(m.map(a).is_zero(), q.arrow(a).id);
    } else {
      REQUIRE(m.map(a).rows() == 1);
      REQUIRE(m.map(a).cols() == 1);
      CHECK(m.map(a)(0, 0) == it->second);
    }
  }
  CHECK(check_relations(m));

  std::vector<std::size_t> soc(q.vertex_count());
  soc[tensor_vertex(tp, "1", "3")] = 1;
  soc[tensor_vertex(tp, "2", "1")] = 1;
  CHECK(expected_socle(spec) == soc);
  CHECK(socle_family(m).dims() == soc);
}

TEST_CASE("family members depend on lambda in a single entry") {
  FamilySpec spec = make_family_spec(example_a(), example_b());
  Representation x = build_family_member(spec, Scalar(1));
  Representation y = build_family_member(spec, Scalar(2));
  CHECK(x.dims() == y.dims());
  std::size_t differences = 0;
  for (std::size_t a = 0; a < x.maps().size(); ++a) {
    const auto& ex = x.map(a).entries();
    const auto& ey = y.map(a).entries();
    for (std::size_t i = 0; i < ex.size(); ++i) differences += ex[i] != ey[i];
  }
  CHECK(differences == 1);
}

TEST_CASE("family members over symmetric Nakayama pairs") {
  const std::vector<std::pair<AlgebraPtr, AlgebraPtr>> pairs = {
      {nakayama_algebra(2, 5), nakayama_algebra(3, 4)},
      {nakayama_algebra(2, 3), nakayama_algebra(4, 5)},
      {nakayama_algebra(3, 4), nakayama_algebra(3, 7)},
      {nakayama_algebra(3, 4), nakayama_algebra(2, 3)},
  };
  for (const auto& [a, b] : pairs) {
    FamilySpec spec = make_family_spec(a, b);
    CHECK(spec.n <= spec.m);
    for (std::int64_t l : {1, 5}) {
      Representation m = build_family_member(spec, Scalar(l));
      CHECK(check_relations(m));
      CHECK(m.total_dimension() == spec.u.module.total_dimension() + 2 * (spec.n - 1));
      CHECK(socle_family(m).dims() == expected_socle(spec));
      CHECK(is_brick(m));
      CHECK(brick_criterion_socle(m));
    }
  }
  CHECK(make_family_spec(nakayama_algebra(3, 4), nakayama_algebra(2, 3)).swapped);
}

TEST_CASE("verify_family certifies the example with three bricks") {
  FamilySpec spec = make_family_spec(example_a(), example_b());
  Certificate cert = verify_family(spec, {Scalar(1), Scalar(2), Scalar(3)});
  CHECK(cert.verdict == Verdict::TauTiltingInfinite);
  CHECK_FALSE(cert.failure);
  REQUIRE(cert.bricks.size() == 3);
  for (const auto& b : cert.bricks) {
    CHECK(b.relations);
    CHECK(b.indecomposable);
    CHECK(b.socle_criterion);
    CHECK(b.brick);
    CHECK(b.socle_matches);
    CHECK(b.end_dimension == 1);
  }
  CHECK(cert.non_isomorphic_pairs.size() == 3);
  CHECK(to_string(cert.verdict) == "tau-tilting infinite");
}

TEST_CASE("verify_family rejects repeated or zero lambdas") {
  FamilySpec spec = make_family_spec(example_a(), example_b());
  CHECK_THROWS_AS(verify_family(spec, {Scalar(1), Scalar(1)}), PreconditionError);
  CHECK_THROWS_AS(verify_family(spec, {Scalar(0), Scalar(1)}), PreconditionError);
  CHECK_THROWS_AS(verify_family(spec, {Scalar(2)}), PreconditionError);
}

TEST_CASE("verify_family is deterministic") {
  FamilySpec spec = make_family_spec(example_a(), example_b());
  Certificate x = verify_family(spec, {Scalar(1), Scalar(2)});
  Certificate y = verify_family(spec, {Scalar(1), Scalar(2)});
  CHECK(x.log == y.log);
}

TEST_CASE("certify_tensor on the example") {
  Certificate cert = certify_tensor(example_a(), example_b(), {});
  CHECK(cert.verdict == Verdict::TauTiltingInfinite);
  CHECK(cert.evidence == "bricks");
  CHECK(cert.warnings.empty());
  CHECK(cert.bricks.size() == 3);
  Certificate swapped = certify_tensor(example_b(), example_a(), {});
  CHECK(swapped.verdict == Verdict::TauTiltingInfinite);
  REQUIRE(swapped.spec);
  CHECK(swapped.spec->swapped);
}

TEST_CASE("certify_tensor with a local factor is inconclusive") {
  Certificate cert = certify_tensor(truncated_polynomial_algebra(2), example_b(), {});
  CHECK(cert.verdict == Verdict::Inconclusive);
  REQUIRE(cert.failure);
  CHECK(cert.failure->find("NoCycle") != std::string::npos);
  bool local = false;
  for (const auto& w : cert.warnings) local |= w.find("local factor") != std::string::npos;
  CHECK(local);
}

TEST_CASE("certify_tensor takes the multiple-arrow shortcut") {
  Certificate cert = certify_tensor(kronecker_algebra(), example_a(), {});
  CHECK(cert.verdict == Verdict::TauTiltingInfinite);
  CHECK(cert.evidence == "multiple-arrow");
  CHECK(cert.multiple_arrow.find("a, b") != std::string::npos);
  CHECK_FALSE(cert.warnings.empty());
}

TEST_CASE("certify_tensor warns about a non-symmetric factor") {
  Certificate cert = certify_tensor(nakayama_algebra(2, 2), example_b(), {});
  bool warned = false;
  for (const auto& w : cert.warnings) warned |= w.find("not symmetric") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("certify_tensor over finite fields") {
  const Field f5 = Field::prime(5);
  Certificate cert = certify_tensor(example_a(f5), example_b(f5), {});
  CHECK(cert.verdict == Verdict::TauTiltingInfinite);
  CHECK(cert.bricks.size() == 3);
  REQUIRE(cert.note);
  CHECK(cert.note->find("infinite over any infinite field extension") != std::string::npos);
  CHECK(default_lambdas(Field::prime(3)).size() == 2);
  Certificate two = certify_tensor(example_a(Field::prime(2)), example_b(Field::prime(2)), {});
  CHECK(two.verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(certify_tensor(example_a(f5), example_b(), {}), FieldMismatch);
}
