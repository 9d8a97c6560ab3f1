#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorbrick/representation.hpp"
#include "tensorbrick/tensor.hpp"

namespace tensorbrick {

struct QuotientChoice {
  Representation module;  // U, a quotient of P(T_1)
  std::size_t top_vertex = 0;
  std::size_t socle_vertex = 0;
  bool minimality_certified = false;
  std::string minimality_note;
};

// Smallest quotient U of P(T_1) (T_1 = first vertex of the cycle) in which the
// simple at cycle position target_position (1-based, taken mod the cycle
// length) occurs exactly once. Throws NotFound when no such quotient exists.
// The first basis vector of U at T_1 is the image of the generator.
QuotientChoice minimal_quotient_U(const AlgebraPtr& b, const Cycle& cycle_b, std::size_t target_position,
                                  std::size_t exhaustive_limit = 14);

struct FamilySpec {
  std::shared_ptr<const TensorProduct> tensor;  // left factor carries the shorter cycle
  bool swapped = false;                         // factors exchanged to make n <= m
  Cycle cycle_a;
  Cycle cycle_b;
  std::size_t n = 0;
  std::size_t m = 0;
  QuotientChoice u;
  std::size_t l = 0;  // dim U at the first cycle vertex of B
};

// Orients the factors, finds minimal cycles and U. Throws NoCycle.
FamilySpec make_family_spec(const AlgebraPtr& a, const AlgebraPtr& b);

// M^(lambda). Throws RelationViolation if the construction breaks a relation.
Representation build_family_member(const FamilySpec& spec, const Scalar& lambda);

// Dimension vector of the semisimple module sum_{-1 <= i <= n-2} S_{n-i} (x) T_{m-n+3+i}.
std::vector<std::size_t> expected_socle(const FamilySpec& spec);

// Vertex of the tensor quiver at cycle positions (i, j), both 1-based and reduced mod n, m.
std::size_t cycle_vertex(const FamilySpec& spec, long i, long j);

std::vector<Scalar> default_lambdas(const Field& field);

struct BrickCheck {
  Scalar lambda;
  std::vector<std::size_t> dims;
  bool relations = false;
  bool indecomposable = false;
  bool field_extension = false;
  bool socle_criterion = false;
  bool brick = false;
  std::size_t end_dimension = 0;
  bool socle_matches = false;
};

enum class Verdict { TauTiltingInfinite, Inconclusive };
std::string to_string(Verdict v);

struct Certificate {
  std::string algebra;
  Verdict verdict = Verdict::Inconclusive;
  std::string evidence;  // "multiple-arrow", "bricks" or "none"
  std::string multiple_arrow;
  std::vector<BrickCheck> bricks;
  std::vector<std::pair<std::size_t, std::size_t>> non_isomorphic_pairs;
  std::vector<std::string> warnings;
  std::vector<std::string> log;
  std::optional<std::string> failure;
  std::optional<std::string> note;
  std::optional<FamilySpec> spec;
};

// Throws PreconditionError unless the lambdas are nonzero, distinct and at least two.
Certificate verify_family(const FamilySpec& spec, const std::vector<Scalar>& lambdas, std::uint64_t seed = 0);
Certificate certify_tensor(const AlgebraPtr& a, const AlgebraPtr& b, const std::vector<Scalar>& lambdas,
                           std::uint64_t seed = 0);

}  // namespace tensorbrick
