#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorbrick/projective.hpp"

namespace tensorbrick {

using GVector = std::vector<long>;
// g-vector columns sorted lexicographically: identifies a pair.
using GKey = std::vector<GVector>;

// Indecomposable tau-rigid module with its cached presentation data.
struct RigidSummand {
  Representation module;
  ProjectivePresentation presentation;
  GVector g;
  std::optional<std::size_t> projective_vertex;  // set iff module = P(v)
};
using SummandPtr = std::shared_ptr<const RigidSummand>;
SummandPtr make_summand(const Representation& indecomposable);

// Support tau-tilting pair (M, P): M = sum of summands, P = sum of P(v) over excluded vertices.
class SttPair {
 public:
  SttPair(AlgebraPtr algebra, std::vector<SummandPtr> summands, std::vector<std::size_t> excluded);
  // (A, 0) and (0, A).
  static SttPair top(const AlgebraPtr& algebra);
  static SttPair bottom(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<SummandPtr>& summands() const { return summands_; }
  const std::vector<std::size_t>& excluded() const { return excluded_; }
  std::size_t position_count() const { return summands_.size() + excluded_.size(); }
  // Columns in position order: summands first, then -e_v for excluded v.
  std::vector<GVector> g_matrix() const;
  GKey key() const;
  Representation module() const;
  std::vector<std::size_t> support() const;

 private:
  AlgebraPtr algebra_;
  std::vector<SummandPtr> summands_;  // sorted by g-vector
  std::vector<std::size_t> excluded_;
};

// Checks tau-rigidity, Hom(P(v), M) = 0 on excluded vertices, and the count condition.
bool is_stt_pair(const Representation& m, const std::vector<std::size_t>& support, std::uint64_t seed = 0);
bool is_stt_pair(const SttPair& pair);

// The other completion after deleting the element at a position (summand
// positions first, then excluded vertices). Throws PreconditionError when the
// input is not a support tau-tilting pair.
SttPair mutate(const SttPair& pair, std::size_t position);
// True when the mutation at this position goes down in the Fac order.
bool is_down_mutation(const SttPair& pair, std::size_t position);

std::string key_to_string(const GKey& key);

struct ExchangeEdge {
  std::size_t from = 0;  // larger pair (Fac contains the other)
  std::size_t to = 0;
  GVector exchanged;  // column removed from the larger pair
};

struct ExchangeGraph {
  std::vector<SttPair> nodes;  // discovery (breadth-first) order
  std::vector<ExchangeEdge> edges;
  std::map<GKey, std::size_t> index;
  bool complete = false;
  std::size_t cap = 0;
  std::vector<std::vector<bool>> order;  // order[i][j]: node i >= node j; filled when complete

  std::string verdict() const;
};

ExchangeGraph explore(const AlgebraPtr& algebra, std::size_t cap = 10000);

// Exact poset isomorphism of completed explorations; returns one witness
// bijection (node of g1 -> node of g2) when isomorphic. Throws Incomplete.
std::optional<std::vector<std::size_t>> poset_isomorphism(const ExchangeGraph& g1, const ExchangeGraph& g2);
bool poset_isomorphic(const ExchangeGraph& g1, const ExchangeGraph& g2);

// Hasse diagram in DOT, nodes sorted by key.
std::string to_dot(const ExchangeGraph& g, const std::string& name = "sttilt");

}  // namespace tensorbrick
