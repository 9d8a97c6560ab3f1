#pragma once

#include <vector>

#include "tensorbrick/representation.hpp"

namespace tensorbrick {

// P(i): paths starting at i, arrows acting by right multiplication.
Representation projective_rep(const AlgebraPtr& algebra, std::size_t vertex);
// I(i): dual of the paths ending at i.
Representation injective_rep(const AlgebraPtr& algebra, std::size_t vertex);
// A as a right module over itself.
Representation regular_rep(const AlgebraPtr& algebra);
Representation sum_of_projectives(const AlgebraPtr& algebra, const std::vector<std::size_t>& vertices);
Representation sum_of_injectives(const AlgebraPtr& algebra, const std::vector<std::size_t>& vertices);

// Map between sums of projectives given by elements x[r][s] in e_{targets[s]} A e_{sources[r]}:
// the generator of the r-th source summand goes to (x[r][s])_s.
Morphism projective_map(const AlgebraPtr& algebra, const std::vector<std::size_t>& sources,
                        const std::vector<std::size_t>& targets, const std::vector<std::vector<SparseVector>>& x);
// The Nakayama functor applied to projective_map(sources, targets, x).
Morphism nakayama_map(const AlgebraPtr& algebra, const std::vector<std::size_t>& sources,
                      const std::vector<std::size_t>& targets, const std::vector<std::vector<SparseVector>>& x);

// P1 -> P0 -> M -> 0 with P0 -> M a projective cover and P1 a projective cover of its kernel.
struct ProjectivePresentation {
  std::vector<std::size_t> p0;
  std::vector<std::size_t> p1;
  // map[r][s] in e_{p0[s]} A e_{p1[r]}; lies in the radical.
  std::vector<std::vector<SparseVector>> map;
  Morphism cover;  // sum_of_projectives(p0) -> M
};

ProjectivePresentation min_projective_presentation(const Representation& m);
bool is_projective(const Representation& m);

// g-vector [P0] - [P1] indexed by vertex.
std::vector<long> g_vector(const ProjectivePresentation& p, std::size_t vertex_count);

// Auslander-Reiten translate: kernel of the Nakayama functor applied to the presentation.
Representation tau(const Representation& m);
Representation tau(const Representation& m, const ProjectivePresentation& p);

// Auslander-Bridger transpose over the opposite algebra op (which must be opposite_algebra(A)).
Representation transpose(const Representation& m, const ProjectivePresentation& p, const AlgebraPtr& op);

// Vector space dual D M, a module over op (the opposite algebra of M's algebra).
Representation dual(const Representation& m, const AlgebraPtr& op);

bool is_tau_rigid(const Representation& m);

}  // namespace tensorbrick
