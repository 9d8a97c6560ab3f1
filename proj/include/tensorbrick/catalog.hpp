#pragma once

#include <string>

#include "tensorbrick/algebra.hpp"

namespace tensorbrick {

// Relations killing every path of the given length, optionally only those
// built from the listed arrows.
std::vector<Relation> zero_paths_of_length(const Quiver& q, std::size_t length,
                                           const std::vector<std::size_t>* allowed_arrows = nullptr);

// Self-injective Nakayama algebra N(n, l): cyclic quiver 1 -> 2 -> ... -> n -> 1
// with arrows <prefix>1..<prefix>n and all paths of length l zero.
AlgebraPtr nakayama_algebra(std::size_t n, std::size_t loewy_length, const Field& field = Field::rationals(),
                            const std::string& arrow_prefix = "a");
// Linearly oriented A_n path algebra 1 -> 2 -> ... -> n.
AlgebraPtr linear_path_algebra(std::size_t n, const Field& field = Field::rationals());
// k[x]/(x^l).
AlgebraPtr truncated_polynomial_algebra(std::size_t l, const Field& field = Field::rationals());
// The ground field as a one-vertex algebra.
AlgebraPtr point_algebra(const Field& field = Field::rationals());
// 1 => 2 with two parallel arrows.
AlgebraPtr kronecker_algebra(const Field& field = Field::rationals());

}  // namespace tensorbrick
