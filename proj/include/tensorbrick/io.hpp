#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tensorbrick/representation.hpp"

namespace tensorbrick {

// Text format for bound quiver algebras, one directive per line:
//   field Q | field GF(p)
//   vertex <id>
//   arrow <id>: <source> -> <target>
//   relation [coeff *] a.b.c (+|-) [coeff *] d.e ...
//   zero-paths-of-length <N> [over <arrow> ...]
//   bound <N>
// Paths compose left to right. '#' starts a comment. Identifiers may not
// contain whitespace or '.'. Throws ParseError with the offending line.
AlgebraPtr parse_algebra(std::istream& in, const std::optional<Field>& field_override = std::nullopt);
AlgebraPtr parse_algebra_text(const std::string& text, const std::optional<Field>& field_override = std::nullopt);
AlgebraPtr read_algebra_file(const std::string& path, const std::optional<Field>& field_override = std::nullopt);
std::string serialize_algebra(const BoundAlgebra& a);

// Text format for representations of a given algebra:
//   field Q
//   dim <vertex> <n>
//   map <arrow> <rows> <cols>
//   <row entries>      (rows lines of cols entries each)
// Omitted dimensions and maps are zero.
Representation parse_representation(std::istream& in, const AlgebraPtr& algebra);
Representation parse_representation_text(const std::string& text, const AlgebraPtr& algebra);
std::string serialize_representation(const Representation& m);

// Writes through a temporary file renamed into place.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace tensorbrick
