#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tensorbrick {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Some path of the nilpotency bound's length survives: raise the bound or fix relations.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class RelationViolation : public Error {
 public:
  using Error::Error;
};

class NotIndecomposable : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class NoCycle : public Error {
 public:
  using Error::Error;
};

class Incomplete : public Error {
 public:
  using Error::Error;
};

// A randomized search ran out of budget without a witness.
class Undecided : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace tensorbrick
