#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lendepth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input to an operation (non-canonical type, rank cap, duplicate list entries).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownTypeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Descriptor text that does not follow the grammar. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotCuratedError : public Error {
 public:
  using Error::Error;
};

class IncompleteError : public Error {
 public:
  using Error::Error;
};

class DatabaseFormatError : public Error {
 public:
  DatabaseFormatError(const std::string& what, std::size_t line)
      : Error("maxsubdb line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Malformed chain certificate. `indices` are the offending node positions.
class StructuralError : public Error {
 public:
  StructuralError(const std::string& what, std::vector<std::size_t> indices)
      : Error(what), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace lendepth
