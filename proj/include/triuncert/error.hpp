#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triuncert {

/// Operand dimensions are incompatible with the requested operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input lies outside the domain of the operation (non-Hermitian matrix,
/// angle out of range, state that fails validation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed JSON input. `offset` is the byte position reported by the parser,
/// or 0 when the document parsed but its structure was wrong.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace triuncert
