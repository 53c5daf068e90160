#ifndef THILB_ERROR_HPP
#define THILB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thilb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text; carries a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Semantically invalid input (wrong signature, non-sop, bad homomorphism, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (pair count, degree, enumeration bound) was hit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic overflow that would silently corrupt exponents or counts.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace thilb

#endif
