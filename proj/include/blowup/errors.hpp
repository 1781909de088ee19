#ifndef BLOWUP_ERRORS_HPP
#define BLOWUP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blowup {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different ring contexts (variables, field or order differ).
class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

/// Invalid coefficient for the requested field (zero denominator, p | denominator, ...).
class FieldError : public Error {
 public:
  explicit FieldError(const std::string& what) : Error(what) {}
};

/// Text input rejected; `position` is the 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation that requires homogeneous input was given a non-homogeneous ideal.
class NotHomogeneous : public Error {
 public:
  explicit NotHomogeneous(const std::string& what) : Error(what) {}
};

/// An iteration cap was exhausted before the computation stabilized.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace blowup

#endif  // BLOWUP_ERRORS_HPP
