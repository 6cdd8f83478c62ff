#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lct {

/// Malformed textual input (polynomials, rationals, set files).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size cap (dimension, enumeration bound, search depth) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An inequality that must hold for the computed instance did not.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lct
