#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segre {

/// Invalid input: malformed text, ring mismatch, violated precondition.
class ValueError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parse failure carrying a byte offset into the source text.
class ParseError : public ValueError {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : ValueError(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

/// A configured resource cap was hit (basis size, degree, wall clock).
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Random choices were not generic enough; retrying with a fresh seed is safe.
class GenericityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent derivations of the same quantity disagreed.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace segre
