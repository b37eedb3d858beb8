#pragma once

#include <stdexcept>
#include <string>

namespace garside {

// Bad argument values: strand counts, generator indices, mismatched groups.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (braid words, witness files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation needing at least one canonical factor got a power of Delta.
class EmptyNormalForm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Piece decomposition needs canonical length >= 5.
class TooShort : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The ceiling piece scheme leaves no room for the middle piece.
class SchemeDegenerate : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace garside
