#pragma once

#include <stdexcept>
#include <string>

namespace latcov {

// Malformed literal or document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic across incompatible scalar fields, e.g. Q(sqrt 2) with Q(sqrt 5).
class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A geometric precondition was violated (origin not interior, singular basis...).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latcov
