#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "latcov/arith/interval.hpp"
#include "latcov/arith/quadratic.hpp"
#include "latcov/arith/rational.hpp"

namespace latcov {

/// Number backend of a document or computation.
struct Field {
  enum class Kind { rational, quadratic, interval };
  Kind kind = Kind::rational;
  std::int64_t d = 0;  // radicand for Kind::quadratic

  static Field rational() { return {}; }
  static Field quadratic(std::int64_t d) { return {Kind::quadratic, d}; }
  static Field interval() { return {Kind::interval, 0}; }

  bool operator==(const Field&) const = default;
};

/// "rational", "quadratic:d" or "interval".
Field parse_field(const std::string& text);
std::string to_string(const Field& f);

using Scalar = std::variant<Rational, Quadratic, Interval>;

Scalar parse_scalar(const std::string& text, const Field& field);
std::string format_scalar(const Scalar& s);

/// Total order for exact backends, Ordering::unknown for overlapping intervals.
/// Mixing quadratic fields throws FieldMismatch; an interval against an exact
/// value compares against an enclosure of that value.
Ordering compare(const Scalar& a, const Scalar& b);

double to_double(const Scalar& s);

// Typed views used by the templated kernels.
template <class S>
S scalar_as(const Scalar& s);

template <>
Rational scalar_as<Rational>(const Scalar& s);
template <>
Quadratic scalar_as<Quadratic>(const Scalar& s);
template <>
Interval scalar_as<Interval>(const Scalar& s);

inline std::string format(const Rational& x) { return to_string(x); }
inline std::string format(const Quadratic& x) { return to_string(x); }
inline std::string format(const Interval& x) { return to_string(x); }

}  // namespace latcov
