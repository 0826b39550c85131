#pragma once

#include <cstdint>
#include <string>

#include "latcov/arith/rational.hpp"

namespace latcov {

/// An element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
///
/// `d` is a square-free integer >= 2, or 0 for a value that carries no
/// irrational part yet (then b == 0). Values with b == 0 combine freely with
/// any field; two values with nonzero irrational parts over different `d`
/// raise FieldMismatch.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(int v) : a_(v) {}  // NOLINT: implicit like a literal
  Quadratic(const Rational& a) : a_(a) {}  // NOLINT
  Quadratic(Rational a, Rational b, std::int64_t d);

  /// sqrt(d) itself.
  static Quadratic sqrt_of(std::int64_t d) { return Quadratic(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  Quadratic conjugate() const;

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o);

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  friend Quadratic operator-(const Quadratic& x);

  friend bool operator==(const Quadratic& x, const Quadratic& y);
  friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }
  friend bool operator<(const Quadratic& x, const Quadratic& y);
  friend bool operator>(const Quadratic& x, const Quadratic& y) { return y < x; }
  friend bool operator<=(const Quadratic& x, const Quadratic& y) { return !(y < x); }
  friend bool operator>=(const Quadratic& x, const Quadratic& y) { return !(x < y); }

 private:
  std::int64_t join(const Quadratic& o) const;

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 0;
};

int sgn(const Quadratic& x);
double to_double(const Quadratic& x);

/// "a+b*sqrt(d)" with a and b in lowest terms; plain "a" when b == 0.
std::string to_string(const Quadratic& x);

/// Parses "p/q", "p/q+r/s*sqrt(d)", "p/q-r/s*sqrt(d)" or "r/s*sqrt(d)".
/// `expected_d` (if nonzero) must match the literal's radicand.
Quadratic parse_quadratic(const std::string& text, std::int64_t expected_d = 0);

bool is_square_free(std::int64_t d);

/// Floor of an exact quadratic number.
Integer floor_int(const Quadratic& x);
inline Integer ceil_int(const Quadratic& x) { return -floor_int(-x); }

/// Rational enclosure [lo, hi] of x with hi - lo <= 2^-bits.
void enclose(const Quadratic& x, unsigned bits, Rational& lo, Rational& hi);

}  // namespace latcov
