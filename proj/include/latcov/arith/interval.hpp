#pragma once

#include <string>

#include "latcov/arith/quadratic.hpp"
#include "latcov/arith/rational.hpp"

namespace latcov {

enum class Ordering { less, equal, greater, unknown };

const char* to_string(Ordering o);

/// Closed interval [lo, hi] with rational endpoints.
///
/// Results of arithmetic are rounded outward to dyadic endpoints with
/// `precision()` fractional bits, which keeps endpoint sizes bounded.
class Interval {
 public:
  Interval() = default;
  Interval(int v) : lo_(v), hi_(v) {}  // NOLINT
  Interval(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT
  Interval(Rational lo, Rational hi);

  /// Enclosure of an exact quadratic number.
  static Interval enclose(const Quadratic& q, unsigned bits);
  /// Enclosure of sqrt(x) for x >= 0.
  static Interval sqrt(const Interval& x, unsigned bits);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  /// Fractional bits kept by outward rounding on the calling thread.
  static unsigned precision();
  static void set_precision(unsigned bits);

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval x, const Interval& y) { return x += y; }
  friend Interval operator-(Interval x, const Interval& y) { return x -= y; }
  friend Interval operator*(Interval x, const Interval& y) { return x *= y; }
  friend Interval operator/(Interval x, const Interval& y) { return x /= y; }
  friend Interval operator-(const Interval& x) { return Interval(-x.hi_, -x.lo_); }

  // Set-valued predicates: true only when certain.
  friend bool operator<(const Interval& x, const Interval& y) { return x.hi_ < y.lo_; }
  friend bool operator>(const Interval& x, const Interval& y) { return y < x; }
  friend bool operator<=(const Interval& x, const Interval& y) { return x.hi_ <= y.lo_; }
  friend bool operator>=(const Interval& x, const Interval& y) { return y <= x; }
  friend bool operator==(const Interval& x, const Interval& y) {
    return x.lo_ == y.lo_ && x.hi_ == y.hi_;
  }
  friend bool operator!=(const Interval& x, const Interval& y) { return !(x == y); }

 private:
  void round_out();

  Rational lo_{0};
  Rational hi_{0};
};

Ordering compare(const Interval& x, const Interval& y);
Ordering compare(const Rational& x, const Rational& y);
Ordering compare(const Quadratic& x, const Quadratic& y);

Interval abs(const Interval& x);
Interval max(const Interval& x, const Interval& y);
Interval min(const Interval& x, const Interval& y);
Interval hull(const Interval& x, const Interval& y);

inline double to_double(const Interval& x) { return x.mid().convert_to<double>(); }

/// "[lo,hi]" with lowest-terms endpoints.
std::string to_string(const Interval& x);

}  // namespace latcov
