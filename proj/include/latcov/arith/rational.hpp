#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace latcov {

// Expression templates are disabled so that the type behaves like a plain
// value inside Eigen matrices and `auto` deductions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline int sgn(const Rational& x) { return x.sign(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

Integer floor_int(const Rational& x);
Integer ceil_int(const Rational& x);

// Lowest-terms "p/q" ("p" when q = 1).
std::string to_string(const Rational& x);

// Parses "p", "p/q", and plain decimals such as "-2.0339".
Rational parse_rational(const std::string& text);

// The largest dyadic number k/2^bits that is <= x (resp. smallest >= x).
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

}  // namespace latcov
