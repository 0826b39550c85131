#include "latcov/arith/rational.hpp"

#include <stdexcept>

#include "latcov/arith/errors.hpp"

namespace latcov {

Integer floor_int(const Rational& x) {
  Integer n = boost::multiprecision::numerator(x);
  Integer d = boost::multiprecision::denominator(x);
  Integer q = n / d;
  if (q * d != n && n.sign() < 0) q -= 1;
  return q;
}

Integer ceil_int(const Rational& x) { return -floor_int(-x); }

std::string to_string(const Rational& x) { return x.str(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Decimal digits only; leading zeros would select octal in the gmp parser.
Integer from_digits(const std::string& digits) {
  std::size_t i = digits.find_first_not_of('0');
  return i == std::string::npos ? Integer(0) : Integer(digits.substr(i));
}

Integer parse_integer(const std::string& text) {
  std::string body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) throw ParseError("malformed integer '" + text + "'");
  Integer v = from_digits(body);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
      throw ParseError("signed denominator in '" + text + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string ip = text.substr(0, dot);
    std::string fp = text.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp))
      throw ParseError("malformed decimal '" + text + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Rational v = Rational(from_digits(ip)) + Rational(from_digits(fp), scale);
    return neg ? Rational(-v) : v;
  }
  return Rational(parse_integer(text));
}

Rational round_down(const Rational& x, unsigned bits) {
  Integer scale = Integer(1) << bits;
  return Rational(floor_int(x * Rational(scale)), scale);
}

Rational round_up(const Rational& x, unsigned bits) {
  Integer scale = Integer(1) << bits;
  return Rational(ceil_int(x * Rational(scale)), scale);
}

}  // namespace latcov
