#include "latcov/arith/scalar.hpp"

#include <cctype>

#include "latcov/arith/errors.hpp"

namespace latcov {

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

constexpr unsigned kEncloseBits = 128;

}  // namespace

Field parse_field(const std::string& raw) {
  std::string text = strip(raw);
  if (text == "rational") return Field::rational();
  if (text == "interval") return Field::interval();
  if (text.rfind("quadratic:", 0) == 0) {
    std::string ds = text.substr(10);
    if (ds.empty() || ds.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed field descriptor '" + raw + "'");
    std::int64_t d = std::stoll(ds);
    if (!is_square_free(d)) throw ParseError("radicand " + ds + " is not square-free");
    return Field::quadratic(d);
  }
  throw ParseError("unknown field descriptor '" + raw + "'");
}

std::string to_string(const Field& f) {
  switch (f.kind) {
    case Field::Kind::rational: return "rational";
    case Field::Kind::quadratic: return "quadratic:" + std::to_string(f.d);
    case Field::Kind::interval: return "interval";
  }
  return "rational";
}

Scalar parse_scalar(const std::string& raw, const Field& field) {
  std::string text = strip(raw);
  if (text.empty()) throw ParseError("empty scalar literal");
  bool bracket = text.front() == '[';
  bool radical = text.find("sqrt") != std::string::npos;
  switch (field.kind) {
    case Field::Kind::rational:
      if (bracket || radical)
        throw ParseError("literal '" + raw + "' is not a rational number");
      return parse_rational(text);
    case Field::Kind::quadratic:
      if (bracket) throw ParseError("interval literal '" + raw + "' in a quadratic field");
      return parse_quadratic(text, field.d);
    case Field::Kind::interval: {
      if (!bracket) {
        if (radical) return Interval::enclose(parse_quadratic(text), kEncloseBits);
        return Interval(parse_rational(text));
      }
      if (text.back() != ']') throw ParseError("malformed interval literal '" + raw + "'");
      auto comma = text.find(',');
      if (comma == std::string::npos)
        throw ParseError("malformed interval literal '" + raw + "'");
      Rational lo = parse_rational(text.substr(1, comma - 1));
      Rational hi = parse_rational(text.substr(comma + 1, text.size() - comma - 2));
      if (hi < lo) throw ParseError("interval literal '" + raw + "' has lo > hi");
      return Interval(lo, hi);
    }
  }
  throw ParseError("unsupported field");
}

std::string format_scalar(const Scalar& s) {
  return std::visit([](const auto& v) { return format(v); }, s);
}

template <>
Rational scalar_as<Rational>(const Scalar& s) {
  if (auto r = std::get_if<Rational>(&s)) return *r;
  if (auto q = std::get_if<Quadratic>(&s); q && q->is_rational()) return q->a();
  if (auto i = std::get_if<Interval>(&s); i && i->is_point()) return i->lo();
  throw FieldMismatch("value " + format_scalar(s) + " is not rational");
}

template <>
Quadratic scalar_as<Quadratic>(const Scalar& s) {
  if (auto r = std::get_if<Rational>(&s)) return Quadratic(*r);
  if (auto q = std::get_if<Quadratic>(&s)) return *q;
  if (auto i = std::get_if<Interval>(&s); i && i->is_point()) return Quadratic(i->lo());
  throw FieldMismatch("interval value " + format_scalar(s) + " has no exact form");
}

template <>
Interval scalar_as<Interval>(const Scalar& s) {
  if (auto r = std::get_if<Rational>(&s)) return Interval(*r);
  if (auto q = std::get_if<Quadratic>(&s)) return Interval::enclose(*q, kEncloseBits);
  return std::get<Interval>(s);
}

Ordering compare(const Scalar& a, const Scalar& b) {
  bool ia = std::holds_alternative<Interval>(a);
  bool ib = std::holds_alternative<Interval>(b);
  if (ia || ib) return compare(scalar_as<Interval>(a), scalar_as<Interval>(b));
  return compare(scalar_as<Quadratic>(a), scalar_as<Quadratic>(b));
}

double to_double(const Scalar& s) {
  return std::visit([](const auto& v) { return to_double(v); }, s);
}

}  // namespace latcov
