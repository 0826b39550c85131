#include "latcov/arith/quadratic.hpp"

#include <cctype>
#include <cmath>

#include "latcov/arith/errors.hpp"

namespace latcov {

bool is_square_free(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

Quadratic::Quadratic(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ != 0 && !is_square_free(d_))
    throw ParseError("radicand " + std::to_string(d_) + " is not square-free");
  if (d_ == 0 && !b_.is_zero()) throw FieldMismatch("irrational part without radicand");
}

std::int64_t Quadratic::join(const Quadratic& o) const {
  if (d_ == o.d_) return d_;
  if (o.b_.is_zero()) return d_;
  if (b_.is_zero()) return o.d_;
  throw FieldMismatch("mixing sqrt(" + std::to_string(d_) + ") with sqrt(" +
                      std::to_string(o.d_) + ")");
}

Quadratic Quadratic::conjugate() const {
  Quadratic r = *this;
  r.b_ = -r.b_;
  return r;
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  std::int64_t d = join(o);
  a_ += o.a_;
  if (!o.b_.is_zero()) b_ += o.b_;
  d_ = d;
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  std::int64_t d = join(o);
  a_ -= o.a_;
  if (!o.b_.is_zero()) b_ -= o.b_;
  d_ = d;
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  std::int64_t d = join(o);
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    if (!b_.is_zero()) b_ *= o.a_;
  } else if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
  } else {
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
  }
  d_ = d;
  return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& o) {
  std::int64_t d = join(o);
  if (o.a_.is_zero() && o.b_.is_zero()) throw std::domain_error("division by zero");
  if (o.b_.is_zero()) {
    a_ /= o.a_;
    if (!b_.is_zero()) b_ /= o.a_;
    d_ = d;
    return *this;
  }
  // x / y = x * conj(y) / (a^2 - d b^2)
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  *this *= o.conjugate();
  a_ /= norm;
  b_ /= norm;
  d_ = d;
  return *this;
}

Quadratic operator-(const Quadratic& x) {
  Quadratic r = x;
  r.a_ = -r.a_;
  if (!r.b_.is_zero()) r.b_ = -r.b_;
  return r;
}

bool operator==(const Quadratic& x, const Quadratic& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ == y.a_;
  x.join(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

bool operator<(const Quadratic& x, const Quadratic& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ < y.a_;
  return sgn(x - y) < 0;
}

int sgn(const Quadratic& x) {
  int sa = x.a().sign();
  int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with d b^2
  Rational a2 = x.a() * x.a();
  Rational bd = x.b() * x.b() * Rational(x.d());
  return a2 > bd ? sa : sb;
}

void enclose(const Quadratic& x, unsigned bits, Rational& lo, Rational& hi) {
  if (x.is_rational()) {
    lo = hi = x.a();
    return;
  }
  // Bracket sqrt(d) by integer bisection at scale 2^k until b*[s_lo,s_hi] is tight enough.
  unsigned k = bits + 8;
  Rational width;
  for (;;) {
    Integer scale = Integer(1) << k;
    Integer target = Integer(x.d()) * scale * scale;
    Integer s = boost::multiprecision::sqrt(target);  // floor
    Rational s_lo(s, scale), s_hi(Integer(s + 1), scale);
    Rational b = x.b();
    Rational p = x.a() + b * s_lo;
    Rational q = x.a() + b * s_hi;
    if (p > q) std::swap(p, q);
    width = q - p;
    Rational limit = Rational(Integer(1), Integer(1) << bits);
    if (width <= limit) {
      lo = p;
      hi = q;
      return;
    }
    k += 16;
  }
}

double to_double(const Quadratic& x) {
  if (x.is_rational()) return x.a().convert_to<double>();
  Rational lo, hi;
  enclose(x, 60, lo, hi);
  return ((lo + hi) / 2).convert_to<double>();
}

Integer floor_int(const Quadratic& x) {
  if (x.is_rational()) return floor_int(x.a());
  Rational lo, hi;
  unsigned bits = 32;
  for (;;) {
    enclose(x, bits, lo, hi);
    Integer fl = floor_int(lo), fh = floor_int(hi);
    if (fl == fh) return fl;
    // hi crosses an integer n = fh; decide x < n exactly.
    Quadratic n{Rational(fh)};
    return x < n ? Integer(fh - 1) : fh;
  }
}

std::string to_string(const Quadratic& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string out;
  if (!x.a().is_zero()) {
    out = to_string(x.a());
    out += x.b().sign() < 0 ? "-" : "+";
    out += to_string(abs(x.b()));
  } else {
    out = to_string(x.b());
  }
  out += "*sqrt(" + std::to_string(x.d()) + ")";
  return out;
}

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

}  // namespace

Quadratic parse_quadratic(const std::string& raw, std::int64_t expected_d) {
  std::string text = strip(raw);
  auto pos = text.find("*sqrt(");
  if (pos == std::string::npos) {
    if (text.find("sqrt") != std::string::npos)
      throw ParseError("malformed quadratic literal '" + raw + "'");
    return Quadratic(parse_rational(text));
  }
  if (text.back() != ')') throw ParseError("malformed quadratic literal '" + raw + "'");
  std::string radicand = text.substr(pos + 6, text.size() - pos - 7);
  Integer dint;
  try {
    dint = floor_int(parse_rational(radicand));
    if (Rational(dint) != parse_rational(radicand)) throw ParseError("");
  } catch (const ParseError&) {
    throw ParseError("malformed radicand in '" + raw + "'");
  }
  std::int64_t d = dint.convert_to<std::int64_t>();
  if (!is_square_free(d)) throw ParseError("radicand " + radicand + " is not square-free");
  if (expected_d != 0 && d != expected_d)
    throw FieldMismatch("literal '" + raw + "' is not in Q(sqrt(" + std::to_string(expected_d) +
                        "))");
  std::string head = text.substr(0, pos);
  // split head into a (optional) and signed b: find the last +/- not at index 0
  // and not directly after '/'.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational a(0), b;
  if (split == std::string::npos) {
    b = parse_rational(head);
  } else {
    a = parse_rational(head.substr(0, split));
    std::string bt = head.substr(split);
    if (bt.size() > 1 && bt[0] == '+') bt = bt.substr(1);
    b = parse_rational(bt);
  }
  if (b.is_zero()) return Quadratic(a);
  return Quadratic(a, b, d);
}

}  // namespace latcov
