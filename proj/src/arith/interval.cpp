#include "latcov/arith/interval.hpp"

#include <stdexcept>

#include "latcov/arith/errors.hpp"

namespace latcov {

namespace {
thread_local unsigned g_precision = 64;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    case Ordering::unknown: return "unknown";
  }
  return "unknown";
}

unsigned Interval::precision() { return g_precision; }
void Interval::set_precision(unsigned bits) { g_precision = bits; }

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

void Interval::round_out() {
  auto big = [](const Rational& r) {
    return msb(abs(boost::multiprecision::denominator(r))) > g_precision;
  };
  if (big(lo_)) lo_ = round_down(lo_, g_precision);
  if (big(hi_)) hi_ = round_up(hi_, g_precision);
}

Interval Interval::enclose(const Quadratic& q, unsigned bits) {
  Rational lo, hi;
  latcov::enclose(q, bits, lo, hi);
  return Interval(lo, hi);
}

Interval Interval::sqrt(const Interval& x, unsigned bits) {
  if (x.lo_.sign() < 0) throw std::domain_error("sqrt of negative interval");
  Integer scale = Integer(1) << bits;
  auto lower = [&](const Rational& v) {
    Integer t = floor_int(v * Rational(scale) * Rational(scale));
    return Rational(boost::multiprecision::sqrt(t), scale);
  };
  auto upper = [&](const Rational& v) {
    Integer t = ceil_int(v * Rational(scale) * Rational(scale));
    Integer s = boost::multiprecision::sqrt(t);
    if (s * s != t) s += 1;
    return Rational(s, scale);
  };
  return Interval(lower(x.lo_), upper(x.hi_));
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  round_out();
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(lo);
  round_out();
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  Rational p[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
  lo_ = p[0];
  hi_ = p[0];
  for (int i = 1; i < 4; ++i) {
    if (p[i] < lo_) lo_ = p[i];
    if (p[i] > hi_) hi_ = p[i];
  }
  round_out();
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.lo_.sign() <= 0 && o.hi_.sign() >= 0)
    throw std::domain_error("interval division by an interval containing 0");
  Interval inv(1 / o.hi_, 1 / o.lo_);
  return *this *= inv;
}

Ordering compare(const Interval& x, const Interval& y) {
  if (x.hi() < y.lo()) return Ordering::less;
  if (x.lo() > y.hi()) return Ordering::greater;
  if (x.is_point() && y.is_point() && x.lo() == y.lo()) return Ordering::equal;
  return Ordering::unknown;
}

Ordering compare(const Rational& x, const Rational& y) {
  return x < y ? Ordering::less : (y < x ? Ordering::greater : Ordering::equal);
}

Ordering compare(const Quadratic& x, const Quadratic& y) {
  int s = sgn(x - y);
  return s < 0 ? Ordering::less : (s > 0 ? Ordering::greater : Ordering::equal);
}

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  Rational m = -x.lo() > x.hi() ? Rational(-x.lo()) : x.hi();
  return Interval(Rational(0), m);
}

Interval max(const Interval& x, const Interval& y) {
  return Interval(x.lo() > y.lo() ? x.lo() : y.lo(), x.hi() > y.hi() ? x.hi() : y.hi());
}

Interval min(const Interval& x, const Interval& y) {
  return Interval(x.lo() < y.lo() ? x.lo() : y.lo(), x.hi() < y.hi() ? x.hi() : y.hi());
}

Interval hull(const Interval& x, const Interval& y) {
  return Interval(x.lo() < y.lo() ? x.lo() : y.lo(), x.hi() > y.hi() ? x.hi() : y.hi());
}

std::string to_string(const Interval& x) {
  return "[" + to_string(x.lo()) + "," + to_string(x.hi()) + "]";
}

}  // namespace latcov
