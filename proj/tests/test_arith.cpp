#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "latcov/arith/errors.hpp"
#include "latcov/arith/interval.hpp"
#include "latcov/arith/quadratic.hpp"
#include "latcov/arith/scalar.hpp"
#include "oracle.hpp"

using namespace latcov;
using oracle::q;

namespace {

using Dec = boost::multiprecision::cpp_dec_float_100;

Dec dec(const Rational& x) {
  return Dec(numerator(x).str()) / Dec(denominator(x).str());
}

Dec dec(const Quadratic& x) {
  return dec(x.a()) + dec(x.b()) * boost::multiprecision::sqrt(Dec(x.d()));
}

Quadratic random_quadratic(oracle::Rng& rng, std::int64_t d) {
  return Quadratic(rng.rational(50, 12), rng.rational(50, 12), d);
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_rational("7/6") == q(7, 6));
  CHECK(parse_rational("-14/12") == q(-7, 6));
  CHECK(parse_rational("3") == q(3));
  CHECK(to_string(q(-7, 6)) == "-7/6");
  CHECK(to_string(q(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(floor_int(q(-7, 6)) == -2);
  CHECK(ceil_int(q(-7, 6)) == -1);
  CHECK(ceil_int(q(6)) == 6);
}

TEST_CASE("rational round trip through text") {
  oracle::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    Rational x = rng.rational(1000, 97);
    CHECK(parse_rational(to_string(x)) == x);
  }
}

TEST_CASE("quadratic field axioms") {
  oracle::Rng rng(12);
  for (std::int64_t d : {2, 3, 5}) {
    for (int i = 0; i < 300; ++i) {
      Quadratic x = random_quadratic(rng, d), y = random_quadratic(rng, d), z = random_quadratic(rng, d);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x - x == Quadratic(0));
      CHECK((x * x.conjugate()).is_rational());
      if (x != Quadratic(0)) CHECK(x * (Quadratic(1) / x) == Quadratic(1));
    }
  }
  Quadratic s5 = Quadratic::sqrt_of(5);
  CHECK(s5 * s5 == Quadratic(5));
  CHECK_THROWS_AS(Quadratic::sqrt_of(2) + s5, FieldMismatch);
  CHECK_THROWS(Quadratic(1) / Quadratic(0));
}

TEST_CASE("quadratic ordering agrees with 100-digit decimals") {
  oracle::Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    std::int64_t d = std::array<std::int64_t, 3>{2, 3, 5}[i % 3];
    Quadratic x = random_quadratic(rng, d), y = random_quadratic(rng, d);
    // near ties: move y onto x's rational part now and then
    if (i % 7 == 0) y = Quadratic(x.a(), y.b(), d);
    Dec dx = dec(x), dy = dec(y);
    CHECK((x < y) == (dx < dy));
    CHECK((x == y) == (x.a() == y.a() && x.b() == y.b()));
    CHECK(sgn(x) == (dx > 0 ? 1 : dx < 0 ? -1 : 0));
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("quadratic floor and literals") {
  Quadratic phi = (Quadratic(1) + Quadratic::sqrt_of(5)) / Quadratic(2);
  CHECK(floor_int(phi) == 1);
  CHECK(ceil_int(phi) == 2);
  CHECK(floor_int(-phi) == -2);
  CHECK(to_string(Quadratic(-1) + Quadratic::sqrt_of(5)) == "-1+1*sqrt(5)");
  CHECK(parse_quadratic("-1+1*sqrt(5)") == Quadratic(-1) + Quadratic::sqrt_of(5));
  CHECK(parse_quadratic("1/2+3/4*sqrt(5)", 5) == Quadratic(q(1, 2), q(3, 4), 5));
  CHECK_THROWS_AS(parse_quadratic("1+1*sqrt(4)"), ParseError);
  CHECK_THROWS_AS(parse_quadratic("1+1*sqrt(2)", 5), FieldMismatch);
  oracle::Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    Quadratic x = random_quadratic(rng, 5);
    CHECK(parse_quadratic(to_string(x), 5) == x);
  }
}

TEST_CASE("interval operations enclose exact results") {
  oracle::Rng rng(15);
  for (int i = 0; i < 2000; ++i) {
    Rational a = rng.rational(20, 9), b = rng.rational(20, 9);
    Rational wa = abs(rng.rational(5, 9)), wb = abs(rng.rational(5, 9));
    Interval x(a, a + wa), y(b, b + wb);
    // pick a point of each interval
    Rational px = a + wa * q(i % 5, 4), py = b + wb * q(i % 3, 2);
    CHECK((x + y).contains(px + py));
    CHECK((x - y).contains(px - py));
    CHECK((x * y).contains(px * py));
    if (!y.contains(0)) CHECK((x / y).contains(px / py));
    CHECK(abs(x).contains(abs(px)));
  }
}

TEST_CASE("interval square roots and quadratic enclosures") {
  oracle::Rng rng(16);
  for (int i = 0; i < 500; ++i) {
    Rational v = abs(rng.rational(100, 13));
    Interval s = Interval::sqrt(Interval(v), 64);
    CHECK(s.lo() * s.lo() <= v);
    CHECK(v <= s.hi() * s.hi());
    CHECK(s.width() < q(1, 1000000));
    Quadratic x = random_quadratic(rng, 5);
    Interval e = Interval::enclose(x, 80);
    Dec dx = dec(x);
    CHECK(dec(e.lo()) <= dx);
    CHECK(dx <= dec(e.hi()));
  }
  CHECK(compare(Interval(q(1), q(2)), Interval(q(3), q(4))) == Ordering::less);
  CHECK(compare(Interval(q(1), q(3)), Interval(q(2), q(4))) == Ordering::unknown);
  CHECK(compare(Interval(q(2)), Interval(q(2))) == Ordering::equal);
}

TEST_CASE("field descriptors and scalars") {
  CHECK(parse_field("rational") == Field::rational());
  CHECK(parse_field("quadratic:5") == Field::quadratic(5));
  CHECK(parse_field("interval") == Field::interval());
  CHECK(to_string(Field::quadratic(5)) == "quadratic:5");
  CHECK_THROWS_AS(parse_field("quadratic:4"), ParseError);
  CHECK_THROWS_AS(parse_field("reals"), ParseError);

  CHECK(scalar_as<Rational>(parse_scalar("7/6", Field::rational())) == q(7, 6));
  CHECK_THROWS_AS(parse_scalar("1+1*sqrt(5)", Field::rational()), ParseError);
  CHECK(scalar_as<Quadratic>(parse_scalar("1+1*sqrt(5)", Field::quadratic(5))) ==
        Quadratic(1) + Quadratic::sqrt_of(5));
  Interval iv = scalar_as<Interval>(parse_scalar("[1/3,1/2]", Field::interval()));
  CHECK(iv.lo() == q(1, 3));
  CHECK(iv.hi() == q(1, 2));
  CHECK_THROWS_AS(parse_scalar("[1,0]", Field::interval()), ParseError);
  CHECK_THROWS_AS(parse_scalar("", Field::rational()), ParseError);
}
