#include "latcov/catalog/catalog.hpp"

#include <stdexcept>

namespace latcov {

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

template <class S>
Vec3<S> v3(const S& x, const S& y, const S& z) {
  return vec3<S>(x, y, z);
}

template <class S>
Mat3<S> rows(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  Mat3<S> m;
  m.row(0) = a.transpose();
  m.row(1) = b.transpose();
  m.row(2) = c.transpose();
  return m;
}

// All sign patterns of a x_i + b x_j <= rhs.
template <class S>
void abs_pair(std::vector<HalfSpace<S>>& hs, int i, const S& a, int j, const S& b, const S& rhs) {
  for (int si = -1; si <= 1; si += 2)
    for (int sj = -1; sj <= 1; sj += 2) {
      Vec3<S> n = Vec3<S>::Zero();
      n[i] = a * S(si);
      n[j] = b * S(sj);
      hs.push_back({n, rhs});
    }
}

template <class S>
std::vector<HalfSpace<S>> l1_ball(const S& r) {
  std::vector<HalfSpace<S>> hs;
  for (int m = 0; m < 8; ++m)
    hs.push_back({v3<S>(S(m & 1 ? -1 : 1), S(m & 2 ? -1 : 1), S(m & 4 ? -1 : 1)), r});
  return hs;
}

template <class S>
std::vector<HalfSpace<S>> linf_ball(const S& r) {
  std::vector<HalfSpace<S>> hs;
  for (int k = 0; k < 3; ++k)
    for (int s = -1; s <= 1; s += 2) {
      Vec3<S> n = Vec3<S>::Zero();
      n[k] = S(s);
      hs.push_back({n, r});
    }
  return hs;
}

template <class S>
std::vector<HalfSpace<S>> pair_sums(const S& r) {
  std::vector<HalfSpace<S>> hs;
  abs_pair(hs, 0, S(1), 1, S(1), r);
  abs_pair(hs, 0, S(1), 2, S(1), r);
  abs_pair(hs, 1, S(1), 2, S(1), r);
  return hs;
}

template <class S>
std::vector<HalfSpace<S>> join(std::vector<HalfSpace<S>> a, const std::vector<HalfSpace<S>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<HalfSpace<Quadratic>> dodecahedron_h(const Quadratic& r) {
  Quadratic t = golden();
  std::vector<HalfSpace<Quadratic>> hs;
  abs_pair(hs, 0, t, 1, Quadratic(1), r);
  abs_pair(hs, 1, t, 2, Quadratic(1), r);
  abs_pair(hs, 2, t, 0, Quadratic(1), r);
  return hs;
}

std::vector<HalfSpace<Quadratic>> icosahedron_h(const Quadratic& r) {
  Quadratic t = golden();
  Quadratic it = Quadratic(1) / t;
  auto hs = l1_ball<Quadratic>(r);
  abs_pair(hs, 0, t, 2, it, r);
  abs_pair(hs, 1, t, 0, it, r);
  abs_pair(hs, 2, t, 1, it, r);
  return hs;
}

Lattice<Quadratic> lambda2() {
  Quadratic c = Quadratic(2) / (Quadratic(1) + golden());
  Quadratic z(0);
  return Lattice<Quadratic>(rows(v3(z, c, c), v3(c, z, c), v3(c, c, z)), "lambda2");
}

Lattice<Rational> lambda5() {
  return Lattice<Rational>(rows(v3(q(4, 3), q(0), q(0)), v3(q(0), q(4, 3), q(0)),
                                v3(q(2, 3), q(2, 3), q(2, 3))),
                           "lambda5");
}

Lattice<Rational> lambda1() {
  return Lattice<Rational>(rows(v3(q(2, 3), q(1), q(1, 3)), v3(q(-1, 3), q(-2, 3), q(1)),
                                v3(q(-1), q(1, 3), q(-2, 3))),
                           "lambda1");
}

Lattice<Rational> cubic2() {
  return Lattice<Rational>(Mat3<Rational>(Mat3<Rational>::Identity() * Rational(2)), "2Z3");
}

IntervalLattice lambda8() {
  // Printed truncations d.dddd...; the true entry lies within 1e-4 of the digits
  // on the side away from zero.
  const char* digits[3][3] = {{"7.6568", "-2.0339", "2.0339"},
                              {"1.5185", "0.6901", "7.6568"},
                              {"6.1383", "5.6228", "2.7241"}};
  Rational ulp = q(1, 10000);
  IntervalLattice l{"lambda8", {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational v = parse_rational(digits[i][j]);
      l.basis(i, j) = v.sign() < 0 ? Interval(v - ulp, v) : Interval(v, v + ulp);
    }
  return l;
}

Lattice<Rational> lambda9() {
  return Lattice<Rational>(rows(v3(q(0), q(2), q(2)), v3(q(2), q(0), q(2)), v3(q(2), q(2), q(0))),
                           "lambda9");
}

Lattice<Quadratic> lambda9star() {
  Quadratic s = Quadratic(4) - Quadratic::sqrt_of(2);
  Quadratic a = s * Quadratic(q(4, 3)), b = s * Quadratic(q(2, 3)), z(0);
  return Lattice<Quadratic>(rows(v3(a, z, z), v3(z, a, z), v3(b, b, b)), "lambda9star");
}

Quadratic sqrt2() { return Quadratic::sqrt_of(2); }

}  // namespace

Quadratic golden() { return Quadratic(q(1, 2), q(1, 2), 5); }

Polytope<Rational> octahedron() { return from_halfspaces(l1_ball<Rational>(Rational(1))); }

Polytope<Rational> cube() { return from_halfspaces(linf_ball<Rational>(Rational(1))); }

Polytope<Rational> tetrahedron_t() {
  return hull(std::vector<Vec3<Rational>>{v3(q(0), q(0), q(1)), v3(q(1, 3), q(0), q(2, 3)),
                                          v3(q(0), q(1, 3), q(2, 3)), v3(q(1, 3), q(1, 3), q(1))});
}

Lattice<Rational> minkowski_lattice() {
  return Lattice<Rational>(rows(v3(q(-2, 3), q(1), q(1, 3)), v3(q(1, 3), q(-2, 3), q(1)),
                                v3(q(1), q(1, 3), q(-2, 3))),
                           "minkowski");
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"octahedron", "T",  "C0", "C1", "C2", "C3",
                                              "C4",         "C5", "C6", "C7", "C8", "C9"};
  return names;
}

CatalogEntry make(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  Quadratic t = golden();
  if (name == "octahedron" || name == "C1") {
    e.solid = "regular octahedron";
    e.body = octahedron();
    if (name == "octahedron")
      e.lattices = {minkowski_lattice(), lambda1()};
    else
      e.lattices = {lambda1(), minkowski_lattice()};
    e.expected_vertices = 6;
    e.expected_facets = 8;
  } else if (name == "T") {
    e.solid = "tetrahedral hole";
    e.body = tetrahedron_t();
    e.expected_vertices = 4;
    e.expected_facets = 4;
  } else if (name == "C0") {
    e.solid = "cube";
    e.body = cube();
    e.lattices = {cubic2()};
    e.expected_vertices = 8;
    e.expected_facets = 6;
  } else if (name == "C2") {
    e.solid = "dodecahedron";
    e.field = Field::quadratic(5);
    e.body = from_halfspaces(dodecahedron_h(Quadratic(1)));
    e.lattices = {lambda2()};
    e.expected_vertices = 20;
    e.expected_facets = 12;
  } else if (name == "C5") {
    e.solid = "icosahedron";
    e.field = Field::quadratic(5);
    e.body = from_halfspaces(icosahedron_h(Quadratic(1)));
    e.lattices = {lambda5()};
    e.expected_vertices = 12;
    e.expected_facets = 20;
  } else if (name == "C3") {
    e.solid = "icosidodecahedron";
    e.field = Field::quadratic(5);
    e.body = from_halfspaces(join(dodecahedron_h(Quadratic(1)), icosahedron_h(Quadratic(1))));
    e.lattices = {lambda2()};
    e.expected_vertices = 30;
    e.expected_facets = 32;
  } else if (name == "C4") {
    e.solid = "truncated dodecahedron";
    e.field = Field::quadratic(5);
    Quadratic k = (Quadratic(7) + Quadratic(12) * t) /
                  ((Quadratic(3) + Quadratic(4) * t) * (Quadratic(1) + t));
    e.body = from_halfspaces(join(dodecahedron_h(Quadratic(1)), icosahedron_h(k)));
    e.lattices = {lambda2()};
    e.expected_vertices = 60;
    e.expected_facets = 32;
  } else if (name == "C6") {
    e.solid = "truncated icosahedron";
    e.field = Field::quadratic(5);
    Quadratic k = (Quadratic(q(4, 3)) + t) / (Quadratic(1) + t);
    e.body = from_halfspaces(join(icosahedron_h(Quadratic(1)), dodecahedron_h(k)));
    e.lattices = {lambda5()};
    e.expected_vertices = 60;
    e.expected_facets = 32;
  } else if (name == "C7") {
    e.solid = "cuboctahedron";
    e.body = from_halfspaces(join(linf_ball<Rational>(Rational(1)), l1_ball<Rational>(Rational(2))));
    e.lattices = {Lattice<Rational>(rows(v3(q(2), q(-1, 3), q(-1, 3)), v3(q(-1, 3), q(2), q(-1, 3)),
                                         v3(q(-1, 3), q(-1, 3), q(2))),
                                    "lambda7")};
    e.expected_vertices = 12;
    e.expected_facets = 14;
  } else if (name == "C8") {
    e.solid = "truncated cuboctahedron";
    e.field = Field::quadratic(2);
    Quadratic r2 = sqrt2();
    auto hs = join(pair_sums<Quadratic>(Quadratic(2) + Quadratic(3) * r2),
                   join(linf_ball<Quadratic>(Quadratic(2) * r2 + Quadratic(1)),
                        l1_ball<Quadratic>(Quadratic(3) * r2 + Quadratic(3))));
    e.body = from_halfspaces(hs);
    e.lattices = {lambda8()};
    e.expected_vertices = 48;
    e.expected_facets = 26;
  } else if (name == "C9") {
    e.solid = "rhombicuboctahedron";
    e.field = Field::quadratic(2);
    Quadratic r2 = sqrt2();
    auto hs = join(pair_sums<Quadratic>(Quadratic(2)),
                   join(linf_ball<Quadratic>(r2), l1_ball<Quadratic>(Quadratic(4) - r2)));
    e.body = from_halfspaces(hs);
    e.lattices = {lambda9(), lambda9star()};
    e.expected_vertices = 24;
    e.expected_facets = 26;
  } else {
    throw std::out_of_range("unknown catalog entry '" + name + "'");
  }
  return e;
}

const std::string& lattice_name(const AnyLattice& l) {
  return std::visit(
      [](const auto& x) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, IntervalLattice>)
          return x.name;
        else
          return x.name();
      },
      l);
}

int polytope_vertices(const AnyPolytope& p) {
  return std::visit([](const auto& x) { return static_cast<int>(x.vertices.size()); }, p);
}

int polytope_facets(const AnyPolytope& p) {
  return std::visit([](const auto& x) { return static_cast<int>(x.facets.size()); }, p);
}

}  // namespace latcov
