#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each returns how many cases ran and how many disagreed.

#include <sstream>
#include <string>

#include "latcov/catalog/catalog.hpp"
#include "latcov/lattice/gamma.hpp"
#include "latcov/proof/checks.hpp"
#include "oracle.hpp"

namespace props {

using namespace latcov;
using oracle::q;
using oracle::R3;

struct Result {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (!failures++) first_failure = what;
  }
};

inline std::string str(const R3& x) {
  return "(" + to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(x[2]) + ")";
}

inline Polytope<Rational> random_solid(oracle::Rng& rng, int min_pts, int max_pts, long num, long den) {
  for (;;) {
    std::vector<Vec3<Rational>> pts;
    int n = int(rng.integer(min_pts, max_pts));
    for (int i = 0; i < n; ++i) pts.push_back(oracle::v3(rng.point(num, den)));
    auto p = hull(pts);
    if (p.solid()) return p;
  }
}

/// V -> H -> V, containment of the generators, and polar of polar.
inline Result hull_roundtrips(int n, std::uint64_t seed) {
  Result r;
  oracle::Rng rng(seed);
  for (int t = 0; t < n; ++t) {
    std::vector<Vec3<Rational>> pts;
    Polytope<Rational> p;
    do {
      pts.clear();
      int k = int(rng.integer(4, 12));
      for (int i = 0; i < k; ++i) pts.push_back(oracle::v3(rng.point(6, 4)));
      p = hull(pts);
    } while (!p.solid());
    ++r.cases;
    std::string id = "polytope " + std::to_string(t);

    if (!(from_halfspaces(p.facets) == p)) r.fail(id + ": H-representation gives a different polytope");
    for (const auto& x : pts)
      if (oracle::side(p.facets, oracle::r3(x)) == oracle::Side::outside) r.fail(id + ": generator outside");
    for (const auto& v : p.vertices)
      if (std::find(pts.begin(), pts.end(), v) == pts.end()) r.fail(id + ": vertex not among the generators");

    // polar of the centered body: {y : v.y <= 1 for each vertex v}
    Polytope<Rational> c = translate(p, Vec3<Rational>(-vertex_centroid(p)));
    std::vector<HalfSpace<Rational>> polar_h;
    for (const auto& v : c.vertices) polar_h.push_back({v, Rational(1)});
    Polytope<Rational> polar = from_halfspaces(polar_h);
    std::vector<HalfSpace<Rational>> back;
    for (const auto& y : polar.vertices) back.push_back({y, Rational(1)});
    if (polar.vertices.size() != c.facets.size() || !(from_halfspaces(back) == c))
      r.fail(id + ": polar of the polar differs");
  }
  return r;
}

/// subtract() against direct membership: inside a and strictly outside every
/// b. Points on any facet plane are skipped, as they may sit on cell faces.
inline Result subtract_monte_carlo(std::size_t points, std::uint64_t seed) {
  Result r;
  oracle::Rng rng(seed);
  const std::size_t per_config = 10000;
  for (std::size_t done = 0; done < points;) {
    Polytope<Rational> a = random_solid(rng, 5, 10, 3, 2);
    std::vector<Polytope<Rational>> bs;
    int nb = int(rng.integer(1, 3));
    for (int i = 0; i < nb; ++i) bs.push_back(random_solid(rng, 4, 8, 3, 2));
    auto cells = subtract(a, bs);

    // volume bookkeeping by inclusion-exclusion over the subtrahends
    Rational removed = 0;
    for (int mask = 1; mask < (1 << nb); ++mask) {
      Polytope<Rational> m = a;
      for (int i = 0; i < nb; ++i)
        if (mask >> i & 1) m = intersect(m, bs[i]);
      Rational v = m.solid() ? volume(m) : Rational(0);
      removed += __builtin_popcount(unsigned(mask)) % 2 ? v : Rational(-v);
    }
    if (volume(a) != removed + volume(cells)) r.fail("volume bookkeeping");

    Box3<Rational> box = bbox(a);
    for (std::size_t i = 0; i < per_config && done < points; ++i) {
      R3 x;
      for (int k = 0; k < 3; ++k)
        x[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * q(2 * rng.integer(0, 4999) + 1, 9999);
      auto sa = oracle::side(a.facets, x);
      bool skip = sa == oracle::Side::boundary;
      bool expect = sa == oracle::Side::inside;
      for (const auto& b : bs) {
        auto sb = oracle::side(b.facets, x);
        skip = skip || sb == oracle::Side::boundary;
        expect = expect && sb == oracle::Side::outside;
      }
      if (skip) continue;
      ++r.cases;
      ++done;
      bool got = false;
      for (const auto& c : cells) got = got || contains(c, oracle::v3(x));
      if (got != expect) r.fail("point " + str(x) + (expect ? " missing from" : " wrongly in") + " the cells");
    }
  }
  return r;
}

/// Homogeneity, subadditivity, the unit ball, and agreement with the facet
/// formula (the L1 norm for the octahedron).
inline Result gauge_axioms(std::size_t samples, std::uint64_t seed) {
  Result r;
  oracle::Rng rng(seed);
  std::vector<std::pair<std::string, Polytope<Rational>>> bodies = {
      {"octahedron", octahedron()}, {"cube", cube()}, {"C7", std::get<Polytope<Rational>>(make("C7").body)}};
  // a random centrally symmetric body
  std::vector<Vec3<Rational>> pts;
  for (int i = 0; i < 5; ++i) {
    auto x = oracle::v3(rng.point(5, 3));
    pts.push_back(x);
    pts.push_back(-x);
  }
  for (int k = 0; k < 3; ++k) {
    Vec3<Rational> e = Vec3<Rational>::Zero();
    e[k] = 1;
    pts.push_back(e);
    pts.push_back(-e);
  }
  bodies.push_back({"random symmetric", hull(pts)});

  for (std::size_t i = 0; i < samples; ++i) {
    const auto& [name, c] = bodies[i % bodies.size()];
    R3 x = rng.point(9, 5), y = rng.point(9, 5);
    Rational lam = rng.rational(7, 3);
    Vec3<Rational> vx = oracle::v3(x), vy = oracle::v3(y);
    Rational gx = gauge(c, vx), gy = gauge(c, vy);
    ++r.cases;
    std::string id = name + " at " + str(x);
    if (gauge(c, Vec3<Rational>(lam * vx)) != abs(lam) * gx) r.fail(id + ": homogeneity");
    if (gauge(c, Vec3<Rational>(vx + vy)) > gx + gy) r.fail(id + ": triangle inequality");
    if ((gx <= 1) != contains(c, vx)) r.fail(id + ": unit ball");
    if (gx != oracle::gauge(c.facets, x)) r.fail(id + ": facet formula");
    if (name == "octahedron" && gx != oracle::l1(x)) r.fail(id + ": L1 norm");
  }
  return r;
}

/// check_packing against every lattice vector of the box that can reach
/// 2O, with overlap judged by intersecting O and O + v.
inline Result packing_brute_force(int lattices, std::uint64_t seed) {
  Result r;
  oracle::Rng rng(seed);
  Polytope<Rational> o = octahedron();
  Mat3<Rational> base = minkowski_lattice().basis();
  int packings = 0;
  for (int t = 0; t < lattices; ++t) {
    Mat3<Rational> b = base;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b(i, j) += q(rng.integer(-2, 2), 12);
    oracle::M3 m = oracle::rows_of(b);
    if (oracle::det(m) == 0) {
      --t;
      continue;
    }
    Lattice<Rational> l(b);
    auto cert = check_packing(o, l);
    ++r.cases;

    // c = v B^-1; |v|_inf <= 2 bounds each coefficient
    oracle::M3 inv = oracle::inverse(m);
    std::array<long, 3> bound{};
    for (int i = 0; i < 3; ++i) {
      Rational s = 0;
      for (int j = 0; j < 3; ++j) s += abs(inv[j][i]);
      bound[i] = ceil_int(Rational(2 * s)).convert_to<long>();
    }
    bool overlap = false;
    Rational best = -1;
    for (long c0 = -bound[0]; c0 <= bound[0]; ++c0)
      for (long c1 = -bound[1]; c1 <= bound[1]; ++c1)
        for (long c2 = -bound[2]; c2 <= bound[2]; ++c2) {
          if (!c0 && !c1 && !c2) continue;
          R3 v;
          for (int k = 0; k < 3; ++k) v[k] = m[0][k] * c0 + m[1][k] * c1 + m[2][k] * c2;
          Rational n = oracle::l1(v);
          if (n > 2) continue;
          if (best < 0 || n < best) best = n;
          if (intersect(o, translate(o, oracle::v3(v))).dim == 3) overlap = true;
        }
    packings += !overlap;
    std::string id = "lattice " + std::to_string(t);
    if (cert.ok == overlap) r.fail(id + ": packing verdict differs from brute force");
    if (best >= 0 && cert.min_gauge != best) r.fail(id + ": min gauge " + to_string(cert.min_gauge) + " vs " + to_string(best));
    if (best < 0 && cert.min_gauge <= 2) r.fail(id + ": brute force found no vector of gauge <= 2");
  }
  if (packings == 0 || packings == lattices) r.fail("sample has only one kind of lattice");
  return r;
}

/// gamma(C, 2L) = 2 gamma(C, L) and the packing minimum doubles.
inline Result gamma_scaling(const Rational& s) {
  Result r;
  std::vector<std::tuple<std::string, Polytope<Rational>, Lattice<Rational>>> cases = {
      {"octahedron", octahedron(), minkowski_lattice()},
      {"C7", std::get<Polytope<Rational>>(make("C7").body), std::get<Lattice<Rational>>(make("C7").lattices[0])},
      {"cube", cube(), std::get<Lattice<Rational>>(make("C0").lattices[0])},
      {"C1", octahedron(), std::get<Lattice<Rational>>(make("C1").lattices[0])}};
  Rational tol = q(1, 1000000);
  for (const auto& [name, c, l] : cases) {
    ++r.cases;
    auto g1 = gamma_bracket(c, l, tol);
    auto g2 = gamma_bracket(c, l.scaled(s), tol);
    auto p1 = check_packing(c, l), p2 = check_packing(c, l.scaled(s));
    if (!g1.exact() || !g2.exact() || g2.lower != s * g1.lower)
      r.fail(name + ": gamma " + to_string(g1.lower) + " -> " + to_string(g2.lower));
    if (p2.min_gauge != s * p1.min_gauge) r.fail(name + ": packing minimum does not scale");
  }
  return r;
}

/// Midpoints of random segments inside two pieces never get farther apart
/// than the vertex-pair maximum.
inline Result segment_midpoints(const proof::FacePieceTable& t, int pairs, std::uint64_t seed) {
  Result r;
  oracle::Rng rng(seed);
  auto point_in = [&](const proof::Cells& cells) {
    const auto& c = cells[rng.integer(0, long(cells.size()) - 1)];
    Vec3<Rational> x = Vec3<Rational>::Zero();
    Rational total = 0;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      w.push_back(q(rng.integer(0, 20)));
      total += w.back();
    }
    if (total == 0) return c.vertices.front();
    for (std::size_t i = 0; i < c.vertices.size(); ++i) x += c.vertices[i] * (w[i] / total);
    return x;
  };
  for (int i = 0; i < pairs; ++i) {
    int fa = int(rng.integer(0, proof::kFaces - 1)), fb = int(rng.integer(0, proof::kFaces - 1));
    int ma = int(rng.integer(1, proof::kPieces)), mb = int(rng.integer(1, proof::kPieces));
    const auto &a = t.cells(fa, ma), &b = t.cells(fb, mb);
    if (a.empty() || b.empty()) {
      --i;
      continue;
    }
    ++r.cases;
    Rational bound = proof::max_l1_distance(a, b);
    Vec3<Rational> ma_ = (point_in(a) + point_in(a)) * q(1, 2), mb_ = (point_in(b) + point_in(b)) * q(1, 2);
    Rational d = oracle::l1(oracle::r3(Vec3<Rational>(ma_ - mb_)));
    if (d > bound) {
      std::ostringstream os;
      os << "pieces " << ma << "@" << fa << ", " << mb << "@" << fb << ": " << to_string(d) << " > "
         << to_string(bound);
      r.fail(os.str());
    }
  }
  return r;
}

}  // namespace props
