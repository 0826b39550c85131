#pragma once

#include <algorithm>
#include <stdexcept>

#include "latcov/arith/errors.hpp"
#include "latcov/lattice/lattice.hpp"

namespace latcov {

template <class S>
Lattice<S>::Lattice(Mat3<S> basis, std::string name)
    : basis_(std::move(basis)), name_(std::move(name)) {
  det_ = det3(basis_);
  if (sgn(det_) == 0) throw GeometryError("degenerate lattice basis");
  inv_t_ = inverse3(Mat3<S>(basis_.transpose()));
}

template <class S>
Vec3<S> Lattice<S>::point(const Coeffs& c) const {
  Vec3<S> x = Vec3<S>::Zero();
  for (int i = 0; i < 3; ++i)
    if (c[i] != 0) x += row(i) * S(static_cast<int>(c[i]));
  return x;
}

template <class S>
Box3<S> scaled_box(const Box3<S>& b, const S& s) {
  Box3<S> r{b.lo * s, b.hi * s};
  if (sgn(s) < 0) std::swap(r.lo, r.hi);
  return r;
}

template <class S>
std::vector<LatticePoint<S>> enumerate_points(const Lattice<S>& l, const Box3<S>& box) {
  std::vector<LatticePoint<S>> out;
  for (int k = 0; k < 3; ++k)
    if (box.hi[k] < box.lo[k]) return out;
  long lo[3], hi[3];
  for (int i = 0; i < 3; ++i) {
    bool first = true;
    S mn, mx;
    for (int m = 0; m < 8; ++m) {
      Vec3<S> corner;
      for (int k = 0; k < 3; ++k) corner[k] = (m >> k) & 1 ? box.hi[k] : box.lo[k];
      S c = l.coords(corner)[i];
      if (first || c < mn) mn = c;
      if (first || c > mx) mx = c;
      first = false;
    }
    lo[i] = ceil_int(mn).template convert_to<long>();
    hi[i] = floor_int(mx).template convert_to<long>();
  }
  for (long a = lo[0]; a <= hi[0]; ++a)
    for (long b = lo[1]; b <= hi[1]; ++b)
      for (long c = lo[2]; c <= hi[2]; ++c) {
        Coeffs co{a, b, c};
        Vec3<S> x = l.point(co);
        bool in = true;
        for (int k = 0; k < 3 && in; ++k) in = !(x[k] < box.lo[k]) && !(x[k] > box.hi[k]);
        if (in) out.push_back({co, x});
      }
  return out;
}

namespace detail {

inline long l1(const Coeffs& c) { return std::labs(c[0]) + std::labs(c[1]) + std::labs(c[2]); }

// Preferred packing witness among equal gauges: small coefficients, then the
// lexicographically largest coefficient vector (so +a1 beats -a1).
inline bool witness_before(const Coeffs& a, const Coeffs& b) {
  if (l1(a) != l1(b)) return l1(a) < l1(b);
  return a > b;
}

}  // namespace detail

template <class S>
PackingCertificate<S> check_packing(const Polytope<S>& c, const Lattice<S>& l) {
  Box3<S> cb = bbox(c);
  S radius(2);
  for (int round = 0; round < 64; ++round) {
    PackingCertificate<S> cert;
    bool found = false;
    for (const auto& p : enumerate_points(l, scaled_box(cb, radius))) {
      if (p.coeffs == Coeffs{0, 0, 0}) continue;
      ++cert.examined;
      S g = gauge(c, p.x);
      if (!found || g < cert.min_gauge ||
          (g == cert.min_gauge && detail::witness_before(p.coeffs, cert.witness.coeffs))) {
        cert.min_gauge = g;
        cert.witness = p;
        found = true;
      }
    }
    if (found && cert.min_gauge <= radius) {
      cert.ok = cert.min_gauge >= S(2);
      cert.search_radius = radius;
      return cert;
    }
    radius = radius * S(2);
  }
  throw GeometryError("packing search did not find a nonzero lattice vector");
}

template <class S>
Polytope<S> fundamental_cell(const Lattice<S>& l) {
  std::vector<Vec3<S>> pts;
  for (int m = 0; m < 8; ++m) {
    Vec3<S> x = Vec3<S>::Zero();
    for (int i = 0; i < 3; ++i)
      if ((m >> i) & 1) x += l.row(i);
    pts.push_back(x);
  }
  return hull(std::move(pts));
}

template <class S>
CoverCertificate<S> zong_cover_check(const Polytope<S>& c, const Lattice<S>& l, const S& r) {
  CoverCertificate<S> cert;
  cert.method = "zong";
  cert.radius = r;
  cert.basis = l.basis();
  std::vector<Coeffs> co{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {0, -1, 1}};
  std::vector<Vec3<S>> pts;
  std::vector<Polytope<S>> bodies;
  Polytope<S> rc = scale(c, r);
  for (const auto& k : co) {
    Vec3<S> v = l.point(k);
    pts.push_back(v);
    cert.translates.push_back({k, v});
    bodies.push_back(translate(rc, v));
  }
  cert.region = hull(pts);
  cert.translate_box = bbox(cert.region);
  cert.residual = subtract(cert.region, bodies);
  return cert;
}

template <class S>
CoverCertificate<S> zong_cover_search(const Polytope<S>& c, const Lattice<S>& l, const S& r,
                                      int* tried) {
  std::array<int, 3> perm{0, 1, 2};
  CoverCertificate<S> first;
  int n = 0;
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Mat3<S> b;
      for (int i = 0; i < 3; ++i) b.row(i) = l.basis().row(perm[i]) * S(signs >> i & 1 ? -1 : 1);
      auto cert = zong_cover_check(c, Lattice<S>(b, l.name()), r);
      ++n;
      for (auto& t : cert.translates) {
        Coeffs k{0, 0, 0};
        for (int i = 0; i < 3; ++i) k[perm[i]] += (signs >> i & 1 ? -1 : 1) * t.coeffs[i];
        t.coeffs = k;
      }
      if (cert.covered()) {
        if (tried) *tried = n;
        return cert;
      }
      if (n == 1) first = std::move(cert);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (tried) *tried = n;
  return first;
}

template <class S>
CoverCertificate<S> fundamental_cover_check(const Polytope<S>& c, const Lattice<S>& l,
                                            const S& r) {
  CoverCertificate<S> cert;
  cert.method = "fundamental";
  cert.radius = r;
  cert.basis = l.basis();
  cert.region = fundamental_cell(l);
  Box3<S> rb = scaled_box(bbox(c), r), reg = bbox(cert.region);
  cert.translate_box = Box3<S>{reg.lo - rb.hi, reg.hi - rb.lo};
  auto pts = enumerate_points(l, cert.translate_box);
  Vec3<S> mid = vertex_centroid(cert.region);
  std::vector<std::pair<S, std::size_t>> order;
  for (std::size_t i = 0; i < pts.size(); ++i) order.push_back({gauge(c, Vec3<S>(pts[i].x - mid)), i});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Polytope<S> rc = scale(c, r);
  std::vector<Polytope<S>> bodies;
  for (const auto& [g, i] : order) {
    cert.translates.push_back(pts[i]);
    bodies.push_back(translate(rc, pts[i].x));
  }
  cert.residual = subtract(cert.region, bodies);
  return cert;
}

template <class S>
std::pair<S, LatticePoint<S>> nearest_gauge(const Polytope<S>& c, const Lattice<S>& l,
                                            const Vec3<S>& x) {
  Vec3<S> t = l.coords(x);
  Coeffs guess;
  for (int i = 0; i < 3; ++i)
    guess[i] = floor_int(S(t[i] + S(Rational(1, 2)))).template convert_to<long>();
  LatticePoint<S> best{guess, l.point(guess)};
  S rho = gauge(c, Vec3<S>(x - best.x));
  Box3<S> cb = bbox(c);
  // every lambda with gauge(x - lambda) <= rho lies in x - rho*C
  Box3<S> box{x - cb.hi * rho, x - cb.lo * rho};
  for (const auto& p : enumerate_points(l, box)) {
    S g = gauge(c, Vec3<S>(x - p.x));
    if (g < rho) {
      rho = g;
      best = p;
    }
  }
  return {rho, best};
}

}  // namespace latcov
