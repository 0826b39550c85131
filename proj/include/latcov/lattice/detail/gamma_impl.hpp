#pragma once

#include <algorithm>

#include "latcov/arith/errors.hpp"
#include "latcov/lattice/detail/lp_impl.hpp"
#include "latcov/lattice/gamma.hpp"

namespace latcov {

template <class S>
Vec3<S> deepest_point(const Polytope<S>& c, const Lattice<S>& l, const Polytope<S>& cell,
                      const std::vector<LatticePoint<S>>& candidates) {
  (void)l;
  Vec3<S> mid = vertex_centroid(cell);
  S fmid;
  bool first = true;
  S reach(0);
  for (const auto& v : cell.vertices) {
    S g = gauge(c, Vec3<S>(v - mid));
    if (g > reach) reach = g;
  }
  std::vector<S> gm;
  for (const auto& p : candidates) {
    gm.push_back(gauge(c, Vec3<S>(mid - p.x)));
    if (first || gm.back() < fmid) fmid = gm.back();
    first = false;
  }
  // Only lambdas within f(mid) + 2*reach of the center can be nearest anywhere in the cell.
  S cutoff = fmid + reach * S(2);
  struct Row {
    Vec3<S> n;  // gauge(x - lambda) >= n.x - k
    S k;
  };
  std::vector<Row> rows;
  S t_lo;
  bool have_lo = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (gm[i] > cutoff) continue;
    const Vec3<S>& lam = candidates[i].x;
    int best = -1;
    S best_min;
    for (std::size_t f = 0; f < c.facets.size(); ++f) {
      const auto& h = c.facets[f];
      S mn;
      bool init = false;
      for (const auto& v : cell.vertices) {
        S val = h.normal.dot(Vec3<S>(v - lam)) / h.offset;
        if (!init || val < mn) mn = val;
        init = true;
      }
      if (best < 0 || mn > best_min) {
        best = static_cast<int>(f);
        best_min = mn;
      }
    }
    const auto& h = c.facets[best];
    Row r{Vec3<S>(h.normal / h.offset), S(h.normal.dot(lam) / h.offset)};
    if (!have_lo || best_min < t_lo) t_lo = best_min;
    have_lo = true;
    rows.push_back(r);
  }
  Box3<S> bb = bbox(cell);
  // variables u = x - bb.lo >= 0, w = t - t_lo >= 0
  std::vector<std::vector<S>> a;
  std::vector<S> b;
  for (const auto& h : cell.facets) {
    a.push_back({h.normal[0], h.normal[1], h.normal[2], S(0)});
    b.push_back(h.offset - h.normal.dot(bb.lo));
  }
  for (const auto& r : rows) {
    // t - n.x + k <= 0
    a.push_back({S(-r.n[0]), S(-r.n[1]), S(-r.n[2]), S(1)});
    b.push_back(r.n.dot(bb.lo) - r.k - t_lo);
  }
  auto res = simplex_max<S>(a, b, {S(0), S(0), S(0), S(1)});
  if (res.status != LpResult<S>::Status::optimal) return mid;
  return vec3<S>(res.z[0] + bb.lo[0], res.z[1] + bb.lo[1], res.z[2] + bb.lo[2]);
}

namespace detail {

template <class S>
struct Candidate {
  S value;
  Vec3<S> x;
};

template <class S>
void consider(const Polytope<S>& c, const Lattice<S>& l, const Vec3<S>& x, Candidate<S>& best) {
  S f = nearest_gauge(c, l, x).first;
  if (f > best.value || (f == best.value && lex_less<S>(x, best.x))) best = {f, x};
}

// Deep-hole candidates from the residual of a failed cover at some radius.
template <class S>
void harvest(const Polytope<S>& c, const Lattice<S>& l, const CoverCertificate<S>& cert,
             Candidate<S>& best) {
  for (const auto& cell : cert.residual) {
    for (const auto& v : cell.vertices) consider(c, l, v, best);
    consider(c, l, deepest_point(c, l, cell, cert.translates), best);
  }
}

}  // namespace detail

template <class S>
GammaBracket<S> gamma_bracket(const Polytope<S>& c, const Lattice<S>& l, const S& tol) {
  if (!(tol > S(0))) throw std::invalid_argument("tolerance must be positive");
  if (!check_packing(c, l).ok) throw GeometryError("C + L is not a packing");
  GammaBracket<S> out;
  Polytope<S> cell = fundamental_cell(l);
  detail::Candidate<S> best{S(-1), Vec3<S>(Vec3<S>::Zero())};
  detail::consider(c, l, vertex_centroid(cell), best);
  bool have_upper = false;
  auto cover = [&](const S& r) {
    ++out.cover_tests;
    return fundamental_cover_check(c, l, r);
  };
  bool tested = false;
  S failed;  // last radius whose cover test failed
  for (int iter = 0; iter < 256; ++iter) {
    if (have_upper && out.upper - best.value <= tol) break;
    if (!tested || failed != best.value) {
      auto cert = cover(best.value);
      if (cert.covered()) {
        out.upper = best.value;
        out.upper_cover = std::move(cert);
        have_upper = true;
        break;
      }
      tested = true;
      failed = best.value;
      detail::harvest(c, l, cert, best);
      if (best.value > failed) continue;
    }
    if (!have_upper) {
      S r = best.value * S(2);
      for (;;) {
        auto up = cover(r);
        if (up.covered()) {
          out.upper = r;
          out.upper_cover = std::move(up);
          have_upper = true;
          break;
        }
        detail::harvest(c, l, up, best);
        r = r * S(2);
      }
      continue;
    }
    S mid = (best.value + out.upper) / S(2);
    auto mc = cover(mid);
    if (mc.covered()) {
      out.upper = mid;
      out.upper_cover = std::move(mc);
    } else {
      detail::harvest(c, l, mc, best);
    }
  }
  if (!have_upper) throw GeometryError("covering radius search did not terminate");
  out.lower = best.value;
  out.witness = best.x;
  Box3<S> cb = bbox(c);
  out.neighbor_box = Box3<S>{out.witness - cb.hi * out.lower, out.witness - cb.lo * out.lower};
  out.neighbors = enumerate_points(l, out.neighbor_box);
  return out;
}

}  // namespace latcov
