#pragma once

// Template definitions for the polytope kernel. Included only by the
// translation unit that instantiates the kernel for the exact scalar types.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "latcov/arith/errors.hpp"
#include "latcov/geom/polytope.hpp"

namespace latcov {
namespace detail {

template <class S>
int sign_of(const S& x) {
  return sgn(x);
}

template <class S>
S abs_of(const S& x) {
  return sign_of(x) < 0 ? S(-x) : x;
}

template <class S>
bool vec_less(const Vec3<S>& a, const Vec3<S>& b) {
  return lex_less<S>(a, b);
}

template <class S>
bool is_zero(const Vec3<S>& v) {
  return sign_of(v[0]) == 0 && sign_of(v[1]) == 0 && sign_of(v[2]) == 0;
}

template <class S>
bool half_less(const HalfSpace<S>& a, const HalfSpace<S>& b) {
  if (vec_less<S>(a.normal, b.normal)) return true;
  if (vec_less<S>(b.normal, a.normal)) return false;
  return a.offset < b.offset;
}

template <class S>
void sort_unique(std::vector<Vec3<S>>& pts) {
  std::sort(pts.begin(), pts.end(), vec_less<S>);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Axis to drop when projecting onto a plane with normal n.
template <class S>
int drop_axis(const Vec3<S>& n) {
  for (int k = 0; k < 3; ++k)
    if (sign_of(n[k]) != 0) return k;
  throw GeometryError("zero normal");
}

template <class S>
S cross2(const Vec3<S>& o, const Vec3<S>& a, const Vec3<S>& b, int u, int v) {
  return (a[u] - o[u]) * (b[v] - o[v]) - (a[v] - o[v]) * (b[u] - o[u]);
}

// Extreme points of coplanar points (plane normal n), in cyclic order.
// Returns indices into `pts`.
template <class S>
std::vector<int> polygon_order(const std::vector<Vec3<S>>& pts, const std::vector<int>& idx,
                               const Vec3<S>& n) {
  int k = drop_axis(n);
  int u = (k + 1) % 3, v = (k + 2) % 3;
  std::vector<int> ids = idx;
  auto cmp = [&](int a, int b) {
    if (pts[a][u] < pts[b][u]) return true;
    if (pts[b][u] < pts[a][u]) return false;
    return pts[a][v] < pts[b][v];
  };
  std::sort(ids.begin(), ids.end(), cmp);
  ids.erase(std::unique(ids.begin(), ids.end(),
                        [&](int a, int b) { return pts[a] == pts[b]; }),
            ids.end());
  if (ids.size() <= 2) return ids;
  std::vector<int> h(2 * ids.size());
  std::size_t m = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    while (m >= 2 && sign_of(cross2(pts[h[m - 2]], pts[h[m - 1]], pts[ids[i]], u, v)) <= 0) --m;
    h[m++] = ids[i];
  }
  for (std::size_t i = ids.size() - 1, t = m + 1; i-- > 0;) {
    while (m >= t && sign_of(cross2(pts[h[m - 2]], pts[h[m - 1]], pts[ids[i]], u, v)) <= 0) --m;
    h[m++] = ids[i];
  }
  h.resize(m - 1);
  return h;
}

template <class S>
HalfSpace<S> oriented_plane(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c,
                            const Vec3<S>& inside) {
  Vec3<S> n = (b - a).cross(c - a);
  S off = n.dot(a);
  if (n.dot(inside) > off) {
    n = -n;
    off = -off;
  }
  return canonical(HalfSpace<S>{n, off});
}

// Assembles a solid polytope from vertices and per-facet vertex index sets:
// sorts vertices, orders facet cycles, sorts facets canonically.
template <class S>
Polytope<S> assemble(const std::vector<Vec3<S>>& pts, std::vector<HalfSpace<S>> planes,
                     std::vector<std::vector<int>> sets) {
  std::vector<int> used;
  for (auto& s : sets) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::sort(used.begin(), used.end(), [&](int a, int b) { return vec_less<S>(pts[a], pts[b]); });
  std::vector<int> remap(pts.size(), -1);
  Polytope<S> p;
  p.dim = 3;
  for (std::size_t i = 0; i < used.size(); ++i) {
    remap[used[i]] = static_cast<int>(i);
    p.vertices.push_back(pts[used[i]]);
  }
  std::vector<int> order(planes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return half_less<S>(planes[a], planes[b]); });
  for (int f : order) {
    std::vector<int> local;
    for (int i : sets[f]) local.push_back(remap[i]);
    p.facet_vertices.push_back(polygon_order(p.vertices, local, planes[f].normal));
    p.facets.push_back(planes[f]);
  }
  return p;
}

template <class S>
void add_equalities(std::vector<HalfSpace<S>>& hs, const Vec3<S>& n, const S& off) {
  hs.push_back(canonical(HalfSpace<S>{n, off}));
  hs.push_back(canonical(HalfSpace<S>{Vec3<S>(-n), S(-off)}));
}

template <class S>
Polytope<S> hull_low(const std::vector<Vec3<S>>& pts, int dim, const Vec3<S>& normal) {
  Polytope<S> p;
  p.dim = dim;
  const Vec3<S>& a = pts.front();
  if (dim == 0) {
    p.vertices = {a};
    for (int k = 0; k < 3; ++k) {
      Vec3<S> e = Vec3<S>::Zero();
      e[k] = S(1);
      add_equalities(p.facets, e, a[k]);
    }
  } else if (dim == 1) {
    const Vec3<S>& b = pts.back();
    p.vertices = {a, b};
    Vec3<S> d = b - a;
    int added = 0;
    Vec3<S> first;
    for (int k = 0; k < 3 && added < 2; ++k) {
      Vec3<S> e = Vec3<S>::Zero();
      e[k] = S(1);
      Vec3<S> m = d.cross(e);
      if (is_zero(m)) continue;
      if (added == 1 && is_zero<S>(m.cross(first))) continue;
      add_equalities(p.facets, m, m.dot(a));
      first = m;
      ++added;
    }
    p.facets.push_back(canonical(HalfSpace<S>{d, d.dot(b)}));
    p.facets.push_back(canonical(HalfSpace<S>{Vec3<S>(-d), S(-d.dot(a))}));
  } else {
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> cyc = polygon_order(pts, idx, normal);
    for (int i : cyc) p.vertices.push_back(pts[i]);
    Vec3<S> mid = Vec3<S>::Zero();
    for (auto& v : p.vertices) mid += v;
    mid /= S(static_cast<int>(p.vertices.size()));
    add_equalities(p.facets, normal, normal.dot(a));
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      const Vec3<S>& u = p.vertices[i];
      const Vec3<S>& w = p.vertices[(i + 1) % p.vertices.size()];
      Vec3<S> m = (w - u).cross(normal);
      S off = m.dot(u);
      if (m.dot(mid) > off) {
        m = -m;
        off = -off;
      }
      p.facets.push_back(canonical(HalfSpace<S>{m, off}));
    }
    sort_unique(p.vertices);
  }
  std::sort(p.facets.begin(), p.facets.end(), half_less<S>);
  return p;
}

template <class S>
struct Facet {
  HalfSpace<S> h;
  std::vector<int> vs;  // sorted point indices
  bool alive = true;
};

template <class S>
Polytope<S> hull3(const std::vector<Vec3<S>>& pts, int i0, int i1, int i2, int i3) {
  Vec3<S> c = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / S(4);
  std::vector<Facet<S>> fs;
  int tet[4] = {i0, i1, i2, i3};
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> vs;
    for (int j = 0; j < 4; ++j)
      if (j != skip) vs.push_back(tet[j]);
    auto h = oriented_plane(pts[vs[0]], pts[vs[1]], pts[vs[2]], c);
    std::sort(vs.begin(), vs.end());
    fs.push_back({h, vs, true});
  }
  std::vector<int> verts(tet, tet + 4);
  std::sort(verts.begin(), verts.end());

  for (int q = 0; q < static_cast<int>(pts.size()); ++q) {
    if (q == i0 || q == i1 || q == i2 || q == i3) continue;
    const Vec3<S>& p = pts[q];
    std::vector<int> side(fs.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < fs.size(); ++f) {
      if (!fs[f].alive) continue;
      side[f] = sign_of(S(fs[f].h.normal.dot(p) - fs[f].h.offset));
      any = any || side[f] > 0;
    }
    if (!any) continue;

    std::vector<std::pair<HalfSpace<S>, int>> planes;  // plane -> slot in fs
    auto find_plane = [&](const HalfSpace<S>& h) {
      for (auto& e : planes)
        if (e.first == h) return e.second;
      return -1;
    };
    std::vector<int> touched;
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (fs[f].alive && side[f] == 0) {
        planes.push_back({fs[f].h, static_cast<int>(f)});
        touched.push_back(static_cast<int>(f));
      }
    std::size_t old_count = fs.size();
    for (std::size_t f = 0; f < old_count; ++f) {
      if (!fs[f].alive || side[f] <= 0) continue;
      for (std::size_t g = 0; g < old_count; ++g) {
        if (!fs[g].alive || side[g] > 0) continue;
        std::vector<int> common;
        std::set_intersection(fs[f].vs.begin(), fs[f].vs.end(), fs[g].vs.begin(),
                              fs[g].vs.end(), std::back_inserter(common));
        if (common.size() < 2) continue;
        if (side[g] == 0) continue;  // absorbed by the coplanar facet
        auto h = oriented_plane(p, pts[common.front()], pts[common.back()], c);
        if (find_plane(h) >= 0) continue;
        fs.push_back({h, {}, true});
        side.push_back(0);
        planes.push_back({h, static_cast<int>(fs.size() - 1)});
        touched.push_back(static_cast<int>(fs.size() - 1));
      }
    }
    for (std::size_t f = 0; f < old_count; ++f)
      if (fs[f].alive && side[f] > 0) fs[f].alive = false;

    std::vector<int> cand = verts;
    cand.push_back(q);
    for (int f : touched) {
      std::vector<int> on;
      for (int v : cand)
        if (fs[f].h.normal.dot(pts[v]) == fs[f].h.offset) on.push_back(v);
      auto cyc = polygon_order(pts, on, fs[f].h.normal);
      std::sort(cyc.begin(), cyc.end());
      fs[f].vs = cyc;
    }
    verts.clear();
    for (auto& f : fs)
      if (f.alive) verts.insert(verts.end(), f.vs.begin(), f.vs.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    // compact dead facets occasionally
    if (fs.size() > 64) {
      std::vector<Facet<S>> live;
      for (auto& f : fs)
        if (f.alive) live.push_back(std::move(f));
      fs = std::move(live);
    }
  }
  std::vector<HalfSpace<S>> planes;
  std::vector<std::vector<int>> sets;
  for (auto& f : fs)
    if (f.alive) {
      planes.push_back(f.h);
      sets.push_back(f.vs);
    }
  return assemble(pts, planes, sets);
}

template <class S>
Vec3<S> crossing(const Vec3<S>& u, const Vec3<S>& w, const S& su, const S& sw) {
  S t = su / (su - sw);
  return u + (w - u) * t;
}

}  // namespace detail

template <class S>
HalfSpace<S> canonical(HalfSpace<S> h) {
  int k = detail::drop_axis(h.normal);
  S s = detail::abs_of(h.normal[k]);
  if (s != S(1)) {
    h.normal /= s;
    h.offset /= s;
  }
  return h;
}

template <class S>
Polytope<S> hull(std::vector<Vec3<S>> pts) {
  detail::sort_unique(pts);
  if (pts.empty()) return {};
  const Vec3<S>& a = pts[0];
  if (pts.size() == 1) return detail::hull_low(pts, 0, Vec3<S>(Vec3<S>::Zero()));
  int i1 = 1;
  Vec3<S> d1 = pts[i1] - a;
  int i2 = -1;
  Vec3<S> n;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    n = d1.cross(pts[i] - a);
    if (!detail::is_zero(n)) {
      i2 = static_cast<int>(i);
      break;
    }
  }
  if (i2 < 0) return detail::hull_low(pts, 1, Vec3<S>(Vec3<S>::Zero()));
  int i3 = -1;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (detail::sign_of(S(n.dot(pts[i] - a))) != 0) {
      i3 = static_cast<int>(i);
      break;
    }
  }
  if (i3 < 0) return detail::hull_low(pts, 2, n);
  return detail::hull3(pts, 0, i1, i2, i3);
}

template <class S>
Polytope<S> from_halfspaces(const std::vector<HalfSpace<S>>& hs) {
  std::vector<Vec3<S>> pts;
  const std::size_t m = hs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Mat3<S> a;
        a.row(0) = hs[i].normal.transpose();
        a.row(1) = hs[j].normal.transpose();
        a.row(2) = hs[k].normal.transpose();
        if (detail::sign_of(det3(a)) == 0) continue;
        Vec3<S> rhs;
        rhs << hs[i].offset, hs[j].offset, hs[k].offset;
        Vec3<S> x = inverse3(a) * rhs;
        bool ok = true;
        for (const auto& h : hs)
          if (h.normal.dot(x) > h.offset) {
            ok = false;
            break;
          }
        if (ok) pts.push_back(x);
      }
  return hull(std::move(pts));
}

template <class S>
Polytope<S> clip(const Polytope<S>& p, const HalfSpace<S>& h) {
  if (p.empty()) return p;
  const std::size_t nv = p.vertices.size();
  std::vector<S> s(nv);
  std::vector<int> sg(nv);
  bool neg = false, pos = false;
  for (std::size_t i = 0; i < nv; ++i) {
    s[i] = h.normal.dot(p.vertices[i]) - h.offset;
    sg[i] = detail::sign_of(s[i]);
    neg = neg || sg[i] < 0;
    pos = pos || sg[i] > 0;
  }
  if (!pos) return p;
  if (!neg) {
    std::vector<Vec3<S>> zero;
    for (std::size_t i = 0; i < nv; ++i)
      if (sg[i] == 0) zero.push_back(p.vertices[i]);
    return hull(std::move(zero));
  }
  if (p.dim < 3) {
    std::vector<Vec3<S>> pts;
    for (std::size_t i = 0; i < nv; ++i) {
      if (sg[i] <= 0) pts.push_back(p.vertices[i]);
      if (sg[i] >= 0) continue;
      for (std::size_t j = 0; j < nv; ++j)
        if (sg[j] > 0) pts.push_back(detail::crossing(p.vertices[i], p.vertices[j], s[i], s[j]));
    }
    return hull(std::move(pts));
  }

  // vertex -> incident facets
  std::vector<std::vector<int>> vf(nv);
  for (std::size_t f = 0; f < p.facets.size(); ++f)
    for (int v : p.facet_vertices[f]) vf[v].push_back(static_cast<int>(f));
  for (auto& l : vf) std::sort(l.begin(), l.end());

  std::vector<Vec3<S>> pts;
  std::vector<int> new_index(nv, -1);
  for (std::size_t i = 0; i < nv; ++i)
    if (sg[i] <= 0) {
      new_index[i] = static_cast<int>(pts.size());
      pts.push_back(p.vertices[i]);
    }
  std::vector<std::vector<int>> sets(p.facets.size());
  std::vector<int> cut;
  for (std::size_t f = 0; f < p.facets.size(); ++f)
    for (int v : p.facet_vertices[f])
      if (sg[v] <= 0) sets[f].push_back(new_index[v]);
  for (std::size_t i = 0; i < nv; ++i)
    if (sg[i] == 0) cut.push_back(new_index[i]);
  for (std::size_t i = 0; i < nv; ++i) {
    if (sg[i] >= 0) continue;
    for (std::size_t j = 0; j < nv; ++j) {
      if (sg[j] <= 0) continue;
      std::vector<int> common;
      std::set_intersection(vf[i].begin(), vf[i].end(), vf[j].begin(), vf[j].end(),
                            std::back_inserter(common));
      if (common.size() < 2) continue;
      int id = static_cast<int>(pts.size());
      pts.push_back(detail::crossing(p.vertices[i], p.vertices[j], s[i], s[j]));
      for (int f : common) sets[f].push_back(id);
      cut.push_back(id);
    }
  }
  std::vector<HalfSpace<S>> planes;
  std::vector<std::vector<int>> keep;
  for (std::size_t f = 0; f < p.facets.size(); ++f)
    if (sets[f].size() >= 3) {
      planes.push_back(p.facets[f]);
      keep.push_back(std::move(sets[f]));
    }
  planes.push_back(canonical(h));
  keep.push_back(std::move(cut));
  return detail::assemble(pts, planes, keep);
}

template <class S>
Polytope<S> intersect(const Polytope<S>& a, const Polytope<S>& b) {
  Polytope<S> r = a;
  for (const auto& h : b.facets) {
    r = clip(r, h);
    if (r.empty()) break;
  }
  return r;
}

template <class S>
Polytope<S> minkowski_sum(const Polytope<S>& a, const Polytope<S>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Vec3<S>> pts;
  pts.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) pts.push_back(u + v);
  return hull(std::move(pts));
}

template <class S>
Box3<S> bbox(const Polytope<S>& p) {
  Box3<S> b{p.vertices.front(), p.vertices.front()};
  for (const auto& v : p.vertices)
    for (int k = 0; k < 3; ++k) {
      if (v[k] < b.lo[k]) b.lo[k] = v[k];
      if (v[k] > b.hi[k]) b.hi[k] = v[k];
    }
  return b;
}

namespace detail {

template <class S>
bool separated(const Polytope<S>& a, const Polytope<S>& b) {
  Box3<S> ba = bbox(a), bb = bbox(b);
  for (int k = 0; k < 3; ++k)
    if (ba.hi[k] <= bb.lo[k] || bb.hi[k] <= ba.lo[k]) return true;
  auto all_outside = [](const HalfSpace<S>& h, const Polytope<S>& p) {
    for (const auto& v : p.vertices)
      if (h.normal.dot(v) < h.offset) return false;
    return true;
  };
  for (const auto& h : b.facets)
    if (all_outside(h, a)) return true;
  for (const auto& h : a.facets)
    if (all_outside(h, b)) return true;
  return false;
}

template <class S>
void subtract_one(const Polytope<S>& cell, const Polytope<S>& b, CellComplex<S>& out) {
  if (separated(cell, b)) {
    out.push_back(cell);
    return;
  }
  if (contains(b, cell)) return;
  CellComplex<S> pieces;
  Polytope<S> inside = cell;
  for (const auto& h : b.facets) {
    HalfSpace<S> flip{Vec3<S>(-h.normal), S(-h.offset)};
    Polytope<S> outside = clip(inside, flip);
    if (outside.solid()) pieces.push_back(std::move(outside));
    inside = clip(inside, h);
    if (!inside.solid()) {
      out.push_back(cell);
      return;
    }
  }
  for (auto& p : pieces) out.push_back(std::move(p));
}

}  // namespace detail

template <class S>
CellComplex<S> subtract(const CellComplex<S>& a, const std::vector<Polytope<S>>& bs) {
  CellComplex<S> cells;
  for (const auto& c : a)
    if (c.solid()) cells.push_back(c);
  for (const auto& b : bs) {
    if (!b.solid()) continue;
    CellComplex<S> next;
    for (const auto& c : cells) detail::subtract_one(c, b, next);
    cells = std::move(next);
    if (cells.empty()) break;
  }
  return cells;
}

template <class S>
CellComplex<S> subtract(const Polytope<S>& a, const std::vector<Polytope<S>>& bs) {
  return subtract(CellComplex<S>{a}, bs);
}

template <class S>
std::optional<Polytope<S>> merge_if_convex(const CellComplex<S>& cells) {
  if (cells.empty()) return std::nullopt;
  if (cells.size() == 1) return cells.front();
  std::vector<Vec3<S>> pts;
  for (const auto& c : cells) pts.insert(pts.end(), c.vertices.begin(), c.vertices.end());
  Polytope<S> h = hull(std::move(pts));
  if (volume(h) == volume(cells)) return h;
  return std::nullopt;
}

template <class S>
bool contains(const Polytope<S>& outer, const Vec3<S>& x) {
  if (outer.empty()) return false;
  for (const auto& h : outer.facets)
    if (h.normal.dot(x) > h.offset) return false;
  return true;
}

template <class S>
bool contains(const Polytope<S>& outer, const Polytope<S>& inner) {
  for (const auto& v : inner.vertices)
    if (!contains(outer, v)) return false;
  return !outer.empty() || inner.empty();
}

template <class S>
S gauge(const Polytope<S>& c, const Vec3<S>& x) {
  S best(0);
  for (const auto& h : c.facets) {
    if (detail::sign_of(h.offset) <= 0)
      throw GeometryError("gauge body must contain the origin in its interior");
    S t = h.normal.dot(x) / h.offset;
    if (t > best) best = t;
  }
  return best;
}

template <class S>
Vec3<S> vertex_centroid(const Polytope<S>& p) {
  Vec3<S> c = Vec3<S>::Zero();
  for (const auto& v : p.vertices) c += v;
  return c / S(static_cast<int>(p.vertices.size()));
}

template <class S>
S volume(const Polytope<S>& p) {
  if (!p.solid()) return S(0);
  Vec3<S> c = vertex_centroid(p);
  S total(0);
  for (const auto& cyc : p.facet_vertices) {
    const Vec3<S> a = p.vertices[cyc[0]] - c;
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
      Mat3<S> m;
      m.col(0) = a;
      m.col(1) = p.vertices[cyc[i]] - c;
      m.col(2) = p.vertices[cyc[i + 1]] - c;
      total += detail::abs_of(det3(m));
    }
  }
  return total / S(6);
}

template <class S>
S volume(const CellComplex<S>& cells) {
  S total(0);
  for (const auto& c : cells) total += volume(c);
  return total;
}

template <class S>
Polytope<S> translate(const Polytope<S>& p, const Vec3<S>& v) {
  Polytope<S> r = p;
  for (auto& x : r.vertices) x += v;
  for (auto& h : r.facets) h.offset += h.normal.dot(v);
  return r;
}

template <class S>
Polytope<S> scale(const Polytope<S>& p, const S& s) {
  if (detail::sign_of(s) == 0) {
    if (p.empty()) return p;
    return hull(std::vector<Vec3<S>>{Vec3<S>(Vec3<S>::Zero())});
  }
  Mat3<S> m = Mat3<S>::Identity() * s;
  return transform(p, m);
}

template <class S>
Polytope<S> transform(const Polytope<S>& p, const Mat3<S>& m) {
  if (p.empty()) return p;
  std::vector<Vec3<S>> pts;
  for (const auto& v : p.vertices) pts.push_back(m * v);
  if (!p.solid()) return hull(std::move(pts));
  // Facets map by the inverse transpose; cycles are preserved.
  Mat3<S> it = inverse3(m).transpose();
  std::vector<HalfSpace<S>> planes;
  for (const auto& h : p.facets) planes.push_back(canonical(HalfSpace<S>{it * h.normal, h.offset}));
  return detail::assemble(pts, planes, p.facet_vertices);
}

template <class S>
bool centrally_symmetric(const Polytope<S>& p) {
  std::vector<Vec3<S>> neg;
  for (const auto& v : p.vertices) neg.push_back(-v);
  detail::sort_unique(neg);
  return neg == p.vertices;
}

template <class S>
bool interiors_meet(const Polytope<S>& a, const Polytope<S>& b) {
  if (!a.solid() || !b.solid()) return false;
  if (detail::separated(a, b)) return false;
  return intersect(a, b).solid();
}

template <class S>
IntervalBody to_interval_body(const Polytope<S>& p, unsigned bits) {
  IntervalBody body;
  for (const auto& h : p.facets) {
    Vec3<Interval> n;
    for (int k = 0; k < 3; ++k) {
      if constexpr (std::is_same_v<S, Rational>)
        n[k] = Interval(h.normal[k]);
      else
        n[k] = Interval::enclose(h.normal[k], bits);
    }
    Interval off;
    if constexpr (std::is_same_v<S, Rational>)
      off = Interval(h.offset);
    else
      off = Interval::enclose(h.offset, bits);
    body.facets.push_back({n, off});
  }
  return body;
}

}  // namespace latcov
