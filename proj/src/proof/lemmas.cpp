#include "latcov/proof/lemmas.hpp"

#include <algorithm>
#include <array>

#include "latcov/arith/errors.hpp"
#include "latcov/catalog/catalog.hpp"
#include "latcov/proof/checks.hpp"

namespace latcov::proof {

namespace {

V3 v(const Rational& x, const Rational& y, const Rational& z) { return vec3<Rational>(x, y, z); }
Rational q(long a, long b = 1) { return make_rational(a, b); }
Rational l1(const V3& x) { return abs(x[0]) + abs(x[1]) + abs(x[2]); }
Rational sum(const V3& x) { return x[0] + x[1] + x[2]; }

const V3 e1 = v(q(1), q(0), q(0)), e2 = v(q(0), q(1), q(0)), e3 = v(q(0), q(0), q(1));

bool cells_within(const Cells& cells, const Poly& p) {
  for (const auto& c : cells)
    if (!contains(p, c)) return false;
  return true;
}

}  // namespace

void LemmaReport::add(std::string name, bool pass, std::string detail) {
  ok = ok && pass;
  checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string vec_str(const V3& x) {
  return "(" + to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(x[2]) + ")";
}

LemmaReport verify_lemma1() {
  LemmaReport r;
  r.subject = "tetrahedron centroid";
  Poly t = tetrahedron_t(), o = octahedron();
  V3 g = vertex_centroid(t);
  r.add("centroid", g == v(q(1, 6), q(1, 6), q(5, 6)), vec_str(g));

  // T sits on x+y+z >= 1 with a facet on the plane of face 0, so every
  // translate touching O only inside face 0 has its centroid at level 7/6.
  Rational lo = sum(t.vertices.front());
  for (const auto& x : t.vertices) lo = std::min(lo, sum(x));
  int on_plane = 0;
  for (const auto& x : t.vertices) on_plane += sum(x) == lo;
  Poly meet = intersect(t, o);
  bool touches = !meet.empty() && !interiors_meet(t, o);
  for (const auto& x : meet.vertices) touches = touches && sum(x) == 1;
  r.add("facet on face plane", lo == 1 && on_plane == 3 && touches, "min x+y+z over T = " + to_string(lo));
  r.add("centroid level", sum(g) == q(7, 6), to_string(sum(g)));

  r.add("gauge at centroid", gauge(o, g) == q(7, 6), to_string(gauge(o, g)));
  // |x|+|y|+|z| >= |x+y+z| = 7/6 on the plane; equality on the nonnegative
  // patch, whose vertices are the axis points.
  bool patch = true;
  for (const auto& p : {v(q(7, 6), q(0), q(0)), v(q(0), q(7, 6), q(0)), v(q(0), q(0), q(7, 6))})
    patch = patch && gauge(o, p) == q(7, 6) && sum(p) == q(7, 6);
  r.add("minimum on the plane", patch, "7/6 at the axis points of x+y+z = 7/6");
  return r;
}

bool in_hole_region(const V3& a) {
  const Rational &x = a[0], &y = a[1], &z = a[2];
  return x + y + z >= 2 && -x + y + z <= 2 && x - y + z <= 0 && x + y - z <= q(2, 3);
}

std::vector<V3> lemma_sample_points() {
  std::array<V3, 4> w = {v(q(0), q(1), q(1)), v(q(0), q(4, 3), q(2, 3)), v(q(1, 3), q(1), q(2, 3)),
                         v(q(1, 3), q(4, 3), q(1))};
  std::vector<V3> out(w.begin(), w.end());
  out.push_back(v(q(1, 6), q(7, 6), q(5, 6)));
  std::array<Rational, 2> steps = {q(1, 8), q(1, 5)};
  for (const auto& a : steps)
    for (const auto& b : steps)
      for (const auto& c : steps) out.push_back(V3(w[0] + a * (w[1] - w[0]) + b * (w[2] - w[0]) + c * (w[3] - w[0])));
  return out;
}

LemmaReport verify_lemmas_2_3_at(const V3& a0) {
  if (!in_hole_region(a0)) throw GeometryError("a0 = " + vec_str(a0) + " is outside the hole region");
  LemmaReport r;
  r.subject = "a0 = " + vec_str(a0);
  const Rational &x0 = a0[0], &y0 = a0[1], &z0 = a0[2];
  Rational s = (-x0 + y0 + z0) / 2, u = (x0 + y0 - z0) / 2;
  V3 y1 = v(1 - s, y0 - 1, 1 - u), y2 = v(1 - s, s, q(0)), y3 = v(2 - y0, y0 - 1, q(0)), y4 = v(2 - y0, s, 1 - u);

  Poly tp = hull<Rational>({y1, y2, y3, y4});
  Poly tp_h = from_halfspaces<Rational>({{v(q(-1), q(-1), q(-1)), q(-1)},
                                         {v(q(-1), q(1), q(1)), -x0 + y0 + z0 - 1},
                                         {v(q(1), q(-1), q(1)), 3 - 2 * y0},
                                         {v(q(1), q(1), q(-1)), q(1)}});
  r.add("T' generators match its halfspaces", tp == tp_h && tp.vertices.size() == 4);

  Poly t = tetrahedron_t();
  auto width = [](const Poly& p) {
    Rational lo = sum(p.vertices.front()), hi = lo;
    for (const auto& x : p.vertices) lo = std::min(lo, sum(x)), hi = std::max(hi, sum(x));
    return hi - lo;
  };
  r.r0 = width(tp) / width(t);
  V3 shift = vertex_centroid(tp) - r.r0 * vertex_centroid(t);
  r.add("T' homothetic to T", translate(scale(t, r.r0), shift) == tp, "factor " + to_string(r.r0));
  r.add("factor at least 2", r.r0 >= 2, to_string(r.r0));

  Poly o = octahedron(), o2 = scale(o, q(2));
  Poly oa = translate(o, a0), o2a = translate(o2, a0);
  bool contact = !intersect(tp, o).empty() && !interiors_meet(tp, o) && !intersect(tp, oa).empty() &&
                 !interiors_meet(tp, oa);
  r.add("T' touches O and O + a0", contact);
  r.add("y1, y2, y3 in O", contains(o, y1) && contains(o, y2) && contains(o, y3));

  // a1 with (O + a1) meeting int T' is int(T' + O). The printed generator
  // list has y2 + e1, y2 - e2, y3 + e2, y3 - e1 where y2 - e1, y2 + e2,
  // y3 + e1, y3 - e2 belong.
  Poly y = minkowski_sum(tp, o);
  Poly printed = hull<Rational>({y1 + e3, y4 + e3, y1 - e2, y1 - e1, y4 + e1, y4 + e2, y3 + e2, y3 - e1, y2 + e1,
                                 y2 - e2, y2 - e3, y3 - e3});
  Poly fixed = hull<Rational>({y1 + e3, y4 + e3, y1 - e2, y1 - e1, y4 + e1, y4 + e2, y3 + e1, y3 - e2, y2 - e1,
                               y2 + e2, y2 - e3, y3 - e3});
  r.add("Y generators", y == fixed,
        "corrected list; the printed list spans volume " + to_string(volume(printed)) + " of " + to_string(volume(y)));
  Poly yy1 = hull<Rational>({y1 + e3, y1 - e1, y1 - e2, y2 - e1, y2 + e2, y2 - e3, y3 + e1, y3 - e2, y3 - e3});
  Poly yy2 = hull<Rational>({y1 + e1, y1 + e3, y2 + e1, y2 + e2, y4 + e1, y4 + e2, y4 + e3});
  r.add("Y1 within 2O", contains(o2, yy1));
  r.add("Y2 within 2O + a0", contains(o2a, yy2));

  Poly tpe = translate(tp, e1);
  r.add("Y covered by Y1, Y2 and T'' + e1", subtract(y, {yy1, yy2, tpe}).empty());
  Cells yprime = subtract(y, {o2, o2a});
  bool inside = cells_within(yprime, tpe);
  bool full = volume(yprime) == volume(tpe);
  r.add("closure of Y' equals T'' + e1", inside && full,
        "vol " + to_string(volume(yprime)) + " vs " + to_string(volume(tpe)));

  // Strict L1 diameter of T'': where a support width reaches 2, the touching
  // face on one side lies in the removed facets y1y3y4 or y2y3y4.
  std::array<V3, 4> ys = {y1, y2, y3, y4};
  r.diameter = 0;
  for (const auto& a : ys)
    for (const auto& b : ys) r.diameter = std::max(r.diameter, l1(V3(a - b)));
  auto removed = [](unsigned face) { return (face & ~0b1101u) == 0 || (face & ~0b1110u) == 0; };
  bool strict = r.diameter <= 2;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) {
        V3 n = v(q(sx), q(sy), q(sz));
        Rational hi = n.dot(ys[0]), lo = hi;
        for (const auto& p : ys) hi = std::max(hi, n.dot(p)), lo = std::min(lo, n.dot(p));
        if (hi - lo < 2) continue;
        unsigned top = 0, bottom = 0;
        for (unsigned i = 0; i < 4; ++i) {
          if (n.dot(ys[i]) == hi) top |= 1u << i;
          if (n.dot(ys[i]) == lo) bottom |= 1u << i;
        }
        strict = strict && (removed(top) || removed(bottom));
      }
  r.add("diameter of T'' below 2", strict, "vertex diameter " + to_string(r.diameter));
  return r;
}

}  // namespace latcov::proof
