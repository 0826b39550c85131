#include "latcov/proof/tables.hpp"

#include <algorithm>
#include <sstream>

#include "latcov/catalog/catalog.hpp"
#include "latcov/proof/reference.hpp"

namespace latcov::proof {

namespace {

constexpr unsigned bits(std::initializer_list<int> regions) {
  unsigned b = 0;
  for (int j : regions) b |= 1u << (j - 1);
  return b;
}

constexpr std::array<unsigned, kPieces + 1> kPattern = {
    0,
    bits({1}), bits({1, 2}), bits({1, 3}), bits({1, 2, 3, 5}), bits({1, 2, 4}),
    bits({1, 2, 3, 4, 5}), bits({1, 3, 6}), bits({1, 2, 3, 5, 6}), bits({4}), bits({2, 4}),
    bits({4, 5}), bits({2, 3, 4, 5}), bits({4, 5, 6}), bits({2, 3, 4, 5, 6}), bits({6}),
    bits({3, 6}), bits({5, 6}), bits({2, 3, 5, 6}), bits({2, 3, 5}),
};

const std::array<V3, kRegions + 1>& tet_shifts() {
  static const std::array<V3, kRegions + 1> s = {
      thirds(0, 0, 0), thirds(0, 0, 0), thirds(0, 1, -1), thirds(1, 0, -1),
      thirds(0, 2, -2), thirds(1, 1, -2), thirds(2, 0, -2),
  };
  return s;
}

std::string face_name(int f) {
  return f < 4 ? std::to_string(f + 1) : std::to_string(f - 3) + "'";
}

Rational l1(const V3& v) { return abs(v[0]) + abs(v[1]) + abs(v[2]); }

bool cells_meet(const Cells& a, const Cells& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (interiors_meet(x, y)) return true;
  return false;
}

Rational union_volume(const std::array<Poly, kRegions + 1>& r) {
  Rational v = 0;
  std::vector<Poly> earlier;
  for (int j = 1; j <= kRegions; ++j) {
    v += volume(subtract(r[j], earlier));
    earlier.push_back(r[j]);
  }
  return v;
}

}  // namespace

V3 thirds(long a, long b, long c) {
  return vec3<Rational>(make_rational(a, 3), make_rational(b, 3), make_rational(c, 3));
}

// Clockwise seen from +z: (x, y, z) -> (y, -x, z). This carries the face with
// outer normal (1,1,1) to the one with normal (1,-1,1).
SignedPerm face_turn() { return {{1, 0, 2}, {1, -1, 1}}; }

SignedPerm face_map(int f) {
  SignedPerm g = SignedPerm::identity();
  int turns = f < 4 ? f : (f - 4 + 2) % 4;
  for (int i = 0; i < turns; ++i) g = face_turn() * g;
  if (f >= 4) g = SignedPerm::inversion() * g;
  return g;
}

unsigned piece_pattern(int m) { return kPattern.at(m); }

const std::vector<int>& cover_list(int region) {
  static const std::vector<std::vector<int>> lists = [] {
    std::vector<std::vector<int>> l(kRegions + 1);
    for (const auto& c : reference::conditions())
      if (c.kind == Constraint::Kind::coverage) l[c.id - 5] = c.refs.front().pieces;
    return l;
  }();
  return lists.at(region);
}

FacePieceTable build_tables() {
  FacePieceTable t;
  Poly o = octahedron();
  Poly o2 = scale(o, Rational(2));
  Poly base = tetrahedron_t();
  for (int f = 0; f < kFaces; ++f) {
    FaceData& fd = t.face[f];
    SignedPerm g = face_map(f);
    for (int i = 1; i <= kRegions; ++i) {
      fd.tet[i] = apply_symmetry(g, translate(base, tet_shifts()[i]));
      fd.region_cells[i] = subtract(minkowski_sum(fd.tet[i], o), {o2});
      auto merged = merge_if_convex(fd.region_cells[i]);
      if (merged) {
        fd.region[i] = *merged;
      } else {
        std::vector<V3> all;
        for (const auto& c : fd.region_cells[i]) all.insert(all.end(), c.vertices.begin(), c.vertices.end());
        fd.region[i] = hull(all);
      }
    }
    for (int m = 1; m <= kPieces; ++m) {
      unsigned pat = piece_pattern(m);
      Poly inter;
      bool first = true;
      std::vector<Poly> others;
      for (int j = 1; j <= kRegions; ++j) {
        if (pat >> (j - 1) & 1) {
          inter = first ? fd.region[j] : intersect(inter, fd.region[j]);
          first = false;
        } else {
          others.push_back(fd.region[j]);
        }
      }
      fd.piece_cells[m] = inter.solid() ? subtract(inter, others) : Cells{};
      auto merged = merge_if_convex(fd.piece_cells[m]);
      fd.piece_convex[m] = merged.has_value();
      if (merged) {
        fd.piece[m] = *merged;
      } else {
        std::vector<V3> all;
        for (const auto& c : fd.piece_cells[m]) all.insert(all.end(), c.vertices.begin(), c.vertices.end());
        if (!all.empty()) fd.piece[m] = hull(all);
      }
    }
  }
  for (int m = 1; m <= kPieces; ++m) {
    int n = 0;
    for (int j = 1; j <= kRegions; ++j)
      if (t.face[0].piece_cells[m].size() && contains(t.face[0].region[j], t.face[0].piece[m])) ++n;
    if (n >= 1 && n <= 5) t.classes[n].push_back(m);
  }
  return t;
}

TableReport verify_tables(const FacePieceTable& t) {
  TableReport r;
  auto fail = [&](std::string what, std::string detail) {
    r.ok = false;
    r.mismatches.push_back({std::move(what), std::move(detail)});
  };
  const FaceData& f0 = t.face[0];

  for (int m = 1; m <= kPieces; ++m) {
    Poly ref = hull(reference::piece_hull(m));
    if (f0.piece_convex[m] && f0.piece[m] == ref)
      ++r.hulls_matched;
    else
      fail("piece hull", "piece " + std::to_string(m) + " differs from the reference hull");
  }

  Poly rh = hull(reference::region_hull());
  Poly tri = hull(reference::region_triangle());
  bool tri_on_boundary = contains(rh, tri);
  for (const auto& v : tri.vertices) tri_on_boundary = tri_on_boundary && l1(v) == 2;
  Poly closure = hull([&] {
    auto p = reference::region_hull();
    auto q = reference::region_triangle();
    p.insert(p.end(), q.begin(), q.end());
    return p;
  }());
  r.region_closure_ok = tri_on_boundary && closure == rh && rh == f0.region[1] &&
                        volume(f0.region_cells[1]) == volume(f0.region[1]);
  if (!r.region_closure_ok) fail("region closure", "region 1 on face 1 differs from its reference closure");

  for (int f = 0; f < kFaces; ++f) {
    r.union_volume[f] = union_volume(t.face[f].region);
    Rational s = 0;
    for (int m = 1; m <= kPieces; ++m) s += volume(t.face[f].piece_cells[m]);
    r.pieces_volume[f] = s;
    if (s != r.union_volume[f])
      fail("volume", "face " + face_name(f) + ": pieces " + to_string(s) + " vs union " +
                         to_string(r.union_volume[f]));
  }

  r.classes_ok = true;
  for (int j = 1; j <= 5; ++j) {
    std::vector<int> byp;
    for (int m = 1; m <= kPieces; ++m)
      if (piece_class(m) == j) byp.push_back(m);
    std::vector<int> ref = reference::piece_class_set(j);
    std::sort(ref.begin(), ref.end());
    if (t.classes[j] != ref || byp != ref) {
      r.classes_ok = false;
      fail("class set", "class " + std::to_string(j) + " disagrees with containment counts");
    }
  }

  r.disjoint_ok = true;
  for (int f = 0; f < kFaces; ++f)
    for (int a = 1; a <= kPieces; ++a)
      for (int b = a + 1; b <= kPieces; ++b)
        if (cells_meet(t.face[f].piece_cells[a], t.face[f].piece_cells[b])) {
          r.disjoint_ok = false;
          fail("disjointness", "face " + face_name(f) + ": pieces " + std::to_string(a) + " and " +
                                   std::to_string(b) + " overlap");
        }

  r.rotation_ok = true;
  SignedPerm turn = face_turn();
  for (int f = 0; f < kFaces; ++f) {
    int next = f < 4 ? (f + 1) % 4 : 4 + (f - 4 + 1) % 4;
    for (int m = 1; m <= kPieces; ++m)
      if (!(apply_symmetry(turn, t.piece(f, m)) == t.piece(next, m))) {
        r.rotation_ok = false;
        fail("rotation", "face " + face_name(f) + " piece " + std::to_string(m));
      }
  }

  r.inversion_ok = true;
  for (int k = 0; k < 4; ++k)
    for (int m = 1; m <= kPieces; ++m)
      if (!(t.piece(4 + k, m) == negate(t.piece((k + 2) % 4, m)))) {
        r.inversion_ok = false;
        fail("inversion", "face " + face_name(4 + k) + " piece " + std::to_string(m));
      }

  r.touching_ok = true;
  Poly o = octahedron();
  for (int f = 0; f < kFaces; ++f) {
    V3 n = face_map(f).apply(vec3<Rational>(Rational(1), Rational(1), Rational(1)));
    for (int i = 1; i <= kRegions; ++i) {
      Poly c = intersect(t.face[f].tet[i], o);
      bool ok = !c.empty();
      for (const auto& v : c.vertices) ok = ok && n.dot(v) == 1;
      if (!ok) {
        r.touching_ok = false;
        fail("contact", "tetrahedron " + std::to_string(i) + " on face " + face_name(f));
      }
    }
  }
  return r;
}

CoverReport verify_cover_equations(const FacePieceTable& t) {
  CoverReport rep;
  for (int f = 0; f < kLabels; ++f) {
    const FaceData& fd = t.face[f];
    for (int j = 1; j <= kRegions; ++j) {
      CoverRow row;
      row.face = f;
      row.region = j;
      row.listed = cover_list(j);
      std::sort(row.listed.begin(), row.listed.end());
      row.region_volume = volume(fd.region_cells[j]);
      row.listed_volume = 0;
      for (int m = 1; m <= kPieces; ++m) {
        bool in = !fd.piece_cells[m].empty() && contains(fd.region[j], fd.piece[m]);
        bool listed = std::binary_search(row.listed.begin(), row.listed.end(), m);
        if (in) row.derived.push_back(m);
        if (listed) {
          row.inside = row.inside && in;
          for (const auto& c : fd.piece_cells[m]) row.listed_volume += volume(intersect(c, fd.region[j]));
        } else {
          for (const auto& c : fd.piece_cells[m])
            if (interiors_meet(c, fd.region[j])) row.others_thin = false;
        }
      }
      row.ok = row.inside && row.others_thin && row.listed == row.derived &&
               row.listed_volume == row.region_volume;
      for (int m : row.listed) row.ok = row.ok && (piece_pattern(m) >> (j - 1) & 1);
      rep.ok = rep.ok && row.ok;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::vector<SignedPerm> face0_stabilizer() {
  std::vector<SignedPerm> out;
  for (const auto& g : octahedral_group())
    if (g.sign == std::array<int, 3>{1, 1, 1}) out.push_back(g);
  return out;
}

LabelAction label_action(const FacePieceTable& t, const SignedPerm& g) {
  LabelAction a;
  a.fixes_face0 = true;
  for (int d = 0; d < kLabels; ++d)
    for (int m = 1; m <= kPieces; ++m) {
      a.map[d][m] = {-1, -1};
      Poly img = apply_symmetry(g, t.piece(d, m));
      for (int f = 0; f < kFaces && a.map[d][m].first < 0; ++f)
        for (int n = 1; n <= kPieces; ++n)
          if (t.piece(f, n).vertices.size() == img.vertices.size() && t.piece(f, n) == img) {
            a.map[d][m] = {face_label(f), n};
            break;
          }
      if (d == 0 && a.map[d][m].first != 0) a.fixes_face0 = false;
    }
  return a;
}

}  // namespace latcov::proof
