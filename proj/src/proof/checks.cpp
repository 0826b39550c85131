#include "latcov/proof/checks.hpp"

#include <algorithm>

#include "latcov/catalog/catalog.hpp"

namespace latcov::proof {

namespace {

Rational l1(const V3& v) { return abs(v[0]) + abs(v[1]) + abs(v[2]); }

Rational max_l1(const Poly& a, const Poly& b) {
  Rational m = 0;
  for (const auto& x : a.vertices)
    for (const auto& y : b.vertices) {
      Rational d = l1(V3(y - x));
      if (d > m) m = d;
    }
  return m;
}

Cells outside_holes(const Cells& a) {
  Cells out;
  for (const auto& c : a) {
    std::vector<Poly> near;
    for (const auto& h : hole_regions())
      if (interiors_meet(c, h)) near.push_back(h);
    auto rest = subtract(c, near);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

// Every y - x lies in 2O or in a hole region.
bool differences_covered(const Cells& a, const Cells& b) {
  Poly o2 = scale(octahedron(), Rational(2));
  for (const auto& x : a)
    for (const auto& y : b) {
      if (max_l1(x, y) <= 2) continue;
      Poly d = minkowski_sum(y, negate(x));
      std::vector<Poly> cover{o2};
      for (const auto& h : hole_regions())
        if (interiors_meet(d, h)) cover.push_back(h);
      if (!subtract(d, cover).empty()) return false;
    }
  return true;
}

}  // namespace

Rational max_l1_distance(const Cells& a, const Cells& b) {
  Rational m = 0;
  for (const auto& x : a)
    for (const auto& y : b) {
      Rational d = max_l1(x, y);
      if (d > m) m = d;
    }
  return m;
}

bool check_pair_exclusion(const Cells& a, const Cells& b) { return max_l1_distance(a, b) <= 2; }

Poly hole_region() { return hull<Rational>({thirds(0, 3, 3), thirds(0, 4, 2), thirds(1, 3, 2), thirds(1, 4, 3)}); }

const std::vector<Poly>& hole_regions() {
  static const std::vector<Poly> regions = [] {
    std::vector<Poly> out;
    Poly r = hole_region();
    for (const auto& g : octahedral_group()) {
      Poly img = apply_symmetry(g, r);
      if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
    }
    return out;
  }();
  return regions;
}

bool check_hole_difference(const Cells& a, const Cells& b) { return differences_covered(a, b); }

bool check_corollary2_exclusion(const Cells& a, const Cells& b) {
  if (differences_covered(a, b)) return true;
  return differences_covered(outside_holes(a), outside_holes(b));
}

bool target_excluded(const Cells& from, const Target& target) {
  for (const auto& placement : target)
    if (check_pair_exclusion(from, placement)) return true;
  return false;
}

ChainResult check_chained_condition(const Cells& trigger, const Poly& hull_h,
                                    const Cells& witness, const std::vector<Target>& targets) {
  ChainResult r;
  r.trigger_ok = check_pair_exclusion(trigger, Cells{hull_h});
  Cells rest = subtract(witness, {hull_h});
  r.vacuous = rest.empty();
  r.witness_ok = true;
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (!target_excluded(rest, targets[i])) {
      r.witness_ok = false;
      r.failed_targets.push_back(static_cast<int>(i));
    }
  return r;
}

}  // namespace latcov::proof
