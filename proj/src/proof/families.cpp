#include "latcov/proof/families.hpp"

#include <algorithm>
#include <set>

#include "latcov/proof/reference.hpp"

namespace latcov::proof {

namespace {

constexpr Mask kAll = ((Mask(1) << (kPieces + 1)) - 1) & ~Mask(1);

std::vector<Compiled> single_face(const std::vector<Constraint>& cs) {
  std::vector<Compiled> out;
  for (const auto& c : cs)
    if (c.intra_face()) out.push_back(compile(c));
  return out;
}

bool feasible(const std::vector<Compiled>& cs, Mask s) {
  Assignment a{s, 0, 0, 0};
  for (const auto& c : cs)
    if (!c.holds(a, 0)) return false;
  return true;
}

bool touch(const FacePieceTable& t, int a, int b) { return !intersect(t.piece(0, a), t.piece(0, b)).empty(); }

}  // namespace

bool lex_less(Mask a, Mask b) { return pieces_of(a) < pieces_of(b); }

std::string set_str(Mask s) {
  std::string out = "{";
  for (int p : pieces_of(s)) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + "}";
}

std::vector<Mask> enumerate_feasible_sets(const std::vector<Constraint>& cs) {
  auto cc = single_face(cs);
  std::vector<Mask> out;
  for (Mask s = 0; s <= kAll; s += 2)
    if (feasible(cc, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Mask> enumerate_minimal_families(const std::vector<Constraint>& cs) {
  auto cc = single_face(cs);
  std::vector<Mask> out;
  for (Mask s = 2; s <= kAll; s += 2) {
    if (!feasible(cc, s)) continue;
    // Dropping pieces keeps exclusions, so only coverage can break.
    bool minimal = true;
    for (Mask rest = s; rest && minimal; rest &= rest - 1)
      minimal = !feasible(cc, s & ~(rest & -rest));
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

int classify_family(const FacePieceTable& t, Mask s) {
  auto ps = pieces_of(s);
  std::array<int, 6> n{};
  for (int p : ps) ++n[piece_class(p)];
  const Mask q19 = Mask(1) << 19;
  switch (ps.size()) {
    case 2:
      if (n[5] == 1 && n[1] == 1) return 1;
      if (n[5] == 1 && n[2] == 1) return 2;
      if (n[4] == 1 && n[3] == 1) return 3;
      return 0;
    case 3: {
      if (n[4] == 1 && n[1] == 2) return 4;
      if (n[2] == 3) return 7;
      if (n[4] != 1 || n[2] == 0 || n[1] + n[2] != 2) return 0;
      int four = 0;
      for (int p : ps)
        if (piece_class(p) == 4) four = p;
      bool touches = false;
      for (int p : ps)
        if (p != four) touches = touches || touch(t, four, p);
      return touches ? 5 : 6;
    }
    case 4:
      if (!(s & q19)) return 0;
      if (n[2] >= 1) return 8;
      if (n[1] == 3) return 9;
      return 0;
    default:
      return 0;
  }
}

FamilyReport categorize(const FacePieceTable& t, const std::vector<Mask>& families) {
  FamilyReport r;
  r.families = families;
  for (Mask s : families) r.by_category[classify_family(t, s)].push_back(s);
  if (!r.by_category[0].empty()) {
    r.matches_reference = false;
    for (Mask s : r.by_category[0]) r.diffs.push_back("family " + set_str(s) + " fits no category");
  }
  const auto& ref = reference::categories();
  for (int c = 1; c <= 9; ++c) {
    std::set<Mask> want, got(r.by_category[c].begin(), r.by_category[c].end());
    for (const auto& f : ref[c]) want.insert(mask_of(f));
    for (Mask s : want)
      if (!got.count(s)) r.diffs.push_back("category " + std::to_string(c) + ": listed " + set_str(s) + " not derived");
    for (Mask s : got)
      if (!want.count(s)) r.diffs.push_back("category " + std::to_string(c) + ": derived " + set_str(s) + " not listed");
    if (want != got || want.size() != ref[c].size()) r.matches_reference = false;
  }
  if (!r.diffs.empty()) r.matches_reference = false;
  return r;
}

}  // namespace latcov::proof
