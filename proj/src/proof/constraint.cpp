#include "latcov/proof/constraint.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latcov::proof {

namespace {

std::vector<Sel> merge(const std::vector<Sel>& in) {
  std::map<int, std::vector<int>> by;
  for (const auto& s : in)
    for (int p : s.pieces) by[((s.offset % 4) + 4) % 4].push_back(p);
  std::vector<Sel> out;
  for (auto& [o, ps] : by) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    out.push_back({o, ps});
  }
  return out;
}

void put(std::ostringstream& os, const std::vector<Sel>& ss, const char* sep) {
  bool first = true;
  for (const auto& s : ss) {
    if (!first) os << sep;
    first = false;
    os << "k+" << s.offset << ":{";
    for (std::size_t i = 0; i < s.pieces.size(); ++i) os << (i ? "," : "") << s.pieces[i];
    os << "}";
  }
}

std::array<Mask, 4> masks(const std::vector<Sel>& ss) {
  std::array<Mask, 4> m{};
  for (const auto& s : ss) m[((s.offset % 4) + 4) % 4] |= mask_of(s.pieces);
  return m;
}

bool any(const std::array<Mask, 4>& sel, const Assignment& a, int k) {
  for (int o = 0; o < 4; ++o)
    if (sel[o] & a[(k + o) & 3]) return true;
  return false;
}

int count(const std::array<Mask, 4>& sel, const Assignment& a, int k) {
  int n = 0;
  for (int o = 0; o < 4; ++o) n += __builtin_popcount(sel[o] & a[(k + o) & 3]);
  return n;
}

}  // namespace

const char* kind_name(Constraint::Kind k) {
  switch (k) {
    case Constraint::Kind::coverage: return "coverage";
    case Constraint::Kind::exclusion: return "exclusion";
    case Constraint::Kind::cardinality: return "cardinality";
    case Constraint::Kind::disjunction: return "disjunction";
  }
  return "?";
}

Mask mask_of(const std::vector<int>& pieces) {
  Mask m = 0;
  for (int p : pieces) m |= Mask(1) << p;
  return m;
}

std::vector<int> pieces_of(Mask m) {
  std::vector<int> out;
  for (int p = 1; p < 32; ++p)
    if (m >> p & 1) out.push_back(p);
  return out;
}

bool Constraint::intra_face() const {
  auto o = offsets();
  return o.size() == 1 && o[0] == 0;
}

std::vector<int> Constraint::offsets() const {
  std::vector<int> o;
  auto add = [&](const std::vector<Sel>& ss) {
    for (const auto& s : ss) o.push_back(((s.offset % 4) + 4) % 4);
  };
  for (const auto& g : premises) add(g);
  add(refs);
  add(alt);
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  return o;
}

Constraint Constraint::normalized() const {
  Constraint c = *this;
  for (auto& g : c.premises) g = merge(g);
  std::sort(c.premises.begin(), c.premises.end());
  c.premises.erase(std::unique(c.premises.begin(), c.premises.end()), c.premises.end());
  c.refs = merge(refs);
  c.alt = merge(alt);
  if (kind == Kind::disjunction && c.alt < c.refs) std::swap(c.refs, c.alt);
  return c;
}

bool Constraint::same_clause(const Constraint& o) const {
  Constraint a = normalized(), b = o.normalized();
  return a.kind == b.kind && a.premises == b.premises && a.refs == b.refs && a.alt == b.alt;
}

std::string Constraint::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    os << (i ? " and " : "") << "any(";
    put(os, premises[i], " | ");
    os << ")";
  }
  if (!premises.empty()) os << " => ";
  switch (kind) {
    case Kind::coverage: os << "any("; put(os, refs, " | "); os << ")"; break;
    case Kind::exclusion: os << "none("; put(os, refs, ", "); os << ")"; break;
    case Kind::cardinality: os << "at_most_one("; put(os, refs, ", "); os << ")"; break;
    case Kind::disjunction:
      os << "none(";
      put(os, refs, ", ");
      os << ") or none(";
      put(os, alt, ", ");
      os << ")";
      break;
  }
  return os.str();
}

bool Compiled::holds(const Assignment& a, int k) const {
  for (const auto& g : premises)
    if (!any(g, a, k)) return true;
  switch (kind) {
    case Constraint::Kind::coverage: return any(refs, a, k);
    case Constraint::Kind::exclusion: return !any(refs, a, k);
    case Constraint::Kind::cardinality: return count(refs, a, k) <= 1;
    case Constraint::Kind::disjunction: return !any(refs, a, k) || !any(alt, a, k);
  }
  return true;
}

Compiled compile(const Constraint& c) {
  Compiled out;
  out.id = c.id;
  out.kind = c.kind;
  for (const auto& g : c.premises) out.premises.push_back(masks(g));
  out.refs = masks(c.refs);
  out.alt = masks(c.alt);
  for (int o : c.offsets()) out.faces |= 1u << o;
  return out;
}

std::vector<Compiled> compile(const std::vector<Constraint>& cs) {
  std::vector<Compiled> out;
  for (const auto& c : cs) out.push_back(compile(c));
  return out;
}

}  // namespace latcov::proof
