#include "latcov/proof/derive.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "latcov/proof/reference.hpp"

namespace latcov::proof {

namespace {

using Kind = Constraint::Kind;

int mod4(int x) { return ((x % 4) + 4) % 4; }

Group here(std::vector<int> s) { return {{0, std::move(s)}}; }

// Conditioned clauses from which the others follow by symmetry, together
// with the auxiliary hulls their geometric premises are stated with.
struct ChainBase {
  int id;
  std::vector<int> trigger;
  int witness;
  std::string hull;
  std::vector<Sel> targets;
};

struct CardBase {
  int id;
  std::vector<Sel> x, y;      // premise groups
  std::string hx, hy;         // hulls swallowed by a lattice point of x / y
  std::vector<int> w, z;      // w avoids hx, z avoids hy
};

struct DisjBase {
  int id;
  int a, b;
  std::string ha, hb;
  std::vector<Sel> ta, tb;
};

const std::vector<ChainBase>& chain_bases() {
  static const std::vector<ChainBase> b = {
      {46, {4, 6, 19}, 16, "in16", {{1, {9, 11}}, {2, {15}}}},
      {52, {13}, 4, "in4", {{1, {1, 3}}, {3, {1, 2}}}},
  };
  return b;
}

const std::vector<CardBase>& card_bases() {
  static const std::vector<CardBase> b = {
      {55, {{1, {1}}, {3, {1}}}, {{2, {9}}, {3, {15}}}, "low", "side", {2, 3, 4}, {10, 11, 12}},
  };
  return b;
}

const std::vector<DisjBase>& disj_bases() {
  static const std::vector<DisjBase> b = {
      {58, 4, 17, "cap4", "cap17", {{1, {1, 3}}, {3, {1, 2}}}, {{1, {9}}, {2, {15, 16}}}},
  };
  return b;
}

Poly aux(const std::string& name) { return hull(reference::aux_hull(name)); }

SignedPerm turns(int k) {
  SignedPerm g = SignedPerm::identity();
  for (int i = 0; i < k; ++i) g = face_turn() * g;
  return g;
}

std::vector<Sel> map_sels(const LabelAction& act, const std::vector<Sel>& ss) {
  std::vector<Sel> out;
  for (const auto& s : ss)
    for (int p : s.pieces) {
      auto [d, q] = act.map[mod4(s.offset)][p];
      out.push_back({d, {q}});
    }
  return Constraint{0, Kind::exclusion, {}, out, {}}.normalized().refs;
}

int map_piece(const LabelAction& act, int m) { return act.map[0][m].second; }

std::vector<int> map_pieces(const LabelAction& act, const std::vector<int>& ms) {
  std::vector<int> out;
  for (int m : ms) out.push_back(map_piece(act, m));
  std::sort(out.begin(), out.end());
  return out;
}

Cells join(const FacePieceTable& t, int f, const std::vector<int>& ms) {
  Cells out;
  for (int m : ms) out.insert(out.end(), t.cells(f, m).begin(), t.cells(f, m).end());
  return out;
}

std::vector<Target> targets_at(const FacePieceTable& t, int k, const std::vector<Sel>& ss) {
  std::vector<Target> out;
  for (const auto& s : ss)
    for (int p : s.pieces) out.push_back(placements(t, mod4(k + s.offset), p));
  return out;
}

std::string sel_name(int offset, int m) { return "k+" + std::to_string(offset) + ":" + std::to_string(m); }

// Geometric checks of one conditioned clause at face k, with its auxiliary
// hulls already moved by the symmetry g.
struct Checked {
  bool ok = true, vacuous = false;
  std::vector<std::string> failures;
};

Checked check_chain(const FacePieceTable& t, int k, const std::vector<int>& trigger, int witness,
                    const Poly& h0, const std::vector<Sel>& targets) {
  Checked c;
  Poly h = apply_symmetry(turns(k), h0);
  auto r = check_chained_condition(join(t, k, trigger), h, t.cells(k, witness), targets_at(t, k, targets));
  c.vacuous = r.vacuous;
  if (!r.trigger_ok) c.failures.push_back("k=" + std::to_string(k) + ": trigger does not swallow the hull");
  for (int i : r.failed_targets) c.failures.push_back("k=" + std::to_string(k) + ": target " + std::to_string(i) + " not excluded");
  c.ok = r.ok();
  return c;
}

bool group_swallows(const FacePieceTable& t, int k, const std::vector<Sel>& g, const Poly& h) {
  Cells hc{h};
  for (const auto& s : g)
    for (int p : s.pieces) {
      bool any = false;
      for (const auto& pl : placements(t, mod4(k + s.offset), p)) any = any || check_pair_exclusion(pl, hc);
      if (!any) return false;
    }
  return true;
}

Checked check_card(const FacePieceTable& t, int k, const std::vector<Sel>& x, const std::vector<Sel>& y,
                   const Poly& hx0, const Poly& hy0, const std::vector<int>& w, const std::vector<int>& z) {
  Checked c;
  std::string at = "k=" + std::to_string(k) + ": ";
  Poly hx = apply_symmetry(turns(k), hx0), hy = apply_symmetry(turns(k), hy0);
  if (!group_swallows(t, k, x, hx)) c.failures.push_back(at + "first premise does not swallow its hull");
  if (!group_swallows(t, k, y, hy)) c.failures.push_back(at + "second premise does not swallow its hull");
  Cells rw = subtract(join(t, k, w), {hx}), rz = subtract(join(t, k, z), {hy});
  c.vacuous = rw.empty() || rz.empty();
  if (!check_pair_exclusion(rw, rz)) c.failures.push_back(at + "residuals are more than 2 apart");
  for (const auto* set : {&w, &z})
    for (std::size_t i = 0; i < set->size(); ++i)
      for (std::size_t j = i + 1; j < set->size(); ++j)
        if (!target_excluded(t.cells(k, (*set)[i]), placements(t, k, (*set)[j])))
          c.failures.push_back(at + "pieces " + std::to_string((*set)[i]) + " and " + std::to_string((*set)[j]) +
                               " may coexist");
  c.ok = c.failures.empty();
  return c;
}

Checked check_disj(const FacePieceTable& t, int k, int a, int b, const Poly& ha0, const Poly& hb0,
                   const std::vector<Sel>& ta, const std::vector<Sel>& tb) {
  Checked c;
  std::string at = "k=" + std::to_string(k) + ": ";
  Poly ha = apply_symmetry(turns(k), ha0), hb = apply_symmetry(turns(k), hb0);
  for (const auto& tg : targets_at(t, k, ta))
    if (!target_excluded(Cells{ha}, tg)) c.failures.push_back(at + "first branch target not excluded");
  for (const auto& tg : targets_at(t, k, tb))
    if (!target_excluded(Cells{hb}, tg)) c.failures.push_back(at + "second branch target not excluded");
  Cells ra = subtract(t.cells(k, a), {ha}), rb = subtract(t.cells(k, b), {hb});
  c.vacuous = ra.empty() || rb.empty();
  if (!check_pair_exclusion(ra, rb)) c.failures.push_back(at + "residuals are more than 2 apart");
  c.ok = c.failures.empty();
  return c;
}

// A candidate derivation of a conditioned clause: the emitted clause and a
// check to run at each k.
struct Candidate {
  Constraint clause;
  std::string source;
  std::function<Checked(int)> check;
};

std::vector<Candidate> conditioned_candidates(const FacePieceTable& t) {
  std::vector<Candidate> out;
  auto stab = face0_stabilizer();
  for (const auto& g : stab) {
    LabelAction act = label_action(t, g);
    std::string via = " under " + g.str();
    for (const auto& b : chain_bases()) {
      auto trig = map_pieces(act, b.trigger);
      int wit = map_piece(act, b.witness);
      auto tg = map_sels(act, b.targets);
      Poly h = apply_symmetry(g, aux(b.hull));
      Constraint c{0, Kind::exclusion, {here(trig), here({wit})}, tg, {}};
      out.push_back({c, "(" + std::to_string(b.id) + ")" + via,
                     [&t, trig, wit, h, tg](int k) { return check_chain(t, k, trig, wit, h, tg); }});
    }
    for (const auto& b : card_bases()) {
      auto x = map_sels(act, b.x), y = map_sels(act, b.y);
      auto w = map_pieces(act, b.w), z = map_pieces(act, b.z);
      Poly hx = apply_symmetry(g, aux(b.hx)), hy = apply_symmetry(g, aux(b.hy));
      std::vector<int> all = w;
      all.insert(all.end(), z.begin(), z.end());
      std::sort(all.begin(), all.end());
      Constraint c{0, Kind::cardinality, {x, y}, {{0, all}}, {}};
      out.push_back({c, "(" + std::to_string(b.id) + ")" + via,
                     [&t, x, y, hx, hy, w, z](int k) { return check_card(t, k, x, y, hx, hy, w, z); }});
    }
    for (const auto& b : disj_bases()) {
      int a = map_piece(act, b.a), bb = map_piece(act, b.b);
      auto ta = map_sels(act, b.ta), tb = map_sels(act, b.tb);
      Poly ha = apply_symmetry(g, aux(b.ha)), hb = apply_symmetry(g, aux(b.hb));
      Constraint c{0, Kind::disjunction, {here({a}), here({bb})}, ta, tb};
      out.push_back({c, "(" + std::to_string(b.id) + ")" + via,
                     [&t, a, bb, ha, hb, ta, tb](int k) { return check_disj(t, k, a, bb, ha, hb, ta, tb); }});
    }
  }
  return out;
}

// The printed premises behind the hole clauses: a point of piece 3, or of
// the hull near piece 7, swallows the hull near piece 5, and pieces 5 and 7
// outside the hole regions lie in those hulls.
bool hole_premises_hold(const FacePieceTable& t) {
  Poly near5 = aux("near5"), part7 = aux("part7");
  if (!check_pair_exclusion(t.cells(0, 3), {near5}) || !check_pair_exclusion({part7}, {near5})) return false;
  auto outside = [&](int m, const Poly& h) {
    std::vector<Poly> cover = hole_regions();
    cover.push_back(h);
    return subtract(t.cells(0, m), cover).empty();
  };
  return outside(5, near5) && outside(7, part7);
}

bool is_pair_clause(int id) { return (id >= 12 && id <= 26) || (id >= 30 && id <= 45); }

std::vector<Atom> atoms_of(const Constraint& c) {
  std::vector<Atom> out;
  for (const auto& g : c.premises)
    for (const auto& s : g)
      for (int a : s.pieces)
        for (const auto& r : c.refs)
          for (int b : r.pieces) out.push_back(Atom{a, mod4(r.offset - s.offset), b}.canonical());
  return out;
}

unsigned worker_count(int requested) {
  unsigned n = requested > 0 ? unsigned(requested) : std::thread::hardware_concurrency();
  return std::max(1u, n);
}

// Runs f(i) for i in [0, n) on a few threads; results in index order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned threads, F f) {
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) out[i] = f(i);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

Atom Atom::canonical() const {
  Atom flip{b, mod4(-offset), a};
  Atom self{a, mod4(offset), b};
  return std::min(self, flip);
}

DerivationError::DerivationError(Derivation d)
    : std::runtime_error(d.diffs.empty() ? "constraint derivation failed" : d.diffs.front()),
      derivation(std::move(d)) {}

Target placements(const FacePieceTable& t, int label, int m) {
  return {t.cells(mod4(label), m), t.cells(4 + mod4(label + 2), m)};
}

Constraint image(const LabelAction& act, const Constraint& c) {
  Constraint out = c;
  for (auto& g : out.premises) g = map_sels(act, g);
  out.refs = map_sels(act, c.refs);
  out.alt = map_sels(act, c.alt);
  return out.normalized();
}

Derivation derive_constraints(const FacePieceTable& t, const DeriveOptions& opt) {
  Derivation d;
  unsigned threads = worker_count(opt.threads);
  const auto& listed = reference::conditions();

  // Coverage: the pieces found inside each region, identical for every k.
  CoverReport cover = verify_cover_equations(t);
  for (int j = 1; j <= kRegions; ++j) {
    ClauseCert cert{5 + j, "coverage", "", true, false, {}};
    std::vector<int> derived;
    for (const auto& row : cover.rows)
      if (row.region == j) {
        if (!row.ok) {
          cert.ok = false;
          cert.failures.push_back("k=" + std::to_string(row.face) + ": cover identity fails");
        }
        if (row.face == 0) derived = row.derived;
      }
    Constraint c{5 + j, Kind::coverage, {}, {{0, derived}}, {}};
    auto it = std::find_if(listed.begin(), listed.end(), [&](const Constraint& x) { return x.id == c.id; });
    if (it == listed.end() || !it->same_clause(c)) {
      cert.ok = false;
      cert.failures.push_back("derived piece list differs from the transcription");
    }
    d.constraints.push_back(c);
    d.certs.push_back(std::move(cert));
  }

  // Distance exclusions between all piece pairs, at every k.
  struct SweepKey { int a, offset, b; };
  std::vector<SweepKey> keys;
  for (int a = 1; a <= kPieces; ++a)
    for (int o = 0; o < kLabels; ++o)
      for (int b = 1; b <= kPieces; ++b)
        if (!(o == 0 && a == b)) keys.push_back({a, o, b});
  auto holds = parallel_map<std::array<bool, 4>>(keys.size(), threads, [&](std::size_t i) {
    std::array<bool, 4> h{};
    for (int k = 0; k < kLabels; ++k)
      h[k] = target_excluded(t.cells(k, keys[i].a), placements(t, k + keys[i].offset, keys[i].b));
    return h;
  });
  std::set<Atom> sweep;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    bool all = holds[i][0] && holds[i][1] && holds[i][2] && holds[i][3];
    bool none = !holds[i][0] && !holds[i][1] && !holds[i][2] && !holds[i][3];
    if (!all && !none) {
      d.ok = false;
      d.diffs.push_back("distance exclusion " + sel_name(0, keys[i].a) + " / " + sel_name(keys[i].offset, keys[i].b) +
                        " depends on k");
    }
    if (all) sweep.insert(Atom{keys[i].a, keys[i].offset, keys[i].b}.canonical());
  }
  d.pair_atoms = int(sweep.size());

  std::set<Atom> listed_atoms;
  std::vector<const Constraint*> hole_clauses, conditioned;
  for (const auto& c : listed) {
    if (c.kind == Kind::coverage) continue;
    if (reference::uses_hole_argument(c.id)) {
      hole_clauses.push_back(&c);
    } else if (is_pair_clause(c.id)) {
      ClauseCert cert{c.id, "pair", "", true, false, {}};
      for (const auto& a : atoms_of(c)) {
        listed_atoms.insert(a);
        if (!sweep.count(a)) {
          cert.ok = false;
          cert.failures.push_back("pieces " + std::to_string(a.a) + " and " + sel_name(a.offset, a.b) +
                                  " are more than 2 apart");
        }
      }
      d.certs.push_back(std::move(cert));
      d.constraints.push_back(c);
    } else {
      conditioned.push_back(&c);
    }
  }

  // Hole clauses: distance, else the hole argument on whatever is left.
  auto hole_certs = parallel_map<ClauseCert>(hole_clauses.size(), threads, [&](std::size_t i) {
    const Constraint& c = *hole_clauses[i];
    ClauseCert cert{c.id, "hole", "", true, false, {}};
    bool diff_only = true;
    for (const auto& a : atoms_of(c)) {
      if (sweep.count(a)) continue;
      for (int k = 0; k < kLabels; ++k) {
        const Cells& from = t.cells(k, a.a);
        bool ok = false, plain = false;
        for (const auto& pl : placements(t, k + a.offset, a.b)) {
          plain = plain || check_hole_difference(from, pl);
          ok = ok || plain || check_corollary2_exclusion(from, pl);
        }
        diff_only = diff_only && plain;
        if (!ok) {
          cert.ok = false;
          cert.failures.push_back("k=" + std::to_string(k) + ": pieces " + std::to_string(a.a) + " and " +
                                  sel_name(a.offset, a.b) + " not excluded");
        }
      }
    }
    cert.source = diff_only ? "difference body" : "difference body after removing holes at the origin";
    return cert;
  });
  bool all_diff_only = true;
  for (std::size_t i = 0; i < hole_clauses.size(); ++i) {
    all_diff_only = all_diff_only && hole_certs[i].source == "difference body";
    for (const auto& a : atoms_of(*hole_clauses[i])) listed_atoms.insert(a);
    d.certs.push_back(hole_certs[i]);
    d.constraints.push_back(*hole_clauses[i]);
  }
  d.hole_difference_only = all_diff_only;
  d.hole_premises_ok = hole_premises_hold(t);

  for (const auto& a : sweep)
    if (!listed_atoms.count(a)) d.extra_atoms.push_back(a);

  // Conditioned clauses: match each against a symmetric image of a base.
  auto cands = conditioned_candidates(t);
  auto checked = parallel_map<Checked>(cands.size() * kLabels, threads, [&](std::size_t i) {
    return cands[i / kLabels].check(int(i % kLabels));
  });
  auto merged = [&](std::size_t ci) {
    Checked m;
    for (int k = 0; k < kLabels; ++k) {
      const auto& c = checked[ci * kLabels + k];
      m.ok = m.ok && c.ok;
      m.vacuous = m.vacuous || c.vacuous;
      m.failures.insert(m.failures.end(), c.failures.begin(), c.failures.end());
    }
    return m;
  };
  std::vector<bool> used(cands.size(), false);
  for (const auto* c : conditioned) {
    ClauseCert cert{c->id, "", "", false, false, {}};
    cert.method = c->kind == Kind::exclusion     ? "chained"
                  : c->kind == Kind::cardinality ? "cardinality"
                                                 : "disjunctive";
    bool found = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!cands[i].clause.same_clause(*c)) continue;
      used[i] = true;
      if (found) continue;
      found = true;
      Checked m = merged(i);
      cert.ok = m.ok;
      cert.vacuous = m.vacuous;
      cert.failures = m.failures;
      cert.source = cands[i].source;
    }
    if (!found) cert.failures.push_back("no geometric premise yields this clause");
    d.certs.push_back(std::move(cert));
    d.constraints.push_back(*c);
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (used[i] || !merged(i).ok) continue;
    Constraint c = cands[i].clause.normalized();
    bool dup = false;
    for (const auto& e : d.extra_clauses) dup = dup || e.same_clause(c);
    if (!dup) d.extra_clauses.push_back(c);
  }

  for (const auto& cert : d.certs)
    if (!cert.ok) {
      d.ok = false;
      std::string msg = "(" + std::to_string(cert.id) + ") " + cert.method + ":";
      for (const auto& f : cert.failures) msg += " " + f + ";";
      d.diffs.push_back(msg);
    }
  return d;
}

std::vector<Constraint> derive_all_constraints(const FacePieceTable& t) {
  Derivation d = derive_constraints(t);
  if (!d.ok) throw DerivationError(std::move(d));
  return d.constraints;
}

}  // namespace latcov::proof
