#include <doctest.h>

#include "latcov/proof/derive.hpp"
#include "latcov/proof/families.hpp"
#include "latcov/proof/lemmas.hpp"
#include "latcov/proof/reference.hpp"
#include "latcov/proof/search.hpp"
#include "latcov/proof/theorem.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace latcov;
using namespace latcov::proof;
using oracle::q;

namespace {

const FacePieceTable& tables() {
  static FacePieceTable t = build_tables();
  return t;
}

const Derivation& derivation() {
  static Derivation d = derive_constraints(tables());
  return d;
}

const std::vector<Mask>& families() {
  static std::vector<Mask> f = enumerate_minimal_families(derivation().constraints);
  return f;
}

}  // namespace

TEST_CASE("face maps") {
  SignedPerm r = face_turn();
  CHECK(r * r * r * r == SignedPerm::identity());
  for (int f = 0; f < kFaces; ++f) CHECK(face_label(f) < kLabels);
  CHECK(face_label(0) == 0);
  CHECK(thirds(1, 2, 3) == vec3<Rational>(q(1, 3), q(2, 3), q(1)));
  int classes = 0;
  for (int m = 1; m <= kPieces; ++m) classes = std::max(classes, piece_class(m));
  CHECK(classes <= kRegions);
}

TEST_CASE("piece tables") {
  const auto& t = tables();
  auto r = verify_tables(t);
  for (const auto& m : r.mismatches) INFO(m.what << ": " << m.detail);
  CHECK(r.ok);
  CHECK(r.hulls_matched == kPieces);
  CHECK(r.rotation_ok);
  CHECK(r.inversion_ok);
  CHECK(r.disjoint_ok);
  for (int f = 0; f < kFaces; ++f) CHECK(r.union_volume[f] == r.pieces_volume[f]);
  // pieces of one face are interior-disjoint
  for (int a = 1; a <= kPieces; ++a)
    for (int b = a + 1; b <= kPieces; ++b)
      for (const auto& x : t.cells(0, a))
        for (const auto& y : t.cells(0, b)) CHECK_FALSE(interiors_meet(x, y));
  CHECK(verify_cover_equations(t).ok);
}

TEST_CASE("masks and clauses") {
  std::vector<int> s{1, 4, 19};
  CHECK(pieces_of(mask_of(s)) == s);
  CHECK(mask_of({}) == 0);
  CHECK(lex_less(mask_of({1, 2}), mask_of({1, 3})));
  for (const auto& c : reference::conditions()) {
    CHECK(c.same_clause(c));
    CHECK(c.normalized().same_clause(c));
    CHECK_FALSE(c.str().empty());
  }
  // a compiled clause ignores assignments that miss its premises
  auto comp = compile(reference::conditions());
  CHECK(comp.size() == reference::conditions().size());
  Assignment none{0, 0, 0, 0};
  for (const auto& c : comp)
    if (c.kind == Constraint::Kind::exclusion) CHECK(c.holds(none, 0));
}

TEST_CASE("derivation recertifies the transcription") {
  const auto& d = derivation();
  CHECK(d.ok);
  CHECK(d.diffs.empty());
  CHECK(d.hole_premises_ok);
  for (const auto& c : d.certs) {
    INFO(c.id << " " << c.method);
    CHECK(c.ok);
  }
  for (const auto& c : reference::conditions()) {
    bool found = false;
    for (const auto& x : d.constraints) found = found || (x.id == c.id && x.same_clause(c));
    CHECK(found);
  }
}

TEST_CASE("minimal families and categories") {
  const auto& fams = families();
  CHECK(fams.size() == 66);
  auto rep = categorize(tables(), fams);
  CHECK(rep.diffs.empty());
  CHECK(rep.by_category[0].empty());
  std::size_t total = 0;
  for (int c = 1; c <= 9; ++c) total += rep.by_category[c].size();
  CHECK(total == fams.size());
  // minimal: no family contains another
  for (Mask a : fams)
    for (Mask b : fams)
      if (a != b) CHECK((a & b) != a);
  // every feasible set contains a minimal family
  for (Mask s : enumerate_feasible_sets(derivation().constraints)) {
    bool covered = false;
    for (Mask a : fams) covered = covered || (a & s) == a;
    CHECK(covered);
  }
}

TEST_CASE("search certificate") {
  const auto& fams = families();
  auto cert = search_infeasibility(fams, derivation().constraints, {.workers = 2});
  CHECK(cert.infeasible);
  CHECK(cert.survivors.empty());
  std::uint64_t n = fams.size();
  CHECK(cert.tuples == n * n * n * n);
  CHECK(cert.first_violation.size() == cert.tuples);
  std::uint64_t sum = 0;
  for (auto [id, c] : cert.histogram) sum += c;
  CHECK(sum == cert.tuples);
  for (std::uint64_t i : {std::uint64_t(0), std::uint64_t(12345), cert.tuples - 1}) CHECK(cert.index(cert.tuple(i)) == i);

  // worker count does not change the certificate
  auto one = search_infeasibility(fams, derivation().constraints, {.workers = 1});
  CHECK(one.histogram == cert.histogram);
  CHECK(one.first_violation == cert.first_violation);
}

TEST_CASE("dropping a clause leaves survivors") {
  auto cert = search_infeasibility(families(), derivation().constraints, {.workers = 2, .drop_ids = {30}});
  CHECK_FALSE(cert.infeasible);
  CHECK(cert.survivors.size() == 36);
  CHECK(cert.dropped == std::vector<int>{30});
  // the full clause set rejects every survivor
  auto comp = compile(derivation().constraints);
  for (const auto& a : cert.survivors) CHECK(first_violation(comp, a) != 0);
}

TEST_CASE("lemmas") {
  auto l1 = verify_lemma1();
  CHECK(l1.ok);
  auto pts = lemma_sample_points();
  CHECK(pts.size() == 13);
  for (const auto& a : pts) {
    CAPTURE(vec_str(a));
    CHECK(in_hole_region(a));
    auto r = verify_lemmas_2_3_at(a);
    CHECK(r.ok);
    CHECK(r.r0 >= 2);
    CHECK(r.diameter <= 2);
  }
}

TEST_CASE("theorem pipeline") {
  TheoremOptions opt;
  opt.search.workers = 2;
  opt.fallback = false;
  opt.lemmas = false;
  auto r = verify_theorem(opt);
  CHECK(r.ok());
  CHECK(r.failed_stage.empty());
  REQUIRE(r.upper);
  CHECK(r.upper->upper == q(7, 6));
  CHECK(r.lower_bound == q(7, 6));
  CHECK(r.equality);
}

TEST_CASE("property: segment midpoints stay within the vertex bound") {
  auto r = props::segment_midpoints(tables(), 50, 301);
  INFO(r.first_failure);
  CHECK(r.ok());
}
