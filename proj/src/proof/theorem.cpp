#include "latcov/proof/theorem.hpp"

#include <chrono>
#include <functional>

#include "latcov/catalog/catalog.hpp"

namespace latcov::proof {

namespace {

using Clock = std::chrono::steady_clock;

std::string count(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

}  // namespace

TheoremReport verify_theorem(const TheoremOptions& opt) {
  TheoremReport r;
  FacePieceTable t;
  std::vector<Constraint> constraints;

  auto stage = [&](std::string id, std::string title, const std::function<bool(std::string&)>& body) {
    if (!r.failed_stage.empty()) return false;
    Stage s{std::move(id), std::move(title), false, {}, 0};
    auto t0 = Clock::now();
    s.ok = body(s.detail);
    s.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!s.ok) r.failed_stage = s.id;
    r.stages.push_back(std::move(s));
    return r.stages.back().ok;
  };

  stage("tables", "dissection of the six obstruction regions on all eight faces", [&](std::string& d) {
    t = build_tables();
    r.tables = verify_tables(t);
    d = std::to_string(r.tables.hulls_matched) + "/19 piece hulls, piece volume " + to_string(r.tables.pieces_volume[0]) +
        " = union volume " + to_string(r.tables.union_volume[0]);
    for (const auto& m : r.tables.mismatches) d += "; " + m.what + ": " + m.detail;
    return r.tables.ok;
  });

  stage("cover", "cover identities (6)-(11) at every k", [&](std::string& d) {
    r.cover = verify_cover_equations(t);
    int bad = 0;
    for (const auto& row : r.cover.rows)
      if (!row.ok) {
        ++bad;
        d += "k=" + std::to_string(row.face) + " j=" + std::to_string(row.region) + " fails; ";
      }
    if (!bad) d = count(r.cover.rows.size(), "identities hold");
    return r.cover.ok;
  });

  stage("conditions", "conditions (12)-(59) recertified from the pieces", [&](std::string& d) {
    r.derivation = derive_constraints(t, {opt.search.workers});
    constraints = r.derivation.constraints;
    d = count(r.derivation.certs.size(), "clauses recertified") + ", " +
        count(r.derivation.extra_atoms.size(), "unlisted distance exclusions") + ", " +
        count(r.derivation.extra_clauses.size(), "unlisted conditioned images");
    for (const auto& x : r.derivation.diffs) d += "; " + x;
    return r.derivation.ok;
  });

  stage("families", "per-face minimal families and categories 1-9", [&](std::string& d) {
    auto fam = enumerate_minimal_families(constraints);
    r.families = categorize(t, fam);
    d = count(fam.size(), "families:");
    for (int c = 1; c <= 9; ++c) d += " " + std::to_string(r.families.by_category[c].size());
    for (const auto& x : r.families.diffs) d += "; " + x;
    return r.families.matches_reference;
  });

  stage("search", "exhaustive search over one family per face", [&](std::string& d) {
    r.certificate = search_infeasibility(r.families.families, constraints, opt.search);
    d = std::to_string(r.certificate.tuples) + " tuples, " + count(r.certificate.survivors.size(), "survivors");
    if (!opt.search.drop_ids.empty()) {
      d += ", without";
      for (int id : opt.search.drop_ids) d += " (" + std::to_string(id) + ")";
    }
    if (opt.fallback) {
      r.fallback = search_backtracking(enumerate_feasible_sets(constraints), constraints, opt.search);
      d += "; all feasible sets: " + std::to_string(r.fallback->nodes) + " nodes, " +
           count(r.fallback->survivors.size(), "survivors");
      if (r.fallback->infeasible != r.certificate.infeasible) d += " (modes disagree)";
    }
    r.lower_ok = r.certificate.infeasible && (!r.fallback || r.fallback->infeasible);
    return r.lower_ok;
  });

  if (opt.lemmas)
    stage("lemmas", "tetrahedron bound and the hole lemmas at sample points", [&](std::string& d) {
      r.lemma1 = verify_lemma1();
      bool ok = r.lemma1.ok;
      for (const auto& a0 : lemma_sample_points()) {
        r.lemmas23.push_back(verify_lemmas_2_3_at(a0));
        ok = ok && r.lemmas23.back().ok;
      }
      d = "centroid bound " + std::string(r.lemma1.ok ? "holds" : "fails") + ", " +
          count(r.lemmas23.size(), "sample points");
      for (const auto& l : r.lemmas23)
        if (!l.ok) d += "; fails at " + l.subject;
      return ok;
    });

  stage("upper", "covering radius of O with the Minkowski lattice", [&](std::string& d) {
    Poly o = octahedron();
    Lattice<Rational> l = minkowski_lattice();
    if (opt.upper_scale != 1) l = l.scaled(opt.upper_scale);
    r.packing = check_packing(o, l);
    r.upper = gamma_bracket(o, l, make_rational(1, 1000000));
    d = "packing min gauge " + to_string(r.packing->min_gauge) + ", gamma in [" + to_string(r.upper->lower) + ", " +
        to_string(r.upper->upper) + "]";
    return r.packing->ok && r.upper->exact();
  });

  r.equality = r.failed_stage.empty() && r.lower_ok && r.upper && r.upper->exact() &&
               r.upper->upper == r.lower_bound;
  if (r.equality) {
    r.verdict = "gamma*(O) = 7/6";
  } else if (!r.failed_stage.empty()) {
    r.verdict = "not established: stage '" + r.failed_stage + "' failed";
  } else {
    r.verdict = "not established: lower bound 7/6, upper bound " + to_string(r.upper->upper);
  }
  return r;
}

}  // namespace latcov::proof
