#include "latcov/io/json.hpp"

#include <fstream>
#include <sstream>

#include "latcov/arith/errors.hpp"

namespace latcov::io {

namespace {

std::string literal(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number()) throw ParseError(where + ": bare float " + v.dump() + "; write an exact literal");
  throw ParseError(where + ": expected a scalar literal");
}

template <class S>
S parse_as(const Json& v, const Field& f, const std::string& where) {
  std::string text = literal(v, where);
  try {
    return scalar_as<S>(parse_scalar(text, f));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

template <class S>
Vec3<S> parse_vec(const Json& v, const Field& f, const std::string& where) {
  if (!v.is_array() || v.size() != 3) throw ParseError(where + ": expected 3 coordinates");
  return vec3<S>(parse_as<S>(v[0], f, where), parse_as<S>(v[1], f, where), parse_as<S>(v[2], f, where));
}

const Json& member(const Json& doc, const char* key, const char* what) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string(what) + " document has no \"" + key + "\"");
  return *it;
}

std::string name_of(const Json& doc, const char* what) {
  const Json& n = member(doc, "name", what);
  if (!n.is_string()) throw ParseError(std::string(what) + " name must be a string");
  return n.get<std::string>();
}

Field field_in(const Json& doc, const char* what) {
  const Json& f = member(doc, "field", what);
  if (!f.is_string()) throw ParseError(std::string(what) + " field must be a string");
  return parse_field(f.get<std::string>());
}

template <class S>
Polytope<S> build_polytope(const Json& doc, const Field& f) {
  auto v = doc.find("vertices"), h = doc.find("halfspaces");
  if (v == doc.end() && h == doc.end()) throw ParseError("polytope document needs vertices or halfspaces");
  std::optional<Polytope<S>> from_v, from_h;
  if (v != doc.end()) {
    if (!v->is_array()) throw ParseError("vertices must be an array");
    std::vector<Vec3<S>> pts;
    for (std::size_t i = 0; i < v->size(); ++i)
      pts.push_back(parse_vec<S>((*v)[i], f, "vertex " + std::to_string(i)));
    from_v = hull(pts);
  }
  if (h != doc.end()) {
    if (!h->is_array()) throw ParseError("halfspaces must be an array");
    std::vector<HalfSpace<S>> hs;
    for (std::size_t i = 0; i < h->size(); ++i) {
      const Json& e = (*h)[i];
      std::string where = "halfspace " + std::to_string(i);
      if (!e.is_object()) throw ParseError(where + ": expected an object");
      hs.push_back({parse_vec<S>(member(e, "normal", "halfspace"), f, where),
                    parse_as<S>(member(e, "offset", "halfspace"), f, where)});
    }
    from_h = from_halfspaces(hs);
  }
  if (from_v && from_h && !(*from_v == *from_h))
    throw GeometryError("vertices and halfspaces describe different polytopes");
  return from_v ? *from_v : *from_h;
}

template <class S>
Mat3<S> parse_basis(const Json& doc, const Field& f) {
  const Json& b = member(doc, "basis", "lattice");
  if (!b.is_array() || b.size() != 3) throw ParseError("basis must have 3 rows");
  Mat3<S> m;
  for (int i = 0; i < 3; ++i) m.row(i) = parse_vec<S>(b[i], f, "basis row " + std::to_string(i)).transpose();
  return m;
}

Field quadratic_field(std::int64_t d) { return d ? Field::quadratic(d) : Field::rational(); }

template <class S>
Json box_json(const Box3<S>& b) {
  return Json{{"lo", vec(b.lo)}, {"hi", vec(b.hi)}};
}

template <class S>
Json points_json(const std::vector<LatticePoint<S>>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(Json{{"coeffs", coeffs(p.coeffs)}, {"point", vec(p.x)}});
  return a;
}

template <class S>
Json basis_json(const Mat3<S>& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(vec(Vec3<S>(m.row(i).transpose())));
  return rows;
}

Json lemma_json(const proof::LemmaReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return Json{{"subject", r.subject}, {"ok", r.ok}, {"r0", scalar(r.r0)}, {"diameter", scalar(r.diameter)},
              {"checks", checks}};
}

Json masks_json(const std::vector<proof::Mask>& ms) {
  Json a = Json::array();
  for (auto m : ms) a.push_back(proof::pieces_of(m));
  return a;
}

Json assignment_json(const proof::Assignment& a) {
  Json j = Json::array();
  for (auto m : a) j.push_back(proof::pieces_of(m));
  return j;
}

}  // namespace

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
}

PolytopeDoc parse_polytope(const Json& doc) {
  if (!doc.is_object()) throw ParseError("polytope document must be an object");
  PolytopeDoc d{name_of(doc, "polytope"), field_in(doc, "polytope"), {}};
  switch (d.field.kind) {
    case Field::Kind::rational: d.body = build_polytope<Rational>(doc, d.field); break;
    case Field::Kind::quadratic: d.body = build_polytope<Quadratic>(doc, d.field); break;
    case Field::Kind::interval:
      throw ParseError("interval polytopes are not supported; give the body exactly");
  }
  return d;
}

LatticeDoc parse_lattice(const Json& doc) {
  if (!doc.is_object()) throw ParseError("lattice document must be an object");
  LatticeDoc d{name_of(doc, "lattice"), field_in(doc, "lattice"), {}};
  switch (d.field.kind) {
    case Field::Kind::rational: d.lattice = Lattice<Rational>(parse_basis<Rational>(doc, d.field), d.name); break;
    case Field::Kind::quadratic: d.lattice = Lattice<Quadratic>(parse_basis<Quadratic>(doc, d.field), d.name); break;
    case Field::Kind::interval: d.lattice = IntervalLattice{d.name, parse_basis<Interval>(doc, d.field)}; break;
  }
  return d;
}

PolytopeDoc read_polytope(const std::string& path) { return parse_polytope(read_json(path)); }
LatticeDoc read_lattice(const std::string& path) { return parse_lattice(read_json(path)); }

Field field_of(const AnyPolytope& p) {
  if (const auto* q = std::get_if<Polytope<Quadratic>>(&p))
    for (const auto& v : q->vertices)
      for (int i = 0; i < 3; ++i)
        if (!v[i].is_rational()) return quadratic_field(v[i].d());
  return Field::rational();
}

Field field_of(const AnyLattice& l) {
  if (std::holds_alternative<IntervalLattice>(l)) return Field::interval();
  if (const auto* q = std::get_if<Lattice<Quadratic>>(&l))
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!q->basis()(i, j).is_rational()) return quadratic_field(q->basis()(i, j).d());
  return Field::rational();
}

Json coeffs(const Coeffs& c) { return Json::array({c[0], c[1], c[2]}); }

template <class S>
Json polytope_json(const Polytope<S>& p, const std::string& name, const Field& f) {
  Json vs = Json::array(), hs = Json::array();
  for (const auto& v : p.vertices) vs.push_back(vec(v));
  if (p.solid())
    for (const auto& h : p.facets) hs.push_back(Json{{"normal", vec(h.normal)}, {"offset", scalar(h.offset)}});
  Json j{{"name", name}, {"field", to_string(f)}, {"vertices", vs}};
  if (p.solid()) j["halfspaces"] = hs;
  return j;
}

Json polytope_json(const AnyPolytope& p, const std::string& name) {
  return std::visit([&](const auto& x) { return polytope_json(x, name, field_of(p)); }, p);
}

template <class S>
Json lattice_json(const Lattice<S>& l, const Field& f) {
  return Json{{"name", l.name()}, {"field", to_string(f)}, {"basis", basis_json(l.basis())}};
}

Json lattice_json(const AnyLattice& l) {
  if (const auto* i = std::get_if<IntervalLattice>(&l))
    return Json{{"name", i->name}, {"field", "interval"}, {"basis", basis_json(i->basis)}};
  return std::visit(
      [&](const auto& x) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, IntervalLattice>)
          return {};
        else
          return lattice_json(x, field_of(l));
      },
      l);
}

template <class S>
Json packing_json(const PackingCertificate<S>& c) {
  return Json{{"packing", c.ok},
              {"min_gauge", scalar(c.min_gauge)},
              {"witness", Json{{"coeffs", coeffs(c.witness.coeffs)}, {"point", vec(c.witness.x)}}},
              {"search_radius", scalar(c.search_radius)},
              {"examined", c.examined}};
}

template <class S>
Json cover_json(const CoverCertificate<S>& c, const Field& f) {
  Json res = Json::array();
  for (std::size_t i = 0; i < c.residual.size(); ++i)
    res.push_back(polytope_json(c.residual[i], "residual " + std::to_string(i), f));
  return Json{{"method", c.method},
              {"radius", scalar(c.radius)},
              {"covered", c.covered()},
              {"basis", basis_json(c.basis)},
              {"region", polytope_json(c.region, c.method == "zong" ? "zong region" : "fundamental cell", f)},
              {"translate_box", box_json(c.translate_box)},
              {"translates", points_json(c.translates)},
              {"residual_volume", scalar(volume(c.residual))},
              {"residual", res}};
}

template <class S>
Json gamma_json(const GammaBracket<S>& g, const Field& f) {
  return Json{{"lower", scalar(g.lower)},
              {"upper", scalar(g.upper)},
              {"exact", g.exact()},
              {"decimal", Json::array({to_double(g.lower), to_double(g.upper)})},
              {"deep_hole", vec(g.witness)},
              {"neighbors", points_json(g.neighbors)},
              {"neighbor_box", box_json(g.neighbor_box)},
              {"cover_tests", g.cover_tests},
              {"upper_cover", cover_json(g.upper_cover, f)}};
}

Json estimate_json(const GammaEstimate& g) {
  return Json{{"lower", scalar(g.lower)},
              {"upper", scalar(g.upper)},
              {"decimal", Json::array({to_double(g.lower), to_double(g.upper)})},
              {"converged", g.converged},
              {"boxes", g.boxes},
              {"center_evals", g.center_evals},
              {"witness", vec(g.witness)}};
}

Json interval_packing_json(const IntervalPacking& p) {
  const char* ok = p.ok == Tri::yes ? "yes" : p.ok == Tri::no ? "no" : "undecided";
  return Json{{"packing", ok}, {"min_gauge", scalar(p.min_gauge)}, {"witness", coeffs(p.witness)}};
}

Json certificate_json(const proof::InfeasibilityCertificate& c) {
  Json hist = Json::object();
  for (auto [id, n] : c.histogram) hist[std::to_string(id)] = n;
  Json surv = Json::array();
  for (const auto& a : c.survivors) surv.push_back(assignment_json(a));
  return Json{{"families", masks_json(c.families)},
              {"family_count", c.families.size()},
              {"constraint_ids", c.constraint_ids},
              {"dropped", c.dropped},
              {"tuples", c.tuples},
              {"histogram", hist},
              {"survivors", surv},
              {"infeasible", c.infeasible}};
}

Json theorem_json(const proof::TheoremReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages)
    stages.push_back(Json{{"id", s.id}, {"title", s.title}, {"ok", s.ok}, {"detail", s.detail}});
  Json j{{"verdict", r.verdict},
         {"equality", r.equality},
         {"lower_bound", scalar(r.lower_bound)},
         {"lower_ok", r.lower_ok},
         {"failed_stage", r.failed_stage},
         {"stages", stages}};

  Json mism = Json::array();
  for (const auto& m : r.tables.mismatches) mism.push_back(Json{{"what", m.what}, {"detail", m.detail}});
  Json uv = Json::array(), pv = Json::array();
  for (int f = 0; f < proof::kFaces; ++f) {
    uv.push_back(scalar(r.tables.union_volume[f]));
    pv.push_back(scalar(r.tables.pieces_volume[f]));
  }
  j["tables"] = Json{{"ok", r.tables.ok},         {"hulls_matched", r.tables.hulls_matched},
                     {"union_volume", uv},        {"pieces_volume", pv},
                     {"mismatches", mism}};

  Json bad = Json::array();
  for (const auto& row : r.cover.rows)
    if (!row.ok) bad.push_back(Json{{"face", row.face}, {"region", row.region}});
  j["cover"] = Json{{"ok", r.cover.ok}, {"identities", r.cover.rows.size()}, {"failing", bad}};

  Json certs = Json::array();
  for (const auto& c : r.derivation.certs)
    certs.push_back(Json{{"id", c.id},
                         {"method", c.method},
                         {"source", c.source},
                         {"ok", c.ok},
                         {"vacuous", c.vacuous},
                         {"failures", c.failures}});
  Json atoms = Json::array();
  for (const auto& a : r.derivation.extra_atoms) atoms.push_back(Json::array({a.a, a.offset, a.b}));
  Json extra = Json::array();
  for (const auto& c : r.derivation.extra_clauses) extra.push_back(c.str());
  j["conditions"] = Json{{"ok", r.derivation.ok},
                         {"clauses", certs},
                         {"diffs", r.derivation.diffs},
                         {"pair_atoms", r.derivation.pair_atoms},
                         {"extra_atoms", atoms},
                         {"extra_clauses", extra},
                         {"hole_difference_only", r.derivation.hole_difference_only},
                         {"hole_premises_ok", r.derivation.hole_premises_ok}};

  Json cats = Json::object();
  for (int c = 0; c < 10; ++c)
    if (c || !r.families.by_category[0].empty()) cats[std::to_string(c)] = masks_json(r.families.by_category[c]);
  j["families"] = Json{{"count", r.families.families.size()},
                       {"categories", cats},
                       {"matches_reference", r.families.matches_reference},
                       {"diffs", r.families.diffs}};

  j["search"] = certificate_json(r.certificate);
  if (r.fallback) {
    Json surv = Json::array();
    for (const auto& a : r.fallback->survivors) surv.push_back(assignment_json(a));
    j["fallback"] = Json{{"nodes", r.fallback->nodes},
                         {"leaves", r.fallback->leaves},
                         {"survivors", surv},
                         {"infeasible", r.fallback->infeasible}};
  }
  if (!r.lemma1.checks.empty()) {
    Json pts = Json::array();
    for (const auto& l : r.lemmas23) pts.push_back(lemma_json(l));
    j["lemmas"] = Json{{"centroid", lemma_json(r.lemma1)}, {"hole", pts}};
  }
  if (r.packing) j["packing"] = packing_json(*r.packing);
  if (r.upper) j["gamma"] = gamma_json(*r.upper, Field::rational());
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

#define LATCOV_IO_INSTANTIATE(S)                                                          \
  template Json polytope_json<S>(const Polytope<S>&, const std::string&, const Field&); \
  template Json lattice_json<S>(const Lattice<S>&, const Field&);                       \
  template Json packing_json<S>(const PackingCertificate<S>&);                          \
  template Json cover_json<S>(const CoverCertificate<S>&, const Field&);                \
  template Json gamma_json<S>(const GammaBracket<S>&, const Field&);

LATCOV_IO_INSTANTIATE(Rational)
LATCOV_IO_INSTANTIATE(Quadratic)

}  // namespace latcov::io
