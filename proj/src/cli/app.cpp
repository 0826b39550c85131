#include "latcov/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "latcov/arith/errors.hpp"
#include "latcov/catalog/reproduce.hpp"
#include "latcov/geom/obj.hpp"
#include "latcov/io/json.hpp"
#include "latcov/proof/theorem.hpp"

namespace latcov::cli {

namespace {

using io::Json;

struct InputError : std::runtime_error {
  std::string reason;
  InputError(std::string r, const std::string& msg) : std::runtime_error(msg), reason(std::move(r)) {}
};

struct Outcome {
  int code = kVerified;
  std::string reason;
  Json report = Json::object();
  std::string text;
  std::optional<ObjMesh> mesh;
};

const char* status_name(int code) {
  switch (code) {
    case kVerified: return "verified";
    case kRefuted: return "refuted";
    case kUndecided: return "undecided";
    default: return "input-error";
  }
}

void usage(const std::string& msg) { throw InputError("usage", msg); }

/// Radii and tolerances: fractions and quadratic literals, no decimals.
const std::string& exact_literal(const std::string& text, const char* what) {
  if (text.find_first_of(".eE[]") != std::string::npos)
    throw InputError("bad-literal", std::string(what) + " '" + text +
                                        "' is not an exact literal; write it as p/q or a+b*sqrt(d)");
  return text;
}

std::int64_t literal_radicand(const std::string& text) {
  if (text.find("sqrt") == std::string::npos) return 0;
  return parse_quadratic(text).d();
}

std::int64_t radicand(const Field& f) { return f.kind == Field::Kind::quadratic ? f.d : 0; }

// Problem loading -----------------------------------------------------------

struct Problem {
  std::string name;
  AnyPolytope body;
  std::optional<AnyLattice> lattice;
};

CatalogEntry catalog_entry(const std::string& name) {
  try {
    return make(name);
  } catch (const std::out_of_range&) {
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown-name", "unknown catalog entry '" + name + "' (known: " + known + ")");
  }
}

Problem load(const RunConfig& c, bool need_lattice) {
  Problem p;
  if (!c.catalog.empty()) {
    if (!c.polytope_path.empty() || !c.lattice_path.empty())
      usage("--catalog cannot be combined with --polytope or --lattice");
    CatalogEntry e = catalog_entry(c.catalog);
    p.name = e.name;
    p.body = e.body;
    if (need_lattice) {
      if (e.lattices.empty()) throw InputError("no-lattice", "catalog entry '" + e.name + "' has no lattice");
      if (c.lattice_index >= int(e.lattices.size()))
        usage("catalog entry '" + e.name + "' has " + std::to_string(e.lattices.size()) + " lattice(s)");
      p.lattice = e.lattices[c.lattice_index];
    }
    return p;
  }
  if (c.polytope_path.empty()) usage("give --catalog NAME or --polytope FILE");
  Json d = io::read_json(c.polytope_path);
  if (d.is_object() && d.contains("polytope")) d = d["polytope"];
  auto pd = io::parse_polytope(d);
  p.name = pd.name;
  p.body = pd.body;
  if (need_lattice || !c.lattice_path.empty()) {
    if (c.lattice_path.empty()) usage("give --lattice FILE with --polytope");
    Json l = io::read_json(c.lattice_path);
    if (l.is_object() && l.contains("lattices")) {
      if (!l["lattices"].is_array() || c.lattice_index >= int(l["lattices"].size()))
        throw ParseError("lattice index " + std::to_string(c.lattice_index) + " not in " + c.lattice_path);
      l = l["lattices"][c.lattice_index];
    }
    p.lattice = io::parse_lattice(l).lattice;
  }
  return p;
}

template <class S>
struct Exact {
  std::string name;
  Polytope<S> body;
  std::optional<Lattice<S>> lattice;
  Field field;
};

struct Inexact {
  std::string name;
  AnyPolytope body;
  Mat3<Interval> basis;
};

using Resolved = std::variant<Exact<Rational>, Exact<Quadratic>, Inexact>;

Polytope<Quadratic> lift(const Polytope<Rational>& p) {
  std::vector<Vec3<Quadratic>> v;
  for (const auto& x : p.vertices) v.push_back(vec3<Quadratic>(x[0], x[1], x[2]));
  return hull(v);
}

Polytope<Quadratic> as_quadratic(const AnyPolytope& p) {
  if (const auto* r = std::get_if<Polytope<Rational>>(&p)) return lift(*r);
  return std::get<Polytope<Quadratic>>(p);
}

/// Common backend of body, lattice and the literals given on the command
/// line, after the --field override.
Resolved resolve(const Problem& p, std::int64_t literal_d, const std::string& override) {
  Field fb = io::field_of(p.body);
  Field fl = p.lattice ? io::field_of(*p.lattice) : Field::rational();
  bool interval = fl.kind == Field::Kind::interval;
  bool quad = std::holds_alternative<Polytope<Quadratic>>(p.body) ||
              (p.lattice && std::holds_alternative<Lattice<Quadratic>>(*p.lattice));
  std::int64_t d = 0;
  auto join = [&](std::int64_t x, const std::string& where) {
    if (!x) return;
    if (d && d != x)
      throw FieldMismatch("inconsistent fields: sqrt(" + std::to_string(d) + ") and sqrt(" + std::to_string(x) +
                          ") in the " + where);
    d = x;
  };
  join(radicand(fb), "body");
  join(radicand(fl), "lattice");
  join(literal_d, "command-line literals");
  if (!override.empty()) {
    Field fo = parse_field(override);
    if (fo.kind == Field::Kind::interval) {
      interval = true;
    } else if (interval) {
      throw FieldMismatch("an interval lattice cannot be evaluated in field " + override);
    } else if (fo.kind == Field::Kind::rational && (d || quad)) {
      throw FieldMismatch("field rational requested for quadratic data");
    } else if (fo.kind == Field::Kind::quadratic) {
      join(fo.d, "--field override");
      quad = true;
    }
  }
  if (interval) {
    Inexact x{p.name, p.body, Mat3<Interval>::Identity()};
    if (p.lattice)
      x.basis = std::visit(
          [](const auto& l) -> Mat3<Interval> {
            if constexpr (std::is_same_v<std::decay_t<decltype(l)>, IntervalLattice>)
              return l.basis;
            else
              return enclose_basis(l.basis());
          },
          *p.lattice);
    return x;
  }
  if (quad || d) {
    Exact<Quadratic> x{p.name, as_quadratic(p.body), {}, d ? Field::quadratic(d) : Field::rational()};
    if (p.lattice) {
      if (const auto* r = std::get_if<Lattice<Rational>>(&*p.lattice))
        x.lattice = latcov::lift(*r);
      else
        x.lattice = std::get<Lattice<Quadratic>>(*p.lattice);
    }
    return x;
  }
  Exact<Rational> x{p.name, std::get<Polytope<Rational>>(p.body), {}, Field::rational()};
  if (p.lattice) x.lattice = std::get<Lattice<Rational>>(*p.lattice);
  return x;
}

template <class S>
S parse_exact(const std::string& text, const char* what) {
  exact_literal(text, what);
  if constexpr (std::is_same_v<S, Rational>)
    return parse_rational(text);
  else
    return parse_quadratic(text);
}

template <class S>
S positive(const std::string& text, const char* what) {
  S x = parse_exact<S>(text, what);
  if (!(x > S(0))) throw InputError("bad-literal", std::string(what) + " must be positive");
  return x;
}

IntervalProblem interval_problem(const Inexact& x) {
  return std::visit([&](const auto& b) { return make_interval_problem(b, x.basis); }, x.body);
}

template <class S>
std::string vstr(const Vec3<S>& v) {
  return "(" + format(v[0]) + ", " + format(v[1]) + ", " + format(v[2]) + ")";
}

std::string dec(const Rational& x) {
  std::ostringstream os;
  os << std::setprecision(9) << to_double(x);
  return os.str();
}

template <class S>
std::string coeff_str(const LatticePoint<S>& p) {
  return "[" + std::to_string(p.coeffs[0]) + " " + std::to_string(p.coeffs[1]) + " " + std::to_string(p.coeffs[2]) +
         "]";
}

template <class S>
void add_cover_mesh(ObjMesh& mesh, const CoverCertificate<S>& c, const Polytope<S>& body) {
  add_to_mesh(mesh, c.region, "region");
  Polytope<S> rc = scale(body, c.radius);
  for (const auto& t : c.translates) add_to_mesh(mesh, translate(rc, t.x), "translate " + coeff_str(t));
  for (std::size_t i = 0; i < c.residual.size(); ++i) add_to_mesh(mesh, c.residual[i], "residual " + std::to_string(i));
}

// Commands -------------------------------------------------------------------

Outcome estimate(const Inexact& x, const RunConfig& cfg) {
  Outcome o;
  Rational tol = cfg.tol.empty() ? make_rational(1, 1000) : positive<Rational>(cfg.tol, "tolerance");
  auto p = interval_problem(x);
  auto pk = check_packing_interval(p);
  auto g = estimate_gamma(p, tol);
  o.report["body"] = x.name;
  o.report["tolerance"] = io::scalar(tol);
  o.report["packing"] = io::interval_packing_json(pk);
  o.report["estimate"] = io::estimate_json(g);
  std::ostringstream t;
  t << "gamma in [" << dec(g.lower) << ", " << dec(g.upper) << "]" << (g.converged ? "" : " (not converged)")
    << "\n  exact bounds " << to_string(g.lower) << " .. " << to_string(g.upper) << "\n  " << g.boxes
    << " boxes\n  packing " << (pk.ok == Tri::yes ? "yes" : pk.ok == Tri::no ? "no" : "undecided")
    << ", min gauge in [" << dec(pk.min_gauge.lo()) << ", " << dec(pk.min_gauge.hi()) << "]\n";
  o.text = t.str();
  if (pk.ok == Tri::no) {
    o.code = kRefuted;
    o.reason = "not-a-packing";
  } else if (!g.converged) {
    o.code = kUndecided;
    o.reason = "not-converged";
  }
  return o;
}

Outcome cmd_gauge(const RunConfig& cfg) {
  if (cfg.point.size() != 3) usage("gauge needs a point: three literals");
  std::int64_t d = 0;
  for (const auto& s : cfg.point) d = std::max(d, literal_radicand(s));
  Resolved r = resolve(load(cfg, false), d, cfg.field);
  if (std::holds_alternative<Inexact>(r)) usage("gauge needs an exact body");
  return std::visit(
      [&](const auto& x) -> Outcome {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Inexact>) {
          return {};
        } else {
          using S = std::decay_t<decltype(x.body.vertices[0][0])>;
          Vec3<S> v = vec3<S>(parse_exact<S>(cfg.point[0], "coordinate"), parse_exact<S>(cfg.point[1], "coordinate"),
                              parse_exact<S>(cfg.point[2], "coordinate"));
          S g = gauge(x.body, v);
          Outcome o;
          o.report["body"] = x.name;
          o.report["point"] = io::vec(v);
          o.report["gauge"] = io::scalar(g);
          o.text = format(g) + "\n";
          return o;
        }
      },
      r);
}

Outcome cmd_packing(const RunConfig& cfg) {
  Resolved r = resolve(load(cfg, true), 0, cfg.field);
  if (const auto* x = std::get_if<Inexact>(&r)) {
    Outcome o;
    auto pk = check_packing_interval(interval_problem(*x));
    o.report["body"] = x->name;
    o.report["packing"] = io::interval_packing_json(pk);
    o.text = std::string("packing ") + (pk.ok == Tri::yes ? "yes" : pk.ok == Tri::no ? "no" : "undecided") +
             ", min gauge in [" + dec(pk.min_gauge.lo()) + ", " + dec(pk.min_gauge.hi()) + "]\n";
    if (pk.ok == Tri::no) o.code = kRefuted, o.reason = "overlap";
    if (pk.ok == Tri::undecided) o.code = kUndecided, o.reason = "enclosure-straddles-2";
    return o;
  }
  return std::visit(
      [&](const auto& x) -> Outcome {
        Outcome o;
        if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, Inexact>) {
          auto pk = check_packing(x.body, *x.lattice);
          o.report["body"] = x.name;
          o.report["lattice"] = x.lattice->name();
          o.report["packing"] = io::packing_json(pk);
          o.text = std::string(pk.ok ? "packing" : "not a packing") + ": min gauge " + format(pk.min_gauge) +
                   " at " + vstr(pk.witness.x) + " = " + coeff_str(pk.witness) + "\n";
          if (!pk.ok) o.code = kRefuted, o.reason = "overlap";
        }
        return o;
      },
      r);
}

Outcome cmd_covering(const RunConfig& cfg) {
  if (cfg.r.empty()) usage("verify-covering needs --r");
  exact_literal(cfg.r, "radius");
  if (!cfg.eps.empty()) exact_literal(cfg.eps, "inflation");
  Resolved r = resolve(load(cfg, true), literal_radicand(cfg.r), cfg.field);
  return std::visit(
      [&](const auto& x) -> Outcome {
        Outcome o;
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Inexact>) {
          Quadratic rad = positive<Quadratic>(cfg.r, "radius");
          if (!cfg.eps.empty()) rad = rad * Quadratic(1 + parse_rational(cfg.eps));
          Outcome e = estimate(x, cfg);
          Rational up = parse_rational(e.report["estimate"]["upper"].get<std::string>());
          Rational lo = parse_rational(e.report["estimate"]["lower"].get<std::string>());
          o.report = e.report;
          o.report["radius"] = io::scalar(rad);
          if (Quadratic(up) <= rad) {
            o.text = "covered at r = " + format(rad) + " (gamma <= " + dec(up) + ")\n";
          } else if (Quadratic(lo) > rad) {
            o.code = kRefuted, o.reason = "uncovered";
            o.text = "not covered at r = " + format(rad) + " (gamma >= " + dec(lo) + ")\n";
          } else {
            o.code = kUndecided, o.reason = "radius-inside-bracket";
            o.text = "undecided at r = " + format(rad) + ": gamma in [" + dec(lo) + ", " + dec(up) + "]\n";
          }
        } else {
          using S = std::decay_t<decltype(x.body.vertices[0][0])>;
          S rad = positive<S>(cfg.r, "radius");
          if (!cfg.eps.empty()) {
            Rational eps = parse_exact<Rational>(cfg.eps, "inflation");
            if (eps < 0) throw InputError("bad-literal", "inflation must be nonnegative");
            rad = rad * S(1 + eps);
          }
          int tried = 0;
          auto cert = zong_cover_search(x.body, *x.lattice, rad, &tried);
          if (!cert.covered()) cert = fundamental_cover_check(x.body, *x.lattice, rad);
          o.report["body"] = x.name;
          o.report["lattice"] = x.lattice->name();
          o.report["cover"] = io::cover_json(cert, x.field);
          if (cert.covered()) {
            o.text = "covered at r = " + format(rad) + " (" + cert.method + ", " +
                     std::to_string(cert.translates.size()) + " translates)\n";
          } else {
            o.code = kRefuted, o.reason = "uncovered";
            o.text = "not covered at r = " + format(rad) + ": residual of volume " + format(volume(cert.residual)) +
                     " in " + std::to_string(cert.residual.size()) + " cells of the fundamental cell\n";
          }
          if (cfg.format == "obj") {
            o.mesh.emplace();
            add_cover_mesh(*o.mesh, cert, x.body);
          }
        }
        return o;
      },
      r);
}

Outcome cmd_gamma(const RunConfig& cfg) {
  if (!cfg.tol.empty()) exact_literal(cfg.tol, "tolerance");
  Resolved r = resolve(load(cfg, true), 0, cfg.field);
  return std::visit(
      [&](const auto& x) -> Outcome {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Inexact>) {
          return estimate(x, cfg);
        } else {
          using S = std::decay_t<decltype(x.body.vertices[0][0])>;
          S tol = cfg.tol.empty() ? S(make_rational(1, 1000000)) : positive<S>(cfg.tol, "tolerance");
          Outcome o;
          auto pk = check_packing(x.body, *x.lattice);
          o.report["body"] = x.name;
          o.report["lattice"] = x.lattice->name();
          o.report["packing"] = io::packing_json(pk);
          if (!pk.ok) {
            o.code = kRefuted, o.reason = "not-a-packing";
            o.text = "not a packing: min gauge " + format(pk.min_gauge) + " at " + vstr(pk.witness.x) + "\n";
            return o;
          }
          auto g = gamma_bracket(x.body, *x.lattice, tol);
          o.report["gamma"] = io::gamma_json(g, x.field);
          std::ostringstream t;
          if (g.exact())
            t << format(g.upper) << "\n";
          else
            t << "[" << format(g.lower) << ", " << format(g.upper) << "]\n";
          t << "  packing: min gauge " << format(pk.min_gauge) << " at " << vstr(pk.witness.x) << "\n"
            << "  upper: " << g.upper_cover.method << " cover at " << format(g.upper_cover.radius) << " with "
            << g.upper_cover.translates.size() << " translates, no residual\n"
            << "  lower: " << vstr(g.witness) << " has gauge distance " << format(g.lower) << " to the "
            << g.neighbors.size() << " nearest lattice points\n";
          o.text = t.str();
          if (!g.exact()) o.code = kUndecided, o.reason = "bracket";
          return o;
        }
      },
      r);
}

Outcome cmd_estimate(const RunConfig& cfg) {
  if (!cfg.tol.empty()) exact_literal(cfg.tol, "tolerance");
  Resolved r = resolve(load(cfg, true), 0, "interval");
  return estimate(std::get<Inexact>(r), cfg);
}

Outcome cmd_theorem(const RunConfig& cfg) {
  proof::TheoremOptions opt;
  opt.search.workers = cfg.workers;
  opt.search.drop_ids = cfg.drop;
  opt.fallback = !cfg.no_fallback;
  opt.lemmas = !cfg.no_lemmas;
  auto r = proof::verify_theorem(opt);
  Outcome o;
  o.report = io::theorem_json(r);
  std::ostringstream t;
  for (const auto& s : r.stages)
    t << (s.ok ? "[ok]   " : "[FAIL] ") << std::left << std::setw(11) << s.id << s.title << "\n         " << s.detail
      << " (" << std::fixed << std::setprecision(2) << s.seconds << " s)\n";
  if (!r.certificate.histogram.empty()) {
    t << "first violated condition per tuple:";
    int col = 0;
    for (auto [id, n] : r.certificate.histogram) t << (col++ % 6 ? "  " : "\n  ") << "(" << id << ") " << n;
    t << "\n";
  }
  t << "verdict: " << r.verdict << "\n";
  o.text = t.str();
  if (!r.ok()) {
    o.code = kRefuted;
    o.reason = r.failed_stage.empty() ? "bounds-differ" : "stage-" + r.failed_stage;
  }
  return o;
}

Outcome cmd_reproduce(const RunConfig& cfg) {
  std::vector<std::string> ids;
  for (const auto& id : cfg.ids) {
    if (id == "all")
      ids.insert(ids.end(), reproduction_ids().begin(), reproduction_ids().end());
    else if (std::find(reproduction_ids().begin(), reproduction_ids().end(), id) == reproduction_ids().end())
      throw InputError("unknown-name", "unknown reproduction id '" + id + "' (minkowski, ex1 ... ex6, all)");
    else
      ids.push_back(id);
  }
  if (ids.empty()) usage("reproduce needs an id");
  Outcome o;
  Json all = Json::array();
  bool refuted = false, undecided = false;
  for (const auto& id : ids) {
    Reproduction r = reproduce(id);
    all.push_back(reproduction_json(r));
    o.text += reproduction_text(r);
    refuted = refuted || r.verdict == Verdict::refuted;
    undecided = undecided || r.verdict == Verdict::undecided;
  }
  o.report["reproductions"] = all;
  if (refuted)
    o.code = kRefuted, o.reason = "discrepancy";
  else if (undecided)
    o.code = kUndecided, o.reason = "numeric-only";
  return o;
}

Outcome cmd_catalog(const RunConfig& cfg) {
  Outcome o;
  if (cfg.catalog_action == "list") {
    Json list = Json::array();
    std::ostringstream t;
    for (const auto& n : catalog_names()) {
      CatalogEntry e = make(n);
      Json ls = Json::array();
      std::string lt;
      for (const auto& l : e.lattices) {
        ls.push_back(lattice_name(l));
        lt += (lt.empty() ? "" : ", ") + lattice_name(l);
      }
      list.push_back(Json{{"name", n},
                          {"solid", e.solid},
                          {"field", to_string(e.field)},
                          {"vertices", polytope_vertices(e.body)},
                          {"facets", polytope_facets(e.body)},
                          {"lattices", ls}});
      t << std::left << std::setw(12) << n << std::setw(26) << e.solid << std::setw(13) << to_string(e.field)
        << std::setw(4) << polytope_vertices(e.body) << std::setw(4) << polytope_facets(e.body) << lt << "\n";
    }
    o.report["entries"] = list;
    o.text = t.str();
    return o;
  }
  CatalogEntry e = catalog_entry(cfg.name);
  Json ls = Json::array();
  for (const auto& l : e.lattices) ls.push_back(io::lattice_json(l));
  o.report["polytope"] = io::polytope_json(e.body, e.name);
  o.report["lattices"] = ls;
  return o;
}

Outcome cmd_export(const RunConfig& cfg) {
  Problem p = load(cfg, false);
  std::int64_t d = cfg.r.empty() ? 0 : literal_radicand(exact_literal(cfg.r, "radius"));
  Resolved r = resolve(p, d, cfg.field);
  if (std::holds_alternative<Inexact>(r)) usage("export-obj needs exact data");
  return std::visit(
      [&](const auto& x) -> Outcome {
        Outcome o;
        if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, Inexact>) {
          using S = std::decay_t<decltype(x.body.vertices[0][0])>;
          S rad = cfg.r.empty() ? S(1) : positive<S>(cfg.r, "radius");
          o.mesh.emplace();
          if (x.lattice) {
            auto cert = zong_cover_search(x.body, *x.lattice, rad);
            if (!cert.covered()) cert = fundamental_cover_check(x.body, *x.lattice, rad);
            add_cover_mesh(*o.mesh, cert, x.body);
          } else {
            add_to_mesh(*o.mesh, scale(x.body, rad), x.name);
          }
        }
        return o;
      },
      r);
}

Outcome execute(const RunConfig& cfg) {
  if (cfg.command == "gauge") return cmd_gauge(cfg);
  if (cfg.command == "verify-packing") return cmd_packing(cfg);
  if (cfg.command == "verify-covering") return cmd_covering(cfg);
  if (cfg.command == "gamma") return cmd_gamma(cfg);
  if (cfg.command == "estimate-gamma") return cmd_estimate(cfg);
  if (cfg.command == "verify-theorem") return cmd_theorem(cfg);
  if (cfg.command == "reproduce") return cmd_reproduce(cfg);
  if (cfg.command == "catalog") return cmd_catalog(cfg);
  if (cfg.command == "export-obj") return cmd_export(cfg);
  usage("unknown command '" + cfg.command + "'");
  return {};
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InputError("io-error", "cannot write " + cfg.out);
  f << body;
}

std::string render(const RunConfig& cfg, Outcome& o) {
  bool dump = cfg.command == "catalog" && cfg.catalog_action == "dump";
  if (cfg.command == "export-obj" || cfg.format == "obj") {
    if (!o.mesh) usage("obj output is only available from export-obj and verify-covering");
    std::ostringstream os;
    write_obj(os, *o.mesh);
    return os.str();
  }
  if (dump) return io::dump(o.report);
  if (cfg.format == "json") {
    Json j{{"command", cfg.command}, {"status", status_name(o.code)}};
    if (o.code != kVerified) j["reason"] = o.reason;
    for (auto& [k, v] : o.report.items()) j[k] = v;
    return io::dump(j);
  }
  std::string t = o.text;
  if (o.code != kVerified) t += std::string(status_name(o.code)) + " [" + o.reason + "]\n";
  return t;
}

int fail(const RunConfig& cfg, const std::string& reason, const std::string& msg, std::ostream& out,
         std::ostream& err) {
  err << "latcov: " << reason << ": " << msg << "\n";
  if (cfg.format == "json") {
    Json j{{"command", cfg.command}, {"status", "input-error"}, {"reason", reason}, {"message", msg}};
    try {
      emit(cfg, io::dump(j), out);
    } catch (const InputError&) {
    }
  }
  return kInputError;
}

}  // namespace

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.workers < 0) throw InputError("usage", "worker count must be at least 1");
    Outcome o = execute(cfg);
    emit(cfg, render(cfg, o), out);
    return o.code;
  } catch (const InputError& e) {
    return fail(cfg, e.reason, e.what(), out, err);
  } catch (const FieldMismatch& e) {
    return fail(cfg, "field-mismatch", e.what(), out, err);
  } catch (const IoError& e) {
    return fail(cfg, "io-error", e.what(), out, err);
  } catch (const ParseError& e) {
    return fail(cfg, "parse-error", e.what(), out, err);
  } catch (const GeometryError& e) {
    return fail(cfg, "geometry-error", e.what(), out, err);
  } catch (const std::exception& e) {
    return fail(cfg, "internal-error", e.what(), out, err);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of lattice packing and covering constants", "latcov"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto body = [&](CLI::App* s) {
    s->add_option("--catalog", cfg.catalog, "Catalog entry (see 'catalog list')");
    s->add_option("--polytope", cfg.polytope_path, "Polytope JSON file");
    s->add_option("--field", cfg.field, "Arithmetic override: rational, quadratic:d or interval");
  };
  auto lattice = [&](CLI::App* s) {
    s->add_option("--lattice", cfg.lattice_path, "Lattice JSON file");
    s->add_option("--lattice-index", cfg.lattice_index, "Which lattice of a catalog entry or dump")
        ->check(CLI::NonNegativeNumber);
  };
  auto output = [&](CLI::App* s, bool obj) {
    s->add_option("--out", cfg.out, "Write the report here instead of stdout");
    auto* f = s->add_option("--format", cfg.format, "Report format");
    if (obj)
      f->check(CLI::IsMember({"json", "text", "obj"}));
    else
      f->check(CLI::IsMember({"json", "text"}));
  };
  auto tol = [&](CLI::App* s) { s->add_option("--tol", cfg.tol, "Bracket width, exact literal"); };

  auto* g = app.add_subcommand("gauge", "Gauge of a point with respect to the body");
  body(g);
  output(g, false);
  g->add_option("point", cfg.point, "Three coordinates")->expected(3)->required();

  auto* vp = app.add_subcommand("verify-packing", "Packing check: every nonzero lattice vector has gauge >= 2");
  body(vp);
  lattice(vp);
  output(vp, false);

  auto* vc = app.add_subcommand("verify-covering", "Covering check of rC + L");
  body(vc);
  lattice(vc);
  output(vc, true);
  vc->add_option("--r", cfg.r, "Radius, exact literal")->required();
  vc->add_option("--eps", cfg.eps, "Inflate the radius by 1 + eps");
  tol(vc);

  auto* gm = app.add_subcommand("gamma", "Exact covering radius with packing and cover certificates");
  body(gm);
  lattice(gm);
  output(gm, false);
  tol(gm);

  auto* eg = app.add_subcommand("estimate-gamma", "Certified interval bracket of the covering radius");
  body(eg);
  lattice(eg);
  output(eg, false);
  tol(eg);

  auto* vt = app.add_subcommand("verify-theorem", "Lower bound by exhaustion and the matching upper bound");
  output(vt, false);
  vt->add_option("--workers", cfg.workers, "Search threads (default LATCOV_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  vt->add_option("--drop", cfg.drop, "Leave a condition out of the search (ablation)");
  vt->add_flag("--no-fallback", cfg.no_fallback, "Skip the search over all feasible per-face sets");
  vt->add_flag("--no-lemmas", cfg.no_lemmas, "Skip the lemma checks");

  auto* rp = app.add_subcommand("reproduce", "Re-verify a catalog example");
  output(rp, false);
  rp->add_option("id", cfg.ids, "minkowski, ex1 ... ex6 or all")->required();

  auto* ct = app.add_subcommand("catalog", "List or dump catalog entries");
  ct->require_subcommand(1);
  auto* cl = ct->add_subcommand("list", "Names, solids and lattices");
  output(cl, false);
  auto* cd = ct->add_subcommand("dump", "Polytope and lattice JSON of one entry");
  cd->add_option("name", cfg.name, "Entry name")->required();
  cd->add_option("--out", cfg.out, "Write here instead of stdout");

  auto* ex = app.add_subcommand("export-obj", "Wavefront OBJ of the body, or of a cover with --lattice");
  body(ex);
  lattice(ex);
  ex->add_option("--r", cfg.r, "Scale, exact literal");
  ex->add_option("--out", cfg.out, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    for (auto* s : app.get_subcommands())
      if (s->parsed()) cfg.command = s->get_name();
    return fail(cfg, "usage", e.what(), out, err);
  }

  for (auto* s : app.get_subcommands()) cfg.command = s->get_name();
  if (cfg.command == "catalog") cfg.catalog_action = cl->parsed() ? "list" : "dump";
  return dispatch(cfg, out, err);
}

}  // namespace latcov::cli
