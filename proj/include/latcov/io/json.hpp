#pragma once

#include <string>

#include <json.hpp>
#include "latcov/catalog/catalog.hpp"
#include "latcov/lattice/estimate.hpp"
#include "latcov/lattice/gamma.hpp"
#include "latcov/proof/theorem.hpp"

namespace latcov::io {

using Json = nlohmann::ordered_json;

// Documents ------------------------------------------------------------------

struct PolytopeDoc {
  std::string name;
  Field field;
  AnyPolytope body;
};

struct LatticeDoc {
  std::string name;
  Field field;
  AnyLattice lattice;
};

/// Throws ParseError for malformed documents, FieldMismatch for literals
/// outside the declared field and GeometryError for inconsistent vertex and
/// halfspace lists.
PolytopeDoc parse_polytope(const Json& doc);
LatticeDoc parse_lattice(const Json& doc);

PolytopeDoc read_polytope(const std::string& path);
LatticeDoc read_lattice(const std::string& path);
Json read_json(const std::string& path);

/// Smallest field holding every coordinate.
Field field_of(const AnyPolytope& p);
Field field_of(const AnyLattice& l);

// Values ---------------------------------------------------------------------

template <class S>
Json scalar(const S& x) {
  return format(x);
}

template <class S>
Json vec(const Vec3<S>& v) {
  return Json::array({scalar(v[0]), scalar(v[1]), scalar(v[2])});
}

Json coeffs(const Coeffs& c);

template <class S>
Json polytope_json(const Polytope<S>& p, const std::string& name, const Field& f);
Json polytope_json(const AnyPolytope& p, const std::string& name);

template <class S>
Json lattice_json(const Lattice<S>& l, const Field& f);
Json lattice_json(const AnyLattice& l);

template <class S>
Json packing_json(const PackingCertificate<S>& c);
template <class S>
Json cover_json(const CoverCertificate<S>& c, const Field& f);
template <class S>
Json gamma_json(const GammaBracket<S>& g, const Field& f);

Json estimate_json(const GammaEstimate& g);
Json interval_packing_json(const IntervalPacking& p);

Json certificate_json(const proof::InfeasibilityCertificate& c);
Json theorem_json(const proof::TheoremReport& r);

/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

}  // namespace latcov::io
