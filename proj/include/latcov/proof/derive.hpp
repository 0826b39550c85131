#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "latcov/proof/checks.hpp"
#include "latcov/proof/constraint.hpp"
#include "latcov/proof/tables.hpp"

namespace latcov::proof {

/// Exclusion of piece `b` on face k + offset by piece `a` on face k, in
/// canonical orientation (a, offset, b) <= (b, -offset, a).
struct Atom {
  int a = 0, offset = 0, b = 0;

  Atom canonical() const;
  auto operator<=>(const Atom&) const = default;
};

/// How one clause was recertified.
struct ClauseCert {
  int id = 0;
  std::string method;     // coverage, pair, hole, chained, cardinality, disjunctive
  std::string source;     // base clause and symmetry for the conditioned ones
  bool ok = false;
  bool vacuous = false;
  std::vector<std::string> failures;
};

struct Derivation {
  std::vector<Constraint> constraints;  // recertified clauses, coverage first
  std::vector<ClauseCert> certs;
  std::vector<std::string> diffs;       // transcription entries that did not recertify
  std::vector<Atom> extra_atoms;        // distance exclusions the transcription omits
  std::vector<Constraint> extra_clauses;  // symmetric images of conditioned clauses not listed
  int pair_atoms = 0;                   // distance exclusions found by the sweep
  bool hole_difference_only = false;    // hole clauses hold without the origin step
  bool hole_premises_ok = false;        // the auxiliary hulls behind them check out
  bool ok = true;
};

struct DeriveOptions {
  int threads = 0;  // 0: hardware concurrency
};

/// Recertify every transcribed clause from the tables at all four k, and
/// sweep for exclusions the transcription does not list.
Derivation derive_constraints(const FacePieceTable& t, const DeriveOptions& opt = {});

struct DerivationError : std::runtime_error {
  Derivation derivation;
  explicit DerivationError(Derivation d);
};

/// The recertified constraint set; throws DerivationError on any diff.
std::vector<Constraint> derive_all_constraints(const FacePieceTable& t);

/// Image of a clause under a symmetry fixing face 0.
Constraint image(const LabelAction& act, const Constraint& c);

/// Both placements of piece m on face label `label`.
Target placements(const FacePieceTable& t, int label, int m);

}  // namespace latcov::proof
