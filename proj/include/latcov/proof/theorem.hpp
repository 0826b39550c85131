#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcov/lattice/gamma.hpp"
#include "latcov/proof/derive.hpp"
#include "latcov/proof/families.hpp"
#include "latcov/proof/lemmas.hpp"
#include "latcov/proof/search.hpp"
#include "latcov/proof/tables.hpp"

namespace latcov::proof {

struct TheoremOptions {
  SearchOptions search;
  bool fallback = true;                 // also search all feasible per-face sets
  Rational upper_scale = Rational(1);   // scale applied to the lattice of the upper stage
  bool lemmas = true;
};

struct Stage {
  std::string id;
  std::string title;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct TheoremReport {
  std::vector<Stage> stages;
  std::string failed_stage;             // empty if every stage passed

  TableReport tables;
  CoverReport cover;
  Derivation derivation;
  FamilyReport families;
  InfeasibilityCertificate certificate;
  std::optional<BacktrackResult> fallback;
  LemmaReport lemma1;
  std::vector<LemmaReport> lemmas23;
  std::optional<PackingCertificate<Rational>> packing;
  std::optional<GammaBracket<Rational>> upper;

  Rational lower_bound = make_rational(7, 6);
  bool lower_ok = false;
  bool equality = false;
  std::string verdict;

  bool ok() const { return failed_stage.empty() && equality; }
};

/// Lower bound by exhaustion over per-face families, upper bound by the
/// covering radius of O with the Minkowski lattice, and the two compared.
/// Stops at the first failing stage.
TheoremReport verify_theorem(const TheoremOptions& opt = {});

}  // namespace latcov::proof
