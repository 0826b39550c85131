#pragma once

#include <string>
#include <vector>

#include "latcov/io/json.hpp"

namespace latcov {

enum class Verdict { verified, refuted, undecided };

const char* to_string(Verdict v);

/// One body/lattice pair checked against its stated constant.
struct ClaimResult {
  std::string body, lattice;
  std::string claim;   // the constant, as a literal
  std::string mode;    // exact, interval or numeric-only
  Verdict verdict = Verdict::undecided;
  std::vector<std::string> findings;      // one line per check, "ok"/"FAIL" prefixed
  std::vector<std::string> discrepancies;
  io::Json certificates = io::Json::object();
};

struct Reproduction {
  std::string id, title;
  Verdict verdict = Verdict::undecided;
  std::vector<ClaimResult> claims;
  std::vector<std::string> caveats;
};

/// minkowski, ex1 ... ex6.
const std::vector<std::string>& reproduction_ids();

/// Re-verifies the claims of one entry. Failed claims come back as
/// discrepancies with their certificates; unknown ids throw std::out_of_range.
Reproduction reproduce(const std::string& id);

io::Json reproduction_json(const Reproduction& r);
std::string reproduction_text(const Reproduction& r);

Lattice<Quadratic> lift(const Lattice<Rational>& l);

}  // namespace latcov
