#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latcov::cli {

enum Exit { kVerified = 0, kRefuted = 1, kUndecided = 2, kInputError = 3 };

struct RunConfig {
  std::string command;
  std::string catalog;
  int lattice_index = 0;
  std::string polytope_path, lattice_path;
  std::string field;          // override: rational, quadratic:d or interval
  std::string r, tol, eps;    // exact literals
  int workers = 0;            // 0: LATCOV_WORKERS, else hardware threads
  std::string out;
  std::string format = "text";

  std::vector<std::string> point;  // gauge
  std::vector<std::string> ids;    // reproduce
  std::string catalog_action;      // list or dump
  std::string name;                // catalog dump
  std::vector<int> drop;           // verify-theorem ablation
  bool no_fallback = false;
  bool no_lemmas = false;
};

/// Parses argv and runs one command. Reports go to `out` (or --out), errors
/// to `err`. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace latcov::cli
