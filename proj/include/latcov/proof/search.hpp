#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "latcov/proof/constraint.hpp"

namespace latcov::proof {

struct SearchOptions {
  int workers = 0;               // 0: LATCOV_WORKERS, else hardware concurrency
  std::vector<int> drop_ids;     // ablation: clauses left out of the search
  bool cross_face_only = true;   // skip clauses that read a single face
  bool intra_only = false;       // drop every cross-face clause (sanity runs)
  bool keep_trace = true;        // first violation of every tuple
};

/// Exhaustive search over one family per face label.
struct InfeasibilityCertificate {
  std::vector<Mask> families;
  std::vector<int> constraint_ids;             // clauses evaluated, ascending
  std::vector<int> dropped;
  std::uint64_t tuples = 0;
  std::map<int, std::uint64_t> histogram;      // first violated id -> tuples
  std::vector<std::uint8_t> first_violation;   // per tuple, 0 if none
  std::vector<Assignment> survivors;
  bool infeasible = false;

  /// Tuple index for families (i0, i1, i2, i3) on faces 0..3.
  std::uint64_t index(const std::array<int, 4>& i) const;
  std::array<int, 4> tuple(std::uint64_t index) const;
};

InfeasibilityCertificate search_infeasibility(const std::vector<Mask>& families,
                                              const std::vector<Constraint>& cs,
                                              const SearchOptions& opt = {});

/// Depth-first search over arbitrary per-face sets, checking each clause as
/// soon as every face it reads is assigned.
struct BacktrackResult {
  std::uint64_t nodes = 0;     // partial assignments visited
  std::uint64_t leaves = 0;    // complete assignments reached
  std::vector<Assignment> survivors;
  bool infeasible = false;
};

BacktrackResult search_backtracking(const std::vector<Mask>& sets, const std::vector<Constraint>& cs,
                                    const SearchOptions& opt = {});

/// First clause (lowest id, then lowest k) violated by a full assignment,
/// or 0.
int first_violation(const std::vector<Compiled>& cs, const Assignment& a);

/// Worker count: explicit, else LATCOV_WORKERS, else hardware threads.
unsigned resolve_workers(int requested);

}  // namespace latcov::proof
