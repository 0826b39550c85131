#pragma once

#include <vector>

namespace latcov {

template <class S>
struct LpResult {
  enum class Status { optimal, infeasible, unbounded } status = Status::infeasible;
  std::vector<S> z;
  S value;
};

/// max c.z subject to A z <= b, z >= 0. Exact two-phase tableau simplex with
/// Bland's rule, so it terminates on degenerate problems.
template <class S>
LpResult<S> simplex_max(const std::vector<std::vector<S>>& a, const std::vector<S>& b,
                        const std::vector<S>& c);

}  // namespace latcov
