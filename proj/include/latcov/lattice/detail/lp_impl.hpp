#pragma once

#include <cstddef>

#include "latcov/arith/quadratic.hpp"
#include "latcov/lattice/lp.hpp"

namespace latcov {
namespace detail {

template <class S>
struct Tableau {
  std::vector<std::vector<S>> t;  // rows, last column is rhs
  std::vector<int> basis;
  std::vector<S> obj;  // reduced costs, last entry is -value
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    S p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      S f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[r][j]) != 0) t[i][j] -= f * t[r][j];
    }
    if (sgn(obj[c]) != 0) {
      S f = obj[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[r][j]) != 0) obj[j] -= f * t[r][j];
    }
    basis[r] = static_cast<int>(c);
  }

  // Returns false if unbounded. Columns >= limit never enter.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (sgn(obj[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = t.size();
      S best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        S ratio = t[i][cols] / t[i][enter];
        if (leave == t.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace detail

template <class S>
LpResult<S> simplex_max(const std::vector<std::vector<S>>& a, const std::vector<S>& b,
                        const std::vector<S>& c) {
  const std::size_t m = a.size(), n = c.size();
  std::size_t n_art = 0;
  for (const auto& bi : b)
    if (sgn(bi) < 0) ++n_art;
  detail::Tableau<S> tab;
  tab.cols = n + m + n_art;
  tab.t.assign(m, std::vector<S>(tab.cols + 1, S(0)));
  tab.basis.assign(m, 0);
  std::size_t art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = neg ? S(-a[i][j]) : a[i][j];
    tab.t[i][n + i] = S(neg ? -1 : 1);
    tab.t[i][tab.cols] = neg ? S(-b[i]) : b[i];
    if (neg) {
      tab.t[i][art] = S(1);
      tab.basis[i] = static_cast<int>(art++);
    } else {
      tab.basis[i] = static_cast<int>(n + i);
    }
  }
  LpResult<S> res;
  if (n_art > 0) {
    tab.obj.assign(tab.cols + 1, S(0));
    for (std::size_t j = n + m; j < tab.cols; ++j) tab.obj[j] = S(-1);
    for (std::size_t i = 0; i < m; ++i)
      if (static_cast<std::size_t>(tab.basis[i]) >= n + m)
        for (std::size_t j = 0; j <= tab.cols; ++j) tab.obj[j] += tab.t[i][j];
    tab.optimize(tab.cols);
    if (sgn(tab.obj[tab.cols]) != 0) {
      res.status = LpResult<S>::Status::infeasible;
      return res;
    }
    // drive zero-level artificials out of the basis
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
      if (static_cast<std::size_t>(tab.basis[i]) < n + m) continue;
      std::size_t j = 0;
      while (j < n + m && sgn(tab.t[i][j]) == 0) ++j;
      if (j < n + m) {
        tab.pivot(i, j);
      } else {
        tab.t.erase(tab.t.begin() + static_cast<long>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
        --i;
      }
    }
  }
  tab.obj.assign(tab.cols + 1, S(0));
  for (std::size_t j = 0; j < n; ++j) tab.obj[j] = c[j];
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    std::size_t bj = static_cast<std::size_t>(tab.basis[i]);
    if (bj < n && sgn(c[bj]) != 0) {
      S f = c[bj];
      for (std::size_t j = 0; j <= tab.cols; ++j) tab.obj[j] -= f * tab.t[i][j];
    }
  }
  if (!tab.optimize(n + m)) {
    res.status = LpResult<S>::Status::unbounded;
    return res;
  }
  res.status = LpResult<S>::Status::optimal;
  res.z.assign(n, S(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (static_cast<std::size_t>(tab.basis[i]) < n) res.z[tab.basis[i]] = tab.t[i][tab.cols];
  res.value = S(0);
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.z[j];
  return res;
}

}  // namespace latcov
