#include "latcov/proof/reference.hpp"

#include <map>
#include <stdexcept>

namespace latcov::proof::reference {

namespace {

using Pts = std::vector<V3>;
using Kind = Constraint::Kind;

Pts pts(std::initializer_list<std::array<long, 3>> l) {
  Pts out;
  for (const auto& a : l) out.push_back(thirds(a[0], a[1], a[2]));
  return out;
}

Pts shifted(Pts p, long a, long b, long c) {
  V3 s = thirds(a, b, c);
  for (auto& x : p) x += s;
  return p;
}

Constraint cover(int id, std::vector<int> s) {
  return {id, Kind::coverage, {}, {{0, std::move(s)}}, {}};
}

Constraint excl(int id, std::vector<Group> pre, std::vector<Sel> out) {
  return {id, Kind::exclusion, std::move(pre), std::move(out), {}};
}

Constraint card(int id, std::vector<Group> pre, std::vector<int> s) {
  return {id, Kind::cardinality, std::move(pre), {{0, std::move(s)}}, {}};
}

Constraint disj(int id, std::vector<Group> pre, std::vector<Sel> a, std::vector<Sel> b) {
  return {id, Kind::disjunction, std::move(pre), std::move(a), std::move(b)};
}

Group here(std::vector<int> s) { return {{0, std::move(s)}}; }

}  // namespace

Pts piece_hull(int m) {
  static const std::map<int, Pts> base = {
      {1, pts({{0, 0, 6}, {0, 1, 5}, {1, 1, 4}, {1, 0, 5}, {1, 1, 6}, {1, 2, 5}, {2, 2, 4}, {2, 1, 5}})},
      {4, pts({{1, 1, 4}, {1, 2, 3}, {2, 1, 3}, {2, 2, 2}, {2, 2, 4}, {2, 3, 3}, {3, 2, 3}})},
      {5, pts({{0, 2, 4}, {1, 3, 4}, {1, 2, 3}, {2, 3, 3}, {0, 4, 2}, {1, 4, 3}, {1, 3, 2}})},
      {6, pts({{1, 2, 3}, {2, 3, 3}, {1, 3, 2}, {2, 2, 2}})},
      {7, pts({{2, 0, 4}, {3, 1, 4}, {2, 1, 3}, {3, 2, 3}, {4, 1, 3}, {3, 1, 2}, {4, 0, 2}})},
      {8, pts({{2, 1, 3}, {3, 2, 3}, {3, 1, 2}, {2, 2, 2}})},
      {9, pts({{0, 6, 0}, {1, 5, 0}, {1, 6, 1}, {2, 5, 1}, {0, 5, 1}, {1, 4, 1}, {1, 5, 2}, {2, 4, 2}})},
      {12, pts({{1, 3, 2}, {2, 2, 2}, {1, 4, 1}, {2, 3, 1}, {2, 3, 3}, {2, 4, 2}, {3, 3, 2}})},
      {13, pts({{2, 3, 1}, {3, 2, 1}, {2, 4, 0}, {4, 2, 0}, {3, 3, 2}, {3, 4, 1}, {4, 3, 1}})},
      {14, pts({{2, 2, 2}, {2, 3, 1}, {3, 2, 1}, {3, 3, 2}})},
      {15, pts({{4, 1, 1}, {5, 0, 1}, {5, 1, 0}, {6, 0, 0}, {4, 2, 2}, {5, 1, 2}, {5, 2, 1}, {6, 1, 1}})},
      {18, pts({{2, 2, 2}, {3, 1, 2}, {3, 2, 1}, {4, 1, 1}, {3, 2, 3}, {3, 3, 2}, {4, 2, 2}})},
      {19, pts({{2, 2, 2}, {2, 3, 3}, {3, 2, 3}, {3, 3, 2}})},
  };
  switch (m) {
    case 2: return shifted(base.at(1), 0, 1, -1);
    case 3: return shifted(base.at(1), 1, 0, -1);
    case 10: return shifted(base.at(9), 0, -1, 1);
    case 11: return shifted(base.at(9), 1, -1, 0);
    case 16: return shifted(base.at(15), -1, 0, 1);
    case 17: return shifted(base.at(15), -1, 1, 0);
    default: return base.at(m);
  }
}

Pts region_hull() { return pts({{0, 0, 6}, {0, 4, 2}, {4, 0, 2}, {1, 1, 6}, {1, 4, 3}, {4, 1, 3}}); }

Pts region_triangle() { return pts({{0, 0, 6}, {0, 4, 2}, {4, 0, 2}}); }

const std::vector<int>& piece_class_set(int j) {
  static const std::vector<std::vector<int>> q = {
      {}, {1, 9, 15}, {2, 3, 10, 11, 16, 17}, {5, 7, 13, 19}, {4, 12, 18}, {6, 8, 14}};
  return q.at(j);
}

Pts aux_hull(const std::string& name) {
  static const std::map<std::string, Pts> h = {
      // near piece 5, swallowed by 2O + x for x in piece 3
      {"near5", pts({{1, 2, 3}, {0, 2, 4}, {0, 3, 3}, {1, 3, 2}, {1, 3, 4}, {1, 4, 3}, {2, 3, 3}})},
      {"part7", pts({{3, 1, 2}, {2, 0, 4}, {3, 0, 3}, {2, 1, 3}, {3, 1, 4}, {4, 1, 3}, {3, 2, 3}})},
      {"in16", pts({{3, 1, 2}, {4, 0, 2}, {4, 1, 1}, {3, 2, 3}, {4, 1, 3}, {4, 2, 2}, {5, 1, 2}})},
      {"in4", pts({{1, 2, 3}, {2, 1, 3}, {2, 2, 2}, {2, 2, 4}, {2, 3, 3}, {3, 2, 3}})},
      {"low", pts({{0, 1, 5}, {1, 0, 5}, {0, 2, 4}, {2, 0, 4}, {1, 2, 3},
                   {2, 1, 3}, {1, 2, 5}, {2, 1, 5}, {1, 3, 4}, {3, 1, 4}})},
      {"side", pts({{1, 5, 0}, {0, 5, 1}, {2, 4, 0}, {0, 4, 2}, {2, 3, 1},
                    {1, 3, 2}, {2, 5, 1}, {1, 5, 2}, {3, 4, 1}, {1, 4, 3}})},
      {"cap4", pts({{1, 1, 4}, {1, 2, 3}, {2, 1, 3}, {2, 2, 4}})},
      {"cap17", pts({{4, 1, 1}, {5, 2, 1}, {4, 2, 0}, {5, 1, 0}})},
  };
  auto it = h.find(name);
  if (it == h.end()) throw std::out_of_range("unknown auxiliary hull: " + name);
  return it->second;
}

const std::vector<Constraint>& conditions() {
  static const std::vector<Constraint> cs = {
      cover(6, {1, 2, 3, 4, 5, 6, 7, 8}),
      cover(7, {2, 4, 5, 6, 8, 10, 12, 14, 18, 19}),
      cover(8, {3, 4, 6, 7, 8, 12, 14, 16, 18, 19}),
      cover(9, {5, 6, 9, 10, 11, 12, 13, 14}),
      cover(10, {4, 6, 8, 11, 12, 13, 14, 17, 18, 19}),
      cover(11, {7, 8, 13, 14, 15, 16, 17, 18}),

      excl(12, {here({2})}, {{0, {3, 4, 5, 6, 8}}}),
      excl(13, {here({3})}, {{0, {2, 4, 6, 7, 8}}}),
      excl(14, {here({10})}, {{0, {5, 6, 11, 12, 14}}}),
      excl(15, {here({11})}, {{0, {6, 10, 12, 13, 14}}}),
      excl(16, {here({16})}, {{0, {7, 8, 14, 17, 18}}}),
      excl(17, {here({17})}, {{0, {8, 13, 14, 16, 18}}}),
      excl(18, {here({4})}, {{0, {2, 3, 5, 6, 7, 8, 12, 14, 18, 19}}}),
      excl(19, {here({12})}, {{0, {4, 5, 6, 8, 10, 11, 13, 14, 18, 19}}}),
      excl(20, {here({18})}, {{0, {4, 6, 7, 8, 12, 13, 14, 16, 17, 19}}}),
      excl(21, {here({5})}, {{0, {2, 4, 6, 8, 10, 12, 14, 19}}}),
      excl(22, {here({7})}, {{0, {3, 4, 6, 8, 14, 16, 18, 19}}}),
      excl(23, {here({13})}, {{0, {6, 8, 11, 12, 14, 17, 18, 19}}}),
      excl(24, {here({6})}, {{0, {2, 3, 4, 5, 7, 8, 10, 11, 12, 13, 14, 18, 19}}}),
      excl(25, {here({8})}, {{0, {2, 3, 4, 5, 6, 7, 12, 13, 14, 16, 17, 18, 19}}}),
      excl(26, {here({14})}, {{0, {4, 5, 6, 7, 8, 10, 11, 12, 13, 16, 17, 18, 19}}}),
      excl(27, {here({5})}, {{0, {3, 7, 11, 13}}}),
      excl(28, {here({7})}, {{0, {2, 5, 13, 17}}}),
      excl(29, {here({13})}, {{0, {5, 7, 10, 16}}}),

      excl(30, {here({1})}, {{1, {1}}, {3, {1}}}),
      excl(31, {here({2})}, {{3, {3, 4, 7, 8}}}),
      excl(32, {here({4})}, {{1, {2, 4, 5, 6}}, {3, {3, 4, 7, 8}}}),
      excl(33, {here({5, 6})}, {{3, {3, 4, 7, 8, 16, 18, 19}}}),
      excl(34, {here({19})}, {{1, {5, 6}}, {2, {13, 14}}, {3, {7, 8}}}),
      excl(35, {here({3})}, {{1, {2, 4, 5, 6}}}),
      excl(36, {here({7, 8})}, {{1, {2, 4, 5, 6, 10, 12, 19}}}),
      excl(37, {here({9})}, {{2, {9}}, {3, {15}}}),
      excl(38, {here({10})}, {{3, {7, 8, 16, 18}}}),
      excl(39, {here({11})}, {{2, {11, 12, 13, 14}}}),
      excl(40, {here({12})}, {{2, {11, 12, 13, 14}}, {3, {7, 8, 16, 18}}}),
      excl(41, {here({13, 14})}, {{2, {11, 12, 13, 14, 17, 18, 19}}}),
      excl(42, {here({15})}, {{1, {9}}, {2, {15}}}),
      excl(43, {here({16})}, {{1, {5, 6, 10, 12}}}),
      excl(44, {here({17})}, {{2, {13, 14, 17, 18}}}),
      excl(45, {here({18})}, {{1, {5, 6, 10, 12}}, {2, {13, 14, 17, 18}}}),

      excl(46, {here({4, 6, 19}), here({16})}, {{1, {9, 11}}, {2, {15}}}),
      excl(47, {here({6, 12, 19}), here({17})}, {{2, {15, 16}}, {1, {9}}}),
      excl(48, {here({8, 18, 19}), here({11})}, {{2, {9, 10}}, {3, {15}}}),
      excl(49, {here({12, 14, 19}), here({2})}, {{3, {1, 2}}, {1, {1}}}),
      excl(50, {here({14, 18, 19}), here({3})}, {{1, {1, 3}}, {3, {1}}}),
      excl(51, {here({4, 8, 19}), here({10})}, {{3, {15, 17}}, {2, {9}}}),
      excl(52, {here({4}), here({13})}, {{1, {1, 3}}, {3, {1, 2}}}),
      excl(53, {here({7}), here({12})}, {{2, {9, 10}}, {3, {15, 17}}}),
      excl(54, {here({5}), here({18})}, {{1, {9, 11}}, {2, {15, 16}}}),

      card(55, {{{1, {1}}, {3, {1}}}, {{2, {9}}, {3, {15}}}}, {2, 3, 4, 10, 11, 12}),
      card(56, {{{1, {1}}, {3, {1}}}, {{1, {9}}, {2, {15}}}}, {2, 3, 4, 16, 17, 18}),
      card(57, {{{1, {9}}, {2, {15}}}, {{2, {9}}, {3, {15}}}}, {10, 11, 12, 16, 17, 18}),

      disj(58, {here({4}), here({17})}, {{1, {1, 3}}, {3, {1, 2}}}, {{1, {9}}, {2, {15, 16}}}),
      disj(59, {here({4}), here({11})}, {{1, {1, 3}}, {3, {1, 2}}}, {{3, {15}}, {2, {9, 10}}}),
  };
  return cs;
}

bool uses_hole_argument(int id) { return id >= 27 && id <= 29; }

const std::vector<std::vector<std::vector<int>>>& categories() {
  static const std::vector<std::vector<std::vector<int>>> c = {
      {},
      {{14, 1}, {6, 15}, {8, 9}},
      {{14, 2}, {14, 3}, {8, 10}, {8, 11}, {6, 16}, {6, 17}},
      {{4, 13}, {18, 5}, {12, 7}},
      {{1, 9, 18}, {1, 12, 15}, {4, 9, 15}},
      {{4, 10, 15}, {4, 10, 16}, {4, 10, 17}, {4, 16, 9}, {4, 16, 11},
       {12, 2, 15}, {12, 2, 16}, {12, 2, 17}, {12, 17, 1}, {12, 17, 3},
       {18, 11, 1}, {18, 11, 2}, {18, 11, 3}, {18, 3, 10}, {18, 3, 9}},
      {{4, 11, 15}, {4, 11, 17}, {4, 17, 9},
       {12, 3, 15}, {12, 3, 16}, {12, 16, 1},
       {18, 10, 2}, {18, 10, 1}, {18, 2, 9}},
      {{2, 11, 16}, {3, 10, 17}},
      {{19, 2, 9, 15}, {19, 2, 9, 16}, {19, 2, 9, 17}, {19, 2, 10, 15}, {19, 2, 10, 16},
       {19, 2, 10, 17}, {19, 2, 11, 15}, {19, 2, 11, 17}, {19, 3, 9, 15}, {19, 3, 9, 16},
       {19, 3, 9, 17}, {19, 3, 10, 15}, {19, 3, 10, 16}, {19, 3, 11, 15}, {19, 3, 11, 16},
       {19, 3, 11, 17}, {19, 16, 9, 1}, {19, 16, 10, 1}, {19, 16, 11, 1}, {19, 17, 9, 1},
       {19, 17, 10, 1}, {19, 17, 11, 1}, {19, 11, 15, 1}, {19, 10, 15, 1}},
      {{1, 9, 15, 19}},
  };
  return c;
}

}  // namespace latcov::proof::reference
