#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace latcov::proof {

/// Occupancy of the 19 pieces on each face label: bit m set iff the lattice
/// meets piece m (m in 1..19).
using Mask = std::uint32_t;
using Assignment = std::array<Mask, 4>;

/// Pieces on face k + offset.
struct Sel {
  int offset = 0;
  std::vector<int> pieces;

  bool operator==(const Sel&) const = default;
  auto operator<=>(const Sel&) const = default;
};

/// At least one of the selected pieces is occupied.
using Group = std::vector<Sel>;

/// A clause over occupancy booleans, stated for a generic face k and
/// instantiated at all four k.
///
///   coverage     some piece of `refs` is occupied
///   exclusion    premises => no piece of `refs` is occupied
///   cardinality  premises => at most one piece of `refs` is occupied
///   disjunction  premises => (no piece of `refs`) or (no piece of `alt`)
///
/// `premises` is a conjunction of groups.
struct Constraint {
  enum class Kind { coverage, exclusion, cardinality, disjunction };

  int id = 0;
  Kind kind = Kind::exclusion;
  std::vector<Group> premises;
  std::vector<Sel> refs;
  std::vector<Sel> alt;

  bool intra_face() const;
  /// Offsets (relative to k) the clause reads.
  std::vector<int> offsets() const;
  /// Canonical form: sorted pieces, merged offsets, sorted groups.
  Constraint normalized() const;
  bool same_clause(const Constraint& o) const;
  std::string str() const;
};

const char* kind_name(Constraint::Kind k);

Mask mask_of(const std::vector<int>& pieces);
std::vector<int> pieces_of(Mask m);

/// Constraint in bitmask form for fast evaluation.
struct Compiled {
  int id = 0;
  Constraint::Kind kind = Constraint::Kind::exclusion;
  std::vector<std::array<Mask, 4>> premises;  // per group, mask per offset
  std::array<Mask, 4> refs{}, alt{};
  unsigned faces = 0;                          // bit o set iff offset o is read

  /// Truth of the clause instantiated at face k.
  bool holds(const Assignment& a, int k) const;
};

Compiled compile(const Constraint& c);
std::vector<Compiled> compile(const std::vector<Constraint>& cs);

}  // namespace latcov::proof
