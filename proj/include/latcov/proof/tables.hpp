#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "latcov/arith/rational.hpp"
#include "latcov/geom/polytope.hpp"
#include "latcov/geom/symmetry.hpp"

namespace latcov::proof {

using Poly = Polytope<Rational>;
using Cells = CellComplex<Rational>;
using V3 = Vec3<Rational>;

inline constexpr int kLabels = 4;   // faces after identifying x with -x
inline constexpr int kFaces = 8;    // 0..3 upper faces, 4..7 their primed partners
inline constexpr int kRegions = 6;
inline constexpr int kPieces = 19;

/// Face label of a face index: primed face k' counts as face k + 2.
inline int face_label(int f) { return f < 4 ? f : (f - 4 + 2) % 4; }

/// Point with coordinates (a/3, b/3, c/3).
V3 thirds(long a, long b, long c);

/// Quarter turn carrying face k to face k + 1 (cyclically).
SignedPerm face_turn();

/// Group element mapping face 0 onto face f.
SignedPerm face_map(int f);

/// Regions containing piece m (bit j - 1 for region j), m in 1..19.
unsigned piece_pattern(int m);

/// Number of regions containing piece m.
inline int piece_class(int m) { return __builtin_popcount(piece_pattern(m)); }

/// One face's tetrahedra, obstruction regions and dissection pieces.
/// Arrays are indexed from 1; slot 0 is unused.
struct FaceData {
  std::array<Poly, kRegions + 1> tet;
  std::array<Poly, kRegions + 1> region;         // closure of the region
  std::array<Cells, kRegions + 1> region_cells;  // raw output of the subtraction
  std::array<Cells, kPieces + 1> piece_cells;
  std::array<Poly, kPieces + 1> piece;           // closure, when convex
  std::array<bool, kPieces + 1> piece_convex{};
};

struct FacePieceTable {
  std::array<FaceData, kFaces> face;
  /// classes[j] = pieces lying in exactly j regions, found by containment tests.
  std::array<std::vector<int>, 6> classes;

  const Cells& cells(int f, int m) const { return face[f].piece_cells[m]; }
  const Poly& piece(int f, int m) const { return face[f].piece[m]; }
};

/// Builds every face from the base tetrahedron by the listed shifts, quarter
/// turns and central inversion. Regions are (T + O) minus int(2O); pieces are
/// intersections of regions minus the others, following piece_pattern.
FacePieceTable build_tables();

struct Mismatch {
  std::string what;
  std::string detail;
};

struct TableReport {
  bool ok = true;
  std::vector<Mismatch> mismatches;
  std::array<Rational, kFaces> union_volume{};   // vol of the union of the 6 regions
  std::array<Rational, kFaces> pieces_volume{};  // sum of piece volumes
  int hulls_matched = 0;                          // of the 19 reference hulls on face 0
  bool region_closure_ok = false;                 // int-part plus rint-part closure
  bool classes_ok = false;
  bool rotation_ok = false;
  bool inversion_ok = false;
  bool disjoint_ok = false;
  bool touching_ok = false;                       // tetrahedra meet O on their own face
};

/// Dissection fidelity: reference hulls, volume bookkeeping, class sets,
/// pairwise disjointness, and the symmetry relations between faces.
TableReport verify_tables(const FacePieceTable& t);

struct CoverRow {
  int face = 0, region = 0;
  std::vector<int> listed, derived;
  Rational region_volume, listed_volume;
  bool inside = true, others_thin = true, ok = true;
};

struct CoverReport {
  bool ok = true;
  std::vector<CoverRow> rows;
};

/// For every face and region j: the listed pieces lie in region j, their
/// volumes inside it add up to its volume, and unlisted pieces meet it in
/// measure zero.
CoverReport verify_cover_equations(const FacePieceTable& t);

/// The piece lists of the six cover identities (index 1..6).
const std::vector<int>& cover_list(int region);

/// Action of a symmetry on (face label, piece) pairs. Entry [d][m] is the
/// image of piece m on face label d, or {-1,-1} if the image is not a piece.
struct LabelAction {
  std::array<std::array<std::pair<int, int>, kPieces + 1>, kLabels> map;
  bool fixes_face0 = false;
};

LabelAction label_action(const FacePieceTable& t, const SignedPerm& g);

/// The six symmetries fixing face 0 (coordinate permutations).
std::vector<SignedPerm> face0_stabilizer();

}  // namespace latcov::proof
