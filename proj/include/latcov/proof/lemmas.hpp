#pragma once

#include <string>
#include <vector>

#include "latcov/proof/tables.hpp"

namespace latcov::proof {

struct LemmaCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct LemmaReport {
  std::string subject;
  std::vector<LemmaCheck> checks;
  bool ok = true;
  Rational r0;          // homothety factor of T' over T (lemmas 2-3)
  Rational diameter;    // max L1 distance between vertices of T'

  void add(std::string name, bool ok, std::string detail = {});
};

/// The tetrahedron touching O on face 0 has its centroid on x+y+z = 7/6,
/// where the L1 norm is at least 7/6 and attains it.
LemmaReport verify_lemma1();

/// conv{(0,1,1), (0,4/3,2/3), (1/3,1,2/3), (1/3,4/3,1)} as halfspaces.
bool in_hole_region(const V3& a0);

/// Lemma 2 and 3 data for a0: T' and its factor, Y, Y1, Y2, the closure of
/// Y' against T'' + e1, and the strict diameter bound on T''. Throws
/// GeometryError if a0 is outside the hole region.
LemmaReport verify_lemmas_2_3_at(const V3& a0);

/// The four vertices of the hole region, their centroid and eight interior
/// points on a 2x2x2 grid in barycentric steps of 1/8 and 1/5.
std::vector<V3> lemma_sample_points();

std::string vec_str(const V3& v);

}  // namespace latcov::proof
