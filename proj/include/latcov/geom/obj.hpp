#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "latcov/geom/polytope.hpp"

namespace latcov {

struct ObjMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> triangles;  // 0-based
  std::vector<std::pair<std::string, std::size_t>> groups;  // name, first triangle
};

/// Appends the triangulated boundary of a solid polytope as a named group.
template <class S>
void add_to_mesh(ObjMesh& mesh, const Polytope<S>& p, const std::string& name) {
  std::size_t base = mesh.vertices.size();
  for (const auto& v : p.vertices)
    mesh.vertices.push_back({to_double(v[0]), to_double(v[1]), to_double(v[2])});
  mesh.groups.push_back({name, mesh.triangles.size()});
  for (const auto& cyc : p.facet_vertices)
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
      mesh.triangles.push_back({static_cast<int>(base + cyc[0]), static_cast<int>(base + cyc[i]),
                                static_cast<int>(base + cyc[i + 1])});
}

/// Wavefront OBJ with 12 significant digits.
void write_obj(std::ostream& os, const ObjMesh& mesh);

}  // namespace latcov
