#include "latcov/geom/obj.hpp"

#include <iomanip>

namespace latcov {

void write_obj(std::ostream& os, const ObjMesh& mesh) {
  auto old = os.precision(12);
  for (const auto& v : mesh.vertices) os << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  std::size_t g = 0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    while (g < mesh.groups.size() && mesh.groups[g].second == t) os << "g " << mesh.groups[g++].first << '\n';
    const auto& tri = mesh.triangles[t];
    os << "f " << tri[0] + 1 << ' ' << tri[1] + 1 << ' ' << tri[2] + 1 << '\n';
  }
  os.precision(old);
}

}  // namespace latcov
