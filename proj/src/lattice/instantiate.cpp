#include "latcov/lattice/detail/gamma_impl.hpp"
#include "latcov/lattice/detail/lattice_impl.hpp"

namespace latcov {

#define LATCOV_LATTICE_INSTANTIATE(S)                                                      \
  template class Lattice<S>;                                                               \
  template Box3<S> scaled_box<S>(const Box3<S>&, const S&);                                \
  template std::vector<LatticePoint<S>> enumerate_points<S>(const Lattice<S>&,             \
                                                            const Box3<S>&);               \
  template PackingCertificate<S> check_packing<S>(const Polytope<S>&, const Lattice<S>&);  \
  template Polytope<S> fundamental_cell<S>(const Lattice<S>&);                             \
  template CoverCertificate<S> zong_cover_check<S>(const Polytope<S>&, const Lattice<S>&,  \
                                                   const S&);                              \
  template CoverCertificate<S> zong_cover_search<S>(const Polytope<S>&, const Lattice<S>&,  \
                                                    const S&, int*);                         \
  template CoverCertificate<S> fundamental_cover_check<S>(const Polytope<S>&,              \
                                                          const Lattice<S>&, const S&);    \
  template std::pair<S, LatticePoint<S>> nearest_gauge<S>(const Polytope<S>&,              \
                                                          const Lattice<S>&, const Vec3<S>&); \
  template LpResult<S> simplex_max<S>(const std::vector<std::vector<S>>&,                  \
                                      const std::vector<S>&, const std::vector<S>&);       \
  template Vec3<S> deepest_point<S>(const Polytope<S>&, const Lattice<S>&,                 \
                                    const Polytope<S>&, const std::vector<LatticePoint<S>>&); \
  template GammaBracket<S> gamma_bracket<S>(const Polytope<S>&, const Lattice<S>&, const S&);

LATCOV_LATTICE_INSTANTIATE(Rational)
LATCOV_LATTICE_INSTANTIATE(Quadratic)

}  // namespace latcov
