#include "latcov/geom/detail/polytope_impl.hpp"

LATCOV_GEOM_DECLARE(latcov::Rational, )
LATCOV_GEOM_DECLARE(latcov::Quadratic, )
