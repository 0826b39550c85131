#include "latcov/lattice/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "latcov/arith/errors.hpp"

namespace latcov {

namespace {

struct Box {
  Vec3<Rational> lo;
  Rational width;
  Rational upper;
};

struct BoxOrder {
  bool operator()(const Box& a, const Box& b) const {
    if (a.upper != b.upper) return a.upper < b.upper;
    return lex_less(b.lo, a.lo);
  }
};

class Prepared {
 public:
  explicit Prepared(const IntervalProblem& p) : p_(p) {
    for (const auto& [n, off] : p.body.facets) {
      Vec3<Interval> u;
      for (int k = 0; k < 3; ++k) u[k] = n[k] / off;
      nrm_.push_back(u);
      nrm_d_.push_back({to_double(u[0]), to_double(u[1]), to_double(u[2])});
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) bd_[i][j] = to_double(p.basis(i, j));
    Mat3<Interval> bt = p.basis.transpose();
    if (compare(det3(bt), Interval(0)) == Ordering::unknown)
      throw GeometryError("interval basis may be singular");
    Mat3<Interval> dual = inverse3(bt);  // coords = dual * x
    for (int i = 0; i < 3; ++i) {
      Rational h(0);
      for (const auto& v : p.body_vertices) {
        Interval g = dual.row(i).transpose().dot(v);
        Rational m = abs(g).hi();
        if (m > h) h = m;
      }
      h_[i] = h;
    }
  }

  const IntervalProblem& problem() const { return p_; }
  const Rational& support(int i) const { return h_[i]; }

  Vec3<Interval> point(const Vec3<Rational>& coords) const {
    Vec3<Interval> x = Vec3<Interval>::Constant(Interval(0));
    for (int i = 0; i < 3; ++i)
      if (!coords[i].is_zero()) x += p_.basis.row(i).transpose() * Interval(coords[i]);
    return x;
  }

  Vec3<Interval> lattice_point(const Coeffs& m) const {
    return point(vec3<Rational>(Rational(m[0]), Rational(m[1]), Rational(m[2])));
  }

  // nrm_f . x for every facet
  std::vector<Interval> project(const Vec3<Interval>& x) const {
    std::vector<Interval> out;
    out.reserve(nrm_.size());
    for (const auto& u : nrm_) out.push_back(u.dot(x));
    return out;
  }

  double gauge_d(const double y[3]) const {
    double g = 0;
    for (const auto& u : nrm_d_) g = std::max(g, u[0] * y[0] + u[1] * y[1] + u[2] * y[2]);
    return g;
  }

  void point_d(const double c[3], double x[3]) const {
    for (int k = 0; k < 3; ++k) x[k] = c[0] * bd_[0][k] + c[1] * bd_[1][k] + c[2] * bd_[2][k];
  }

 private:
  const IntervalProblem& p_;
  std::vector<Vec3<Interval>> nrm_;
  std::vector<std::array<double, 3>> nrm_d_;
  double bd_[3][3];
  Rational h_[3];
};

// Upper endpoint of gauge(x - lambda) from projections.
Rational gauge_hi(const std::vector<Interval>& px, const std::vector<Interval>& pl) {
  Rational g(0);
  for (std::size_t f = 0; f < px.size(); ++f) {
    Rational v = px[f].hi() - pl[f].lo();
    if (v > g) g = v;
  }
  return g;
}

Rational gauge_lo(const std::vector<Interval>& px, const std::vector<Interval>& pl) {
  Rational g(0);
  for (std::size_t f = 0; f < px.size(); ++f) {
    Rational v = px[f].lo() - pl[f].hi();
    if (v > g) g = v;
  }
  return g;
}

class Estimator {
 public:
  Estimator(const IntervalProblem& p) : prep_(p) {}

  // Neighbor coefficients covering every lambda within gauge `reach` of [0,1]^3.
  void build_neighbors(const Rational& reach) {
    neighbors_.clear();
    long lo[3], hi[3];
    for (int i = 0; i < 3; ++i) {
      Rational k = reach * prep_.support(i);
      lo[i] = floor_int(Rational(-k)).convert_to<long>();
      hi[i] = ceil_int(Rational(1 + k)).convert_to<long>();
    }
    for (long a = lo[0]; a <= hi[0]; ++a)
      for (long b = lo[1]; b <= hi[1]; ++b)
        for (long c = lo[2]; c <= hi[2]; ++c) {
          Coeffs m{a, b, c};
          neighbors_.push_back(m);
          proj_.push_back(prep_.project(prep_.lattice_point(m)));
        }
    reach_ = reach;
  }

  // lower bound of min_lambda gauge(x - lambda), x given in lattice coordinates in [0,1]^3
  Rational center_lower(const Vec3<Rational>& coords) const {
    auto px = prep_.project(prep_.point(coords));
    Rational best = reach_;
    for (std::size_t i = 0; i < neighbors_.size(); ++i) {
      Rational g = gauge_lo(px, proj_[i]);
      if (g < best) best = g;
    }
    return best;
  }

  Rational center_upper(const Vec3<Rational>& coords) const {
    auto px = prep_.project(prep_.point(coords));
    Rational best;
    bool first = true;
    for (std::size_t i = 0; i < neighbors_.size(); ++i) {
      Rational g = gauge_hi(px, proj_[i]);
      if (first || g < best) best = g;
      first = false;
    }
    return best;
  }

  double center_double(const Vec3<Rational>& coords, std::vector<std::pair<double, std::size_t>>* rank) const {
    double c[3] = {to_double(coords[0]), to_double(coords[1]), to_double(coords[2])};
    double best = INFINITY;
    if (rank) rank->clear();
    for (std::size_t i = 0; i < neighbors_.size(); ++i) {
      double d[3];
      for (int k = 0; k < 3; ++k) d[k] = c[k] - static_cast<double>(neighbors_[i][k]);
      double y[3];
      prep_.point_d(d, y);
      double g = prep_.gauge_d(y);
      best = std::min(best, g);
      if (rank) rank->push_back({g, i});
    }
    return best;
  }

  Rational box_upper(const Vec3<Rational>& lo, const Rational& w) const {
    std::vector<std::pair<double, std::size_t>> rank;
    Vec3<Rational> mid = lo + Vec3<Rational>::Constant(w / 2);
    center_double(mid, &rank);
    std::size_t keep = std::min<std::size_t>(4, rank.size());
    std::partial_sort(rank.begin(), rank.begin() + static_cast<long>(keep), rank.end());
    std::vector<std::vector<Interval>> corners;
    for (int m = 0; m < 8; ++m) {
      Vec3<Rational> c = lo;
      for (int k = 0; k < 3; ++k)
        if ((m >> k) & 1) c[k] += w;
      corners.push_back(prep_.project(prep_.point(c)));
    }
    Rational best;
    bool first = true;
    for (std::size_t r = 0; r < keep; ++r) {
      const auto& pl = proj_[rank[r].second];
      Rational worst(0);
      for (const auto& pc : corners) {
        Rational g = gauge_hi(pc, pl);
        if (g > worst) worst = g;
        if (!first && worst >= best) break;
      }
      if (first || worst < best) best = worst;
      first = false;
    }
    return best;
  }

  std::size_t neighbor_count() const { return neighbors_.size(); }

 private:
  Prepared prep_;
  std::vector<Coeffs> neighbors_;
  std::vector<std::vector<Interval>> proj_;
  Rational reach_;
};

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : old_(Interval::precision()) { Interval::set_precision(bits); }
  ~PrecisionScope() { Interval::set_precision(old_); }

 private:
  unsigned old_;
};

}  // namespace

template <class S>
IntervalProblem make_interval_problem(const Polytope<S>& c, const Mat3<Interval>& basis,
                                      unsigned bits) {
  IntervalProblem p;
  p.body = to_interval_body(c, bits);
  for (const auto& v : c.vertices) {
    Vec3<Interval> iv;
    for (int k = 0; k < 3; ++k) {
      if constexpr (std::is_same_v<S, Rational>)
        iv[k] = Interval(v[k]);
      else
        iv[k] = Interval::enclose(v[k], bits);
    }
    p.body_vertices.push_back(iv);
  }
  p.basis = basis;
  return p;
}

template IntervalProblem make_interval_problem<Rational>(const Polytope<Rational>&,
                                                         const Mat3<Interval>&, unsigned);
template IntervalProblem make_interval_problem<Quadratic>(const Polytope<Quadratic>&,
                                                          const Mat3<Interval>&, unsigned);

Mat3<Interval> enclose_basis(const Mat3<Rational>& b) {
  Mat3<Interval> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = Interval(b(i, j));
  return r;
}

Mat3<Interval> enclose_basis(const Mat3<Quadratic>& b, unsigned bits) {
  Mat3<Interval> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = Interval::enclose(b(i, j), bits);
  return r;
}

Interval nearest_gauge_interval(const IntervalProblem& p, const Vec3<Rational>& coords) {
  PrecisionScope scope(96);
  Estimator est(p);
  Vec3<Rational> zero = Vec3<Rational>::Zero();
  Rational reach = est.box_upper(zero, Rational(1));
  est.build_neighbors(reach);
  return Interval(est.center_lower(coords), est.center_upper(coords));
}

GammaEstimate estimate_gamma(const IntervalProblem& p, const Rational& tol,
                             std::size_t max_boxes) {
  PrecisionScope scope(96);
  Estimator est(p);
  GammaEstimate out;
  Vec3<Rational> zero = Vec3<Rational>::Zero();
  // Every point of the cell is within `reach` of the lattice point at its origin corner.
  Rational reach(0);
  {
    Prepared prep(p);
    auto origin = prep.project(prep.lattice_point({0, 0, 0}));
    for (int m = 0; m < 8; ++m) {
      Coeffs c{m & 1, (m >> 1) & 1, (m >> 2) & 1};
      Rational g = gauge_hi(prep.project(prep.lattice_point(c)), origin);
      if (g > reach) reach = g;
    }
  }
  est.build_neighbors(reach);

  std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;
  Rational root_upper = est.box_upper(zero, Rational(1));
  if (root_upper > reach) root_upper = reach;
  queue.push({zero, Rational(1), root_upper});
  out.boxes = 1;
  Rational lower(0);
  Vec3<Rational> witness = zero;
  double lower_d = 0;
  while (!queue.empty()) {
    Box top = queue.top();
    if (top.upper - lower <= tol) {
      out.converged = true;
      break;
    }
    if (out.boxes >= max_boxes) break;
    queue.pop();
    Vec3<Rational> mid = top.lo + Vec3<Rational>::Constant(top.width / 2);
    double fd = est.center_double(mid, nullptr);
    if (fd > lower_d - 1e-9) {
      Rational fl = est.center_lower(mid);
      ++out.center_evals;
      if (fl > lower) {
        lower = fl;
        witness = mid;
        lower_d = to_double(lower);
      }
    }
    Rational half = top.width / 2;
    for (int m = 0; m < 8; ++m) {
      Vec3<Rational> lo = top.lo;
      for (int k = 0; k < 3; ++k)
        if ((m >> k) & 1) lo[k] += half;
      Rational u = est.box_upper(lo, half);
      ++out.boxes;
      if (u > top.upper) u = top.upper;
      if (u > lower) queue.push({lo, half, u});
    }
  }
  out.lower = lower;
  out.upper = queue.empty() ? lower : queue.top().upper;
  if (out.upper < lower) out.upper = lower;
  out.converged = out.converged || out.upper - out.lower <= tol;
  Prepared prep(p);
  out.witness = prep.point(witness);
  return out;
}

IntervalPacking check_packing_interval(const IntervalProblem& p) {
  PrecisionScope scope(96);
  Prepared prep(p);
  IntervalPacking out;
  Rational radius(2);
  long lim[3];
  for (int i = 0; i < 3; ++i) lim[i] = ceil_int(Rational(radius * prep.support(i))).convert_to<long>();
  auto origin = prep.project(prep.lattice_point({0, 0, 0}));
  bool first = true;
  Rational min_lo = radius;
  for (long a = -lim[0]; a <= lim[0]; ++a)
    for (long b = -lim[1]; b <= lim[1]; ++b)
      for (long c = -lim[2]; c <= lim[2]; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        auto px = prep.project(prep.lattice_point({a, b, c}));
        Interval g(gauge_lo(px, origin), gauge_hi(px, origin));
        if (g.lo() < min_lo) min_lo = g.lo();
        if (first || g.hi() < out.min_gauge.hi() ||
            (g.hi() == out.min_gauge.hi() && g.lo() < out.min_gauge.lo())) {
          out.min_gauge = g;
          out.witness = {a, b, c};
          first = false;
        }
      }
  // vectors outside the coefficient box have gauge >= radius
  Rational lo = min_lo;
  Rational hi = first ? radius : out.min_gauge.hi();
  out.min_gauge = Interval(lo, hi < lo ? lo : hi);
  if (lo >= 2)
    out.ok = Tri::yes;
  else if (hi < 2)
    out.ok = Tri::no;
  else
    out.ok = Tri::undecided;
  return out;
}

}  // namespace latcov
