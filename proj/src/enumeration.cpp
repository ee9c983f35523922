#include "latspar/enumeration.hpp"

#include <algorithm>
#include <optional>

namespace latspar {

namespace {

Rat dot(const QVec& x, const QVec& y) {
  Rat acc(0);
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

// Exact coefficient enumeration over an LLL-conditioned copy of the basis.
// All distance tests compare exact squared norms.
class Enumerator {
 public:
  explicit Enumerator(const Lattice& lat) : orig_(lat), red_(lll_reduce(lat)) {
    int n = lat.dim();
    // canonical coeffs = W * reduced coeffs; W is unimodular and integral.
    w_.assign(n, ZVec(n));
    for (int j = 0; j < n; ++j) {
      QVec col = orig_.coords(red_.basis().col(j));
      for (int i = 0; i < n; ++i) {
        if (col[i].get_den() != 1) throw internal_error("non-integral basis change after LLL");
        w_[i][j] = col[i].get_num();
      }
    }
    gs_.resize(n);
    g_.resize(n);
    mu_ = QMat(n, n);
    for (int i = 0; i < n; ++i) {
      gs_[i] = red_.basis().col(i);
      for (int j = 0; j < i; ++j) {
        mu_.at(i, j) = dot(red_.basis().col(i), gs_[j]) / g_[j];
        for (int k = 0; k < n; ++k) gs_[i][k] -= mu_.at(i, j) * gs_[j][k];
      }
      g_[i] = dot(gs_[i], gs_[i]);
    }
  }

  const Lattice& reduced() const { return red_; }

  // DFS over reduced coefficients; visit(z_reduced, dist_sq) at leaves.
  // Budget shrinks to *dynamic_bound when that is non-null (argmin mode,
  // non-strict so exact ties survive).
  void run(const QVec& center, Rat budget, Rat* dynamic_bound,
           const std::function<bool(const ZVec&, const Rat&)>& visit) const {
    int n = red_.dim();
    QVec ctilde(n);
    for (int i = 0; i < n; ++i) ctilde[i] = dot(center, gs_[i]) / g_[i];

    ZVec z(n, Int(0));
    abort_ = false;
    descend(n - 1, Rat(0), z, ctilde, budget, dynamic_bound, visit);
  }

  ZVec to_canonical(const ZVec& z_red) const {
    int n = red_.dim();
    ZVec out(n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (w_[i][j] != 0) out[i] += w_[i][j] * z_red[j];
    return out;
  }

 private:
  void descend(int level, const Rat& acc, ZVec& z, const QVec& ctilde, const Rat& fixed_budget,
               Rat* dynamic_bound, const std::function<bool(const ZVec&, const Rat&)>& visit) const {
    if (abort_) return;
    const Rat& bound = dynamic_bound ? *dynamic_bound : fixed_budget;
    if (level < 0) {
      if (!visit(z, acc)) abort_ = true;
      return;
    }
    // offset o = sum_{j>level} mu_{j,level} z_j - ctilde_level; the level
    // contributes g_level * (z_level + o)^2.
    Rat o = -ctilde[level];
    for (int j = level + 1; j < red_.dim(); ++j)
      if (z[j] != 0) o += mu_.at(j, level) * Rat(z[j]);

    Rat rem = bound - acc;
    if (rem < 0) return;
    // Loose integer range from a sqrt upper bound; every candidate is then
    // tested exactly.
    Rat radius_sq = rem / g_[level];
    Rat s = radius_sq == 0 ? Rat(0) : sqrt_upper(radius_sq, Rat(1, 4));
    Int lo = ceil_rat(-o - s);
    Int hi = floor_rat(-o + s);
    for (Int zi = lo; zi <= hi; ++zi) {
      if (abort_) return;
      Rat off = Rat(zi) + o;
      Rat term = g_[level] * off * off;
      Rat next = acc + term;
      if (next > (dynamic_bound ? *dynamic_bound : fixed_budget)) continue;
      z[level] = zi;
      descend(level - 1, next, z, ctilde, fixed_budget, dynamic_bound, visit);
    }
    z[level] = 0;
  }

  const Lattice& orig_;
  Lattice red_;
  std::vector<ZVec> w_;
  std::vector<QVec> gs_;
  std::vector<Rat> g_;
  QMat mu_;
  mutable bool abort_ = false;
};

QVec sub(const QVec& x, const QVec& y) {
  QVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Rat babai_dist_sq(const Lattice& red, const QVec& center) {
  // Nearest-plane rounding in the reduced basis gives the initial radius.
  int n = red.dim();
  QVec coords = red.coords(center);
  ZVec z(n);
  // plain rounding of coordinates is enough for a bound; exactness of the
  // final answer never depends on it
  for (int i = 0; i < n; ++i) z[i] = round_rat(coords[i]);
  QVec y = red.point(z);
  QVec d = sub(y, center);
  return dot(d, d);
}

void sort_points(std::vector<LatticePoint>& pts) {
  std::sort(pts.begin(), pts.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return coeff_less(a.coeffs, b.coeffs); });
}

}  // namespace

void enum_ball_visit(const Lattice& lat, const QVec& center, const Rat& rho_sq,
                     const std::function<bool(LatticePoint&&)>& visit) {
  if (static_cast<int>(center.size()) != lat.dim())
    throw input_error("enum_ball: center dimension mismatch");
  if (rho_sq < 0) return;
  Enumerator e(lat);
  e.run(center, rho_sq, nullptr, [&](const ZVec& z_red, const Rat&) {
    return visit(lat.make_point(e.to_canonical(z_red)));
  });
}

std::vector<LatticePoint> enum_ball(const Lattice& lat, const QVec& center, const Rat& rho_sq) {
  std::vector<LatticePoint> out;
  enum_ball_visit(lat, center, rho_sq, [&](LatticePoint&& p) {
    out.push_back(std::move(p));
    return true;
  });
  sort_points(out);
  return out;
}

CvpL2Result cvp_l2(const Lattice& lat, const QVec& target) {
  if (static_cast<int>(target.size()) != lat.dim())
    throw input_error("cvp_l2: target dimension mismatch");
  Enumerator e(lat);
  Rat bound = babai_dist_sq(e.reduced(), target);
  std::vector<ZVec> best;
  e.run(target, bound, &bound, [&](const ZVec& z_red, const Rat& d2) {
    if (d2 < bound) {
      best.clear();
      bound = d2;
    }
    best.push_back(e.to_canonical(z_red));
    return true;
  });
  // The dynamic bound is non-strict, so stale entries at an older, larger
  // distance may remain; keep the exact argmin only.
  CvpL2Result res;
  res.dist_sq = bound;
  for (ZVec& z : best) {
    LatticePoint p = lat.make_point(std::move(z));
    QVec d = sub(p.ambient, target);
    if (dot(d, d) == bound) res.points.push_back(std::move(p));
  }
  sort_points(res.points);
  if (res.points.empty()) throw internal_error("cvp_l2 produced no minimizer");
  return res;
}

SvpL2Result svp_l2(const Lattice& lat) {
  Enumerator e(lat);
  // Shortest reduced basis vector bounds lambda_1(B_2^n) from above.
  Rat bound;
  for (int j = 0; j < lat.dim(); ++j) {
    QVec c = e.reduced().basis().col(j);
    Rat n2 = dot(c, c);
    if (j == 0 || n2 < bound) bound = n2;
  }
  QVec origin(lat.dim(), Rat(0));
  std::vector<ZVec> best;
  e.run(origin, bound, &bound, [&](const ZVec& z_red, const Rat& d2) {
    if (d2 == 0) return true;  // skip the zero vector
    if (d2 < bound) {
      best.clear();
      bound = d2;
    }
    best.push_back(e.to_canonical(z_red));
    return true;
  });
  SvpL2Result res;
  res.norm_sq = bound;
  for (ZVec& z : best) {
    LatticePoint p = lat.make_point(std::move(z));
    if (dot(p.ambient, p.ambient) == bound) res.points.push_back(std::move(p));
  }
  sort_points(res.points);
  if (res.points.empty()) throw internal_error("svp_l2 produced no vector");
  return res;
}

void lattice_enum_visit(const ConvexBody& k, const QVec& center, const Rat& scale,
                        const Lattice& lat, const Rat& eps,
                        const std::function<bool(LatticePoint&&)>& visit) {
  if (scale < 0) throw input_error("lattice_enum: scale must be >= 0");
  if (eps <= 0) throw input_error("lattice_enum: eps must be positive");
  if (k.dim() != lat.dim()) throw input_error("lattice_enum: body/lattice dimension mismatch");
  // Circumscribed ball enumeration plus exact membership filtering replaces
  // the M-ellipsoid cover; the output contract is identical.
  Rat rho = scale * k.circumradius() + eps;
  enum_ball_visit(lat, center, rho * rho, [&](LatticePoint&& p) {
    if (!k.gauge_leq_scale(sub(p.ambient, center), scale)) return true;
    return visit(std::move(p));
  });
}

PointStream lattice_enum(const ConvexBody& k, const QVec& center, const Rat& scale,
                         const Lattice& lat, const Rat& eps) {
  PointStream s;
  lattice_enum_visit(k, center, scale, lat, eps, [&](LatticePoint&& p) {
    s.points.push_back(std::move(p));
    return true;
  });
  sort_points(s.points);
  return s;
}

ShortestVectorsResult shortest_vectors(const ConvexBody& k, const Lattice& lat, const Rat& eps) {
  if (!k.symmetric()) throw input_error("shortest_vectors: body must be symmetric (symmetrize first)");
  if (eps <= 0) throw input_error("shortest_vectors: eps must be positive");
  if (k.dim() != lat.dim()) throw input_error("shortest_vectors: dimension mismatch");

  // Seed scale: gauge of an l2-shortest vector, upper-bracketed.
  SvpL2Result l2 = svp_l2(lat);
  GaugeValue seed = k.gauge_exact(l2.points.front().ambient);
  Rat scale = seed.is_sqrt ? sqrt_bracket_rel(seed.v).second : seed.v;

  QVec origin(lat.dim(), Rat(0));
  auto has_nonzero_at = [&](const Rat& s) {
    bool found = false;
    lattice_enum_visit(k, origin, s, lat, Rat(1, 1000), [&](LatticePoint&& p) {
      for (const Int& c : p.coeffs)
        if (c != 0) {
          found = true;
          return false;
        }
      return true;
    });
    return found;
  };

  // Factor-2 bracketing downwards, then one exact enumeration at the final
  // scale.  lambda_1 > 0 bounds the number of halvings.
  while (has_nonzero_at(scale / 2)) scale /= 2;

  PointStream cands = lattice_enum(k, origin, scale, lat, Rat(1, 1000));
  ShortestVectorsResult res;
  bool have = false;
  for (const LatticePoint& p : cands) {
    bool zero = true;
    for (const Int& c : p.coeffs)
      if (c != 0) zero = false;
    if (zero) continue;
    GaugeValue g = k.gauge_exact(p.ambient);
    if (!have || gauge_leq(g, res.lambda1)) {
      if (!have || !gauge_eq(g, res.lambda1)) res.points.clear();
      res.lambda1 = g;
      have = true;
      res.points.push_back(p);
    }
  }
  if (!have) throw internal_error("shortest_vectors: empty candidate set");
  // cands is sorted, so res.points is too.
  return res;
}

}  // namespace latspar
