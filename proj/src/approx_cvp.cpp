#include "latspar/approx_cvp.hpp"

#include "latspar/enumeration.hpp"

namespace latspar {

namespace {

QVec sub_vec(const QVec& x, const QVec& y) {
  QVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

}  // namespace

CvpResult approx_cvp(const ConvexBody& k, const Lattice& lat, const QVec& x, const Rat& eps) {
  if (eps <= 0 || eps > 1) throw input_error("approx_cvp: eps must lie in (0, 1]");
  if (k.dim() != lat.dim() || static_cast<int>(x.size()) != lat.dim())
    throw input_error("approx_cvp: dimension mismatch");

  CvpResult res;
  if (lat.contains(x)) {
    res.points.push_back(lat.make_point(lat.coeffs_of(x)));
    res.distance_bound = 0;
    res.trace = {Rat(0), Rat(0), Rat(0), Rat(0), {}};
    return res;
  }

  // l <= ||z - x||_2 / R <= d_K(L, x) for the l2-closest z; a rational lower
  // bracket keeps every inequality the analysis needs.
  CvpL2Result l2 = cvp_l2(lat, x);
  Rat l = sqrt_bracket_rel(l2.dist_sq).first / k.circumradius();
  Rat eps0 = (eps / 9) * (l < 1 ? l : Rat(1));

  Rat d = l / 2;
  Rat enum_eps = k.inradius() * eps0;
  Rat d_tilde;
  bool found = false;
  Lattice sparse = lat;  // final loop iteration's sparsifier survives the loop
  CvpTrace trace;
  trace.l = l;
  trace.eps0 = eps0;

  int guard = 0;
  while (!found) {
    if (++guard > 300) throw internal_error("approx_cvp: doubling loop failed to terminate");
    d *= 2;
    auto [lp, rep] = sparsify(k, lat, (eps / 3) * d);
    sparse = std::move(lp);
    trace.sparsifier_reports.push_back(std::move(rep));

    Rat scale = (1 + eps / 3) * d;
    Rat cap = scale + eps0;
    lattice_enum_visit(k, x, scale, sparse, enum_eps, [&](LatticePoint&& y) {
      Rat est = k.gauge(sub_vec(y.ambient, x), eps0).value;
      if (!found || est < d_tilde) d_tilde = est;
      if (cap < d_tilde) d_tilde = cap;
      found = true;
      return true;
    });
  }
  trace.d_f = d;
  trace.d_tilde = d_tilde;

  // Certified output ball; the enumeration contract allows gauge slack eps0
  // past d_tilde + eps0, hence the bound d_tilde + 2*eps0.
  res.distance_bound = d_tilde + 2 * eps0;
  PointStream final_set = lattice_enum(k, x, d_tilde + eps0, sparse, enum_eps);
  for (const LatticePoint& y : final_set) {
    if (k.gauge_leq_scale(sub_vec(y.ambient, x), res.distance_bound))
      res.points.push_back(y);
  }
  if (res.points.empty()) throw internal_error("approx_cvp: empty result set");
  res.trace = std::move(trace);
  return res;
}

}  // namespace latspar
