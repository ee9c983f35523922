#include "latspar/oracle.hpp"

#include <algorithm>

#include "latspar/modp.hpp"

namespace latspar {

namespace {

QVec sub(const QVec& x, const QVec& y) {
  QVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

}  // namespace

BruteCvpResult brute_cvp(const ConvexBody& k, const Lattice& lat, const QVec& x, long coeff_box) {
  if (coeff_box < 0) throw input_error("brute_cvp: negative box");
  int n = lat.dim();
  ZVec z(n, Int(-coeff_box));
  BruteCvpResult res;
  bool have = false;
  while (true) {
    LatticePoint p = lat.make_point(z);
    GaugeValue g = k.gauge_exact(sub(p.ambient, x));
    if (!have || gauge_leq(g, res.distance)) {
      if (!have || !gauge_eq(g, res.distance)) res.argmin.clear();
      res.distance = g;
      res.argmin.push_back(std::move(p));
      have = true;
    }
    // odometer over [-box, box]^n, last coordinate fastest
    int i = n - 1;
    while (i >= 0 && z[i] == coeff_box) {
      z[i] = -coeff_box;
      --i;
    }
    if (i < 0) break;
    ++z[i];
  }
  std::sort(res.argmin.begin(), res.argmin.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return coeff_less(a.coeffs, b.coeffs); });
  return res;
}

long certified_coeff_box(const ConvexBody& k, const Lattice& lat, const QVec& x) {
  int n = lat.dim();
  // Anchor candidate: plain coordinate rounding (independent of the solver's
  // LLL-conditioned path).
  QVec coords = lat.coords(x);
  ZVec z0(n);
  for (int i = 0; i < n; ++i) z0[i] = round_rat(coords[i]);
  GaugeValue g0 = k.gauge_exact(sub(lat.point(z0), x));
  Rat g0_ub = g0.is_sqrt ? (g0.v == 0 ? Rat(0) : sqrt_bracket_rel(g0.v).second) : g0.v;

  // |z_i - coords_i| <= ||row_i(B^{-1})||_2 * ||y - x||_2 <= rn_i * R * g0.
  Rat radius = k.circumradius() * g0_ub;
  Rat box(0);
  for (int i = 0; i < n; ++i) {
    Rat rn2(0);
    for (int j = 0; j < n; ++j) rn2 += lat.dual().at(j, i) * lat.dual().at(j, i);
    Rat rn = rn2 == 0 ? Rat(0) : sqrt_upper(rn2, Rat(1, 1000));
    Rat ci = coords[i] < 0 ? Rat(-coords[i]) : coords[i];
    Rat need = ci + rn * radius;
    if (need > box) box = need;
  }
  Int b = ceil_rat(box) + 1;
  if (!b.fits_slong_p()) throw input_error("certified_coeff_box: box does not fit a long");
  return b.get_si();
}

Int count_points(const ConvexBody& k, const Rat& scale, const Lattice& lat, const QVec& center) {
  if (scale < 0) throw input_error("count_points: negative scale");
  Int count(0);
  lattice_enum_visit(k, center, scale, lat, Rat(1, 2), [&](LatticePoint&&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<CountReport> check_counting_bounds(const ConvexBody& k, const Lattice& lat,
                                               const Rat& d, const std::vector<QVec>& centers) {
  if (d < 0) throw input_error("check_counting_bounds: negative d");
  int n = lat.dim();
  ConvexBody ksym = symmetrize(k);

  // lambda_1(K cap -K, L), upper-bracketed when irrational: a smaller RHS,
  // so a pass certifies the true bound.
  GaugeValue l1 = shortest_vectors(ksym, lat, Rat(1, 3)).lambda1;
  Rat l1_ub = l1.is_sqrt ? sqrt_bracket_rel(l1.v).second : l1.v;

  Int base_count = count_points(ksym, Rat(1), lat, QVec(n, Rat(0)));

  Rat inv_gamma_n = pow_rat(Rat(1) / k.gamma(), static_cast<unsigned long>(n));
  Rat bound_l1 = inv_gamma_n * pow_rat(1 + 2 * d / l1_ub, static_cast<unsigned long>(n));
  Rat bound_cnt = inv_gamma_n * pow_rat(2 * d + 1, static_cast<unsigned long>(n)) * Rat(base_count);
  Rat bound = bound_l1 < bound_cnt ? bound_l1 : bound_cnt;

  std::vector<CountReport> out;
  out.reserve(centers.size());
  for (const QVec& c : centers) {
    Int cnt = count_points(k, d, lat, c);
    bool pass = Rat(cnt) <= bound;
    out.push_back({c, cnt, bound, pass});
  }
  return out;
}

bool check_cauchy_davenport(std::int64_t p, const std::vector<std::vector<std::int64_t>>& sets) {
  if (!is_prime_i64(p)) throw input_error("check_cauchy_davenport: p must be prime");
  if (sets.empty()) throw input_error("check_cauchy_davenport: need at least one set");
  std::vector<bool> cur(p, false);
  long size_sum = 0;
  bool first = true;
  for (const auto& set : sets) {
    if (set.empty()) throw input_error("check_cauchy_davenport: empty summand");
    std::vector<bool> a(p, false);
    for (std::int64_t v : set) {
      std::int64_t r = v % p;
      if (r < 0) r += p;
      a[r] = true;
    }
    long sz = static_cast<long>(std::count(a.begin(), a.end(), true));
    size_sum += sz;
    if (first) {
      cur = a;
      first = false;
      continue;
    }
    std::vector<bool> next(p, false);
    for (std::int64_t i = 0; i < p; ++i) {
      if (!cur[i]) continue;
      for (std::int64_t j = 0; j < p; ++j)
        if (a[j]) next[(i + j) % p] = true;
    }
    cur = std::move(next);
  }
  long total = static_cast<long>(std::count(cur.begin(), cur.end(), true));
  long k = static_cast<long>(sets.size());
  long rhs = std::min<long>(p, size_sum - k + 1);
  return total >= rhs;
}

std::vector<QVec> fundamental_grid(const Lattice& lat, int den) {
  if (den < 1) throw input_error("fundamental_grid: denominator must be >= 1");
  int n = lat.dim();
  std::vector<QVec> out;
  ZVec idx(n, Int(0));
  while (true) {
    QVec frac(n);
    for (int i = 0; i < n; ++i) frac[i] = make_rat(idx[i], Int(den));
    out.push_back(qmat_apply(lat.basis(), frac));
    int i = n - 1;
    while (i >= 0 && idx[i] == den - 1) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

}  // namespace latspar
