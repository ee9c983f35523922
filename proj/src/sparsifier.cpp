#include "latspar/sparsifier.hpp"

#include <algorithm>
#include <random>

#include "latspar/oracle.hpp"

namespace latspar {

namespace {

QVec sub_vec(const QVec& x, const QVec& y) {
  QVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

std::int64_t p_to_i64(const Int& p) {
  // products of two residues must stay inside int64
  if (!p.fits_slong_p() || p >= Int(1) << 31) throw input_error("prime too large for this build");
  return p.get_si();
}

// counts for a candidate a over s; distinct uses a residue bitmap
void count_conditions(const std::vector<ModVec>& s, const ModVec& a, std::int64_t p, long* zeros,
                      long* distinct) {
  std::vector<bool> seen(static_cast<size_t>(p), false);
  long z = 0, d = 0;
  for (const ModVec& y : s) {
    std::int64_t r = dot_mod_p(a, y, p);
    if (r == 0) ++z;
    if (!seen[static_cast<size_t>(r)]) {
      seen[static_cast<size_t>(r)] = true;
      ++d;
    }
  }
  *zeros = z;
  *distinct = d;
}

bool conditions_hold(std::int64_t p, long zeros, long distinct) {
  return zeros <= 6 && 3 * distinct >= p + 2;
}

ModMat modmat_mul(const ModMat& x, const ModMat& y, std::int64_t p) {
  size_t rows = x.size(), inner = y.size(), cols = y[0].size();
  ModMat out(rows, ModVec(cols, 0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (x[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) out[i][j] = (out[i][j] + x[i][k] * y[k][j]) % p;
    }
  return out;
}

}  // namespace

GoodVectorResult good_vector(std::vector<ModVec> s, const Int& p) {
  if (s.empty()) throw input_error("good_vector: empty set");
  int n = static_cast<int>(s[0].size());
  if (n < 1) throw input_error("good_vector: zero-dimensional set");
  if (!is_prime(p)) throw input_error("good_vector: p is not prime");
  std::int64_t pi = p_to_i64(p);

  for (auto& y : s) {
    if (static_cast<int>(y.size()) != n) throw input_error("good_vector: ragged set");
    for (auto& e : y) {
      e %= pi;
      if (e < 0) e += pi;
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  bool has_zero = std::any_of(s.begin(), s.end(), [](const ModVec& y) {
    return std::all_of(y.begin(), y.end(), [](std::int64_t e) { return e == 0; });
  });
  if (!has_zero) throw input_error("good_vector: 0 must be in S");

  long size = static_cast<long>(s.size());
  if (n > 1 && !(1000 < size && size < pi && 3 * pi < 4 * size))
    throw input_error("good_vector: need 1000 < |S| < p < 4|S|/3");

  auto finish = [&](const ModVec& a_full) {
    long zeros = 0, distinct = 0;
    count_conditions(s, a_full, pi, &zeros, &distinct);
    if (!conditions_hold(pi, zeros, distinct))
      throw internal_error("good_vector: lifted vector fails conditions (existence violated)");
    return GoodVectorResult{a_full, zeros, distinct};
  };

  if (n == 1) {
    // a = 1 is the only candidate up to scaling; sizes outside the stated
    // range can make the conditions unsatisfiable, which is the caller's
    // problem rather than a search failure
    long zeros = 0, distinct = 0;
    count_conditions(s, ModVec{1}, pi, &zeros, &distinct);
    if (!conditions_hold(pi, zeros, distinct))
      throw input_error("good_vector: n = 1 set cannot meet the conditions for this p");
    return GoodVectorResult{ModVec{1}, zeros, distinct};
  }

  // P in Z_p^{n0 x n}, invariant |P s| = |s|; current projected set kept
  // materialized (int64 only, never ambient points).
  ModMat proj(n, ModVec(n, 0));
  for (int i = 0; i < n; ++i) proj[i][i] = 1;
  std::vector<ModVec> cur = s;

  for (int n0 = n; n0 >= 3; --n0) {
    LineStream lines(pi, n0);
    ModVec q;
    bool reduced = false;
    while (lines.next(q)) {
      std::vector<ModVec> cols = complement_basis(q, pi);  // n0 x (n0-1)
      // project: y -> B^T y
      std::vector<ModVec> next(cur.size());
      for (size_t t = 0; t < cur.size(); ++t) {
        ModVec img(n0 - 1);
        for (int c = 0; c < n0 - 1; ++c) img[c] = dot_mod_p(cols[c], cur[t], pi);
        next[t] = std::move(img);
      }
      std::vector<ModVec> sorted = next;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      // no collisions: fold B^T into P and descend
      ModMat bt(n0 - 1, ModVec(n0));
      for (int c = 0; c < n0 - 1; ++c) bt[c] = cols[c];
      proj = modmat_mul(bt, proj, pi);
      cur = std::move(next);
      reduced = true;
      break;
    }
    if (!reduced)
      throw internal_error("good_vector: no collision-free projection (existence violated)");
  }

  // scan Lines(Z_p^2) on the projected set
  LineStream lines(pi, 2);
  ModVec a2;
  while (lines.next(a2)) {
    long zeros = 0, distinct = 0;
    count_conditions(cur, a2, pi, &zeros, &distinct);
    if (!conditions_hold(pi, zeros, distinct)) continue;
    // lift a = P^T a2
    ModVec a_full(n, 0);
    for (int i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (size_t r = 0; r < proj.size(); ++r) acc = (acc + proj[r][i] * a2[r]) % pi;
      a_full[i] = acc;
    }
    return finish(a_full);
  }
  throw internal_error("good_vector: line scan exhausted (existence violated)");
}

namespace {

// Enumerates scale*Ksym cap L as exact coefficient vectors; reduction mod p
// happens once the prime is known.
std::vector<ZVec> enum_coeff_set(const ConvexBody& ksym, const Lattice& lat, const Rat& scale,
                                 const Rat& enum_eps) {
  std::vector<ZVec> out;
  QVec origin(lat.dim(), Rat(0));
  lattice_enum_visit(ksym, origin, scale, lat, enum_eps, [&](LatticePoint&& pt) {
    out.push_back(std::move(pt.coeffs));
    return true;
  });
  return out;
}

std::vector<ModVec> coeffs_mod_p(const std::vector<ZVec>& coeffs, std::int64_t p) {
  std::vector<ModVec> out(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    ModVec v(coeffs[i].size());
    for (size_t j = 0; j < coeffs[i].size(); ++j) {
      Int r = coeffs[i][j] % p;
      if (r < 0) r += p;
      v[j] = r.get_si();
    }
    out[i] = std::move(v);
  }
  return out;
}

void check_injective_mod_p(std::vector<ModVec> s, size_t n_points) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() != n_points)
    throw internal_error("sparsifier: coefficient reduction mod p is not injective");
}

QVec dual_times_modvec(const Lattice& lat, const ModVec& a) {
  QVec av(a.size());
  for (size_t i = 0; i < a.size(); ++i) av[i] = Rat(static_cast<long>(a[i]));
  return qmat_apply(lat.dual(), av);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection sampling; std::uniform_int_distribution is not portable
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

}  // namespace

std::pair<Lattice, SparsifierReport> sparsify(const ConvexBody& k, const Lattice& lat,
                                              const Rat& t) {
  if (t < 0) throw input_error("sparsify: t must be >= 0");
  if (k.dim() != lat.dim()) throw input_error("sparsify: dimension mismatch");
  int n = lat.dim();

  ConvexBody ksym = symmetrize(k);
  // shortest vector under the symmetrized gauge; the lexicographically
  // smallest representative makes the choice deterministic
  ShortestVectorsResult sv = shortest_vectors(ksym, lat, Rat(1, 3));
  const LatticePoint& y = sv.points.front();
  Rat lambda = ksym.gauge(y.ambient, Rat(1, 2)).value;
  if (lambda <= 0) throw internal_error("sparsify: nonpositive lambda estimate");

  Rat epsilon = pow_rat(Rat(1, 7), static_cast<unsigned long>(n) + 5);

  // k_levels = max{j >= 0 : (3/2)(3^j - 1) lambda <= t}: the exact rational
  // form of floor(ln(2t/(3 lambda) + 1) / ln 3)
  long k_levels = 0;
  {
    Rat pow3(3);  // 3^{k_levels + 1}
    while (Rat(3, 2) * (pow3 - 1) * lambda <= t) {
      ++k_levels;
      pow3 *= 3;
      if (k_levels > 64) throw input_error("sparsify: t/lambda too large (level cap)");
    }
  }

  SparsifierReport report;
  report.dim = n;
  report.t = t;
  report.lambda = lambda;
  report.epsilon = epsilon;
  report.k = k_levels;

  Lattice current = lat;
  Rat level_scale_base = (1 - epsilon) * lambda;
  Rat pow3(1);
  for (long i = 0; i < k_levels; ++i) {
    Rat scale = pow3 * level_scale_base;  // 3^i (1 - eps) lambda
    Rat enum_eps = epsilon * lambda * ksym.inradius();
    std::vector<ZVec> coeffs = enum_coeff_set(ksym, current, scale, enum_eps);
    Int point_count(static_cast<unsigned long>(coeffs.size()));

    SparsifierLevel level;
    level.index = static_cast<int>(i);
    level.lambda_scale = pow3 * lambda;
    level.point_count = point_count;

    if (point_count > 1000) {
      Int p = find_prime(point_count);
      std::int64_t pi = p_to_i64(p);
      std::vector<ModVec> s = coeffs_mod_p(coeffs, pi);
      check_injective_mod_p(s, coeffs.size());
      GoodVectorResult gv = good_vector(std::move(s), p);
      QVec w = dual_times_modvec(current, gv.a);
      current = sublattice_mod(current, w, p);
      level.prime = p;
      level.a = gv.a;
      level.w = std::move(w);
    }
    level.sublattice_det = current.det_abs();
    report.levels.push_back(std::move(level));
    pow3 *= 3;
  }
  return {std::move(current), std::move(report)};
}

std::pair<Lattice, SparsifierReport> sparsify_randomized(const ConvexBody& k, const Lattice& lat,
                                                         const Rat& t, std::uint64_t seed,
                                                         long retry_budget) {
  if (t < 0) throw input_error("sparsify_randomized: t must be >= 0");
  if (k.dim() != lat.dim()) throw input_error("sparsify_randomized: dimension mismatch");
  int n = lat.dim();

  ConvexBody ksym = symmetrize(k);
  // One modular restriction at scale t/3: the restricted lattice inflates
  // distances by at most 3*(t/3) = t and bounds counts at scale t.
  Rat scale = t / 3;
  Rat enum_eps = ksym.inradius() * (1 + scale) / 1000;

  SparsifierReport report;
  report.dim = n;
  report.t = t;
  report.lambda = scale;
  report.epsilon = 0;
  report.k = 1;
  report.randomized = true;
  report.seed = seed;

  std::vector<ZVec> coeffs = enum_coeff_set(ksym, lat, scale, enum_eps);
  Int point_count(static_cast<unsigned long>(coeffs.size()));

  SparsifierLevel level;
  level.index = 0;
  level.lambda_scale = scale;
  level.point_count = point_count;

  if (point_count <= 1000) {
    // w = 0 keeps the lattice; counting bound already holds
    level.sublattice_det = lat.det_abs();
    report.levels.push_back(std::move(level));
    return {lat, std::move(report)};
  }

  Int p = find_prime(point_count);
  std::int64_t pi = p_to_i64(p);
  std::vector<ModVec> s = coeffs_mod_p(coeffs, pi);
  check_injective_mod_p(s, coeffs.size());

  std::mt19937_64 rng(seed);
  ModVec a(n, 0);
  long draws = 0;
  bool accepted = false;
  while (draws < retry_budget) {
    ++draws;
    for (int i = 0; i < n; ++i)
      a[i] = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(pi)));
    long zeros = 0, distinct = 0;
    count_conditions(s, a, pi, &zeros, &distinct);
    if (conditions_hold(pi, zeros, distinct)) {
      accepted = true;
      break;
    }
  }
  if (!accepted)
    throw internal_error("sparsify_randomized: retry budget exhausted (expected O(1) draws)");
  report.retries = draws - 1;

  QVec w = dual_times_modvec(lat, a);
  Lattice out = sublattice_mod(lat, w, p);
  level.prime = p;
  level.a = std::move(a);
  level.w = std::move(w);
  level.sublattice_det = out.det_abs();
  report.levels.push_back(std::move(level));
  return {std::move(out), std::move(report)};
}

LatticeDistance lattice_distance(const ConvexBody& k, const Lattice& lat, const QVec& x) {
  if (k.dim() != lat.dim() || static_cast<int>(x.size()) != lat.dim())
    throw input_error("lattice_distance: dimension mismatch");
  // Anchor with the exact l2-closest point, then enumerate the gauge ball
  // that provably contains every candidate at least as close.
  CvpL2Result anchor = cvp_l2(lat, x);
  GaugeValue best = k.gauge_exact(sub_vec(anchor.points.front().ambient, x));
  if (best.zero()) {
    LatticeDistance res;
    res.distance = GaugeValue::exact(Rat(0));
    res.closest = {anchor.points.front()};
    return res;
  }
  Rat s0 = best.is_sqrt ? sqrt_bracket_rel(best.v).second : best.v;

  LatticeDistance res;
  res.distance = best;
  PointStream cands = lattice_enum(k, x, s0, lat, Rat(1, 1000));
  for (const LatticePoint& pt : cands) {
    GaugeValue g = k.gauge_exact(sub_vec(pt.ambient, x));
    if (gauge_leq(g, res.distance)) {
      if (!gauge_eq(g, res.distance)) res.closest.clear();
      res.distance = g;
      res.closest.push_back(pt);
    }
  }
  if (res.closest.empty()) throw internal_error("lattice_distance: lost the anchor point");
  return res;
}

SparsifierVerification verify_sparsifier(const ConvexBody& k, const Lattice& lat,
                                         const Lattice& sub, const Rat& t,
                                         const std::vector<QVec>& targets) {
  if (t < 0) throw input_error("verify_sparsifier: t must be >= 0");
  for (int j = 0; j < sub.dim(); ++j)
    if (!lat.contains(sub.basis().col(j)))
      throw input_error("verify_sparsifier: second lattice is not a sublattice of the first");

  ConvexBody ksym = symmetrize(k);
  SparsifierVerification out;
  out.max_translate_count = 0;
  for (const QVec& x : targets) {
    SparsifierTargetCheck chk;
    chk.target = x;
    chk.dist_full = lattice_distance(k, lat, x).distance;
    chk.dist_sub = lattice_distance(k, sub, x).distance;
    chk.distance_ok = gauge_leq_plus(chk.dist_sub, chk.dist_full, t);
    chk.translate_count = count_points(ksym, t, sub, x);
    if (!chk.distance_ok) out.distance_ok = false;
    if (chk.translate_count > out.max_translate_count)
      out.max_translate_count = chk.translate_count;
    out.targets.push_back(std::move(chk));
  }
  return out;
}

}  // namespace latspar
