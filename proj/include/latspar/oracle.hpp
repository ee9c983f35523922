#pragma once

#include <cstdint>
#include <vector>

#include "latspar/body.hpp"
#include "latspar/enumeration.hpp"
#include "latspar/lattice.hpp"

namespace latspar {

// Brute-force ground truth.  Everything here is independent of the solver
// code paths it is used to check: plain coefficient sweeps and set
// arithmetic only.

struct BruteCvpResult {
  GaugeValue distance;
  std::vector<LatticePoint> argmin;  // lex sorted, complete
};

// Exhaustive sweep of coefficient vectors in [-coeff_box, coeff_box]^n.
// The caller certifies that the true minimizer lies inside the box.
BruteCvpResult brute_cvp(const ConvexBody& k, const Lattice& lat, const QVec& x, long coeff_box);

// A box guaranteed to contain every candidate at gauge distance at most that
// of some known lattice point; derived from an l2 bound with exact row-norm
// arithmetic.  Suitable as brute_cvp's coeff_box.
long certified_coeff_box(const ConvexBody& k, const Lattice& lat, const QVec& x);

// Exact |(scale*K + center) cap L|.
Int count_points(const ConvexBody& k, const Rat& scale, const Lattice& lat, const QVec& center);

struct CountReport {
  QVec translate;
  Int count;
  Rat bound;
  bool pass;
};

// Checks both counting bounds at each sampled translate center:
//   |(dK + c) cap L| <= gamma^{-n} (1 + 2d/lambda_1(K cap -K, L))^n
//   |(dK + c) cap L| <= gamma^{-n} (2d + 1)^n |(K cap -K) cap L|
// The reported bound is the smaller (lambda_1-form) one; pass requires both.
std::vector<CountReport> check_counting_bounds(const ConvexBody& k, const Lattice& lat,
                                               const Rat& d, const std::vector<QVec>& centers);

// |A_1 + ... + A_k| >= min(p, sum |A_i| - k + 1) by exhaustive sumsets.
bool check_cauchy_davenport(std::int64_t p, const std::vector<std::vector<std::int64_t>>& sets);

// Centers of the fundamental domain grid {B * (i/den, j/den, ...)}.
std::vector<QVec> fundamental_grid(const Lattice& lat, int den);

}  // namespace latspar
