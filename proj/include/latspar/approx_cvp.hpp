#pragma once

#include <vector>

#include "latspar/body.hpp"
#include "latspar/lattice.hpp"
#include "latspar/sparsifier.hpp"

namespace latspar {

struct CvpTrace {
  Rat l;        // rational lower bracket of ||z - x||_2 / R
  Rat eps0;     // (eps/9) min(1, l)
  Rat d_f;      // final doubling-loop distance
  Rat d_tilde;  // weak distance estimate at loop exit
  std::vector<SparsifierReport> sparsifier_reports;  // one per doubling step
};

struct CvpResult {
  std::vector<LatticePoint> points;  // nonempty, lex sorted
  Rat distance_bound;                // every point has gauge(y - x) <= this
  CvpTrace trace;
};

// (1+eps)-approximate CVP under the gauge of K: sparsify, double the search
// radius until the enumeration sees a lattice point, then enumerate the
// certified ball.  Every returned y satisfies
// ||y - x||_K <= (1 + eps) d_K(L, x).
CvpResult approx_cvp(const ConvexBody& k, const Lattice& lat, const QVec& x, const Rat& eps);

}  // namespace latspar
