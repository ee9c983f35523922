#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latspar/body.hpp"
#include "latspar/enumeration.hpp"
#include "latspar/lattice.hpp"
#include "latspar/modp.hpp"

namespace latspar {

struct GoodVectorResult {
  ModVec a;       // in Z_p^n, entries in [0, p)
  long zeros;     // |{y in S : <a,y> = 0 (mod p)}|, <= 6
  long distinct;  // |{<a,y> mod p : y in S}|, >= (p+2)/3
};

// Deterministic good-vector search: dimension reduction through
// collision-free line quotients down to Z_p^2, then a scan of Lines(Z_p^2).
// Preconditions: 0 in S and 1000 < |S| < p < 4|S|/3, or n = 1.
// Exhausting all candidate lines raises internal_error ("existence
// violated"): under the stated preconditions a passing vector always
// exists, so running out certifies a bug.
GoodVectorResult good_vector(std::vector<ModVec> s, const Int& p);

struct SparsifierLevel {
  int index = 0;               // i
  Rat lambda_scale;            // 3^i * lambda (enumeration level scale)
  Int point_count;             // N
  std::optional<Int> prime;    // set when the N > 1000 branch ran
  std::optional<ModVec> a;
  std::optional<QVec> w;       // dual vector defining the sublattice
  Rat sublattice_det;          // |det| of the level's output lattice
};

struct SparsifierReport {
  int dim = 0;
  Rat t;
  Rat lambda;    // weak distance estimate of the shortest vector
  Rat epsilon;   // 7^{-(n+5)}
  long k = 0;    // number of levels
  bool randomized = false;
  std::uint64_t seed = 0;
  long retries = 0;  // rejected random draws before acceptance
  std::vector<SparsifierLevel> levels;
};

// Deterministic lattice sparsifier: returns L' subseteq L with
//   (1) d_K(L', x) <= d_K(L, x) + t for all x,
//   (2) translate point counts at scale t exponentially bounded,
// plus a full per-level audit record.
std::pair<Lattice, SparsifierReport> sparsify(const ConvexBody& k, const Lattice& lat,
                                              const Rat& t);

// Las Vegas variant: one random modular restriction at scale t/3, driven by
// a seeded deterministic PRNG; draws are rejected until the two good-vector
// conditions hold by direct counting.  Same output contract as sparsify.
std::pair<Lattice, SparsifierReport> sparsify_randomized(const ConvexBody& k, const Lattice& lat,
                                                         const Rat& t, std::uint64_t seed,
                                                         long retry_budget = 1000);

struct SparsifierTargetCheck {
  QVec target;
  GaugeValue dist_full;  // d_K(L, x)
  GaugeValue dist_sub;   // d_K(L', x)
  bool distance_ok;      // dist_sub <= dist_full + t
  Int translate_count;   // |t*(K cap -K) cap (L' - x)|
};

struct SparsifierVerification {
  bool distance_ok = true;
  Int max_translate_count;
  std::vector<SparsifierTargetCheck> targets;
};

// Checks both sparsifier properties on the given targets with exact
// enumeration-based distances; input_error if sub is not a sublattice.
SparsifierVerification verify_sparsifier(const ConvexBody& k, const Lattice& lat,
                                         const Lattice& sub, const Rat& t,
                                         const std::vector<QVec>& targets);

// Exact d_K(L, x) plus one witness set, by scaled-body enumeration.
struct LatticeDistance {
  GaugeValue distance;
  std::vector<LatticePoint> closest;  // complete argmin set, lex sorted
};
LatticeDistance lattice_distance(const ConvexBody& k, const Lattice& lat, const QVec& x);

}  // namespace latspar
