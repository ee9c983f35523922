#pragma once

#include <cstdint>
#include <vector>

#include "latspar/linalg.hpp"
#include "latspar/rational.hpp"

namespace latspar {

// Deterministic trial division; no probabilistic primality anywhere.
bool is_prime(const Int& n);
bool is_prime_i64(std::int64_t n);

// Smallest prime p with n < p < 4n/3 when n > 1000, else 3.  The prime-gap
// bound guarantees existence; a miss raises internal_error.
Int find_prime(const Int& n);

// Canonical line representative: first nonzero entry equals 1.  Lines are
// emitted in lexicographic order of their representative, e.g. for p=3, n=2:
// (0,1), (1,0), (1,1), (1,2).
bool is_canonical_line(const ModVec& v);
ModVec canonical_line_of(const ModVec& v, std::int64_t p);

// Lazy stream over Lines(Z_p^n); count can be astronomically larger than
// anything we would materialize.
class LineStream {
 public:
  LineStream(std::int64_t p, int n);
  // Fills `out` with the next representative; false once exhausted.
  bool next(ModVec& out);
  Int count() const;  // (p^n - 1)/(p - 1)

 private:
  std::int64_t p_;
  int n_;
  int lead_;  // index of the leading 1 in the current block
  ModVec cur_;
  bool done_ = false;
  bool fresh_ = true;
};

// Materialized lines, for small p^n only (tests, CLI).
std::vector<ModVec> all_lines(std::int64_t p, int n);

// Columns of an n x (n-1) matrix spanning q^perp = {y : <q,y> = 0 (mod p)}.
// Returned as a list of column vectors; requires q != 0 mod p and n >= 2.
std::vector<ModVec> complement_basis(const ModVec& q, std::int64_t p);

std::int64_t dot_mod_p(const ModVec& x, const ModVec& y, std::int64_t p);

}  // namespace latspar
