#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latspar/linalg.hpp"
#include "latspar/rational.hpp"

namespace latspar {

struct LatticePoint {
  ZVec coeffs;   // coordinates in the lattice's basis
  QVec ambient;  // basis * coeffs

  bool operator==(const LatticePoint& o) const { return coeffs == o.coeffs; }
};

// Lexicographic order on the coefficient vector; the canonical order of
// every point set and stream in this library.
bool coeff_less(const ZVec& a, const ZVec& b);

// Full-rank lattice given by a nonsingular rational basis matrix whose
// columns are the basis vectors.  Immutable after construction.
class Lattice {
 public:
  explicit Lattice(QMat basis);

  int dim() const { return basis_.rows; }
  const QMat& basis() const { return basis_; }
  // Dual basis B^{-T}; generates the dual lattice.
  const QMat& dual() const { return dual_; }
  const Rat& det_abs() const { return det_abs_; }

  QVec point(const ZVec& coeffs) const;
  LatticePoint make_point(ZVec coeffs) const;
  // B^{-1} x, exact.
  QVec coords(const QVec& x) const;

  bool contains(const QVec& x) const;
  // Coefficient vector of a lattice member; input_error if x is not in L.
  ZVec coeffs_of(const QVec& x) const;

  // Canonical HNF basis of the same lattice (denominator-scaled integer HNF).
  QMat hnf_basis() const;
  bool same_lattice(const Lattice& other) const;
  // The same lattice re-represented by its canonical basis.
  Lattice canonical() const { return Lattice(hnf_basis()); }

 private:
  QMat basis_;
  QMat inv_;   // B^{-1}
  QMat dual_;  // B^{-T}
  Rat det_abs_;
};

// {y in L : <w, y> = 0 (mod p)} for w in the dual lattice; the result is
// HNF-canonical.  Index in L is 1 or p.
Lattice sublattice_mod(const Lattice& lat, const QVec& w, const Int& p);

// Exact LLL with delta = 3/4; same lattice, conditioned basis.  Used only to
// tame enumeration, never to decide outputs.
Lattice lll_reduce(const Lattice& lat);

// Basis file format: '#' comment lines, then n, then n rows of n entries
// ("num/den" or integer).  Columns are the basis vectors.
Lattice read_basis(std::istream& in);
Lattice read_basis_file(const std::string& path);
std::string format_basis(const QMat& basis);

QVec read_vector(std::istream& in, int dim);
QVec read_vector_file(const std::string& path, int dim);

}  // namespace latspar
