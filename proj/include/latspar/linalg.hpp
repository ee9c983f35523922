#pragma once

#include <cstdint>
#include <vector>

#include "latspar/rational.hpp"

namespace latspar {

// Dense matrices, row-major.  Throughout the library the columns of a basis
// matrix are the basis vectors.
template <typename T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  std::vector<T> col(int j) const {
    std::vector<T> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }
  void set_col(int j, const std::vector<T>& v) {
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using QMat = Mat<Rat>;
using ZMat = Mat<Int>;

QMat qmat_identity(int n);
ZMat zmat_identity(int n);

QMat qmat_mul(const QMat& x, const QMat& y);
ZMat zmat_mul(const ZMat& x, const ZMat& y);
QMat qmat_transpose(const QMat& m);
QVec qmat_apply(const QMat& m, const QVec& v);

Rat qmat_det(const QMat& m);
Int zmat_det(const ZMat& m);

// Exact inverse; throws input_error when singular.
QMat qmat_inverse(const QMat& m);

// Solves M x = rhs exactly (square M); throws input_error when singular.
QVec qmat_solve(const QMat& m, const QVec& rhs);

QMat zmat_to_qmat(const ZMat& m);

// Basis of the rational null space {x : M x = 0} (deterministic echelon
// construction; works for any shape).
std::vector<QVec> qmat_kernel(const QMat& m);
int qmat_rank(const QMat& m);

// Column-style Hermite normal form: H = M * U with U unimodular, H lower
// triangular, positive diagonal and 0 <= H[i][j] < H[i][i] for j < i.
// Requires full column rank (square input here); throws input_error otherwise.
struct HnfResult {
  ZMat h;
  ZMat u;
};
HnfResult hnf(const ZMat& m);

// HNF basis of the lattice spanned by the columns of an n x k generator
// matrix, k >= n, full row rank.  Returns the n x n canonical basis.
ZMat hnf_generators(const ZMat& gen);

// B^{-T}: the dual of a lattice basis.  <b_i, d_j> = delta_ij exactly.
QMat dual_basis(const QMat& b);

// Small prime fields fit in int64 throughout (p is always well below 2^31).
using ModVec = std::vector<std::int64_t>;
using ModMat = std::vector<ModVec>;  // row-major, rows are ModVec

std::int64_t mod_inv(std::int64_t a, std::int64_t p);

// Basis of {x : M x = 0 (mod p)}, deterministic echelon construction; the
// basis vectors are returned in order of their free column.  Throws
// input_error when p is not prime.
std::vector<ModVec> kernel_mod_p(const ModMat& m, std::int64_t p);

int rank_mod_p(ModMat m, std::int64_t p);

}  // namespace latspar
