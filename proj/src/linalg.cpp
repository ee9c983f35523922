#include "latspar/linalg.hpp"

#include <algorithm>
#include <utility>

#include "latspar/modp.hpp"

namespace latspar {

QMat qmat_identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat zmat_identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat qmat_mul(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw input_error("matrix product shape mismatch");
  QMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

ZMat zmat_mul(const ZMat& x, const ZMat& y) {
  if (x.cols != y.rows) throw input_error("matrix product shape mismatch");
  ZMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

QMat qmat_transpose(const QMat& m) {
  QMat out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.cols) throw input_error("matrix-vector shape mismatch");
  QVec out(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

namespace {

// Gauss-Jordan with first-nonzero pivoting; returns {rref steps applied to
// aug}, used by det/inverse/solve below.
Rat eliminate(QMat& m, QMat* aug) {
  if (m.rows != m.cols) throw input_error("square matrix required");
  int n = m.rows;
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      if (aug)
        for (int j = 0; j < aug->cols; ++j) std::swap(aug->at(piv, j), aug->at(col, j));
      det = -det;
    }
    Rat p = m.at(col, col);
    det *= p;
    Rat inv = Rat(1) / p;
    for (int j = 0; j < n; ++j) m.at(col, j) *= inv;
    if (aug)
      for (int j = 0; j < aug->cols; ++j) aug->at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = m.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
      if (aug)
        for (int j = 0; j < aug->cols; ++j) aug->at(i, j) -= f * aug->at(col, j);
    }
  }
  return det;
}

}  // namespace

Rat qmat_det(const QMat& m) {
  QMat work = m;
  return eliminate(work, nullptr);
}

Int zmat_det(const ZMat& m) {
  Rat d = qmat_det(zmat_to_qmat(m));
  if (d.get_den() != 1) throw internal_error("integer determinant not integral");
  return d.get_num();
}

QMat qmat_inverse(const QMat& m) {
  QMat work = m;
  QMat aug = qmat_identity(m.rows);
  if (eliminate(work, &aug) == 0) throw input_error("singular matrix");
  return aug;
}

QVec qmat_solve(const QMat& m, const QVec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows) throw input_error("solve shape mismatch");
  QMat work = m;
  QMat aug(m.rows, 1);
  for (int i = 0; i < m.rows; ++i) aug.at(i, 0) = rhs[i];
  if (eliminate(work, &aug) == 0) throw input_error("singular matrix");
  QVec out(m.rows);
  for (int i = 0; i < m.rows; ++i) out[i] = aug.at(i, 0);
  return out;
}

QMat zmat_to_qmat(const ZMat& m) {
  QMat out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

namespace {

// Reduced row echelon over Q; returns pivot columns.
std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<QVec> qmat_kernel(const QMat& m) {
  QMat work = m;
  std::vector<int> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols, Rat(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

int qmat_rank(const QMat& m) {
  QMat work = m;
  return static_cast<int>(rref(work).size());
}

namespace {

// Column HNF worker on an n x k matrix, k >= n, full row rank.  Mirrors every
// column operation into *u when given.
void hnf_core(ZMat& h, ZMat* u) {
  int n = h.rows;
  int k = h.cols;

  auto colop_combine = [&](ZMat& mm, int ci, int cj, const Int& x, const Int& y, const Int& a,
                           const Int& b) {
    // (col_ci, col_cj) <- (x*col_ci + y*col_cj, a*col_ci + b*col_cj)
    for (int r = 0; r < mm.rows; ++r) {
      Int vi = mm.at(r, ci), vj = mm.at(r, cj);
      mm.at(r, ci) = x * vi + y * vj;
      mm.at(r, cj) = a * vi + b * vj;
    }
  };
  auto colop_addmul = [&](ZMat& mm, int dst, int src, const Int& f) {
    for (int r = 0; r < mm.rows; ++r) mm.at(r, dst) += f * mm.at(r, src);
  };

  for (int i = 0; i < n; ++i) {
    // Clear row i to the right of column i with gcd column transforms.
    for (int j = i + 1; j < k; ++j) {
      if (h.at(i, j) == 0) continue;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h.at(i, i).get_mpz_t(),
                 h.at(i, j).get_mpz_t());
      Int a = -h.at(i, j) / g;
      Int b = h.at(i, i) / g;
      // det of [[x, a], [y, b]] = (x*h_ii + y*h_ij)/g = 1
      colop_combine(h, i, j, x, y, a, b);
      if (u) colop_combine(*u, i, j, x, y, a, b);
    }
    if (h.at(i, i) == 0) throw input_error("hnf: rank-deficient matrix (degenerate lattice)");
    if (h.at(i, i) < 0) {
      for (int r = 0; r < n; ++r) h.at(r, i) = -h.at(r, i);
      if (u)
        for (int r = 0; r < u->rows; ++r) u->at(r, i) = -u->at(r, i);
    }
    // Reduce earlier columns of row i into [0, h_ii).
    for (int j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, i).get_mpz_t());
      if (q != 0) {
        colop_addmul(h, j, i, -q);
        if (u) colop_addmul(*u, j, i, -q);
      }
    }
  }
}

}  // namespace

HnfResult hnf(const ZMat& m) {
  if (m.rows != m.cols) throw input_error("hnf requires a square matrix");
  ZMat h = m;
  ZMat u = zmat_identity(m.cols);
  hnf_core(h, &u);
  return {std::move(h), std::move(u)};
}

ZMat hnf_generators(const ZMat& gen) {
  if (gen.cols < gen.rows) throw input_error("hnf_generators: need at least n columns");
  ZMat h = gen;
  hnf_core(h, nullptr);
  for (int i = 0; i < h.rows; ++i)
    for (int j = h.rows; j < h.cols; ++j)
      if (h.at(i, j) != 0) throw internal_error("hnf_generators: residue in cleared columns");
  ZMat out(h.rows, h.rows);
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < h.rows; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

QMat dual_basis(const QMat& b) {
  return qmat_transpose(qmat_inverse(b));
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw input_error("inverse of 0 mod p");
  // extended euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw input_error("not invertible mod p");
  if (t < 0) t += p;
  return t;
}

namespace {

struct Echelon {
  ModMat m;
  std::vector<int> pivot_col;  // per pivot row
};

Echelon echelon_mod_p(ModMat m, std::int64_t p) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (auto& row : m)
    for (auto& v : row) {
      v %= p;
      if (v < 0) v += p;
    }
  Echelon e;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    std::int64_t inv = mod_inv(m[r][c], p);
    for (int j = c; j < cols; ++j) m[r][j] = (m[r][j] * inv) % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::int64_t f = m[i][c];
      for (int j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] - f * m[r][j]) % p;
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    e.pivot_col.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

std::vector<ModVec> kernel_mod_p(const ModMat& m, std::int64_t p) {
  if (!is_prime_i64(p)) throw input_error("kernel_mod_p: modulus is not prime");
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  Echelon e = echelon_mod_p(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;

  std::vector<ModVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModVec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < e.pivot_col.size(); ++r) {
      std::int64_t coeff = e.m[r][f];
      if (coeff != 0) v[e.pivot_col[r]] = p - coeff;
    }
    // Canonical form: first nonzero entry scaled to 1.
    for (std::int64_t entry : v) {
      if (entry == 0) continue;
      if (entry != 1) {
        std::int64_t inv = mod_inv(entry, p);
        for (auto& x : v) x = (x * inv) % p;
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_mod_p(ModMat m, std::int64_t p) {
  return static_cast<int>(echelon_mod_p(std::move(m), p).pivot_col.size());
}

}  // namespace latspar
