#include "latspar/lattice.hpp"

#include <fstream>

#include "latspar/modp.hpp"
#include <sstream>
#include <utility>

namespace latspar {

bool coeff_less(const ZVec& a, const ZVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Lattice::Lattice(QMat basis) : basis_(std::move(basis)) {
  if (basis_.rows != basis_.cols || basis_.rows == 0)
    throw input_error("lattice basis must be square and nonempty");
  for (Rat& e : basis_.a) e.canonicalize();
  inv_ = qmat_inverse(basis_);  // throws input_error when singular
  dual_ = qmat_transpose(inv_);
  det_abs_ = qmat_det(basis_);
  if (det_abs_ < 0) det_abs_ = -det_abs_;
}

QVec Lattice::point(const ZVec& coeffs) const {
  if (static_cast<int>(coeffs.size()) != dim()) throw input_error("coefficient dimension mismatch");
  QVec out(dim(), Rat(0));
  for (int j = 0; j < dim(); ++j) {
    if (coeffs[j] == 0) continue;
    Rat c(coeffs[j]);
    for (int i = 0; i < dim(); ++i) out[i] += basis_.at(i, j) * c;
  }
  return out;
}

LatticePoint Lattice::make_point(ZVec coeffs) const {
  QVec amb = point(coeffs);
  return {std::move(coeffs), std::move(amb)};
}

QVec Lattice::coords(const QVec& x) const {
  if (static_cast<int>(x.size()) != dim()) throw input_error("point dimension mismatch");
  return qmat_apply(inv_, x);
}

bool Lattice::contains(const QVec& x) const {
  QVec z = coords(x);
  for (const Rat& zi : z)
    if (zi.get_den() != 1) return false;
  return true;
}

ZVec Lattice::coeffs_of(const QVec& x) const {
  QVec z = coords(x);
  ZVec out(z.size());
  for (size_t i = 0; i < z.size(); ++i) {
    if (z[i].get_den() != 1) throw input_error("point is not a lattice member");
    out[i] = z[i].get_num();
  }
  return out;
}

QMat Lattice::hnf_basis() const {
  Int den(1);
  for (const Rat& e : basis_.a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
  ZMat scaled(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Rat v = basis_.at(i, j) * den;
      scaled.at(i, j) = v.get_num();
    }
  ZMat h = hnf(scaled).h;
  QMat out(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) out.at(i, j) = make_rat(h.at(i, j), den);
  return out;
}

bool Lattice::same_lattice(const Lattice& other) const {
  if (dim() != other.dim()) return false;
  return hnf_basis() == other.hnf_basis();
}

Lattice sublattice_mod(const Lattice& lat, const QVec& w, const Int& p) {
  if (!is_prime(p)) throw input_error("sublattice_mod: modulus is not prime");
  int n = lat.dim();
  if (static_cast<int>(w.size()) != n) throw input_error("sublattice_mod: dimension mismatch");

  // u = B^T w must be integral: that is exactly w in L*.
  ZVec u(n);
  for (int j = 0; j < n; ++j) {
    Rat dot(0);
    for (int i = 0; i < n; ++i) dot += lat.basis().at(i, j) * w[i];
    if (dot.get_den() != 1) throw input_error("sublattice_mod: w is not in the dual lattice");
    u[j] = dot.get_num();
  }

  // <w, Bz> = <u, z>, so work on the coefficient lattice: solutions of
  // <u, z> = 0 (mod p) are spanned by the lifted kernel plus p*Z^n.
  if (!p.fits_slong_p()) throw input_error("sublattice_mod: prime too large for this build");
  std::int64_t pi = static_cast<std::int64_t>(p.get_si());
  ModVec umod(n);
  for (int j = 0; j < n; ++j) {
    Int r = u[j] % p;
    if (r < 0) r += p;
    umod[j] = static_cast<std::int64_t>(r.get_si());
  }

  std::vector<ModVec> ker = kernel_mod_p(ModMat{umod}, pi);
  ZMat gen(n, n + static_cast<int>(ker.size()));
  for (int i = 0; i < n; ++i) gen.at(i, i) = p;
  for (size_t k = 0; k < ker.size(); ++k)
    for (int i = 0; i < n; ++i) gen.at(i, n + static_cast<int>(k)) = ker[k][i];

  ZMat coeff_basis = hnf_generators(gen);
  return Lattice(qmat_mul(lat.basis(), zmat_to_qmat(coeff_basis))).canonical();
}

Lattice lll_reduce(const Lattice& lat) {
  int n = lat.dim();
  std::vector<QVec> b(n);
  for (int j = 0; j < n; ++j) b[j] = lat.basis().col(j);

  std::vector<QVec> gs(n);
  std::vector<Rat> norm2(n);
  QMat mu(n, n);

  auto dot = [](const QVec& x, const QVec& y) {
    Rat acc(0);
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
  };
  auto recompute = [&]() {
    for (int i = 0; i < n; ++i) {
      gs[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu.at(i, j) = dot(b[i], gs[j]) / norm2[j];
        for (int k = 0; k < n; ++k) gs[i][k] -= mu.at(i, j) * gs[j][k];
      }
      norm2[i] = dot(gs[i], gs[i]);
      if (norm2[i] == 0) throw input_error("lll: basis is singular");
    }
  };

  recompute();
  const Rat delta(3, 4);
  int k = 1;
  while (k < n) {
    for (int j = k - 1; j >= 0; --j) {
      Int q = round_rat(mu.at(k, j));
      if (q != 0) {
        Rat qq(q);
        for (int i = 0; i < n; ++i) b[k][i] -= qq * b[j][i];
        recompute();
      }
    }
    if (norm2[k] >= (delta - mu.at(k, k - 1) * mu.at(k, k - 1)) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      recompute();
      k = k > 1 ? k - 1 : 1;
    }
  }

  QMat out(n, n);
  for (int j = 0; j < n; ++j) out.set_col(j, b[j]);
  return Lattice(out);
}

namespace {

struct TokenReader {
  std::istream& in;
  int line = 0;
  std::istringstream cur;

  explicit TokenReader(std::istream& s) : in(s) {}

  bool next(std::string& tok) {
    while (true) {
      if (cur >> tok) return true;
      std::string raw;
      if (!std::getline(in, raw)) return false;
      ++line;
      if (!raw.empty() && raw[0] == '#') continue;
      cur.clear();
      cur.str(raw);
    }
  }

  std::string require(const char* what) {
    std::string tok;
    if (!next(tok)) throw parse_error(line, std::string("expected ") + what + ", got end of file");
    return tok;
  }

  Rat require_rat(const char* what) {
    std::string tok = require(what);
    try {
      return parse_rat(tok);
    } catch (const input_error& e) {
      throw parse_error(line, e.what());
    }
  }
};

}  // namespace

Lattice read_basis(std::istream& in) {
  TokenReader tr(in);
  std::string tok = tr.require("dimension");
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error(tr.line, "bad dimension '" + tok + "'");
  int n = 0;
  try {
    n = std::stoi(tok);
  } catch (...) {
    throw parse_error(tr.line, "bad dimension '" + tok + "'");
  }
  if (n < 1 || n > 64) throw parse_error(tr.line, "dimension out of range");
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = tr.require_rat("matrix entry");
  return Lattice(m);
}

Lattice read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open basis file '" + path + "'");
  return read_basis(in);
}

std::string format_basis(const QMat& basis) {
  std::ostringstream out;
  out << "# lattice basis: columns are basis vectors; entries num/den or integer\n";
  out << basis.rows << "\n";
  for (int i = 0; i < basis.rows; ++i) {
    for (int j = 0; j < basis.cols; ++j) {
      if (j) out << ' ';
      out << rat_str(basis.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

QVec read_vector(std::istream& in, int dim) {
  TokenReader tr(in);
  QVec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = tr.require_rat("vector entry");
  std::string extra;
  if (tr.next(extra)) throw parse_error(tr.line, "trailing data '" + extra + "'");
  return v;
}

QVec read_vector_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open vector file '" + path + "'");
  return read_vector(in, dim);
}

}  // namespace latspar
