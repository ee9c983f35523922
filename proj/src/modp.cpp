#include "latspar/modp.hpp"

#include <algorithm>

namespace latspar {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  Int d = 3;
  while (d * d <= n) {
    if (n % d == 0) return false;
    d += 2;
  }
  return true;
}

bool is_prime_i64(std::int64_t n) { return is_prime(Int(static_cast<long>(n))); }

Int find_prime(const Int& n) {
  if (n < 0) throw input_error("find_prime: negative input");
  if (n <= 1000) return Int(3);
  Int p = n + 1;
  while (!is_prime(p)) ++p;
  if (3 * p >= 4 * n)
    throw internal_error("prime gap violated: no prime strictly inside (N, 4N/3)");
  return p;
}

bool is_canonical_line(const ModVec& v) {
  for (std::int64_t e : v) {
    if (e == 0) continue;
    return e == 1;
  }
  return false;
}

ModVec canonical_line_of(const ModVec& v, std::int64_t p) {
  ModVec out = v;
  for (auto& e : out) {
    e %= p;
    if (e < 0) e += p;
  }
  for (std::int64_t e : out) {
    if (e == 0) continue;
    std::int64_t inv = mod_inv(e, p);
    for (auto& x : out) x = (x * inv) % p;
    return out;
  }
  throw input_error("zero vector spans no line");
}

LineStream::LineStream(std::int64_t p, int n) : p_(p), n_(n), lead_(n - 1), cur_(n, 0) {
  if (n < 1) throw input_error("lines: dimension must be >= 1");
  if (!is_prime_i64(p)) throw input_error("lines: modulus is not prime");
  cur_[lead_] = 1;
}

bool LineStream::next(ModVec& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
    out = cur_;
    return true;
  }
  // Odometer over the entries after the leading 1; on wrap, move the lead
  // left.  Blocks in decreasing lead position are exactly lexicographic
  // order of the representatives.
  int i = n_ - 1;
  while (i > lead_) {
    if (cur_[i] + 1 < p_) {
      ++cur_[i];
      out = cur_;
      return true;
    }
    cur_[i] = 0;
    --i;
  }
  if (lead_ == 0) {
    done_ = true;
    return false;
  }
  --lead_;
  std::fill(cur_.begin(), cur_.end(), 0);
  cur_[lead_] = 1;
  out = cur_;
  return true;
}

Int LineStream::count() const {
  Int pn = pow_int(Int(static_cast<long>(p_)), static_cast<unsigned long>(n_));
  return (pn - 1) / (Int(static_cast<long>(p_)) - 1);
}

std::vector<ModVec> all_lines(std::int64_t p, int n) {
  LineStream ls(p, n);
  if (ls.count() > 2000000) throw input_error("all_lines: too many lines to materialize");
  std::vector<ModVec> out;
  ModVec v;
  while (ls.next(v)) out.push_back(v);
  return out;
}

std::vector<ModVec> complement_basis(const ModVec& q, std::int64_t p) {
  if (q.size() < 2) throw input_error("complement_basis: dimension must be >= 2");
  std::vector<ModVec> basis = kernel_mod_p(ModMat{q}, p);
  if (basis.size() != q.size() - 1)
    throw input_error("complement_basis: q vanishes mod p");
  return basis;
}

std::int64_t dot_mod_p(const ModVec& x, const ModVec& y, std::int64_t p) {
  if (x.size() != y.size()) throw input_error("dot_mod_p: dimension mismatch");
  std::int64_t acc = 0;
  for (size_t i = 0; i < x.size(); ++i) acc = (acc + x[i] * y[i]) % p;
  if (acc < 0) acc += p;
  return acc;
}

}  // namespace latspar
