#include "latspar/rational.hpp"

#include <cctype>

namespace latspar {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw input_error("bad rational literal '" + text + "'");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw input_error("bad rational literal '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw input_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

bool is_perfect_square(const Rat& q, Rat* root) {
  if (q < 0) return false;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  if (root != nullptr) {
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = make_rat(rn, rd);
  }
  return true;
}

std::pair<Rat, Rat> sqrt_bracket(const Rat& q, const Rat& width) {
  if (q < 0) throw input_error("sqrt of negative rational");
  if (width <= 0) throw input_error("sqrt bracket width must be positive");
  if (q == 0) return {Rat(0), Rat(0)};
  // sqrt(a/b) = sqrt(a*b)/b; floor integer sqrt of a scaled square gives the
  // bracket.  Scale k so the bracket width 1/(k*b) is <= width.
  const Int& a = q.get_num();
  const Int& b = q.get_den();
  Int k = ceil_rat(Rat(1) / (width * b));
  if (k < 1) k = 1;
  Int m = a * b * k * k;
  Int s;
  mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());  // s = floor(sqrt(m))
  Int kb = k * b;
  Rat lo = make_rat(s, kb);
  if (s * s == m) return {lo, lo};
  Rat hi = make_rat(s + 1, kb);
  return {lo, hi};
}

Rat sqrt_upper(const Rat& q, const Rat& width) { return sqrt_bracket(q, width).second; }

Rat sqrt_lower(const Rat& q, const Rat& width) { return sqrt_bracket(q, width).first; }

std::pair<Rat, Rat> sqrt_bracket_rel(const Rat& q) {
  if (q <= 0) throw input_error("sqrt_bracket_rel: input must be positive");
  Rat width(1);
  while (true) {
    auto [lo, hi] = sqrt_bracket(q, width);
    if (lo == hi) return {lo, hi};
    if (lo > 0 && 2 * (hi - lo) <= lo) return {lo, hi};
    width /= 2;
  }
}

bool sqrt_leq_sqrt_plus(const Rat& a, const Rat& b, const Rat& t) {
  if (a <= b) return true;  // sqrt monotone, t >= 0
  // sqrt(a) <= sqrt(b) + t  <=>  a - b - t^2 <= 2 t sqrt(b); the left side
  // may be negative, otherwise square once more.
  Rat c = a - b - t * t;
  if (c <= 0) return true;
  if (t == 0) return false;
  return c * c <= 4 * t * t * b;
}

Rat pow_rat(const Rat& base, unsigned long e) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  return make_rat(num, den);  // already coprime, but canonicalize is cheap
}

Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

GaugeValue GaugeValue::sqrt_of(Rat square) {
  if (square < 0) throw input_error("negative squared gauge");
  Rat root;
  if (is_perfect_square(square, &root)) return {std::move(root), false};
  return {std::move(square), true};
}

bool gauge_leq(const GaugeValue& a, const GaugeValue& b) {
  if (a.is_sqrt == b.is_sqrt) return a.v <= b.v;
  if (a.is_sqrt) return a.v <= b.v * b.v;  // b >= 0 always for gauges
  return a.v * a.v <= b.v;
}

bool gauge_eq(const GaugeValue& a, const GaugeValue& b) {
  return gauge_leq(a, b) && gauge_leq(b, a);
}

bool gauge_leq_plus(const GaugeValue& a, const GaugeValue& b, const Rat& t) {
  if (!a.is_sqrt && !b.is_sqrt) return a.v <= b.v + t;
  Rat a2 = a.is_sqrt ? a.v : a.v * a.v;
  Rat b2 = b.is_sqrt ? b.v : b.v * b.v;
  return sqrt_leq_sqrt_plus(a2, b2, t);
}

bool gauge_leq_rat(const GaugeValue& a, const Rat& t) {
  if (!a.is_sqrt) return a.v <= t;
  if (t < 0) return false;
  return a.v <= t * t;
}

std::pair<Rat, Rat> gauge_bracket(const GaugeValue& g, const Rat& eps) {
  if (eps <= 0) throw input_error("oracle eps must be positive");
  if (!g.is_sqrt) return {g.v, g.v};
  // Shrink until the bracket fits the weak-oracle error eps*min(1, value);
  // lo <= value, so width <= eps*min(1, lo) suffices.
  Rat width = eps;
  while (true) {
    auto [lo, hi] = sqrt_bracket(g.v, width);
    if (hi == lo) return {lo, hi};
    if (lo > 0 && hi - lo <= eps && hi - lo <= eps * lo) return {lo, hi};
    width /= 2;
  }
}

std::string gauge_str(const GaugeValue& g) {
  if (!g.is_sqrt) return rat_str(g.v);
  return "sqrt(" + rat_str(g.v) + ")";
}

}  // namespace latspar
