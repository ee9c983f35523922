#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "latspar/errors.hpp"

namespace latspar {

// All arithmetic on the decision path is exact.  Int/Rat are GMP types; a
// Rat is always canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// Accepts "num", "num/den" and optional leading '-'; no decimal notation.
Rat parse_rat(const std::string& text);

// "num" when integral, else "num/den".
std::string rat_str(const Rat& q);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
// Round half away from zero would break determinism claims nothing; we fix
// round(x) = floor(x + 1/2).
Int round_rat(const Rat& q);

// q == r*r for rational r >= 0?  If so and root != nullptr, stores r.
bool is_perfect_square(const Rat& q, Rat* root = nullptr);

// Exact bracket lo <= sqrt(q) <= hi with hi - lo <= width.  Requires q >= 0,
// width > 0.
std::pair<Rat, Rat> sqrt_bracket(const Rat& q, const Rat& width);

// Rational upper/lower bounds on sqrt(q) with absolute error < width.
Rat sqrt_upper(const Rat& q, const Rat& width);
Rat sqrt_lower(const Rat& q, const Rat& width);

// Positive bracket around sqrt(q), q > 0, with hi <= (3/2)*lo.
std::pair<Rat, Rat> sqrt_bracket_rel(const Rat& q);

// Decides sqrt(a) <= sqrt(b) + t exactly, for a, b >= 0 and t >= 0.
bool sqrt_leq_sqrt_plus(const Rat& a, const Rat& b, const Rat& t);

// base^e for small integer exponents.
Rat pow_rat(const Rat& base, unsigned long e);
Int pow_int(const Int& base, unsigned long e);

// An exact gauge value: sqrt(v) when is_sqrt, else v itself.  Every built-in
// body yields one of the two forms, so comparisons stay exact.
struct GaugeValue {
  Rat v;
  bool is_sqrt = false;

  static GaugeValue exact(Rat value) { return {std::move(value), false}; }
  // Collapses to the rational form when v is a perfect square.
  static GaugeValue sqrt_of(Rat square);

  bool zero() const { return v == 0; }
};

bool gauge_leq(const GaugeValue& a, const GaugeValue& b);
bool gauge_eq(const GaugeValue& a, const GaugeValue& b);
// a <= b + t, t rational >= 0.
bool gauge_leq_plus(const GaugeValue& a, const GaugeValue& b, const Rat& t);
// a <= t for rational t.
bool gauge_leq_rat(const GaugeValue& a, const Rat& t);

// Rational bracket of width <= 2*eps*min(1, value) around the gauge value,
// per the weak-oracle error model.  Returns {lo, hi}.
std::pair<Rat, Rat> gauge_bracket(const GaugeValue& g, const Rat& eps);

std::string gauge_str(const GaugeValue& g);

}  // namespace latspar
