#include "doctest.h"
#include "latspar/rational.hpp"

using namespace latspar;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-6/8") == Rat(-3, 4));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("0") == 0);
  CHECK(rat_str(Rat(-3, 4)) == "-3/4");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1.5"), input_error);
  CHECK_THROWS_AS(parse_rat("1/0"), input_error);
  CHECK_THROWS_AS(parse_rat(""), input_error);
  CHECK_THROWS_AS(parse_rat("abc"), input_error);
}

TEST_CASE("canonical form is maintained") {
  Rat q = make_rat(Int(4), Int(-6));
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
}

TEST_CASE("floor, ceil and round") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(7, 2)) == 4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(round_rat(Rat(1, 2)) == 1);   // floor(x + 1/2)
  CHECK(round_rat(Rat(-1, 2)) == 0);
  CHECK(round_rat(Rat(5, 4)) == 1);
  CHECK(round_rat(Rat(-5, 4)) == -1);
}

TEST_CASE("perfect squares") {
  Rat root;
  CHECK(is_perfect_square(Rat(25, 4), &root));
  CHECK(root == Rat(5, 2));
  CHECK(is_perfect_square(Rat(0), &root));
  CHECK(root == 0);
  CHECK_FALSE(is_perfect_square(Rat(2)));
  CHECK_FALSE(is_perfect_square(Rat(4, 3)));
  CHECK_FALSE(is_perfect_square(Rat(-4)));
}

TEST_CASE("sqrt brackets") {
  auto [lo, hi] = sqrt_bracket(Rat(2), Rat(1, 1000));
  CHECK(lo * lo <= 2);
  CHECK(hi * hi >= 2);
  CHECK(hi - lo <= Rat(1, 1000));

  auto exact = sqrt_bracket(Rat(9, 16), Rat(1, 10));
  CHECK(exact.first == exact.second);
  CHECK(exact.first == Rat(3, 4));

  auto rel = sqrt_bracket_rel(Rat(1, 100000000));
  CHECK(rel.first > 0);
  CHECK(rel.first * rel.first <= Rat(1, 100000000));
  CHECK(rel.second * rel.second >= Rat(1, 100000000));
  CHECK(2 * (rel.second - rel.first) <= rel.first);
}

TEST_CASE("surd comparison sqrt(a) <= sqrt(b) + t") {
  // frozen from integer arithmetic: sqrt(8) = 2 sqrt(2) ~ 2.828
  CHECK(sqrt_leq_sqrt_plus(Rat(8), Rat(2), Rat(2)));        // 2.828 <= 1.414 + 2
  CHECK_FALSE(sqrt_leq_sqrt_plus(Rat(8), Rat(2), Rat(1)));  // 2.828 > 2.414
  CHECK(sqrt_leq_sqrt_plus(Rat(4), Rat(4), Rat(0)));
  CHECK(sqrt_leq_sqrt_plus(Rat(2), Rat(8), Rat(0)));
  CHECK_FALSE(sqrt_leq_sqrt_plus(Rat(9), Rat(4), Rat(0)));
  CHECK(sqrt_leq_sqrt_plus(Rat(9), Rat(4), Rat(1)));  // 3 <= 2 + 1 exactly
}

TEST_CASE("gauge values") {
  GaugeValue a = GaugeValue::sqrt_of(Rat(9, 4));  // collapses to 3/2
  CHECK_FALSE(a.is_sqrt);
  CHECK(a.v == Rat(3, 2));

  GaugeValue b = GaugeValue::sqrt_of(Rat(2));
  GaugeValue c = GaugeValue::exact(Rat(3, 2));
  CHECK(gauge_leq(b, c));        // sqrt(2) <= 3/2
  CHECK_FALSE(gauge_leq(c, b));
  CHECK(gauge_leq_plus(c, b, Rat(1)));  // 3/2 <= sqrt(2) + 1
  CHECK(gauge_leq_rat(b, Rat(3, 2)));
  CHECK_FALSE(gauge_leq_rat(b, Rat(7, 5)));  // 1.4 < sqrt(2)
  CHECK(gauge_eq(GaugeValue::sqrt_of(Rat(2)), GaugeValue::sqrt_of(Rat(2))));
}

TEST_CASE("gauge bracket obeys the weak-oracle contract") {
  for (const Rat& sq : {Rat(2), Rat(5, 7), Rat(1, 1000000), Rat(99991)}) {
    GaugeValue g{sq, true};
    Rat eps(1, 100);
    auto [lo, hi] = gauge_bracket(g, eps);
    CHECK(lo * lo <= sq);
    CHECK(hi * hi >= sq);
    // width <= eps * min(1, lo) <= eps * min(1, value)
    CHECK(hi - lo <= eps);
    CHECK(hi - lo <= eps * lo);
  }
}

TEST_CASE("pow helpers") {
  CHECK(pow_rat(Rat(1, 7), 3) == Rat(1, 343));
  CHECK(pow_rat(Rat(-2, 3), 2) == Rat(4, 9));
  CHECK(pow_int(Int(3), 5) == 243);
}
