#include <set>

#include "doctest.h"
#include "latspar/oracle.hpp"

using namespace latspar;

namespace {

QVec qv(std::initializer_list<Rat> xs) { return QVec(xs); }

Lattice z2() { return Lattice(qmat_identity(2)); }

ConvexBody hexagon() {
  QMat a(3, 2);
  a.at(0, 0) = 1;
  a.at(1, 1) = 1;
  a.at(2, 0) = -1;
  a.at(2, 1) = -1;
  return symmetrize(ConvexBody::polytope(a, {Rat(1), Rat(1), Rat(1)}));
}

std::set<ZVec> coeff_set(const std::vector<LatticePoint>& pts) {
  std::set<ZVec> out;
  for (const auto& p : pts) out.insert(p.coeffs);
  return out;
}

}  // namespace

TEST_CASE("brute_cvp fixed examples") {
  SUBCASE("l_inf quarter point: 25-point sweep") {
    ConvexBody cube = ConvexBody::lp_ball(LpKind::Linf, Rat(1), 2);
    BruteCvpResult r = brute_cvp(cube, z2(), qv({Rat(1, 4), Rat(1, 4)}), 2);
    CHECK(gauge_eq(r.distance, GaugeValue::exact(Rat(1, 4))));
    CHECK(coeff_set(r.argmin) == std::set<ZVec>{{Int(0), Int(0)}});
  }
  SUBCASE("l1 center point: four-way exact tie") {
    ConvexBody cross = ConvexBody::lp_ball(LpKind::L1, Rat(1), 2);
    BruteCvpResult r = brute_cvp(cross, z2(), qv({Rat(1, 2), Rat(1, 2)}), 2);
    CHECK(gauge_eq(r.distance, GaugeValue::exact(Rat(1))));
    CHECK(coeff_set(r.argmin) == std::set<ZVec>{{Int(0), Int(0)},
                                                {Int(0), Int(1)},
                                                {Int(1), Int(0)},
                                                {Int(1), Int(1)}});
  }
  SUBCASE("lattice member has distance zero") {
    ConvexBody cube = ConvexBody::lp_ball(LpKind::Linf, Rat(1), 2);
    BruteCvpResult r = brute_cvp(cube, z2(), qv({Rat(3), Rat(-2)}), 4);
    CHECK(r.distance.zero());
  }
}

TEST_CASE("brute_cvp agrees with cvp_l2 on l2 instances") {
  unsigned long state = 5150;
  auto rnd = [&]() {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return static_cast<long>((state >> 33) % 9) - 4;
  };
  ConvexBody ball2 = ConvexBody::lp_ball(LpKind::L2, Rat(1), 2);
  ConvexBody ball3 = ConvexBody::lp_ball(LpKind::L2, Rat(1), 3);
  int done = 0, guard = 0;
  while (done < 40 && ++guard < 500) {
    int n = guard % 2 ? 2 : 3;
    QMat m(n, n);
    do {
      for (auto& v : m.a) v = rnd();
    } while (qmat_det(m) == 0);
    Lattice lat(m);
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = make_rat(Int(rnd()), Int(3));
    const ConvexBody& k = n == 2 ? ball2 : ball3;
    long box = certified_coeff_box(k, lat, x);
    if (box > 8) continue;
    ++done;
    BruteCvpResult brute = brute_cvp(k, lat, x, box);
    CvpL2Result exact = cvp_l2(lat, x);
    CHECK(coeff_set(brute.argmin) == coeff_set(exact.points));
    Rat b2 = brute.distance.is_sqrt ? brute.distance.v : brute.distance.v * brute.distance.v;
    CHECK(b2 == exact.dist_sq);
  }
  CHECK(done == 40);
}

TEST_CASE("count_points fixed examples") {
  ConvexBody ball = ConvexBody::lp_ball(LpKind::L2, Rat(1), 2);
  // x^2 + y^2 <= 4 has 13 integer solutions
  CHECK(count_points(ball, Rat(2), z2(), qv({Rat(0), Rat(0)})) == 13);
  // shifted: 12
  CHECK(count_points(ball, Rat(2), z2(), qv({Rat(1, 2), Rat(1, 2)})) == 12);
  // scale 0 off the lattice: 0
  CHECK(count_points(ball, Rat(0), z2(), qv({Rat(1, 2), Rat(1, 2)})) == 0);
  CHECK(count_points(ball, Rat(0), z2(), qv({Rat(1), Rat(1)})) == 1);
}

TEST_CASE("count_points equals a direct sweep") {
  ConvexBody hex = hexagon();
  for (long num = 0; num <= 6; ++num) {
    Rat scale = make_rat(Int(num), Int(2));
    Int got = count_points(hex, scale, z2(), qv({Rat(1, 3), Rat(-1, 7)}));
    long manual = 0;
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) {
        QVec d = qv({Rat(a) - Rat(1, 3), Rat(b) + Rat(1, 7)});
        if (hex.gauge_leq_scale(d, scale)) ++manual;
      }
    CHECK(got == manual);
  }
}

TEST_CASE("check_counting_bounds: tight l_inf case") {
  // d=3 over Z^2: max count 49 equals the lambda1-form bound (1+2*3)^2
  ConvexBody cube = ConvexBody::lp_ball(LpKind::Linf, Rat(1), 2);
  std::vector<QVec> centers = fundamental_grid(z2(), 8);
  REQUIRE(centers.size() == 64);
  auto reports = check_counting_bounds(cube, z2(), Rat(3), centers);
  Int max_count(0);
  for (const auto& r : reports) {
    CHECK(r.pass);
    if (r.count > max_count) max_count = r.count;
    CHECK(r.bound == 49);  // min of 49 and (2*3+1)^2 * 9 = 441
  }
  CHECK(max_count == 49);  // tight
}

TEST_CASE("check_counting_bounds: d=0 counts at most one point") {
  ConvexBody cube = ConvexBody::lp_ball(LpKind::Linf, Rat(1), 2);
  auto reports = check_counting_bounds(cube, z2(), Rat(0), fundamental_grid(z2(), 4));
  for (const auto& r : reports) {
    CHECK(r.count <= 1);
    CHECK(r.pass);
  }
}

TEST_CASE("check_counting_bounds over the body/lattice matrix") {
  std::vector<ConvexBody> bodies{ConvexBody::lp_ball(LpKind::L1, Rat(1), 2),
                                 ConvexBody::lp_ball(LpKind::L2, Rat(1), 2),
                                 ConvexBody::lp_ball(LpKind::Linf, Rat(1), 2), hexagon()};
  QMat skew(2, 2);
  skew.at(0, 0) = 2;
  skew.at(0, 1) = 1;
  skew.at(1, 0) = -1;
  skew.at(1, 1) = 3;
  std::vector<Lattice> lats{z2(), Lattice(skew)};
  for (const ConvexBody& k : bodies)
    for (const Lattice& lat : lats)
      for (const Rat& d : {Rat(1, 2), Rat(1), Rat(3)}) {
        auto reports = check_counting_bounds(k, lat, d, fundamental_grid(lat, 4));
        for (const auto& r : reports) CHECK(r.pass);
      }
}

TEST_CASE("cauchy-davenport fixed examples") {
  CHECK(check_cauchy_davenport(5, {{0, 1}, {0, 1}}));        // |{0,1,2}| = 3 >= min(5,3)
  CHECK(check_cauchy_davenport(3, {{0, 1, 2}, {0, 1, 2}}));  // sum covers Z_3
  CHECK_THROWS_AS(check_cauchy_davenport(4, {{0}}), input_error);
  CHECK_THROWS_AS(check_cauchy_davenport(5, {}), input_error);
  CHECK_THROWS_AS(check_cauchy_davenport(5, {{0}, {}}), input_error);
}

TEST_CASE("cauchy-davenport on 500 random families") {
  unsigned long state = 777;
  auto rnd = [&](long m) {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return static_cast<long>((state >> 33) % m);
  };
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 13};
  for (int f = 0; f < 500; ++f) {
    std::int64_t p = primes[rnd(6)];
    int k = 1 + static_cast<int>(rnd(4));
    std::vector<std::vector<std::int64_t>> sets(k);
    for (auto& set : sets) {
      long size = 1 + rnd(p);
      for (long i = 0; i < size; ++i) set.push_back(rnd(p));
    }
    CHECK(check_cauchy_davenport(p, sets));
  }
}

TEST_CASE("fundamental_grid spans the fundamental domain") {
  auto grid = fundamental_grid(z2(), 3);
  REQUIRE(grid.size() == 9);
  CHECK(grid[0] == qv({Rat(0), Rat(0)}));
  CHECK(grid[1] == qv({Rat(0), Rat(1, 3)}));
  CHECK(grid[8] == qv({Rat(2, 3), Rat(2, 3)}));
}
