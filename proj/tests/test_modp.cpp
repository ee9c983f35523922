#include <set>

#include "doctest.h"
#include "latspar/modp.hpp"

using namespace latspar;

TEST_CASE("find_prime") {
  CHECK(find_prime(Int(500)) == 3);   // N <= 1000 falls back to 3
  CHECK(find_prime(Int(0)) == 3);
  CHECK(find_prime(Int(1000)) == 3);
  // trial division over 1002..1334 gives 1009
  CHECK(find_prime(Int(1001)) == 1009);
  CHECK(find_prime(Int(2000)) == 2003);
  CHECK_THROWS_AS(find_prime(Int(-1)), input_error);
}

TEST_CASE("find_prime stays inside (N, 4N/3) on a sample range") {
  for (long n = 1001; n <= 4000; ++n) {
    Int p = find_prime(Int(n));
    CHECK(p > n);
    CHECK(3 * p < 4 * Int(n));
  }
}

TEST_CASE("lines of Z_p^n") {
  SUBCASE("p=3, n=2: the four canonical representatives in order") {
    auto lines = all_lines(3, 2);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == ModVec{0, 1});
    CHECK(lines[1] == ModVec{1, 0});
    CHECK(lines[2] == ModVec{1, 1});
    CHECK(lines[3] == ModVec{1, 2});
  }
  SUBCASE("p=2, n=3: seven lines") { CHECK(all_lines(2, 3).size() == 7); }
  SUBCASE("p=2, n=1: single line (1)") {
    auto lines = all_lines(2, 1);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == ModVec{1});
  }
  SUBCASE("count matches (p^n - 1)/(p - 1)") {
    LineStream ls(5, 3);
    CHECK(ls.count() == 31);
    CHECK(all_lines(5, 3).size() == 31);
  }
}

TEST_CASE("every nonzero vector lies on exactly one emitted line") {
  for (std::int64_t p : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      auto lines = all_lines(p, n);
      // canonical form, no duplicates, lexicographic order
      std::set<ModVec> seen(lines.begin(), lines.end());
      CHECK(seen.size() == lines.size());
      for (size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i] < lines[i + 1]);
      for (const auto& l : lines) CHECK(is_canonical_line(l));

      // sweep all nonzero vectors
      long total = 1;
      for (int i = 0; i < n; ++i) total *= p;
      long covered = 0;
      ModVec v(n, 0);
      for (long code = 1; code < total; ++code) {
        long c = code;
        for (int i = 0; i < n; ++i) {
          v[i] = c % p;
          c /= p;
        }
        ModVec canon = canonical_line_of(v, p);
        CHECK(seen.count(canon) == 1);
        ++covered;
      }
      CHECK(covered == total - 1);
    }
  }
}

TEST_CASE("complement basis") {
  SUBCASE("q=(1,0), p=3") {
    auto cols = complement_basis({1, 0}, 3);
    REQUIRE(cols.size() == 1);
    CHECK(cols[0] == ModVec{0, 1});
  }
  SUBCASE("q=(1,1), p=3: <(1,1),(1,2)> = 3 = 0") {
    auto cols = complement_basis({1, 1}, 3);
    REQUIRE(cols.size() == 1);
    CHECK(cols[0] == ModVec{1, 2});
  }
  SUBCASE("q=(0,0,1), p=5") {
    auto cols = complement_basis({0, 0, 1}, 5);
    REQUIRE(cols.size() == 2);
    CHECK(cols[0] == ModVec{1, 0, 0});
    CHECK(cols[1] == ModVec{0, 1, 0});
  }
  SUBCASE("columns are independent and orthogonal to q") {
    ModVec q{2, 3, 1, 4};
    std::int64_t p = 7;
    auto cols = complement_basis(q, p);
    REQUIRE(cols.size() == 3);
    for (const auto& c : cols) CHECK(dot_mod_p(q, c, p) == 0);
    ModMat m(cols.begin(), cols.end());
    CHECK(rank_mod_p(m, p) == 3);
  }
}
