#include <doctest.h>

#include <algorithm>
#include <random>

#include "statecount/combinatorics.hpp"
#include "statecount/xiangqi.hpp"

using namespace statecount;

TEST_SUITE("xiangqi") {
  TEST_CASE("camp classes partition the total") {
    for (int a = 0; a <= 2; ++a)
      for (int e = 0; e <= 2; ++e) {
        const CampClassRow r = camp_classes(a, e);
        CHECK(r.total == r.by_shared[0] + r.by_shared[1] + r.by_shared[2]);
      }
    const CampClassRow top = camp_classes(2, 2);
    CHECK(top.total == ExactCount{1410});
    CHECK(top.by_shared[2] == ExactCount{70});
  }

  TEST_CASE("camp rows by piece count aggregate the class table") {
    for (int p = 1; p <= 5; ++p) {
      ExactCount sum;
      for (int a = 0; a <= 2; ++a)
        for (int e = 0; e <= 2; ++e)
          if (1 + a + e == p) sum += camp_classes(a, e).total;
      CHECK(camp_by_piece_count(p).total == sum);
    }
  }

  TEST_CASE("own-side soldiers") {
    CHECK(soldier_own_side(10, 5) == ExactCount{32});
    CHECK(soldier_own_side(9, 3) == ExactCount{56});
    CHECK(soldier_own_side(8, 2) == ExactCount{25});
    CHECK(soldier_own_side(8, 0) == ExactCount{1});
  }

  TEST_CASE("reserve grid is the cumulative exact grid") {
    for (int n = kXqMinBlanks; n <= kXqMaxBlanks; ++n)
      for (int k = 0; k <= kXqSoldiers; ++k) {
        ExactCount sum;
        for (int s = 0; s <= kXqSoldiers - k; ++s) sum += side_exact(n, s);
        CHECK(side_reserve(n, k) == sum);
        if (k < kXqSoldiers) CHECK(side_reserve(n, k) == side_reserve(n, k + 1) + side_exact(n, kXqSoldiers - k));
      }
  }

  TEST_CASE("convolution is symmetric under player swap") {
    for (int n1 = kXqMinBlanks; n1 <= kXqMaxBlanks; ++n1)
      for (int n2 = kXqMinBlanks; n2 <= kXqMaxBlanks; ++n2)
        for (int k1 = 0; k1 <= kXqSoldiers; ++k1)
          for (int k2 = 0; k2 <= kXqSoldiers; ++k2)
            CHECK(xq_convolution_term(n1, n2, k1, k2) == xq_convolution_term(n2, n1, k2, k1));
  }

  TEST_CASE("positions are the sum of their terms") {
    for (int x = kXqMinX; x <= kXqMaxX; ++x) {
      ExactCount sum;
      for (const auto& t : xq_positions_terms(x)) {
        CHECK(t.n1 + t.n2 - t.k1 - t.k2 == x);
        sum += t.value;
      }
      CHECK(xq_positions(x) == sum);
    }
    CHECK(xq_positions(88) == ExactCount{81});
  }

  TEST_CASE("grand total is order invariant") {
    auto terms = xq_grand_terms();
    std::mt19937 rng(7);
    const ExactCount total = xq_grand_total();
    for (int round = 0; round < 3; ++round) {
      std::shuffle(terms.begin(), terms.end(), rng);
      ExactCount sum;
      for (const auto& t : terms) sum += t.value;
      CHECK(sum == total);
    }
    CHECK(total.digits() == 40);
  }

  TEST_CASE("zero positions annihilate the grand total") {
    CHECK(xq_grand_total([](int) { return ExactCount{}; }).is_zero());
    // A single surviving light-stage value leaves only its heavy-stage sum.
    const ExactCount only = xq_grand_total([](int x) { return x == kXqMaxX ? ExactCount{1} : ExactCount{}; });
    ExactCount expect;
    for (int y = 0; y <= 2 * kXqHeavyPairs; ++y) expect += binom(kXqMaxX, y) * pair_fill_count(kXqHeavyPairs, y);
    CHECK(only == expect);
  }
}
