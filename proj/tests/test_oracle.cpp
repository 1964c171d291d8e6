#include <doctest.h>

#include <set>

#include "statecount/janggi.hpp"
#include "statecount/oracle.hpp"
#include "statecount/xiangqi.hpp"

using namespace statecount;
using oracle::PieceKind;
using oracle::PieceLabel;
using oracle::Placement;

namespace {

Placement kings_only(Variant v) {
  Placement p;
  p[Site{5, 1}] = PieceLabel{Player::A, PieceKind::king};
  p[Site{5, 10}] = PieceLabel{Player::B, PieceKind::king};
  (void)v;
  return p;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("placement rules") {
    for (Variant v : {Variant::xiangqi, Variant::janggi}) {
      Placement p = kings_only(v);
      CHECK(oracle::is_permitted(v, p));
      p.erase(Site{5, 1});
      CHECK_FALSE(oracle::is_permitted(v, p));  // a king is mandatory
      p[Site{5, 4}] = PieceLabel{Player::A, PieceKind::king};
      CHECK_FALSE(oracle::is_permitted(v, p));
    }
    Placement xq = kings_only(Variant::xiangqi);
    xq[Site{5, 3}] = PieceLabel{Player::A, PieceKind::elephant};
    CHECK(oracle::is_permitted(Variant::xiangqi, xq));
    xq[Site{4, 3}] = PieceLabel{Player::A, PieceKind::elephant};
    CHECK_FALSE(oracle::is_permitted(Variant::xiangqi, xq));
    xq.erase(Site{4, 3});
    xq[Site{1, 4}] = PieceLabel{Player::A, PieceKind::soldier};
    xq[Site{1, 5}] = PieceLabel{Player::A, PieceKind::soldier};
    CHECK_FALSE(oracle::is_permitted(Variant::xiangqi, xq));
    xq.erase(Site{1, 5});
    xq[Site{2, 4}] = PieceLabel{Player::A, PieceKind::soldier};
    CHECK_FALSE(oracle::is_permitted(Variant::xiangqi, xq));

    Placement jg = kings_only(Variant::janggi);
    jg[Site{1, 2}] = PieceLabel{Player::A, PieceKind::soldier};  // own home zone
    CHECK_FALSE(oracle::is_permitted(Variant::janggi, jg));
    jg.erase(Site{1, 2});
    jg[Site{1, 4}] = PieceLabel{Player::A, PieceKind::soldier};
    CHECK(oracle::is_permitted(Variant::janggi, jg));
    jg[Site{2, 2}] = PieceLabel{Player::A, PieceKind::elephant};
    CHECK_FALSE(oracle::is_permitted(Variant::janggi, jg));  // no elephants in the light stage
  }

  TEST_CASE("every enumerated placement is a distinct permitted witness") {
    for (Variant v : {Variant::xiangqi, Variant::janggi}) {
      std::set<Placement> seen;
      std::map<int, std::uint64_t> by_count;
      bool all_permitted = true;
      oracle::for_each_position_small(v, 3, [&](const Placement& p) {
        all_permitted = all_permitted && oracle::is_permitted(v, p);
        seen.insert(p);
        ++by_count[static_cast<int>(p.size())];
      });
      CHECK(all_permitted);
      const auto counts = oracle::enum_positions_small(v, 3);
      std::uint64_t total = 0;
      for (const auto& [pieces, n] : by_count) {
        CHECK(counts.at(pieces) == ExactCount{n});
        total += n;
      }
      CHECK(seen.size() == total);
    }
  }

  TEST_CASE("full-board enumeration bounds") {
    CHECK_THROWS_AS(oracle::enum_positions_small(Variant::xiangqi, 5), std::out_of_range);
    CHECK_THROWS_AS(oracle::enum_positions_small(Variant::janggi, 1), std::out_of_range);
  }

  TEST_CASE("camp enumeration agrees with the case analysis") {
    for (int a = 0; a <= 2; ++a)
      for (int e = 0; e <= 2; ++e) {
        const CampClassRow got = oracle::enum_camp_xq(a, e), want = camp_classes(a, e);
        CHECK(got.total == want.total);
        for (int s = 0; s < 3; ++s) CHECK(got.by_shared[static_cast<std::size_t>(s)] == want.by_shared[static_cast<std::size_t>(s)]);
      }
  }

  TEST_CASE("half-board oracles agree with the light-stage pipelines") {
    for (const auto& [x, count] : oracle::halfboard_positions_xq()) {
      CAPTURE(x);
      CHECK(count == xq_positions(x));
    }
    for (const auto& [n, count] : oracle::halfboard_positions_jg()) {
      CAPTURE(n);
      CHECK(count == jg_positions(n));
    }
  }

  TEST_CASE("independent grand totals") {
    CHECK(oracle::grand_total_xq() == xq_grand_total());
    CHECK(oracle::grand_total_jg() == jg_grand_total());
  }
}
