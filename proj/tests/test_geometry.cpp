#include <doctest.h>

#include <stdexcept>

#include "statecount/geometry.hpp"

using namespace statecount;

namespace {

bool all_pass(const std::vector<GeometryCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("site indexing") {
    for (int i = 0; i < kBoardSites; ++i) CHECK(Site::from_index(i).index() == i);
    CHECK(Site{5, 1}.mirrored() == Site{5, 10});
    CHECK(Site{3, 5}.mirrored().mirrored() == Site{3, 5});
  }

  TEST_CASE("standard tables validate") {
    CHECK(all_pass(validate_geometry(Variant::xiangqi)));
    CHECK(all_pass(validate_geometry(Variant::janggi)));
  }

  TEST_CASE("xiangqi cardinalities and intersections") {
    const auto& t = standard_zones(Variant::xiangqi);
    const SiteSet& ele = t.at("elephant_sites");
    CHECK(t.at("palace").size() == 9);
    CHECK(t.at("advisor_sites").size() == 5);
    CHECK(ele.size() == 7);
    CHECK(t.at("soldier_own_side_sites").size() == 10);
    CHECK((ele & t.at("palace")).size() == 1);
    CHECK((ele & t.at("soldier_own_side_sites")) == SiteSet{{3, 5}, {7, 5}});
    CHECK((t.at("advisor_sites") & ele).empty());
  }

  TEST_CASE("janggi cardinalities") {
    const auto& t = standard_zones(Variant::janggi);
    CHECK(t.at("palace").size() == 9);
    CHECK(t.at("home_zone").size() == 27);
    CHECK(t.at("middle_ranks").size() == 36);
    CHECK((t.at("home_zone") | t.at("middle_ranks") | t.at("home_zone").mirrored()).size() == 90);
  }

  TEST_CASE("player B zones mirror player A") {
    for (Variant v : {Variant::xiangqi, Variant::janggi})
      for (const auto& [name, sites] : standard_zones(v).zones) {
        CAPTURE(name);
        CHECK(zone(v, Player::B, name) == sites.mirrored());
        CHECK(zone(v, Player::A, name) == sites);
        CHECK(zone(v, Player::B, name).size() == sites.size());
      }
    // The two halves of the Xiangqi board are disjoint.
    CHECK((zone(Variant::xiangqi, Player::A, "own_half") & zone(Variant::xiangqi, Player::B, "own_half")).empty());
  }

  TEST_CASE("corrupted elephant set is caught") {
    ZoneTable bad = standard_zones(Variant::xiangqi);
    SiteSet ele = bad.at("elephant_sites") - SiteSet{{5, 3}};
    ele.insert(Site{5, 4});
    bad.zones["elephant_sites"] = ele;
    CHECK_FALSE(all_pass(validate_geometry(bad)));
  }

  TEST_CASE("unknown zone names") {
    CHECK_THROWS_AS(standard_zones(Variant::janggi).at("elephant_sites"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variant("shogi"), std::invalid_argument);
    CHECK(parse_variant("janggi") == Variant::janggi);
  }
}
