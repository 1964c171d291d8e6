#include "statecount/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace statecount {

std::string_view to_string(Variant v) { return v == Variant::xiangqi ? "xiangqi" : "janggi"; }
std::string_view to_string(Player p) { return p == Player::A ? "A" : "B"; }

Variant parse_variant(std::string_view text) {
  if (text == "xiangqi") return Variant::xiangqi;
  if (text == "janggi") return Variant::janggi;
  throw std::invalid_argument("unknown variant: " + std::string(text));
}

std::vector<Site> SiteSet::sites() const {
  std::vector<Site> out;
  out.reserve(size());
  for (int i = 0; i < kBoardSites; ++i)
    if (bits_.test(static_cast<std::size_t>(i))) out.push_back(Site::from_index(i));
  return out;
}

SiteSet SiteSet::mirrored() const {
  SiteSet out;
  for (Site s : sites()) out.insert(s.mirrored());
  return out;
}

const SiteSet& ZoneTable::at(std::string_view name) const {
  auto it = zones.find(name);
  if (it == zones.end())
    throw std::invalid_argument("zone '" + std::string(name) + "' is not defined for " +
                                std::string(to_string(variant)));
  return it->second;
}

namespace {

SiteSet rank_band(int first, int last, int file_lo = 1, int file_hi = kFiles) {
  SiteSet s;
  for (int r = first; r <= last; ++r)
    for (int f = file_lo; f <= file_hi; ++f) s.insert(Site{f, r});
  return s;
}

ZoneTable make_xiangqi() {
  ZoneTable t;
  t.variant = Variant::xiangqi;
  const SiteSet palace = rank_band(1, 3, 4, 6);
  t.zones["palace"] = palace;
  t.zones["king_sites"] = palace;
  t.zones["advisor_sites"] = SiteSet{{4, 1}, {6, 1}, {5, 2}, {4, 3}, {6, 3}};
  t.zones["elephant_sites"] = SiteSet{{3, 1}, {7, 1}, {1, 3}, {5, 3}, {9, 3}, {3, 5}, {7, 5}};
  SiteSet soldiers;
  for (int f = 1; f <= kFiles; f += 2) {
    soldiers.insert(Site{f, 4});
    soldiers.insert(Site{f, 5});
  }
  t.zones["soldier_own_side_sites"] = soldiers;
  t.zones["own_half"] = rank_band(1, 5);
  t.zones["soldier_sites"] = soldiers | rank_band(6, 10);
  return t;
}

ZoneTable make_janggi() {
  ZoneTable t;
  t.variant = Variant::janggi;
  const SiteSet palace = rank_band(1, 3, 4, 6);
  t.zones["palace"] = palace;
  t.zones["king_sites"] = palace;
  t.zones["advisor_sites"] = palace;
  t.zones["home_zone"] = rank_band(1, 3);
  t.zones["middle_ranks"] = rank_band(4, 7);
  t.zones["soldier_sites"] = rank_band(4, 10);
  return t;
}

GeometryCheck check(std::string id, bool pass, std::string detail = {}) {
  return GeometryCheck{std::move(id), pass, std::move(detail)};
}

GeometryCheck check_size(const ZoneTable& t, const std::string& name, std::size_t want) {
  const std::size_t got = t.at(name).size();
  return check("|" + name + "| = " + std::to_string(want), got == want, "got " + std::to_string(got));
}

bool subset_of(const SiteSet& a, const SiteSet& b) { return (a - b).empty(); }

}  // namespace

const ZoneTable& standard_zones(Variant v) {
  static const ZoneTable xq = make_xiangqi();
  static const ZoneTable jg = make_janggi();
  return v == Variant::xiangqi ? xq : jg;
}

SiteSet zone(Variant v, Player p, std::string_view zone_name) {
  const SiteSet& s = standard_zones(v).at(zone_name);
  return p == Player::A ? s : s.mirrored();
}

std::vector<GeometryCheck> validate_geometry(const ZoneTable& t) {
  std::vector<GeometryCheck> out;
  SiteSet board = rank_band(1, kRanks);
  out.push_back(check("|board| = 90", board.size() == 90));
  const SiteSet& palace = t.at("palace");
  out.push_back(check_size(t, "palace", 9));
  out.push_back(check_size(t, "king_sites", 9));
  out.push_back(check("king_sites = palace", t.at("king_sites") == palace));
  out.push_back(check("advisor_sites within palace", subset_of(t.at("advisor_sites"), palace)));

  if (t.variant == Variant::xiangqi) {
    const SiteSet& adv = t.at("advisor_sites");
    const SiteSet& ele = t.at("elephant_sites");
    const SiteSet& sold = t.at("soldier_own_side_sites");
    out.push_back(check_size(t, "advisor_sites", 5));
    out.push_back(check_size(t, "elephant_sites", 7));
    out.push_back(check_size(t, "soldier_own_side_sites", 10));
    out.push_back(check_size(t, "own_half", 45));
    out.push_back(check_size(t, "soldier_sites", 55));
    out.push_back(check("advisor_sites & elephant_sites = {}", (adv & ele).empty()));
    out.push_back(check("|elephant_sites & palace| = 1", (ele & palace).size() == 1,
                        "got " + std::to_string((ele & palace).size())));
    const SiteSet shared = ele & sold;
    out.push_back(check("|elephant_sites & soldier_own_side_sites| = 2", shared.size() == 2,
                        "got " + std::to_string(shared.size())));
    out.push_back(check("shared elephant/soldier sites are (3,5) and (7,5)",
                        shared == SiteSet{{3, 5}, {7, 5}}));
    out.push_back(check("elephant_sites within own_half", subset_of(ele, t.at("own_half"))));
    out.push_back(check("soldier_own_side_sites within own_half", subset_of(sold, t.at("own_half"))));

    // Every soldier file offers exactly two own-side sites.
    bool two_per_file = true;
    std::size_t files = 0;
    for (int f = 1; f <= kFiles; ++f) {
      std::size_t n = 0;
      for (int r = 1; r <= kRanks; ++r) n += sold.contains(Site{f, r}) ? 1 : 0;
      if (n != 0) ++files;
      if (n != 0 && n != 2) two_per_file = false;
    }
    out.push_back(check("soldier sites: 5 files x 2 ranks", two_per_file && files == 5));
  } else {
    const SiteSet& home = t.at("home_zone");
    const SiteSet& middle = t.at("middle_ranks");
    out.push_back(check_size(t, "advisor_sites", 9));
    out.push_back(check_size(t, "home_zone", 27));
    out.push_back(check_size(t, "middle_ranks", 36));
    out.push_back(check_size(t, "soldier_sites", 63));
    out.push_back(check("palace within home_zone", subset_of(palace, home)));
    out.push_back(check("soldier_sites & home_zone = {}", (t.at("soldier_sites") & home).empty()));
    out.push_back(check("home | middle | opposing home = board",
                        (home | middle | home.mirrored()) == board &&
                            (home & middle).empty() && (middle & home.mirrored()).empty()));
  }
  return out;
}

std::vector<GeometryCheck> validate_geometry(Variant v) { return validate_geometry(standard_zones(v)); }

std::vector<std::vector<Site>> soldier_sites_by_file(const ZoneTable& xq) {
  std::map<int, std::vector<Site>> by_file;
  for (Site s : xq.at("soldier_own_side_sites").sites()) by_file[s.file].push_back(s);
  std::vector<std::vector<Site>> out;
  for (auto& [file, sites] : by_file) out.push_back(std::move(sites));
  return out;
}

}  // namespace statecount
