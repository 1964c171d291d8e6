#pragma once

#include <bitset>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace statecount {

enum class Variant { xiangqi, janggi };
enum class Player { A, B };

std::string_view to_string(Variant v);
std::string_view to_string(Player p);
/// Throws std::invalid_argument for anything other than "xiangqi"/"janggi".
Variant parse_variant(std::string_view text);

inline constexpr int kFiles = 9;
inline constexpr int kRanks = 10;
inline constexpr int kBoardSites = kFiles * kRanks;

/// A board intersection. Files run 1..9. Ranks run 1..10 and are counted from
/// player A's back rank; player B's own back rank is rank 10.
struct Site {
  int file = 1;
  int rank = 1;

  constexpr int index() const { return (rank - 1) * kFiles + (file - 1); }
  static constexpr Site from_index(int i) { return Site{i % kFiles + 1, i / kFiles + 1}; }
  /// Reflection through the river (rank 5.5).
  constexpr Site mirrored() const { return Site{file, kRanks + 1 - rank}; }

  friend constexpr auto operator<=>(const Site&, const Site&) = default;
};

/// A set of board sites, backed by a 90-bit mask.
class SiteSet {
 public:
  SiteSet() = default;
  SiteSet(std::initializer_list<Site> sites) {
    for (Site s : sites) insert(s);
  }

  void insert(Site s) { bits_.set(static_cast<std::size_t>(s.index())); }
  bool contains(Site s) const { return bits_.test(static_cast<std::size_t>(s.index())); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Sites in index order (rank-major).
  std::vector<Site> sites() const;

  SiteSet mirrored() const;

  friend SiteSet operator&(const SiteSet& a, const SiteSet& b) { return SiteSet(a.bits_ & b.bits_); }
  friend SiteSet operator|(const SiteSet& a, const SiteSet& b) { return SiteSet(a.bits_ | b.bits_); }
  /// Set difference.
  friend SiteSet operator-(const SiteSet& a, const SiteSet& b) { return SiteSet(a.bits_ & ~b.bits_); }
  friend bool operator==(const SiteSet&, const SiteSet&) = default;

 private:
  explicit SiteSet(std::bitset<kBoardSites> b) : bits_(b) {}
  std::bitset<kBoardSites> bits_;
};

/// Named permitted-site sets for one variant, expressed for player A in board
/// coordinates. Player B's sets are the mirror images.
///
/// Xiangqi zones: palace, king_sites, advisor_sites, elephant_sites,
/// soldier_own_side_sites, own_half, soldier_sites.
/// Janggi zones: palace, king_sites, advisor_sites, home_zone, middle_ranks,
/// soldier_sites.
struct ZoneTable {
  Variant variant = Variant::xiangqi;
  std::map<std::string, SiteSet, std::less<>> zones;

  /// Throws std::invalid_argument for a name the variant does not define.
  const SiteSet& at(std::string_view name) const;
};

const ZoneTable& standard_zones(Variant v);

/// Exact site set of a named zone for the given player.
SiteSet zone(Variant v, Player p, std::string_view zone_name);

struct GeometryCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};

/// One record per geometry invariant of the variant. Failures are data.
std::vector<GeometryCheck> validate_geometry(const ZoneTable& table);
std::vector<GeometryCheck> validate_geometry(Variant v);

/// The five own-side soldier sites grouped by file, used by the counters.
std::vector<std::vector<Site>> soldier_sites_by_file(const ZoneTable& xq);

}  // namespace statecount
