#include "statecount/oracle.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace statecount::oracle {

namespace {

template <class F>
void for_each_combination(const std::vector<Site>& pool, int k, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Site> chosen(static_cast<std::size_t>(k));
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) chosen[i] = pool[static_cast<std::size_t>(idx[i])];
    f(chosen);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool any_occupied(const SiteSet& occ, const std::vector<Site>& sites) {
  for (Site s : sites)
    if (occ.contains(s)) return true;
  return false;
}

bool distinct_files_within(const std::vector<Site>& sites, const SiteSet& zone_sites) {
  std::array<bool, kFiles + 1> seen{};
  for (Site s : sites) {
    if (!zone_sites.contains(s)) continue;
    if (seen[static_cast<std::size_t>(s.file)]) return false;
    seen[static_cast<std::size_t>(s.file)] = true;
  }
  return true;
}

std::vector<Site> minus(const std::vector<Site>& pool, const SiteSet& occ) {
  std::vector<Site> out;
  for (Site s : pool)
    if (!occ.contains(s)) out.push_back(s);
  return out;
}

// Pascal's triangle, kept local so the oracle never touches binom().
class SubsetCounts {
 public:
  explicit SubsetCounts(int max_n) : rows_(static_cast<std::size_t>(max_n) + 1) {
    for (int n = 0; n <= max_n; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      row.assign(static_cast<std::size_t>(n) + 1, ExactCount{1});
      for (int k = 1; k < n; ++k)
        row[static_cast<std::size_t>(k)] = rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                                           rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }
  ExactCount operator()(int n, int k) const {
    if (n < 0 || k < 0 || k > n || n >= static_cast<int>(rows_.size())) return ExactCount{0};
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<ExactCount>> rows_;
};

const SubsetCounts& subsets() {
  static const SubsetCounts table(kBoardSites);
  return table;
}

// ---- Xiangqi half board ------------------------------------------------------

struct XqCampPlacement {
  std::vector<Site> sites;  // king, advisors, elephants
  int shared_elephants = 0;
};

template <class F>
void for_each_camp_xq(int advisors, int elephants, F&& f) {
  const ZoneTable& t = standard_zones(Variant::xiangqi);
  const auto adv = t.at("advisor_sites").sites();
  const auto ele = t.at("elephant_sites").sites();
  const auto king = t.at("king_sites").sites();
  const SiteSet soldier_sites = t.at("soldier_own_side_sites");
  for_each_combination(adv, advisors, [&](const std::vector<Site>& a) {
    for_each_combination(ele, elephants, [&](const std::vector<Site>& e) {
      SiteSet occ;
      for (Site s : a) occ.insert(s);
      if (any_occupied(occ, e)) return;
      int shared = 0;
      for (Site s : e) {
        occ.insert(s);
        if (soldier_sites.contains(s)) ++shared;
      }
      for (Site k : king) {
        if (occ.contains(k)) continue;
        XqCampPlacement p;
        p.sites = a;
        p.sites.insert(p.sites.end(), e.begin(), e.end());
        p.sites.push_back(k);
        p.shared_elephants = shared;
        f(p);
      }
    });
  });
}

// exact[p][s]: own-half placements with p light pieces (soldiers included) of
// which s are soldiers.
using XqHalfGrid = std::array<std::array<std::uint64_t, kXqSoldiers + 1>, 11>;

const XqHalfGrid& xq_half_grid() {
  static const XqHalfGrid grid = [] {
    XqHalfGrid g{};
    const ZoneTable& t = standard_zones(Variant::xiangqi);
    const auto soldier_sites = t.at("soldier_own_side_sites").sites();
    const SiteSet soldier_zone = t.at("soldier_own_side_sites");
    const unsigned masks = 1u << soldier_sites.size();
    for (int a = 0; a <= 2; ++a)
      for (int e = 0; e <= 2; ++e)
        for_each_camp_xq(a, e, [&](const XqCampPlacement& camp) {
          SiteSet occ;
          for (Site s : camp.sites) occ.insert(s);
          for (unsigned m = 0; m < masks; ++m) {
            std::vector<Site> chosen;
            for (std::size_t i = 0; i < soldier_sites.size(); ++i)
              if (m & (1u << i)) chosen.push_back(soldier_sites[i]);
            if (chosen.size() > static_cast<std::size_t>(kXqSoldiers)) continue;
            if (any_occupied(occ, chosen) || !distinct_files_within(chosen, soldier_zone)) continue;
            const std::size_t pieces = camp.sites.size() + chosen.size();
            ++g[pieces][chosen.size()];
          }
        });
    return g;
  }();
  return grid;
}

// ---- Janggi home zone --------------------------------------------------------

// exact[p][u]: home-zone placements with p pieces, u of them opposing soldiers.
using JgHomeGrid = std::array<std::array<std::uint64_t, 6>, 9>;

const JgHomeGrid& jg_home_grid() {
  static const JgHomeGrid grid = [] {
    JgHomeGrid g{};
    const ZoneTable& t = standard_zones(Variant::janggi);
    const auto palace = t.at("king_sites").sites();
    const auto adv_sites = t.at("advisor_sites").sites();
    const auto home = t.at("home_zone").sites();
    for (Site king : palace)
      for (int a = 0; a <= 2; ++a) {
        SiteSet king_only{king};
        for_each_combination(minus(adv_sites, king_only), a, [&](const std::vector<Site>& adv) {
          SiteSet occ = king_only;
          for (Site s : adv) occ.insert(s);
          const auto free_sites = minus(home, occ);
          for (int u = 0; u <= 5; ++u) {
            std::uint64_t n = 0;
            for_each_combination(free_sites, u, [&](const std::vector<Site>&) { ++n; });
            g[static_cast<std::size_t>(1 + a + u)][static_cast<std::size_t>(u)] += n;
          }
        });
      }
    return g;
  }();
  return grid;
}

// ---- full board --------------------------------------------------------------

struct Group {
  Player player;
  PieceKind kind;
  int count;
  std::vector<Site> pool;
};

std::string_view kind_zone(Variant v, PieceKind k) {
  switch (k) {
    case PieceKind::king: return "king_sites";
    case PieceKind::advisor: return "advisor_sites";
    case PieceKind::elephant: return v == Variant::xiangqi ? "elephant_sites" : "";
    case PieceKind::soldier: return "soldier_sites";
  }
  return "";
}

class FullBoardWalker {
 public:
  FullBoardWalker(Variant v, const std::function<void(const Placement&)>* visit)
      : v_(v), visit_(visit) {
    if (v_ == Variant::xiangqi) {
      own_side_[0] = zone(v_, Player::A, "soldier_own_side_sites");
      own_side_[1] = zone(v_, Player::B, "soldier_own_side_sites");
    }
  }

  void run(std::vector<Group> groups, int pieces) {
    groups_ = std::move(groups);
    pieces_ = pieces;
    stack_.clear();
    descend(0, SiteSet{});
  }

  std::map<int, std::uint64_t> counts;

 private:
  void descend(std::size_t gi, const SiteSet& occ) {
    if (gi == groups_.size()) {
      ++counts[pieces_];
      if (visit_ != nullptr && *visit_) {
        Placement p;
        for (const auto& [site, label] : stack_) p.emplace(site, label);
        (*visit_)(p);
      }
      return;
    }
    const Group& g = groups_[gi];
    for_each_combination(minus(g.pool, occ), g.count, [&](const std::vector<Site>& chosen) {
      if (v_ == Variant::xiangqi && g.kind == PieceKind::soldier &&
          !distinct_files_within(chosen, own_side_[g.player == Player::A ? 0 : 1]))
        return;
      SiteSet next = occ;
      for (Site s : chosen) {
        next.insert(s);
        stack_.emplace_back(s, PieceLabel{g.player, g.kind});
      }
      descend(gi + 1, next);
      stack_.resize(stack_.size() - chosen.size());
    });
  }

  Variant v_;
  const std::function<void(const Placement&)>* visit_;
  std::array<SiteSet, 2> own_side_;
  std::vector<Group> groups_;
  int pieces_ = 0;
  std::vector<std::pair<Site, PieceLabel>> stack_;
};

std::map<int, ExactCount> walk_small(Variant v, int max_light_pieces,
                                     const std::function<void(const Placement&)>* visit) {
  if (max_light_pieces < kSmallMinPieces || max_light_pieces > kSmallMaxPieces)
    throw std::out_of_range("enum_positions_small: max_light_pieces must be in " +
                            std::to_string(kSmallMinPieces) + ".." + std::to_string(kSmallMaxPieces));
  const int max_elephants = v == Variant::xiangqi ? 2 : 0;
  auto pool = [&](Player p, PieceKind k) { return zone(v, p, kind_zone(v, k)).sites(); };

  FullBoardWalker walker(v, visit);
  const int extra_budget = max_light_pieces - 2;
  // Per player: advisors, elephants, soldiers.
  for (int aa = 0; aa <= 2; ++aa)
    for (int ea = 0; ea <= max_elephants; ++ea)
      for (int sa = 0; sa <= 5; ++sa)
        for (int ab = 0; ab <= 2; ++ab)
          for (int eb = 0; eb <= max_elephants; ++eb)
            for (int sb = 0; sb <= 5; ++sb) {
              const int extra = aa + ea + sa + ab + eb + sb;
              if (extra > extra_budget) continue;
              std::vector<Group> groups;
              for (Player p : {Player::A, Player::B}) {
                const bool a = p == Player::A;
                groups.push_back({p, PieceKind::king, 1, pool(p, PieceKind::king)});
                groups.push_back({p, PieceKind::advisor, a ? aa : ab, pool(p, PieceKind::advisor)});
                if (max_elephants > 0)
                  groups.push_back({p, PieceKind::elephant, a ? ea : eb, pool(p, PieceKind::elephant)});
                groups.push_back({p, PieceKind::soldier, a ? sa : sb, pool(p, PieceKind::soldier)});
              }
              walker.run(std::move(groups), 2 + extra);
            }
  std::map<int, ExactCount> out;
  for (int t = kSmallMinPieces; t <= max_light_pieces; ++t) out[t] = ExactCount{walker.counts[t]};
  return out;
}

}  // namespace

bool is_permitted(Variant v, const Placement& p) {
  std::map<std::pair<Player, PieceKind>, int> inventory;
  for (const auto& [site, label] : p) {
    const std::string_view zn = kind_zone(v, label.kind);
    if (zn.empty() || !zone(v, label.player, zn).contains(site)) return false;
    ++inventory[{label.player, label.kind}];
  }
  for (Player pl : {Player::A, Player::B}) {
    if (inventory[{pl, PieceKind::king}] != 1) return false;
    if (inventory[{pl, PieceKind::advisor}] > 2) return false;
    if (inventory[{pl, PieceKind::elephant}] > (v == Variant::xiangqi ? 2 : 0)) return false;
    if (inventory[{pl, PieceKind::soldier}] > 5) return false;
    if (v == Variant::xiangqi) {
      std::vector<Site> soldiers;
      for (const auto& [site, label] : p)
        if (label.player == pl && label.kind == PieceKind::soldier) soldiers.push_back(site);
      if (!distinct_files_within(soldiers, zone(v, pl, "soldier_own_side_sites"))) return false;
    }
  }
  return true;
}

CampClassRow enum_camp_xq(int advisors, int elephants) {
  CampClassRow row;
  row.advisors = advisors;
  row.elephants = elephants;
  std::array<std::uint64_t, 3> buckets{};
  for_each_camp_xq(advisors, elephants,
                   [&](const XqCampPlacement& p) { ++buckets[static_cast<std::size_t>(p.shared_elephants)]; });
  for (std::size_t j = 0; j < 3; ++j) {
    row.by_shared[j] = ExactCount{buckets[j]};
    row.total += row.by_shared[j];
  }
  return row;
}

ExactCount enum_soldiers_xq(int shared_sites_blocked, int soldiers) {
  const ZoneTable& t = standard_zones(Variant::xiangqi);
  const SiteSet soldier_zone = t.at("soldier_own_side_sites");
  const auto shared = (soldier_zone & t.at("elephant_sites")).sites();
  if (shared_sites_blocked < 0 || shared_sites_blocked > static_cast<int>(shared.size())) return ExactCount{0};
  SiteSet blocked;
  for (int i = 0; i < shared_sites_blocked; ++i) blocked.insert(shared[static_cast<std::size_t>(i)]);
  const auto sites = (soldier_zone - blocked).sites();
  std::uint64_t n = 0;
  for (unsigned m = 0; m < (1u << sites.size()); ++m) {
    std::vector<Site> chosen;
    for (std::size_t i = 0; i < sites.size(); ++i)
      if (m & (1u << i)) chosen.push_back(sites[i]);
    if (static_cast<int>(chosen.size()) == soldiers && distinct_files_within(chosen, soldier_zone)) ++n;
  }
  return ExactCount{n};
}

ExactCount enum_side_exact_xq(int blanks, int soldiers_used) {
  const int pieces = kXqHalfSites - blanks;
  if (pieces < 0 || pieces > 10 || soldiers_used < 0 || soldiers_used > kXqSoldiers) return ExactCount{0};
  return ExactCount{xq_half_grid()[static_cast<std::size_t>(pieces)][static_cast<std::size_t>(soldiers_used)]};
}

ExactCount enum_side_xq(int blanks, int reserve) {
  ExactCount sum;
  for (int s = 0; s + reserve <= kXqSoldiers; ++s) sum += enum_side_exact_xq(blanks, s);
  return sum;
}

ExactCount enum_home_jg(int n, int k) {
  if (n < 0 || n > 8 || k < 0 || k > 5) return ExactCount{0};
  std::uint64_t sum = 0;
  for (int u = 0; u + k <= 5; ++u) sum += jg_home_grid()[static_cast<std::size_t>(n)][static_cast<std::size_t>(u)];
  return ExactCount{sum};
}

ExactCount enum_pair_fill(int m, int n) {
  if (m < 0 || n < 0 || m > kPairFillMaxPairs || n > kPairFillMaxSites)
    throw std::out_of_range("enum_pair_fill: requires 0 <= m <= " + std::to_string(kPairFillMaxPairs) +
                            " and 0 <= n <= " + std::to_string(kPairFillMaxSites));
  std::vector<int> left(static_cast<std::size_t>(m), 2);
  std::uint64_t words = 0;
  std::function<void(int)> extend = [&](int pos) {
    if (pos == n) {
      ++words;
      return;
    }
    for (auto& l : left) {
      if (l == 0) continue;
      --l;
      extend(pos + 1);
      ++l;
    }
  };
  extend(0);
  return ExactCount{words};
}

ExactCount pair_fill_by_recurrence(int m, int n) {
  if (m < 0 || n < 0) return ExactCount{0};
  // ways[u1] for the current number of filled sites; u0 follows from the
  // letters consumed so far: 2*(m - u0 - u1) + u1 = filled.
  std::map<std::pair<int, int>, ExactCount> ways{{{m, 0}, ExactCount{1}}};
  for (int site = 0; site < n; ++site) {
    std::map<std::pair<int, int>, ExactCount> next;
    for (const auto& [state, w] : ways) {
      const auto [unused, once] = state;
      if (unused > 0) next[{unused - 1, once + 1}] += w * ExactCount{static_cast<std::uint64_t>(unused)};
      if (once > 0) next[{unused, once - 1}] += w * ExactCount{static_cast<std::uint64_t>(once)};
    }
    ways = std::move(next);
  }
  ExactCount total;
  for (const auto& [state, w] : ways) total += w;
  return total;
}

std::map<int, ExactCount> enum_positions_small(Variant v, int max_light_pieces) {
  return walk_small(v, max_light_pieces, nullptr);
}

void for_each_position_small(Variant v, int max_light_pieces,
                             const std::function<void(const Placement&)>& visit) {
  walk_small(v, max_light_pieces, &visit);
}

std::map<int, ExactCount> halfboard_positions_xq() {
  const XqHalfGrid& g = xq_half_grid();
  const SubsetCounts& sub = subsets();
  std::map<int, ExactCount> out;
  for (int pa = 1; pa <= 10; ++pa)
    for (int sa = 0; sa <= kXqSoldiers; ++sa) {
      const std::uint64_t wa = g[static_cast<std::size_t>(pa)][static_cast<std::size_t>(sa)];
      if (wa == 0) continue;
      const int blanks_a = kXqHalfSites - pa;
      for (int pb = 1; pb <= 10; ++pb)
        for (int sb = 0; sb <= kXqSoldiers; ++sb) {
          const std::uint64_t wb = g[static_cast<std::size_t>(pb)][static_cast<std::size_t>(sb)];
          if (wb == 0) continue;
          const int blanks_b = kXqHalfSites - pb;
          // ca of A's soldiers cross into B's half, cb of B's into A's half.
          for (int ca = 0; sa + ca <= kXqSoldiers; ++ca)
            for (int cb = 0; sb + cb <= kXqSoldiers; ++cb) {
              const ExactCount w =
                  ExactCount{wa} * ExactCount{wb} * sub(blanks_a, cb) * sub(blanks_b, ca);
              if (w.is_zero()) continue;
              out[blanks_a + blanks_b - ca - cb] += w;
            }
        }
    }
  return out;
}

std::map<int, ExactCount> halfboard_positions_jg() {
  const JgHomeGrid& g = jg_home_grid();
  const SubsetCounts& sub = subsets();
  const int middle = static_cast<int>(standard_zones(Variant::janggi).at("middle_ranks").size());
  std::map<int, ExactCount> out;
  // A's home holds pa pieces, ub of them B's soldiers; B's home holds pb, ua of them A's.
  for (int pa = 1; pa <= 8; ++pa)
    for (int ub = 0; ub <= 5; ++ub) {
      const std::uint64_t wa = g[static_cast<std::size_t>(pa)][static_cast<std::size_t>(ub)];
      if (wa == 0) continue;
      for (int pb = 1; pb <= 8; ++pb)
        for (int ua = 0; ua <= 5; ++ua) {
          const std::uint64_t wb = g[static_cast<std::size_t>(pb)][static_cast<std::size_t>(ua)];
          if (wb == 0) continue;
          for (int ca = 0; ua + ca <= 5; ++ca)
            for (int cb = 0; ub + cb <= 5; ++cb) {
              const ExactCount w = ExactCount{wa} * ExactCount{wb} * sub(middle, ca) * sub(middle - ca, cb);
              out[pa + pb + ca + cb] += w;
            }
        }
    }
  return out;
}

ExactCount grand_total_xq() {
  const SubsetCounts& sub = subsets();
  ExactCount total;
  for (const auto& [x, ways] : halfboard_positions_xq())
    for (int y = 0; y <= 2 * kXqHeavyPairs; ++y)
      total += ways * sub(x, y) * pair_fill_by_recurrence(kXqHeavyPairs, y);
  return total;
}

ExactCount grand_total_jg() {
  const SubsetCounts& sub = subsets();
  constexpr int heavy_pairs = 8;
  ExactCount total;
  for (const auto& [n, ways] : halfboard_positions_jg())
    for (int y = 0; y <= 2 * heavy_pairs; ++y)
      total += ways * sub(kBoardSites - n, y) * pair_fill_by_recurrence(heavy_pairs, y);
  return total;
}

}  // namespace statecount::oracle
