#pragma once

#include <functional>
#include <map>

#include "statecount/exact_count.hpp"
#include "statecount/geometry.hpp"
#include "statecount/xiangqi.hpp"

// Brute-force enumerators over the board geometry. Nothing here calls the
// closed-form counters or the combinatorics primitives; everything is counted
// by visiting concrete placements (or, for the crossing-soldier and heavy
// stages, by explicit recurrences kept local to this module).
namespace statecount::oracle {

enum class PieceKind { king, advisor, elephant, soldier };

struct PieceLabel {
  Player player = Player::A;
  PieceKind kind = PieceKind::king;
  friend auto operator<=>(const PieceLabel&, const PieceLabel&) = default;
};

/// A concrete arrangement of light pieces; unmapped sites are empty.
using Placement = std::map<Site, PieceLabel>;

/// True when every piece stands on a site its type may occupy, the piece
/// inventory is respected, and (Xiangqi) no two own-side soldiers of a player
/// share a file.
bool is_permitted(Variant v, const Placement& p);

CampClassRow enum_camp_xq(int advisors, int elephants);

/// Own-side soldier placements with `shared_sites_blocked` of the two
/// elephant/soldier sites taken.
ExactCount enum_soldiers_xq(int shared_sites_blocked, int soldiers);

/// Joint enumeration over the 45-site half board.
ExactCount enum_side_exact_xq(int blanks, int soldiers_used);
ExactCount enum_side_xq(int blanks, int reserve);

ExactCount enum_home_jg(int n, int k);

inline constexpr int kPairFillMaxPairs = 8;
inline constexpr int kPairFillMaxSites = 8;

/// Counts length-n words over m letters, each letter at most twice, one word
/// at a time. Throws std::out_of_range beyond m <= 8, n <= 8.
ExactCount enum_pair_fill(int m, int n);

/// Same quantity by dynamic programming over sites, tracking how many letters
/// are unused and used once. No size bound.
ExactCount pair_fill_by_recurrence(int m, int n);

inline constexpr int kSmallMinPieces = 2;
inline constexpr int kSmallMaxPieces = 4;

/// Direct full-board enumeration of light-stage placements with at most
/// `max_light_pieces` pieces, bucketed by piece count. Throws
/// std::out_of_range when max_light_pieces is outside 2..4.
std::map<int, ExactCount> enum_positions_small(Variant v, int max_light_pieces);

/// Same enumeration, handing every placement to `visit`.
void for_each_position_small(Variant v, int max_light_pieces,
                             const std::function<void(const Placement&)>& visit);

/// Light-stage counts over the whole board assembled from enumerated
/// half-board (Xiangqi) or home-zone (Janggi) placements, with crossing
/// soldiers counted under explicit per-player budgets. Keyed by empty sites
/// (Xiangqi, 70..88) or by pieces used (Janggi, 2..16).
std::map<int, ExactCount> halfboard_positions_xq();
std::map<int, ExactCount> halfboard_positions_jg();

/// Grand totals assembled only from the routes above: half-board light-stage
/// counts, local subset counts and pair_fill_by_recurrence.
ExactCount grand_total_xq();
ExactCount grand_total_jg();

}  // namespace statecount::oracle
