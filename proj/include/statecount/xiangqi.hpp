#pragma once

#include <array>
#include <functional>
#include <vector>

#include "statecount/exact_count.hpp"

namespace statecount {

// Light-stage sizes for one Xiangqi side: king, up to two advisors, up to two
// elephants on the 45-site own half, up to five soldiers.
inline constexpr int kXqHalfSites = 45;
inline constexpr int kXqSoldiers = 5;
inline constexpr int kXqMinBlanks = 35;  // all 16 - 6 heavy = 10 light pieces home
inline constexpr int kXqMaxBlanks = 44;  // king alone
inline constexpr int kXqMinX = 2 * kXqMinBlanks;
inline constexpr int kXqMaxX = 2 * kXqMaxBlanks;
inline constexpr int kXqHeavyPairs = 6;  // chariots, horses, cannons of both sides

/// Camp arrangements of king + advisors + elephants for one side, split by how
/// many elephants stand on the two fifth-rank sites soldiers can also use.
struct CampClassRow {
  int advisors = 0;
  int elephants = 0;
  ExactCount total;
  std::array<ExactCount, 3> by_shared;  // index = elephants on shared sites
};

/// The same split, aggregated over all rows with the same piece count.
struct CampPieceRow {
  int pieces = 0;
  ExactCount total;
  std::array<ExactCount, 3> by_shared;
};

CampClassRow camp_classes(int advisors, int elephants);
CampPieceRow camp_by_piece_count(int pieces_used);

/// Placements of `soldiers` identical soldiers on the own-side soldier sites,
/// at most one per file, when `blank_soldier_sites` (8..10) of those ten sites
/// are not taken by own elephants.
ExactCount soldier_own_side(int blank_soldier_sites, int soldiers);

/// Own-half arrangements with exactly `blanks` empty sites and exactly
/// `soldiers_used` soldiers on the own half.
ExactCount side_exact(int blanks, int soldiers_used);

/// Own-half arrangements with exactly `blanks` empty sites that leave at least
/// `reserve` soldiers unplaced.
ExactCount side_reserve(int blanks, int reserve);

/// One term of the two-player light-stage convolution: A leaves n1 blanks and
/// sends k1 soldiers across; B leaves n2 blanks and sends k2 across.
struct XqConvolutionTerm {
  int n1 = 0, n2 = 0, k1 = 0, k2 = 0;
  ExactCount value;
};

ExactCount xq_convolution_term(int n1, int n2, int k1, int k2);

/// Every nonzero convolution term with n1 + n2 - k1 - k2 = x.
std::vector<XqConvolutionTerm> xq_positions_terms(int x);

/// Light-stage placements leaving exactly x empty sites on the whole board.
ExactCount xq_positions(int x);

struct XqGrandTerm {
  int x = 0;  // empty sites after the light stage
  int y = 0;  // heavy pieces on the board
  ExactCount value;
};

using PositionsTable = std::function<ExactCount(int)>;

std::vector<XqGrandTerm> xq_grand_terms(const PositionsTable& positions);
std::vector<XqGrandTerm> xq_grand_terms();

ExactCount xq_grand_total(const PositionsTable& positions);
ExactCount xq_grand_total();

}  // namespace statecount
