#pragma once

#include <functional>
#include <vector>

#include "statecount/exact_count.hpp"

namespace statecount {

inline constexpr int kJgSoldiers = 5;
inline constexpr int kJgMaxHome = 8;  // king + 2 advisors + 5 opposing soldiers
inline constexpr int kJgMinPieces = 2;
inline constexpr int kJgMaxPieces = 16;
inline constexpr int kJgHeavyPairs = 8;  // chariots, horses, elephants, cannons

/// King plus `advisors` identical advisors anywhere in the palace.
ExactCount jg_palace_arrangements(int advisors);

/// One home zone holding exactly n pieces (own king and advisors in the
/// palace, opposing soldiers anywhere else in the zone) while at least k
/// opposing soldiers stay off the zone.
ExactCount jg_home_count(int n, int k);

struct JgConvolutionTerm {
  int n1 = 0, n2 = 0, k1 = 0, k2 = 0;
  ExactCount value;
};

/// A's home holds n1 pieces, B's home n2; k1 of B's and k2 of A's soldiers
/// stand on the four middle ranks.
ExactCount jg_convolution_term(int n1, int n2, int k1, int k2);

std::vector<JgConvolutionTerm> jg_positions_terms(int n);

/// Light-stage placements (kings, advisors, soldiers) using exactly n pieces.
ExactCount jg_positions(int n);

struct JgGrandTerm {
  int n = 0;  // light pieces
  int y = 0;  // heavy pieces
  ExactCount value;
};

using JgPositionsTable = std::function<ExactCount(int)>;

std::vector<JgGrandTerm> jg_grand_terms(const JgPositionsTable& positions);
std::vector<JgGrandTerm> jg_grand_terms();

/// sum_n sum_y positions(n) * C(90 - n, y) * pair_fill_count(8, y)
ExactCount jg_grand_total(const JgPositionsTable& positions);
ExactCount jg_grand_total();

}  // namespace statecount
