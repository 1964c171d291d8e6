#include "statecount/janggi.hpp"

#include <array>

#include "statecount/combinatorics.hpp"
#include "statecount/geometry.hpp"

namespace statecount {

namespace {

struct HomeShape {
  std::int64_t palace = 0;
  std::int64_t home = 0;
  std::int64_t middle = 0;
};

const HomeShape& home_shape() {
  static const HomeShape shape = [] {
    const ZoneTable& t = standard_zones(Variant::janggi);
    return HomeShape{static_cast<std::int64_t>(t.at("palace").size()),
                     static_cast<std::int64_t>(t.at("home_zone").size()),
                     static_cast<std::int64_t>(t.at("middle_ranks").size())};
  }();
  return shape;
}

const std::array<ExactCount, kJgMaxPieces + 1>& positions_table() {
  static const auto table = [] {
    std::array<ExactCount, kJgMaxPieces + 1> t;
    for (int n1 = 1; n1 <= kJgMaxHome; ++n1)
      for (int n2 = 1; n2 <= kJgMaxHome; ++n2)
        for (int k1 = 0; k1 <= kJgSoldiers; ++k1)
          for (int k2 = 0; k2 <= kJgSoldiers; ++k2) {
            const int n = n1 + n2 + k1 + k2;
            if (n > kJgMaxPieces) continue;
            t[static_cast<std::size_t>(n)] += jg_convolution_term(n1, n2, k1, k2);
          }
    return t;
  }();
  return table;
}

}  // namespace

ExactCount jg_palace_arrangements(int advisors) {
  if (advisors < 0 || advisors > 2) return ExactCount{0};
  const int occupied = advisors + 1;
  // Choose the occupied palace sites, then which of them holds the king.
  return ExactCount(static_cast<std::uint64_t>(occupied)) * binom(home_shape().palace, occupied);
}

ExactCount jg_home_count(int n, int k) {
  if (k < 0 || k > kJgSoldiers) return ExactCount{0};
  ExactCount sum;
  for (int in_palace = 1; in_palace <= 3; ++in_palace) {
    const int soldiers = n - in_palace;
    if (soldiers < 0 || soldiers > kJgSoldiers) continue;
    if (kJgSoldiers - soldiers < k) continue;
    sum += jg_palace_arrangements(in_palace - 1) * binom(home_shape().home - in_palace, soldiers);
  }
  return sum;
}

ExactCount jg_convolution_term(int n1, int n2, int k1, int k2) {
  const std::int64_t middle = home_shape().middle;
  return jg_home_count(n1, k1) * jg_home_count(n2, k2) * binom(middle, k1) * binom(middle - k1, k2);
}

std::vector<JgConvolutionTerm> jg_positions_terms(int n) {
  std::vector<JgConvolutionTerm> out;
  for (int n1 = 1; n1 <= kJgMaxHome; ++n1)
    for (int n2 = 1; n2 <= kJgMaxHome; ++n2)
      for (int k1 = 0; k1 <= kJgSoldiers; ++k1) {
        const int k2 = n - n1 - n2 - k1;
        if (k2 < 0 || k2 > kJgSoldiers) continue;
        ExactCount v = jg_convolution_term(n1, n2, k1, k2);
        if (!v.is_zero()) out.push_back({n1, n2, k1, k2, std::move(v)});
      }
  return out;
}

ExactCount jg_positions(int n) {
  if (n < 0 || n > kJgMaxPieces) return ExactCount{0};
  return positions_table()[static_cast<std::size_t>(n)];
}

std::vector<JgGrandTerm> jg_grand_terms(const JgPositionsTable& positions) {
  std::vector<JgGrandTerm> out;
  for (int n = kJgMinPieces; n <= kJgMaxPieces; ++n) {
    const ExactCount pn = positions(n);
    for (int y = 0; y <= 2 * kJgHeavyPairs; ++y)
      out.push_back({n, y, pn * binom(kBoardSites - n, y) * pair_fill_count(kJgHeavyPairs, y)});
  }
  return out;
}

std::vector<JgGrandTerm> jg_grand_terms() { return jg_grand_terms(jg_positions); }

ExactCount jg_grand_total(const JgPositionsTable& positions) {
  ExactCount total;
  for (const auto& t : jg_grand_terms(positions)) total += t.value;
  return total;
}

ExactCount jg_grand_total() { return jg_grand_total(jg_positions); }

}  // namespace statecount
