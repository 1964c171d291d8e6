#include "statecount/xiangqi.hpp"

#include "statecount/combinatorics.hpp"
#include "statecount/geometry.hpp"

namespace statecount {

namespace {

struct CampShape {
  std::int64_t elephant_sites = 0;
  std::int64_t shared = 0;           // elephant sites that are also soldier sites
  std::int64_t elephant_palace = 0;  // elephant sites inside the palace
  std::int64_t advisor_sites = 0;
  std::int64_t king_sites = 0;
  std::int64_t soldier_sites = 0;
  std::vector<std::int64_t> soldier_file_sizes;
  std::vector<std::size_t> shared_files;  // indices into soldier_file_sizes
};

const CampShape& camp_shape() {
  static const CampShape shape = [] {
    const ZoneTable& t = standard_zones(Variant::xiangqi);
    const SiteSet& ele = t.at("elephant_sites");
    CampShape s;
    s.elephant_sites = static_cast<std::int64_t>(ele.size());
    s.shared = static_cast<std::int64_t>((ele & t.at("soldier_own_side_sites")).size());
    s.elephant_palace = static_cast<std::int64_t>((ele & t.at("palace")).size());
    s.advisor_sites = static_cast<std::int64_t>(t.at("advisor_sites").size());
    s.king_sites = static_cast<std::int64_t>(t.at("king_sites").size());
    const SiteSet shared = ele & t.at("soldier_own_side_sites");
    const auto files = soldier_sites_by_file(t);
    for (std::size_t i = 0; i < files.size(); ++i) {
      s.soldier_file_sizes.push_back(static_cast<std::int64_t>(files[i].size()));
      s.soldier_sites += static_cast<std::int64_t>(files[i].size());
      for (Site site : files[i])
        if (shared.contains(site)) s.shared_files.push_back(i);
    }
    return s;
  }();
  return shape;
}

struct SideGrid {
  // exact[n - kXqMinBlanks][s]
  std::array<std::array<ExactCount, kXqSoldiers + 1>, kXqMaxBlanks - kXqMinBlanks + 1> exact;
};

const SideGrid& side_grid() {
  static const SideGrid grid = [] {
    SideGrid g;
    for (int n = kXqMinBlanks; n <= kXqMaxBlanks; ++n)
      for (int s = 0; s <= kXqSoldiers; ++s) {
        const int pieces = kXqHalfSites - n - s;
        ExactCount sum;
        for (int a = 0; a <= 2; ++a) {
          const int e = pieces - 1 - a;
          if (e < 0 || e > 2) continue;
          const CampClassRow row = camp_classes(a, e);
          for (int j = 0; j <= 2; ++j)
            sum += row.by_shared[static_cast<std::size_t>(j)] *
                   soldier_own_side(static_cast<int>(camp_shape().soldier_sites) - j, s);
        }
        g.exact[static_cast<std::size_t>(n - kXqMinBlanks)][static_cast<std::size_t>(s)] = sum;
      }
    return g;
  }();
  return grid;
}

const std::array<ExactCount, kXqMaxX + 1>& positions_table() {
  static const auto table = [] {
    std::array<ExactCount, kXqMaxX + 1> t;
    for (int n1 = kXqMinBlanks; n1 <= kXqMaxBlanks; ++n1)
      for (int n2 = kXqMinBlanks; n2 <= kXqMaxBlanks; ++n2)
        for (int k1 = 0; k1 <= kXqSoldiers; ++k1)
          for (int k2 = 0; k2 <= kXqSoldiers; ++k2) {
            const int x = n1 + n2 - k1 - k2;
            if (x < 0) continue;
            t[static_cast<std::size_t>(x)] += xq_convolution_term(n1, n2, k1, k2);
          }
    return t;
  }();
  return table;
}

}  // namespace

CampClassRow camp_classes(int advisors, int elephants) {
  CampClassRow row;
  row.advisors = advisors;
  row.elephants = elephants;
  if (advisors < 0 || advisors > 2 || elephants < 0 || elephants > 2) return row;

  const CampShape& g = camp_shape();
  const std::int64_t other = g.elephant_sites - g.shared - g.elephant_palace;
  const ExactCount advisor_ways = binom(g.advisor_sites, advisors);
  for (int on_shared = 0; on_shared <= elephants; ++on_shared) {
    ExactCount cls;
    for (int in_palace = 0; on_shared + in_palace <= elephants; ++in_palace) {
      // Advisor sites lie in the palace, so every advisor and every palace
      // elephant takes one site away from the king.
      const std::int64_t king_ways = g.king_sites - advisors - in_palace;
      if (king_ways <= 0) continue;
      cls += binom(g.shared, on_shared) * binom(g.elephant_palace, in_palace) *
             binom(other, elephants - on_shared - in_palace) * advisor_ways *
             ExactCount(static_cast<std::uint64_t>(king_ways));
    }
    row.by_shared[static_cast<std::size_t>(on_shared)] = cls;
    row.total += cls;
  }
  return row;
}

CampPieceRow camp_by_piece_count(int pieces_used) {
  CampPieceRow out;
  out.pieces = pieces_used;
  for (int a = 0; a <= 2; ++a) {
    const int e = pieces_used - 1 - a;
    if (e < 0 || e > 2) continue;
    const CampClassRow row = camp_classes(a, e);
    out.total += row.total;
    for (std::size_t j = 0; j < 3; ++j) out.by_shared[j] += row.by_shared[j];
  }
  return out;
}

ExactCount soldier_own_side(int blank_soldier_sites, int soldiers) {
  const CampShape& g = camp_shape();
  const std::int64_t blocked = g.soldier_sites - blank_soldier_sites;
  if (blocked < 0 || blocked > g.shared || soldiers < 0) return ExactCount{0};

  // Shared sites sit on distinct files; a file whose shared site is blocked
  // keeps one site. Choose `soldiers` files and one free site on each:
  // elementary symmetric polynomial of the per-file capacities.
  std::vector<std::int64_t> capacity = g.soldier_file_sizes;
  for (std::int64_t b = 0; b < blocked; ++b) --capacity[g.shared_files[static_cast<std::size_t>(b)]];
  std::vector<ExactCount> e(static_cast<std::size_t>(soldiers) + 1);
  e[0] = 1;
  for (auto cap : capacity)
    for (int s = soldiers; s >= 1; --s)
      e[static_cast<std::size_t>(s)] +=
          e[static_cast<std::size_t>(s - 1)] * ExactCount(static_cast<std::uint64_t>(cap));
  return e[static_cast<std::size_t>(soldiers)];
}

ExactCount side_exact(int blanks, int soldiers_used) {
  if (blanks < kXqMinBlanks || blanks > kXqMaxBlanks || soldiers_used < 0 || soldiers_used > kXqSoldiers)
    return ExactCount{0};
  return side_grid().exact[static_cast<std::size_t>(blanks - kXqMinBlanks)]
                          [static_cast<std::size_t>(soldiers_used)];
}

ExactCount side_reserve(int blanks, int reserve) {
  if (reserve < 0 || reserve > kXqSoldiers) return ExactCount{0};
  ExactCount sum;
  for (int s = 0; s <= kXqSoldiers - reserve; ++s) sum += side_exact(blanks, s);
  return sum;
}

ExactCount xq_convolution_term(int n1, int n2, int k1, int k2) {
  // B's k2 crossed soldiers land on A's n1 blanks and vice versa.
  return side_reserve(n1, k1) * side_reserve(n2, k2) * binom(n1, k2) * binom(n2, k1);
}

std::vector<XqConvolutionTerm> xq_positions_terms(int x) {
  std::vector<XqConvolutionTerm> out;
  for (int n1 = kXqMinBlanks; n1 <= kXqMaxBlanks; ++n1)
    for (int n2 = kXqMinBlanks; n2 <= kXqMaxBlanks; ++n2)
      for (int k1 = 0; k1 <= kXqSoldiers; ++k1) {
        const int k2 = n1 + n2 - k1 - x;
        if (k2 < 0 || k2 > kXqSoldiers) continue;
        ExactCount v = xq_convolution_term(n1, n2, k1, k2);
        if (!v.is_zero()) out.push_back({n1, n2, k1, k2, std::move(v)});
      }
  return out;
}

ExactCount xq_positions(int x) {
  if (x < 0 || x > kXqMaxX) return ExactCount{0};
  return positions_table()[static_cast<std::size_t>(x)];
}

std::vector<XqGrandTerm> xq_grand_terms(const PositionsTable& positions) {
  std::vector<XqGrandTerm> out;
  for (int x = kXqMinX; x <= kXqMaxX; ++x) {
    const ExactCount px = positions(x);
    for (int y = 0; y <= 2 * kXqHeavyPairs; ++y)
      out.push_back({x, y, px * binom(x, y) * pair_fill_count(kXqHeavyPairs, y)});
  }
  return out;
}

std::vector<XqGrandTerm> xq_grand_terms() { return xq_grand_terms(xq_positions); }

ExactCount xq_grand_total(const PositionsTable& positions) {
  ExactCount total;
  for (const auto& t : xq_grand_terms(positions)) total += t.value;
  return total;
}

ExactCount xq_grand_total() { return xq_grand_total(xq_positions); }

}  // namespace statecount
