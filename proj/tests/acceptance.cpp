// Acceptance suite: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criterion numbers. Exit status is 0 iff all selected pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "statecount/combinatorics.hpp"
#include "statecount/fixtures.hpp"
#include "statecount/geometry.hpp"
#include "statecount/janggi.hpp"
#include "statecount/oracle.hpp"
#include "statecount/report.hpp"
#include "statecount/xiangqi.hpp"

using namespace statecount;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> info;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string seconds_text(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

const ExactCount& pub(const std::string& id) {
  for (const auto& f : published_fixtures())
    if (f.id == id) return f.published;
  throw std::invalid_argument("no fixture " + id);
}

std::string pair(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

void expect_eq(Outcome& o, const ExactCount& got, const ExactCount& want, const std::string& what) {
  o.expect(got == want, what + ": got " + got.to_string() + ", published " + want.to_string());
}

Outcome table1() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int a = 0; a <= 2; ++a)
    for (int e = 0; e <= 2; ++e) {
      const CampClassRow r = camp_classes(a, e);
      const std::string base = "xq.table1." + pair(a, e);
      expect_eq(o, r.total, pub(base + ".total"), base + ".total");
      expect_eq(o, r.by_shared[2], pub(base + ".shared2"), base + ".shared2");
      expect_eq(o, r.by_shared[1], pub(base + ".shared1"), base + ".shared1");
      expect_eq(o, r.by_shared[0], pub(base + ".shared0"), base + ".shared0");
    }
  const double s = seconds_since(t0);
  o.expect(s < 1.0, "runtime " + seconds_text(s));
  o.info.push_back("9 rows x 4 columns in " + seconds_text(s));
  return o;
}

Outcome table2() {
  Outcome o;
  for (int p = 1; p <= 5; ++p) {
    const CampPieceRow r = camp_by_piece_count(p);
    const std::string base = "xq.table2." + std::to_string(p);
    expect_eq(o, r.total, pub(base + ".total"), base + ".total");
    expect_eq(o, r.by_shared[2], pub(base + ".shared2"), base + ".shared2");
    expect_eq(o, r.by_shared[1], pub(base + ".shared1"), base + ".shared1");
    expect_eq(o, r.by_shared[0], pub(base + ".shared0"), base + ".shared0");
  }
  o.info.push_back("5 rows");
  return o;
}

Outcome table3() {
  Outcome o;
  int cells = 0;
  for (int blank = 8; blank <= 10; ++blank)
    for (int s = 0; s <= kXqSoldiers; ++s, ++cells)
      expect_eq(o, soldier_own_side(blank, s), pub("xq.table3." + pair(blank, s)), "xq.table3." + pair(blank, s));
  o.info.push_back(std::to_string(cells) + " cells");
  return o;
}

Outcome reserve_grid() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = kXqMinBlanks; n <= kXqMaxBlanks; ++n)
    for (int k = 0; k <= kXqSoldiers; ++k) {
      const ExactCount closed = side_reserve(n, k), enumerated = oracle::enum_side_xq(n, k);
      o.expect(closed == enumerated, "d(" + pair(n, k) + ") closed form " + closed.to_string() + " vs enumeration " +
                                         enumerated.to_string());
    }
  const double s = seconds_since(t0);
  o.expect(s < 60.0, "oracle join runtime " + seconds_text(s));
  int cells = 0;
  for (const auto& f : published_fixtures())
    if (f.id.starts_with("xq.table5.")) {
      ++cells;
      expect_eq(o, evaluate(f.id).computed, f.published, f.id);
    }
  expect_eq(o, side_reserve(44, 0), ExactCount{9}, "d(44,0)");
  expect_eq(o, side_reserve(40, 4), ExactCount{13700}, "d(40,4)");
  expect_eq(o, side_reserve(36, 0), ExactCount{119240}, "d(36,0)");
  expect_eq(o, side_reserve(35, 0), ExactCount{32560}, "d(35,0)");
  o.info.push_back("60-cell domain vs enumeration in " + seconds_text(s) + ", " + std::to_string(cells) +
                   " published cells");
  return o;
}

Outcome xq_klist() {
  Outcome o;
  int matched = 0;
  for (int x = kXqMinX; x <= kXqMaxX; ++x) {
    const std::string id = "xq.klist." + std::to_string(x);
    const bool eq = xq_positions(x) == pub(id);
    matched += eq ? 1 : 0;
    expect_eq(o, xq_positions(x), pub(id), id);
  }
  const auto small = oracle::enum_positions_small(Variant::xiangqi, 3);
  expect_eq(o, small.at(2), xq_positions(88), "full-board enumeration x=88");
  expect_eq(o, small.at(3), xq_positions(87), "full-board enumeration x=87");
  o.info.push_back(std::to_string(matched) + "/19 published values reproduced");
  return o;
}

Outcome xq_total() {
  Outcome o;
  const auto t0 = Clock::now();
  const ExactCount total = xq_grand_total();
  const double s = seconds_since(t0);
  expect_eq(o, total, pub("xq.total"), "xq.total");
  o.expect(s < 1.0, "runtime " + seconds_text(s));
  o.info.push_back(std::to_string(total.digits()) + " digits in " + seconds_text(s));
  return o;
}

Outcome pair_fill() {
  Outcome o;
  for (int n = 0; n <= 2 * kXqHeavyPairs; ++n)
    expect_eq(o, pair_fill_count(kXqHeavyPairs, n), pub("xq.heavy." + std::to_string(n)),
              "T(6," + std::to_string(n) + ")");
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 8; ++n)
      o.expect(pair_fill_count(m, n) == oracle::enum_pair_fill(m, n), "T(" + pair(m, n) + ") vs enumeration");
  return o;
}

Outcome table6() {
  Outcome o;
  int cells = 0;
  for (const auto& f : published_fixtures())
    if (f.id.starts_with("jg.table6.") || f.id.starts_with("jg.palace.")) {
      ++cells;
      expect_eq(o, evaluate(f.id).computed, f.published, f.id);
    }
  const auto t0 = Clock::now();
  for (int n = 1; n <= kJgMaxHome; ++n)
    for (int k = 0; k <= kJgSoldiers; ++k)
      o.expect(jg_home_count(n, k) == oracle::enum_home_jg(n, k), "(" + pair(n, k) + ") vs enumeration");
  const double s = seconds_since(t0);
  o.expect(s < 60.0, "oracle runtime " + seconds_text(s));
  o.info.push_back(std::to_string(cells) + " published cells, 48-cell domain enumerated in " + seconds_text(s));
  return o;
}

Outcome jg_klist() {
  Outcome o;
  for (int n = kJgMinPieces; n <= kJgMaxPieces; ++n) {
    const std::string id = "jg.klist." + std::to_string(n);
    expect_eq(o, jg_positions(n), pub(id), id);
  }
  const auto small = oracle::enum_positions_small(Variant::janggi, 4);
  for (int n = 2; n <= 4; ++n)
    expect_eq(o, small.at(n), jg_positions(n), "full-board enumeration n=" + std::to_string(n));
  return o;
}

Outcome jg_slist() {
  Outcome o;
  const DiscrepancyReport r = run_verify(Scope::combinatorics);
  int matches = 0, typos = 0;
  for (const auto& row : r.rows) {
    if (!row.id.starts_with("jg.slist.")) continue;
    o.expect(row.verdict != Verdict::mismatch, row.id + " classified as mismatch");
    matches += row.verdict == Verdict::match ? 1 : 0;
    typos += row.verdict == Verdict::paper_typo_confirmed ? 1 : 0;
    if (row.published == row.computed) o.expect(row.verdict == Verdict::match, row.id + " should match");
  }
  auto verdict = [&](std::string_view id) {
    for (const auto& row : r.rows)
      if (row.id == id) return row.verdict;
    return Verdict::mismatch;
  };
  o.expect(verdict("jg.slist.5") == Verdict::match, "k=5 not a match");
  o.expect(verdict("jg.slist.4") == Verdict::paper_typo_confirmed, "k=4 not paper-typo-confirmed");
  o.expect(verdict("jg.slist.6") == Verdict::paper_typo_confirmed, "k=6 not paper-typo-confirmed");
  o.expect(pair_fill_count(8, 4) == ExactCount{3864}, "T(8,4) != 3864");
  o.info.push_back(std::to_string(matches) + " match, " + std::to_string(typos) + " paper-typo-confirmed");
  return o;
}

Outcome jg_total() {
  Outcome o;
  const ExactCount total = jg_grand_total();
  const ExactCount& published = pub("jg.total");
  if (!(total == published)) {
    const DiscrepancyReport r = run_verify(Scope::janggi);
    o.expect(verify_exit_code(r) == 1, "verify does not exit 1 on a differing total");
    o.expect(!r.breakdown.empty(), "no per-(n,y) breakdown emitted");
    o.info.push_back("computed " + total.to_string() + " differs from published; breakdown has " +
                     std::to_string(r.breakdown.size()) + " terms");
  }
  o.expect(total.digits() == 45, "computed total has " + std::to_string(total.digits()) + " digits");

  for (int n1 = 1; n1 <= kJgMaxHome; ++n1)
    for (int n2 = 1; n2 <= kJgMaxHome; ++n2)
      for (int k1 = 0; k1 <= kJgSoldiers; ++k1)
        for (int k2 = 0; k2 <= kJgSoldiers; ++k2)
          o.expect(jg_convolution_term(n1, n2, k1, k2) == jg_convolution_term(n2, n1, k2, k1),
                   "player swap (" + pair(n1, n2) + "," + pair(k1, k2) + ")");
  auto terms = jg_grand_terms();
  std::mt19937 rng(2024);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(terms.begin(), terms.end(), rng);
    ExactCount sum;
    for (const auto& t : terms) sum += t.value;
    o.expect(sum == total, "summation order changes the total");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  for (int n = 1; n <= 64; ++n)
    for (int k = 0; k <= n; ++k) {
      o.expect(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k), "Pascal " + pair(n, k));
      o.expect(binom(n, k) == binom(n, n - k), "symmetry " + pair(n, k));
    }
  for (int n = kXqMinBlanks; n <= kXqMaxBlanks; ++n)
    for (int k = 0; k < kXqSoldiers; ++k)
      o.expect(side_reserve(n, k) == side_reserve(n, k + 1) + side_exact(n, kXqSoldiers - k),
               "Xiangqi cumulative grid " + pair(n, k));
  for (int n = 1; n <= kJgMaxHome; ++n)
    for (int k = 0; k < kJgSoldiers; ++k) {
      // jg_home_count is cumulative in the reserve, so it never grows with k.
      const ExactCount hi = jg_home_count(n, k), lo = jg_home_count(n, k + 1);
      o.expect(lo <= hi, "Janggi cumulative grid " + pair(n, k));
    }
  for (int n1 = kXqMinBlanks; n1 <= kXqMaxBlanks; ++n1)
    for (int n2 = kXqMinBlanks; n2 <= kXqMaxBlanks; ++n2)
      for (int k1 = 0; k1 <= kXqSoldiers; ++k1)
        for (int k2 = 0; k2 <= kXqSoldiers; ++k2)
          o.expect(xq_convolution_term(n1, n2, k1, k2) == xq_convolution_term(n2, n1, k2, k1),
                   "Xiangqi player swap");
  for (Variant v : {Variant::xiangqi, Variant::janggi})
    for (const auto& c : validate_geometry(v)) o.expect(c.pass, std::string(to_string(v)) + " " + c.id);
  const auto& xq = standard_zones(Variant::xiangqi);
  const auto& jg = standard_zones(Variant::janggi);
  o.expect((xq.at("elephant_sites") & xq.at("palace")).size() == 1, "|elephant & palace|");
  o.expect((xq.at("elephant_sites") & xq.at("soldier_own_side_sites")).size() == 2, "|elephant & soldier|");
  o.expect((xq.at("advisor_sites") & xq.at("elephant_sites")).empty(), "advisor & elephant");
  o.expect(xq.at("palace").size() == 9 && xq.at("advisor_sites").size() == 5 && xq.at("elephant_sites").size() == 7 &&
               xq.at("soldier_own_side_sites").size() == 10 && jg.at("home_zone").size() == 27 &&
               jg.at("middle_ranks").size() == 36,
           "zone cardinalities");
  SiteSet board;
  for (int i = 0; i < kBoardSites; ++i) board.insert(Site::from_index(i));
  o.expect(board.size() == 90, "|board|");
  o.expect(xq_grand_total([](int) { return ExactCount{}; }).is_zero(), "Xiangqi annihilator");
  o.expect(jg_grand_total([](int) { return ExactCount{}; }).is_zero(), "Janggi annihilator");
  return o;
}

Outcome end_to_end() {
  Outcome o;
  const auto t0 = Clock::now();
  const int raw = std::system(STATECOUNT_EXE " verify --scope all > /dev/null");
  const double s = seconds_since(t0);
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  o.expect(code == 0, "statecount verify --scope all exited " + std::to_string(code));
  o.expect(s < 300.0, "runtime " + seconds_text(s));
  for (const auto& row : run_verify(Scope::all).rows)
    o.expect(row.verdict != Verdict::mismatch, row.id + " is a mismatch");
  o.info.push_back("ran in " + seconds_text(s));
  return o;
}

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "Xiangqi camp classes by advisors and elephants", table1},
      {2, "Xiangqi camp classes by piece count", table2},
      {3, "Xiangqi own-side soldier placements", table3},
      {4, "Xiangqi half-board reserve grid", reserve_grid},
      {5, "Xiangqi light-stage list", xq_klist},
      {6, "Xiangqi grand total", xq_total},
      {7, "pair-fill counts for six pairs", pair_fill},
      {8, "Janggi home-zone grid", table6},
      {9, "Janggi light-stage list", jg_klist},
      {10, "Janggi pair-fill list", jg_slist},
      {11, "Janggi grand total", jg_total},
      {12, "property suites", properties},
      {13, "end-to-end verify", end_to_end},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool ok = true;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) continue;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    ok = ok && out.pass;
    std::cout << (c.number < 10 ? "AC0" : "AC") << c.number << " " << (out.pass ? "PASS" : "FAIL") << "  " << c.name
              << "\n";
    for (const auto& line : out.info) std::cout << "      " << line << "\n";
    constexpr std::size_t kShown = 8;
    for (std::size_t i = 0; i < out.failures.size() && i < kShown; ++i)
      std::cout << "      - " << out.failures[i] << "\n";
    if (out.failures.size() > kShown) std::cout << "      ... " << out.failures.size() - kShown << " more\n";
  }
  return ok ? 0 : 1;
}
