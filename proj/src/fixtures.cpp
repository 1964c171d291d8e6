#include "statecount/fixtures.hpp"

#include <array>
#include <cstdint>

namespace statecount {

std::string_view to_string(Trust t) {
  return t == Trust::verified_consistent ? "verified-consistent" : "typo-suspect";
}

namespace {

using V = std::uint64_t;

void add(std::vector<ReferenceFixture>& out, std::string id, std::string_view value, Trust trust,
         std::string locator) {
  out.push_back({std::move(id), ExactCount::parse(value), trust, std::move(locator)});
}

void add(std::vector<ReferenceFixture>& out, std::string id, V value, Trust trust, std::string locator) {
  out.push_back({std::move(id), ExactCount{value}, trust, std::move(locator)});
}

std::string pair(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

constexpr Trust ok = Trust::verified_consistent;
constexpr Trust suspect = Trust::typo_suspect;

std::vector<ReferenceFixture> build() {
  std::vector<ReferenceFixture> f;

  // Camp arrangements by advisors/elephants: total, two/one/no elephants on
  // the shared fifth-rank sites.
  struct CampRow {
    int adv, ele;
    V total, two, one, none;
  };
  constexpr std::array<CampRow, 9> table1{{{2, 2, 1410, 70, 680, 660},
                                           {2, 1, 480, 0, 140, 340},
                                           {2, 0, 70, 0, 0, 70},
                                           {1, 2, 810, 40, 390, 380},
                                           {1, 1, 275, 0, 80, 195},
                                           {1, 0, 40, 0, 0, 40},
                                           {0, 2, 183, 9, 88, 86},
                                           {0, 1, 62, 0, 18, 44},
                                           {0, 0, 9, 0, 0, 9}}};
  for (const auto& r : table1) {
    const std::string base = "xq.table1." + pair(r.adv, r.ele);
    const std::string loc = "Table 1, Adv/Ele " + pair(r.adv, r.ele);
    add(f, base + ".total", r.total, ok, loc + ", total count");
    add(f, base + ".shared2", r.two, ok, loc + ", two 5th Elp");
    add(f, base + ".shared1", r.one, ok, loc + ", one 5th Elp");
    add(f, base + ".shared0", r.none, ok, loc + ", no 5th Elp");
  }

  struct PieceRow {
    int pieces;
    V total, two, one, none;
  };
  constexpr std::array<PieceRow, 5> table2{{{5, 1410, 70, 680, 660},
                                            {4, 1290, 40, 530, 720},
                                            {3, 528, 9, 168, 351},
                                            {2, 102, 0, 18, 84},
                                            {1, 9, 0, 0, 9}}};
  for (const auto& r : table2) {
    const std::string base = "xq.table2." + std::to_string(r.pieces);
    const std::string loc = "Table 2, used pieces " + std::to_string(r.pieces);
    add(f, base + ".total", r.total, ok, loc + ", total count");
    add(f, base + ".shared2", r.two, ok, loc + ", two 5th Elp");
    add(f, base + ".shared1", r.one, ok, loc + ", one 5th Elp");
    add(f, base + ".shared0", r.none, ok, loc + ", no 5th Elp");
  }

  // Rows: soldiers 0..5; columns: 10, 9, 8 blank soldier sites.
  constexpr std::array<std::array<V, 3>, 6> table3{
      {{1, 1, 1}, {10, 9, 8}, {40, 32, 25}, {80, 56, 38}, {80, 48, 28}, {32, 16, 8}}};
  for (int s = 0; s < 6; ++s)
    for (int c = 0; c < 3; ++c) {
      const int blank = 10 - c;
      add(f, "xq.table3." + pair(blank, s), table3[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)], ok,
          "Table 3, soldiers " + std::to_string(s) + ", blank sites " + std::to_string(blank));
    }

  // Exact soldier grid; row s starts at blanks 40 - s. The typeset columns
  // are shifted, so these cells carry reduced trust.
  constexpr std::array<std::array<V, 5>, 6> table4{{{1410, 1290, 528, 102, 9},
                                                    {13280, 12290, 5094, 1002, 90},
                                                    {49910, 46760, 19641, 3936, 360},
                                                    {93540, 88800, 37830, 7728, 720},
                                                    {87400, 84160, 36396, 7584, 720},
                                                    {32560, 31840, 13992, 2976, 288}}};
  for (int s = 0; s < 6; ++s)
    for (int i = 0; i < 5; ++i) {
      const int n = 40 - s + i;
      add(f, "xq.table4." + pair(n, s), table4[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)], suspect,
          "Table 4, soldiers " + std::to_string(s) + ", blanks " + std::to_string(n));
    }

  // Reserve grid; row k is populated from blanks 35 + k to 44.
  constexpr std::array<std::array<V, 10>, 6> table5{{
      {32560, 119240, 191692, 178082, 105742, 41789, 11040, 1890, 192, 9},
      {87400, 177700, 175106, 105454, 41789, 11040, 1890, 192, 9, 0},
      {93540, 138710, 97870, 41069, 11040, 1890, 192, 9, 0, 0},
      {49910, 60040, 33341, 10320, 1890, 192, 9, 0, 0, 0},
      {13280, 13700, 6384, 1530, 192, 9, 0, 0, 0, 0},
      {1410, 1290, 528, 102, 9, 0, 0, 0, 0, 0},
  }};
  for (int k = 0; k < 6; ++k)
    for (int n = 35 + k; n <= 44; ++n)
      add(f, "xq.table5." + pair(n, k), table5[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - 35 - k)],
          ok, "Table 5, reserve " + std::to_string(k) + ", blanks " + std::to_string(n));

  constexpr std::array<std::string_view, 19> xq_k{
      "6072015837104228000", "13932273683634608000", "15302416298575447500", "10415675878701420000",
      "4850335101880323628", "1620169838558710348",  "398556758971233856",   "73409438301988732",
      "10306140239862692",   "1131080570393880",     "100447213926298",      "7330142404440",
      "444595549080",        "22199620332",          "900695862",            "28838016",
      "655542",              "10584",                "81"};
  for (int x = 70; x <= 88; ++x)
    add(f, "xq.klist." + std::to_string(x), xq_k[static_cast<std::size_t>(x - 70)], ok,
        "light-stage list, n=" + std::to_string(x));

  constexpr std::array<V, 13> xq_heavy{1,      6,       36,      210,     1170,    6120,   29520,
                                       128520, 491400, 1587600, 4082400, 7484400, 7484400};
  for (int n = 0; n <= 12; ++n)
    add(f, "xq.heavy." + std::to_string(n), xq_heavy[static_cast<std::size_t>(n)], ok,
        "T(6,n) list, n=" + std::to_string(n));

  add(f, "xq.total", "7587909515978090371015538252511721150667", ok, "Xiangqi final result");

  add(f, "jg.palace.0", 9, ok, "palace arrangements, no advisor");
  add(f, "jg.palace.1", 72, ok, "palace arrangements, one advisor");
  add(f, "jg.palace.2", 252, ok, "palace arrangements, two advisors");

  // Rows n = 1..8, columns k = 0..5; zero marks a blank cell.
  constexpr std::array<std::array<V, 6>, 8> table6{{{9, 9, 9, 9, 9, 9},
                                                    {306, 306, 306, 306, 306, 72},
                                                    {4977, 4977, 4977, 4977, 2052, 252},
                                                    {51048, 51048, 51048, 27648, 6048, 0},
                                                    {369702, 369702, 235152, 69552, 0, 0},
                                                    {2012868, 1420848, 510048, 0, 0, 0},
                                                    {6503112, 2677752, 0, 0, 0, 0},
                                                    {10711008, 0, 0, 0, 0, 0}}};
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= 5; ++k) {
      const V v = table6[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
      if (v == 0) continue;
      add(f, "jg.table6." + pair(n, k), v, ok, "Table 6, n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }

  // Printed from k(16) down to k(2).
  constexpr std::array<std::string_view, 15> jg_k{
      "1457601002568716544", "1185971655381537024", "470042212117883328", "111504273140075328",
      "17627589996960672",   "1967816967471936",    "171617399962470",    "12043618055460",
      "686813883426",        "31907861496",         "1200808557",         "35663652",
      "783918",              "11340",               "81"};
  for (int n = 16; n >= 2; --n)
    add(f, "jg.klist." + std::to_string(n), jg_k[static_cast<std::size_t>(16 - n)], ok,
        "light-stage list, k(" + std::to_string(n) + ")");

  constexpr std::array<V, 17> jg_s{1,          8,           64,          504,         2028,       28560,
                                   44520,      294000,      441840,      6773760,     6827940,    209933640,
                                   209766060,  5448713760,  5448660840,  40864824000, 40864824000};
  for (int k = 0; k <= 16; ++k)
    add(f, "jg.slist." + std::to_string(k), jg_s[static_cast<std::size_t>(k)], suspect,
        "s(k) list, k=" + std::to_string(k));

  add(f, "jg.total", "235103954659801304018684123148785542989018468", ok, "Janggi final result");
  return f;
}

}  // namespace

const std::vector<ReferenceFixture>& published_fixtures() {
  static const std::vector<ReferenceFixture> fixtures = build();
  return fixtures;
}

}  // namespace statecount
