#include "statecount/report.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

#include "statecount/combinatorics.hpp"
#include "statecount/geometry.hpp"
#include "statecount/janggi.hpp"
#include "statecount/oracle.hpp"
#include "statecount/xiangqi.hpp"

namespace statecount {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::paper_typo_confirmed: return "paper-typo-confirmed";
    case Verdict::mismatch: return "mismatch";
  }
  return "mismatch";
}

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::all: return "all";
    case Scope::xiangqi: return "xiangqi";
    case Scope::janggi: return "janggi";
    case Scope::combinatorics: return "combinatorics";
  }
  return "all";
}

Scope parse_scope(std::string_view text) {
  for (Scope s : {Scope::all, Scope::xiangqi, Scope::janggi, Scope::combinatorics})
    if (text == to_string(s)) return s;
  throw std::invalid_argument("unknown scope: " + std::string(text));
}

bool in_scope(Scope s, std::string_view id) {
  const bool heavy = id.starts_with("xq.heavy.") || id.starts_with("jg.slist.");
  switch (s) {
    case Scope::all: return true;
    case Scope::combinatorics: return heavy;
    case Scope::xiangqi: return id.starts_with("xq.") && !heavy;
    case Scope::janggi: return id.starts_with("jg.") && !heavy;
  }
  return false;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

int to_int(std::string_view s, std::string_view id) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed fixture id: " + std::string(id));
  return v;
}

std::pair<int, int> to_pair(std::string_view s, std::string_view id) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw std::invalid_argument("malformed fixture id: " + std::string(id));
  return {to_int(parts[0], id), to_int(parts[1], id)};
}

[[noreturn]] void unknown(std::string_view id) {
  throw std::invalid_argument("fixture id names no quantity: " + std::string(id));
}

// Oracle results that are expensive enough to share between fixtures.
struct OracleCache {
  std::map<int, ExactCount> xq_small, jg_small, xq_half, jg_half;
  std::optional<ExactCount> xq_total, jg_total;
};

OracleCache& cache() {
  static OracleCache c;
  return c;
}
std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const std::map<int, ExactCount>& small_positions(Variant v) {
  std::lock_guard lock(cache_mutex());
  auto& slot = v == Variant::xiangqi ? cache().xq_small : cache().jg_small;
  if (slot.empty()) slot = oracle::enum_positions_small(v, oracle::kSmallMaxPieces);
  return slot;
}

const std::map<int, ExactCount>& half_positions(Variant v) {
  std::lock_guard lock(cache_mutex());
  auto& slot = v == Variant::xiangqi ? cache().xq_half : cache().jg_half;
  if (slot.empty()) slot = v == Variant::xiangqi ? oracle::halfboard_positions_xq() : oracle::halfboard_positions_jg();
  return slot;
}

ExactCount oracle_total(Variant v) {
  std::lock_guard lock(cache_mutex());
  auto& slot = v == Variant::xiangqi ? cache().xq_total : cache().jg_total;
  if (!slot) slot = v == Variant::xiangqi ? oracle::grand_total_xq() : oracle::grand_total_jg();
  return *slot;
}

ExactCount lookup(const std::map<int, ExactCount>& m, int key) {
  auto it = m.find(key);
  return it == m.end() ? ExactCount{0} : it->second;
}

// Light-stage oracle: full-board enumeration when the piece count is small
// enough, otherwise the half-board route.
ExactCount positions_oracle(Variant v, int pieces, int key) {
  if (pieces <= oracle::kSmallMaxPieces) return lookup(small_positions(v), pieces);
  return lookup(half_positions(v), key);
}

ExactCount pair_fill_oracle(int m, int n) {
  if (m <= oracle::kPairFillMaxPairs && n <= oracle::kPairFillMaxSites) return oracle::enum_pair_fill(m, n);
  return oracle::pair_fill_by_recurrence(m, n);
}

const ExactCount& shared_field(const std::array<ExactCount, 3>& by_shared, const ExactCount& total,
                               std::string_view field, std::string_view id) {
  if (field == "total") return total;
  if (field == "shared2") return by_shared[2];
  if (field == "shared1") return by_shared[1];
  if (field == "shared0") return by_shared[0];
  unknown(id);
}

Evaluation evaluate_xq(std::string_view id, const std::vector<std::string_view>& p) {
  const std::string_view table = p[1];
  if (table == "table1" && p.size() == 4) {
    auto [a, e] = to_pair(p[2], id);
    const CampClassRow row = camp_classes(a, e);
    const CampClassRow orc = oracle::enum_camp_xq(a, e);
    return {shared_field(row.by_shared, row.total, p[3], id), shared_field(orc.by_shared, orc.total, p[3], id)};
  }
  if (table == "table2" && p.size() == 4) {
    const int pieces = to_int(p[2], id);
    const CampPieceRow row = camp_by_piece_count(pieces);
    CampPieceRow orc;
    for (int a = 0; a <= 2; ++a) {
      const int e = pieces - 1 - a;
      if (e < 0 || e > 2) continue;
      const CampClassRow r = oracle::enum_camp_xq(a, e);
      orc.total += r.total;
      for (std::size_t j = 0; j < 3; ++j) orc.by_shared[j] += r.by_shared[j];
    }
    return {shared_field(row.by_shared, row.total, p[3], id), shared_field(orc.by_shared, orc.total, p[3], id)};
  }
  if (p.size() == 3) {
    if (table == "table3") {
      auto [blank, s] = to_pair(p[2], id);
      return {soldier_own_side(blank, s), oracle::enum_soldiers_xq(10 - blank, s)};
    }
    if (table == "table4") {
      auto [n, s] = to_pair(p[2], id);
      return {side_exact(n, s), oracle::enum_side_exact_xq(n, s)};
    }
    if (table == "table5") {
      auto [n, k] = to_pair(p[2], id);
      return {side_reserve(n, k), oracle::enum_side_xq(n, k)};
    }
    if (table == "klist") {
      const int x = to_int(p[2], id);
      return {xq_positions(x), positions_oracle(Variant::xiangqi, kBoardSites - x, x)};
    }
    if (table == "heavy") {
      const int n = to_int(p[2], id);
      return {pair_fill_count(kXqHeavyPairs, n), pair_fill_oracle(kXqHeavyPairs, n)};
    }
  }
  if (table == "total" && p.size() == 2) return {xq_grand_total(), oracle_total(Variant::xiangqi)};
  unknown(id);
}

Evaluation evaluate_jg(std::string_view id, const std::vector<std::string_view>& p) {
  const std::string_view table = p[1];
  if (p.size() == 3) {
    if (table == "palace") {
      const int a = to_int(p[2], id);
      // A home zone holding only the king and a advisors.
      return {jg_palace_arrangements(a), oracle::enum_home_jg(1 + a, kJgSoldiers)};
    }
    if (table == "table6") {
      auto [n, k] = to_pair(p[2], id);
      return {jg_home_count(n, k), oracle::enum_home_jg(n, k)};
    }
    if (table == "klist") {
      const int n = to_int(p[2], id);
      return {jg_positions(n), positions_oracle(Variant::janggi, n, n)};
    }
    if (table == "slist") {
      const int k = to_int(p[2], id);
      return {pair_fill_count(kJgHeavyPairs, k), pair_fill_oracle(kJgHeavyPairs, k)};
    }
  }
  if (table == "total" && p.size() == 2) return {jg_grand_total(), oracle_total(Variant::janggi)};
  unknown(id);
}

std::optional<ExactCount> published(const std::vector<ReferenceFixture>& fixtures, const std::string& id) {
  for (const auto& f : fixtures)
    if (f.id == id) return f.published;
  return std::nullopt;
}

// Grand total rebuilt from the published component lists, term by term.
// Empty when a component is missing.
std::optional<std::vector<TermBreakdown>> published_terms(Variant v, const std::vector<ReferenceFixture>& fixtures) {
  std::vector<TermBreakdown> out;
  if (v == Variant::xiangqi) {
    for (const auto& t : xq_grand_terms()) {
      auto k = published(fixtures, "xq.klist." + std::to_string(t.x));
      auto h = published(fixtures, "xq.heavy." + std::to_string(t.y));
      if (!k || !h) return std::nullopt;
      out.push_back({"xiangqi", t.x, t.y, t.value, *k * binom(t.x, t.y) * *h});
    }
  } else {
    for (const auto& t : jg_grand_terms()) {
      auto k = published(fixtures, "jg.klist." + std::to_string(t.n));
      auto s = published(fixtures, "jg.slist." + std::to_string(t.y));
      if (!k || !s) return std::nullopt;
      out.push_back({"janggi", t.n, t.y, t.value, *k * binom(kBoardSites - t.n, t.y) * *s});
    }
  }
  return out;
}

template <class F, class G>
bool all_equal_on(int lo1, int hi1, int lo2, int hi2, F&& closed, G&& orc) {
  for (int a = lo1; a <= hi1; ++a)
    for (int b = lo2; b <= hi2; ++b)
      if (!(closed(a, b) == orc(a, b))) return false;
  return true;
}

bool geometry_ok(Variant v) {
  for (const auto& c : validate_geometry(v))
    if (!c.pass) return false;
  return true;
}

std::vector<ConsistencyCheck> consistency_checks(Scope scope) {
  std::vector<ConsistencyCheck> out;
  if (scope == Scope::all || scope == Scope::xiangqi) {
    out.push_back({"xiangqi geometry assertions", geometry_ok(Variant::xiangqi)});
    out.push_back({"camp_classes = enum_camp_xq, all (advisors, elephants)",
                   all_equal_on(
                       0, 2, 0, 2,
                       [](int a, int e) {
                         auto r = camp_classes(a, e);
                         return std::make_pair(r.total, r.by_shared);
                       },
                       [](int a, int e) {
                         auto r = oracle::enum_camp_xq(a, e);
                         return std::make_pair(r.total, r.by_shared);
                       })});
    out.push_back({"soldier_own_side = enum_soldiers_xq, blank 8..10, soldiers 0..5",
                   all_equal_on(8, 10, 0, 5, soldier_own_side,
                                [](int b, int s) { return oracle::enum_soldiers_xq(10 - b, s); })});
    out.push_back({"side_exact = enumerated half board, blanks 35..44, soldiers 0..5",
                   all_equal_on(35, 44, 0, 5, side_exact, oracle::enum_side_exact_xq)});
    out.push_back({"side_reserve = enum_side_xq, blanks 35..44, reserve 0..5",
                   all_equal_on(35, 44, 0, 5, side_reserve, oracle::enum_side_xq)});
    out.push_back({"xq_positions = half-board oracle, x 0..88",
                   all_equal_on(0, kXqMaxX, 0, 0, [](int x, int) { return xq_positions(x); },
                                [](int x, int) { return lookup(half_positions(Variant::xiangqi), x); })});
    out.push_back({"xq_positions = full-board enumeration, x 86..88",
                   all_equal_on(86, 88, 0, 0, [](int x, int) { return xq_positions(x); },
                                [](int x, int) { return lookup(small_positions(Variant::xiangqi), 90 - x); })});
  }
  if (scope == Scope::all || scope == Scope::janggi) {
    out.push_back({"janggi geometry assertions", geometry_ok(Variant::janggi)});
    out.push_back({"jg_home_count = enum_home_jg, n 1..8, k 0..5",
                   all_equal_on(1, 8, 0, 5, jg_home_count, oracle::enum_home_jg)});
    out.push_back({"jg_positions = half-board oracle, n 0..16",
                   all_equal_on(0, kJgMaxPieces, 0, 0, [](int n, int) { return jg_positions(n); },
                                [](int n, int) { return lookup(half_positions(Variant::janggi), n); })});
    out.push_back({"jg_positions = full-board enumeration, n 2..4",
                   all_equal_on(2, 4, 0, 0, [](int n, int) { return jg_positions(n); },
                                [](int n, int) { return lookup(small_positions(Variant::janggi), n); })});
  }
  if (scope == Scope::all || scope == Scope::combinatorics) {
    out.push_back({"pair_fill_count = enum_pair_fill, m 0..8, n 0..8",
                   all_equal_on(0, 8, 0, 8, [](int m, int n) { return pair_fill_count(m, n); },
                                oracle::enum_pair_fill)});
    out.push_back({"pair_fill_count = pair_fill_by_recurrence, m 0..8, n 0..16",
                   all_equal_on(0, 8, 0, 16, [](int m, int n) { return pair_fill_count(m, n); },
                                oracle::pair_fill_by_recurrence)});
  }
  return out;
}

}  // namespace

Evaluation evaluate(std::string_view id) {
  const auto parts = split(id, '.');
  if (parts.size() < 2) unknown(id);
  if (parts[0] == "xq") return evaluate_xq(id, parts);
  if (parts[0] == "jg") return evaluate_jg(id, parts);
  unknown(id);
}

DiscrepancyReport run_verify(Scope scope, const std::vector<ReferenceFixture>& fixtures) {
  DiscrepancyReport report;
  report.scope = scope;
  for (const auto& f : fixtures) {
    if (!in_scope(scope, f.id)) continue;
    Evaluation ev = evaluate(f.id);
    ReportRow row{f.id, f.published, ev.computed, ev.oracle, Verdict::mismatch, f.trust, f.locator};

    const bool is_total = f.id == "xq.total" || f.id == "jg.total";
    const Variant v = f.id.starts_with("xq.") ? Variant::xiangqi : Variant::janggi;
    std::optional<std::vector<TermBreakdown>> terms;
    bool attributed = true;
    if (is_total) {
      terms = published_terms(v, fixtures);
      ExactCount rebuilt;
      if (terms)
        for (const auto& t : *terms) rebuilt += t.published_term;
      attributed = terms.has_value() && rebuilt == f.published;
      report.notes.push_back(std::string(to_string(v)) + ": published total " +
                             (attributed ? "equals" : "does not equal") +
                             " the total rebuilt from the published component lists");
    }

    if (row.published == row.computed)
      row.verdict = Verdict::match;
    else if (row.oracle && *row.oracle == row.computed && attributed)
      row.verdict = Verdict::paper_typo_confirmed;
    else
      row.verdict = Verdict::mismatch;

    if (is_total && row.verdict != Verdict::match && terms)
      report.breakdown.insert(report.breakdown.end(), terms->begin(), terms->end());
    report.rows.push_back(std::move(row));
  }
  report.checks = consistency_checks(scope);
  return report;
}

DiscrepancyReport run_verify(Scope scope) { return run_verify(scope, published_fixtures()); }

int verify_exit_code(const DiscrepancyReport& report) {
  for (const auto& r : report.rows)
    if (r.verdict == Verdict::mismatch) return 1;
  for (const auto& c : report.checks)
    if (!c.pass) return 1;
  return 0;
}

}  // namespace statecount
