#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "statecount/combinatorics.hpp"
#include "statecount/fixtures.hpp"
#include "statecount/geometry.hpp"
#include "statecount/janggi.hpp"
#include "statecount/oracle.hpp"
#include "statecount/report.hpp"
#include "statecount/xiangqi.hpp"

namespace statecount::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& t, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
}

void write_json(const Table& t, std::string_view variant, std::string_view id, std::ostream& out) {
  ordered_json j;
  j["variant"] = variant;
  j["table"] = id;
  j["columns"] = t.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json row = ordered_json::object();
    for (std::size_t i = 0; i < r.size(); ++i) row[t.columns[i]] = r[i];
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
}

std::string str(const ExactCount& c) { return c.to_string(); }
std::string str(int v) { return std::to_string(v); }

std::optional<ExactCount> published(const std::string& id) {
  for (const auto& f : published_fixtures())
    if (f.id == id) return f.published;
  return std::nullopt;
}

Table table_t1() {
  Table t{{"advisors", "elephants", "total", "two_shared", "one_shared", "no_shared"}, {}};
  for (int a = 2; a >= 0; --a)
    for (int e = 2; e >= 0; --e) {
      const CampClassRow r = camp_classes(a, e);
      t.rows.push_back({str(a), str(e), str(r.total), str(r.by_shared[2]), str(r.by_shared[1]), str(r.by_shared[0])});
    }
  return t;
}

Table table_t2() {
  Table t{{"pieces", "total", "two_shared", "one_shared", "no_shared"}, {}};
  for (int p = 5; p >= 1; --p) {
    const CampPieceRow r = camp_by_piece_count(p);
    t.rows.push_back({str(p), str(r.total), str(r.by_shared[2]), str(r.by_shared[1]), str(r.by_shared[0])});
  }
  return t;
}

Table table_t3() {
  Table t{{"soldiers", "blank_10", "blank_9", "blank_8"}, {}};
  for (int s = 0; s <= kXqSoldiers; ++s)
    t.rows.push_back({str(s), str(soldier_own_side(10, s)), str(soldier_own_side(9, s)), str(soldier_own_side(8, s))});
  return t;
}

template <class F>
Table blanks_grid(std::string first, int row_from, int row_to, F&& cell) {
  Table t;
  t.columns.push_back(std::move(first));
  for (int n = kXqMinBlanks; n <= kXqMaxBlanks; ++n) t.columns.push_back("blanks_" + str(n));
  const int step = row_from <= row_to ? 1 : -1;
  for (int r = row_from; r != row_to + step; r += step) {
    std::vector<std::string> row{str(r)};
    for (int n = kXqMinBlanks; n <= kXqMaxBlanks; ++n) row.push_back(str(cell(n, r)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_t6() {
  Table t{{"n"}, {}};
  for (int k = 0; k <= kJgSoldiers; ++k) t.columns.push_back("k_" + str(k));
  for (int n = 1; n <= kJgMaxHome; ++n) {
    std::vector<std::string> row{str(n)};
    for (int k = 0; k <= kJgSoldiers; ++k) row.push_back(str(jg_home_count(n, k)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_klist(Variant v) {
  Table t;
  if (v == Variant::xiangqi) {
    t.columns = {"x", "positions"};
    for (int x = kXqMinX; x <= kXqMaxX; ++x) t.rows.push_back({str(x), str(xq_positions(x))});
  } else {
    t.columns = {"n", "positions"};
    for (int n = kJgMinPieces; n <= kJgMaxPieces; ++n) t.rows.push_back({str(n), str(jg_positions(n))});
  }
  return t;
}

Table table_slist(Variant v) {
  const bool xq = v == Variant::xiangqi;
  const int pairs = xq ? kXqHeavyPairs : kJgHeavyPairs;
  const std::string prefix = xq ? "xq.heavy." : "jg.slist.";
  Table t{{xq ? "n" : "k", "pair_fill_" + str(pairs), "published", "annotation"}, {}};
  for (int k = 0; k <= 2 * pairs; ++k) {
    const ExactCount value = pair_fill_count(pairs, k);
    const auto pub = published(prefix + str(k));
    std::string note;
    if (pub && !(*pub == value)) note = "typo-suspect";
    t.rows.push_back({str(k), str(value), pub ? str(*pub) : "", note});
  }
  return t;
}

Table table_geometry(Variant v) {
  Table t{{"zone", "player", "file", "rank"}, {}};
  for (const auto& [name, sites] : standard_zones(v).zones)
    for (Player p : {Player::A, Player::B})
      for (Site s : zone(v, p, name).sites())
        t.rows.push_back({name, std::string(to_string(p)), str(s.file), str(s.rank)});
  return t;
}

Table build_table(Variant v, std::string_view id) {
  const bool xq = v == Variant::xiangqi;
  if (id == "klist") return table_klist(v);
  if (id == "slist") return table_slist(v);
  if (id == "geometry") return table_geometry(v);
  if (xq) {
    if (id == "t1") return table_t1();
    if (id == "t2") return table_t2();
    if (id == "t3") return table_t3();
    if (id == "t4") return blanks_grid("soldiers", 0, kXqSoldiers, side_exact);
    if (id == "t5") return blanks_grid("reserve", kXqSoldiers, 0, side_reserve);
  } else if (id == "t6") {
    return table_t6();
  }
  throw UsageError("table '" + std::string(id) + "' is not available for " + std::string(to_string(v)));
}

int cmd_count(Variant v, const std::string& format, std::ostream& out) {
  const bool xq = v == Variant::xiangqi;
  const ExactCount total = xq ? xq_grand_total() : jg_grand_total();
  if (format == "dec") {
    out << total << "\n";
    return kExitOk;
  }
  ordered_json j;
  j["variant"] = to_string(v);
  j["total"] = total.to_string();
  j["digits"] = total.digits();
  ordered_json terms = ordered_json::array();
  if (xq) {
    for (const auto& t : xq_grand_terms()) terms.push_back({{"x", t.x}, {"y", t.y}, {"value", t.value.to_string()}});
  } else {
    for (const auto& t : jg_grand_terms()) terms.push_back({{"n", t.n}, {"y", t.y}, {"value", t.value.to_string()}});
  }
  j["terms"] = std::move(terms);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_table(Variant v, const std::string& id, const std::string& format, std::ostream& out) {
  const Table t = build_table(v, id);
  if (format == "csv")
    write_csv(t, out);
  else
    write_json(t, to_string(v), id, out);
  return kExitOk;
}

void print_text_report(const DiscrepancyReport& r, std::ostream& out) {
  out << "scope: " << to_string(r.scope) << "\n";
  out << std::left << std::setw(26) << "id" << " " << std::setw(20) << "verdict" << " " << std::setw(20) << "trust"
      << " published / computed / oracle\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& row : r.rows) {
    ++counts[static_cast<int>(row.verdict)];
    out << std::left << std::setw(26) << row.id << " " << std::setw(20) << to_string(row.verdict) << " "
        << std::setw(20) << to_string(row.trust) << " " << row.published << " / " << row.computed << " / "
        << (row.oracle ? row.oracle->to_string() : "-") << "\n";
  }
  out << "\nconsistency checks:\n";
  for (const auto& c : r.checks) out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << "\n";
  if (!r.notes.empty()) {
    out << "\nnotes:\n";
    for (const auto& n : r.notes) out << "  " << n << "\n";
  }
  if (!r.breakdown.empty()) {
    out << "\nterm breakdown (variant index y computed_term published_term status):\n";
    for (const auto& t : r.breakdown)
      out << "  " << t.variant << " " << t.index << " " << t.y << " " << t.computed_term << " " << t.published_term
          << " " << (t.computed_term == t.published_term ? "same" : "differs") << "\n";
  }
  out << "\nsummary: " << counts[0] << " match, " << counts[1] << " paper-typo-confirmed, " << counts[2]
      << " mismatch\n";
}

void print_json_report(const DiscrepancyReport& r, std::ostream& out) {
  ordered_json j;
  j["scope"] = to_string(r.scope);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o;
    o["id"] = row.id;
    o["published"] = row.published.to_string();
    o["computed"] = row.computed.to_string();
    o["oracle"] = row.oracle ? ordered_json(row.oracle->to_string()) : ordered_json(nullptr);
    o["verdict"] = to_string(row.verdict);
    o["trust"] = to_string(row.trust);
    o["locator"] = row.locator;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"id", c.id}, {"pass", c.pass}});
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  ordered_json terms = ordered_json::array();
  for (const auto& t : r.breakdown)
    terms.push_back({{"variant", t.variant},
                     {"index", t.index},
                     {"y", t.y},
                     {"computed_term", t.computed_term.to_string()},
                     {"published_term", t.published_term.to_string()}});
  j["breakdown"] = std::move(terms);
  j["exit_code"] = verify_exit_code(r);
  out << j.dump(2) << "\n";
}

int cmd_verify(Scope scope, const std::string& format, std::ostream& out) {
  const DiscrepancyReport r = run_verify(scope);
  if (format == "json")
    print_json_report(r, out);
  else
    print_text_report(r, out);
  return verify_exit_code(r) == 0 ? kExitOk : kExitMismatch;
}

int param_int(const std::vector<std::string>& params, std::size_t i, const std::string& target) {
  if (i >= params.size()) throw UsageError(target + ": missing parameter " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    const int v = std::stoi(params[i], &used);
    if (used != params[i].size()) throw std::invalid_argument(params[i]);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(target + ": parameter '" + params[i] + "' is not an integer");
  }
}

void require_range(const std::string& target, std::string_view name, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw UsageError(target + ": " + std::string(name) + " must be in " + std::to_string(lo) + ".." +
                     std::to_string(hi) + " (got " + std::to_string(v) + ")");
}

int cmd_oracle(const std::string& target, const std::vector<std::string>& params, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  auto expect = [&](std::size_t n) {
    if (params.size() != n)
      throw UsageError(target + ": expects " + std::to_string(n) + " parameters, got " + std::to_string(params.size()));
  };
  if (target == "enum_camp_xq") {
    expect(2);
    const int a = param_int(params, 0, target), e = param_int(params, 1, target);
    require_range(target, "advisors", a, 0, 2);
    require_range(target, "elephants", e, 0, 2);
    const CampClassRow r = oracle::enum_camp_xq(a, e);
    out << "total: " << r.total << "\nshared2: " << r.by_shared[2] << "\nshared1: " << r.by_shared[1]
        << "\nshared0: " << r.by_shared[0] << "\n";
  } else if (target == "enum_soldiers_xq") {
    expect(2);
    const int b = param_int(params, 0, target), s = param_int(params, 1, target);
    require_range(target, "shared_sites_blocked", b, 0, 2);
    require_range(target, "soldiers", s, 0, 5);
    out << "count: " << oracle::enum_soldiers_xq(b, s) << "\n";
  } else if (target == "enum_side_xq") {
    expect(2);
    const int n = param_int(params, 0, target), k = param_int(params, 1, target);
    require_range(target, "blanks", n, kXqMinBlanks, kXqMaxBlanks);
    require_range(target, "reserve", k, 0, 5);
    out << "count: " << oracle::enum_side_xq(n, k) << "\n";
  } else if (target == "enum_home_jg") {
    expect(2);
    const int n = param_int(params, 0, target), k = param_int(params, 1, target);
    require_range(target, "n", n, 1, 8);
    require_range(target, "k", k, 0, 5);
    out << "count: " << oracle::enum_home_jg(n, k) << "\n";
  } else if (target == "enum_pair_fill") {
    expect(2);
    const int m = param_int(params, 0, target), n = param_int(params, 1, target);
    require_range(target, "m", m, 0, oracle::kPairFillMaxPairs);
    require_range(target, "n", n, 0, oracle::kPairFillMaxSites);
    out << "count: " << oracle::enum_pair_fill(m, n) << "\n";
  } else if (target == "enum_positions_small") {
    expect(2);
    Variant v;
    try {
      v = parse_variant(params[0]);
    } catch (const std::invalid_argument& e) {
      throw UsageError(target + ": " + e.what());
    }
    const int max = param_int(params, 1, target);
    require_range(target, "max_light_pieces", max, oracle::kSmallMinPieces, oracle::kSmallMaxPieces);
    for (const auto& [pieces, count] : oracle::enum_positions_small(v, max))
      out << pieces << ": " << count << "\n";
  } else {
    throw UsageError("unknown oracle target: " + target);
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << "elapsed_ms: " << std::fixed << std::setprecision(1) << ms << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact state-space counts for Xiangqi and Janggi", "statecount"};
  app.require_subcommand(1);

  std::string variant, format_count = "dec", table_id, format_table = "csv", scope = "all", format_verify = "text";
  std::string target;
  std::vector<std::string> params;
  const std::vector<std::string> variants{"xiangqi", "janggi"};

  auto* count = app.add_subcommand("count", "Print a grand total");
  count->add_option("--variant", variant, "xiangqi or janggi")->required()->check(CLI::IsMember(variants));
  count->add_option("--format", format_count, "dec or json")->check(CLI::IsMember({"dec", "json"}));

  auto* table = app.add_subcommand("table", "Emit a recomputed table");
  table->add_option("--variant", variant, "xiangqi or janggi")->required()->check(CLI::IsMember(variants));
  table->add_option("--table", table_id, "t1..t6, klist, slist, geometry")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "t5", "t6", "klist", "slist", "geometry"}));
  table->add_option("--format", format_table, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Compare every published value with the pipeline and the oracles");
  verify->add_option("--scope", scope, "all, xiangqi, janggi, combinatorics")
      ->check(CLI::IsMember({"all", "xiangqi", "janggi", "combinatorics"}));
  verify->add_option("--format", format_verify, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* orc = app.add_subcommand("oracle", "Run one brute-force enumerator");
  orc->add_option("--target", target, "enumerator name")
      ->required()
      ->check(CLI::IsMember({"enum_camp_xq", "enum_soldiers_xq", "enum_side_xq", "enum_home_jg", "enum_pair_fill",
                             "enum_positions_small"}));
  orc->add_option("params", params, "enumerator parameters");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(parse_variant(variant), format_count, out);
    if (*table) return cmd_table(parse_variant(variant), table_id, format_table, out);
    if (*verify) return cmd_verify(parse_scope(scope), format_verify, out);
    if (*orc) return cmd_oracle(target, params, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace statecount::cli
