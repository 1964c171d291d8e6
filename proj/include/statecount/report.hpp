#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statecount/exact_count.hpp"
#include "statecount/fixtures.hpp"

namespace statecount {

enum class Verdict { match, paper_typo_confirmed, mismatch };
enum class Scope { all, xiangqi, janggi, combinatorics };

std::string_view to_string(Verdict v);
std::string_view to_string(Scope s);
/// Throws std::invalid_argument for an unknown scope name.
Scope parse_scope(std::string_view text);

bool in_scope(Scope s, std::string_view fixture_id);

/// Value of a fixture's quantity by the closed-form pipeline, plus the
/// enumeration-oracle value where one is tractable.
struct Evaluation {
  ExactCount computed;
  std::optional<ExactCount> oracle;
};

/// Throws std::invalid_argument when the id names no quantity.
Evaluation evaluate(std::string_view fixture_id);

struct ReportRow {
  std::string id;
  ExactCount published;
  ExactCount computed;
  std::optional<ExactCount> oracle;
  Verdict verdict = Verdict::mismatch;
  Trust trust = Trust::verified_consistent;
  std::string locator;
};

/// Full-domain closed-form vs oracle comparisons that no single fixture covers.
struct ConsistencyCheck {
  std::string id;
  bool pass = false;
};

/// One grand-total term, recomputed from the closed form and from the
/// published component lists.
struct TermBreakdown {
  std::string variant;
  int index = 0;  // x (Xiangqi empty sites) or n (Janggi light pieces)
  int y = 0;
  ExactCount computed_term;
  ExactCount published_term;
};

struct DiscrepancyReport {
  Scope scope = Scope::all;
  std::vector<ReportRow> rows;
  std::vector<ConsistencyCheck> checks;
  std::vector<TermBreakdown> breakdown;  // only for totals that are not a match
  std::vector<std::string> notes;
};

/// Verdict rule: match iff published == computed. Otherwise
/// paper-typo-confirmed when an oracle value exists and equals the computed
/// value (for a grand total, additionally the published total must be
/// reproduced from the published component lists). Anything else is a
/// mismatch.
DiscrepancyReport run_verify(Scope scope, const std::vector<ReferenceFixture>& fixtures);
DiscrepancyReport run_verify(Scope scope);

/// 0 when every row is match or paper-typo-confirmed and every consistency
/// check passes, 1 otherwise.
int verify_exit_code(const DiscrepancyReport& report);

}  // namespace statecount
