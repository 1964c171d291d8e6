#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "statecount/exact_count.hpp"

namespace statecount {

enum class Trust { verified_consistent, typo_suspect };

std::string_view to_string(Trust t);

/// A published reference value and the quantity it claims to be.
///
/// Ids are stable strings:
///   xq.table1.<adv>,<ele>.{total,shared2,shared1,shared0}
///   xq.table2.<pieces>.{total,shared2,shared1,shared0}
///   xq.table3.<blank soldier sites>,<soldiers>
///   xq.table4.<blanks>,<soldiers used>
///   xq.table5.<blanks>,<reserve>
///   xq.klist.<x>        xq.heavy.<sites>     xq.total
///   jg.palace.<adv>     jg.table6.<n>,<k>
///   jg.klist.<n>        jg.slist.<k>         jg.total
struct ReferenceFixture {
  std::string id;
  ExactCount published;
  Trust trust = Trust::verified_consistent;
  std::string locator;
};

/// Every published value the project checks against, in publication order.
const std::vector<ReferenceFixture>& published_fixtures();

}  // namespace statecount
