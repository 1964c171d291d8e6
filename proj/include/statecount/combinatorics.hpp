#pragma once

#include <cstdint>

#include "statecount/exact_count.hpp"

namespace statecount {

/// C(n, k). Zero when k < 0 or k > n, so convolution loops can run over
/// rectangular index ranges without guards.
ExactCount binom(std::int64_t n, std::int64_t k);

ExactCount factorial(std::int64_t n);

/// Ways to fill all `sites` distinct sites, one piece per site, from `pairs`
/// pairs of pieces. The two pieces of a pair are identical; different pairs
/// are distinguishable. Equivalently: length-`sites` words over `pairs`
/// letters using each letter at most twice.
///
///   sum_i C(pairs, i) * C(pairs - i, sites - 2i) * sites! / 2^i
///
/// where i is the number of pairs that contribute both pieces. Zero when
/// sites > 2 * pairs.
ExactCount pair_fill_count(std::int64_t pairs, std::int64_t sites);

}  // namespace statecount
