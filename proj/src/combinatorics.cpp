#include "statecount/combinatorics.hpp"

namespace statecount {

using Rep = ExactCount::Rep;

ExactCount binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return ExactCount{0};
  if (k > n - k) k = n - k;
  Rep r = 1;
  // r stays integral at every step: r == C(n - k + i + 1, i + 1) after step i.
  for (std::int64_t i = 0; i < k; ++i) {
    r *= (n - k + i + 1);
    r /= (i + 1);
  }
  return ExactCount::from_rep(std::move(r));
}

ExactCount factorial(std::int64_t n) {
  Rep r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return ExactCount::from_rep(std::move(r));
}

ExactCount pair_fill_count(std::int64_t pairs, std::int64_t sites) {
  if (pairs < 0 || sites < 0 || sites > 2 * pairs) return ExactCount{0};
  const Rep sites_fact = factorial(sites).rep();
  Rep total = 0;
  for (std::int64_t doubled = 0; 2 * doubled <= sites && doubled <= pairs; ++doubled) {
    const std::int64_t singles = sites - 2 * doubled;
    if (singles > pairs - doubled) continue;
    Rep term = binom(pairs, doubled).rep() * binom(pairs - doubled, singles).rep() * sites_fact;
    term >>= doubled;  // exact: sites! carries at least `doubled` factors of two
    total += term;
  }
  return ExactCount::from_rep(std::move(total));
}

}  // namespace statecount
