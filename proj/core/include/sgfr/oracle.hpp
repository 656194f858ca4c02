#pragma once

#include <cstdint>
#include <vector>

#include "sgfr/apery.hpp"
#include "sgfr/semigroup.hpp"

namespace sgfr {

struct OracleConfig {
  Int window_slack = 50;
  std::uint64_t tuple_budget = 10'000'000;
};

// Slow reference implementations straight from the definitions. Membership is
// decided by subtracting generators (memoised), never through
// NumericalSemigroup's sieve, so sieve bugs in the fast path show up as
// disagreements.
class Oracle {
 public:
  explicit Oracle(std::vector<Int> generators, OracleConfig config = {});
  explicit Oracle(const NumericalSemigroup& s, OracleConfig config = {});

  bool member(Int z);
  Int conductor();
  Int genus();
  Int multiplicity() const noexcept { return multiplicity_; }

  // Scans [0, c + |x| + slack].
  IntSet apery(Int x);
  // Scans [0, z].
  IntSet divisors(Int z);
  // r in {1, 2, 3}; every tuple below the a_r cutoff is unioned explicitly.
  // Throws SearchBudgetExceeded past config.tuple_budget.
  Int delta_r(Int a, Int r);
  // min #apery(z) over 1 <= z <= m.
  Int second_feng_rao();

 private:
  std::vector<Int> generators_;
  OracleConfig config_;
  Int multiplicity_;
  std::vector<std::int8_t> memo_;  // -1 unknown
  Int conductor_ = -1;
  Int genus_ = -1;
};

IntSet oracle_apery(const NumericalSemigroup& s, Int x, OracleConfig config = {});
IntSet oracle_divisors(const NumericalSemigroup& s, Int z, OracleConfig config = {});
Int oracle_delta_r(const NumericalSemigroup& s, Int a, Int r, OracleConfig config = {});

}  // namespace sgfr
