#pragma once

#include <vector>

#include "sgfr/fengrao.hpp"
#include "sgfr/semigroup.hpp"

namespace sgfr {

// Lower bounds on the second generalized Hamming weight d_2(C_a) of the
// one-point code C_a with Weierstrass semigroup S over a field of size Q:
//   kp       = delta_FR(a + 2)
//   gob      = delta_FR(a + 1) + ceil(delta_FR(a + 1) / Q)
//   e2_bound = a + 2 - 2g + E(S, 2)
// and the exact second Feng-Rao distance delta^2_FR(a + 1) they are compared
// against. Only e2_bound <= exact is a theorem.
struct BoundsRow {
  Int a = 0;
  Int kp = 0;
  Int gob = 0;
  Int e2_bound = 0;
  Int exact = 0;
  // false when the delta^2 search ran out of budget; `exact` is then an upper
  // bound.
  bool exact_certified = true;
};

// Throws IndexBelowConductor (a < c), InvalidParameters (Q < 2),
// DegenerateSemigroup (S = N).
BoundsRow bounds_row(const NumericalSemigroup& s, Int a, Int field_size,
                     const SearchOptions& opts = {});

std::vector<BoundsRow> bounds_table(const NumericalSemigroup& s, Int a_from, Int a_to,
                                    Int field_size, const SearchOptions& opts = {});

}  // namespace sgfr
