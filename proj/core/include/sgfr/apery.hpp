#pragma once

#include <span>
#include <vector>

#include "sgfr/semigroup.hpp"

namespace sgfr {

// Sorted, duplicate-free set of integers.
using IntSet = std::vector<Int>;

// Ap(S, x) = { w in S : w - x not in S } for any integer x.
struct AperySet {
  NumericalSemigroup semigroup = NumericalSemigroup::naturals();
  Int shift = 0;
  IntSet elements;

  Int size() const noexcept { return static_cast<Int>(elements.size()); }
};

// D(z) = { s in S : z - s in S }.
struct DivisorSet {
  NumericalSemigroup semigroup = NumericalSemigroup::naturals();
  Int target = 0;
  IntSet elements;

  Int size() const noexcept { return static_cast<Int>(elements.size()); }
};

AperySet apery(const NumericalSemigroup& s, Int x);
Int apery_size(const NumericalSemigroup& s, Int x);

DivisorSet divisors(const NumericalSemigroup& s, Int z);
Int divisor_count(const NumericalSemigroup& s, Int z);

// Union of D(t) over a strictly increasing list of members.
// Throws NotMember / NotIncreasing / InvalidParameters (empty list).
IntSet divisors_union(const NumericalSemigroup& s, std::span<const Int> targets);

// For members g, h: Ap(S, g + h) is the disjoint union of Ap(S, g) and
// g + Ap(S, h).
struct ApSumSplit {
  AperySet first;    // Ap(S, g)
  IntSet shifted;    // g + Ap(S, h)
};
ApSumSplit apery_sum_split(const NumericalSemigroup& s, Int g, Int h);

// For x in Z and a member y:
//   Ap(S, x + y) = Ap(S, x) u (y + Ap(S, x)) u (Ap(S, y) n (x + Ap(S, y))).
struct ApShiftSplit {
  IntSet ap_x;             // Ap(S, x)
  IntSet y_plus_ap_x;      // y + Ap(S, x)
  IntSet intersection;     // Ap(S, y) n (x + Ap(S, y))
  // -x in S: the union collapses to `intersection`.
  bool negated_shift_is_member = false;
  // |x| is neither 0 nor a difference of two elements of Ap(S, y): the union
  // equals {0, y} + Ap(S, x).
  bool shift_avoids_differences = false;

  IntSet united() const;
};
ApShiftSplit apery_shift_split(const NumericalSemigroup& s, Int x, Int y);

// Small set algebra used across modules.
namespace sets {
IntSet unite(const IntSet& a, const IntSet& b);
IntSet intersect(const IntSet& a, const IntSet& b);
IntSet translate(const IntSet& a, Int offset);
IntSet scale(const IntSet& a, Int factor);
// { a + b : a in A, b in B }
IntSet minkowski_sum(const IntSet& a, const IntSet& b);
bool disjoint(const IntSet& a, const IntSet& b);
// { x' - x : x, x' in A, x' > x }
IntSet positive_differences(const IntSet& a);
IntSet normalize(IntSet a);
}  // namespace sets

}  // namespace sgfr
