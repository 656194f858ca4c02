#pragma once

#include <memory>
#include <vector>

#include "sgfr/apery.hpp"
#include "sgfr/semigroup.hpp"

namespace sgfr {

// The carry table of the Apery set Ap(S, g) for a member g >= 1:
//   omega(i) = the element of Ap(S, g) congruent to i mod g,
//   h(i, j)  = (omega(i) - omega(i + j) + omega(j)) / g.
// Indices are taken mod g, so h(j - i, i) can be called with raw differences.
class CocycleTable {
 public:
  CocycleTable(const NumericalSemigroup& s, Int g);

  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& omega() const noexcept { return omega_; }
  Int omega(Int i) const noexcept { return omega_[index(i)]; }
  Int h(Int i, Int j) const noexcept {
    return table_[index(i) * static_cast<std::size_t>(modulus_) + index(j)];
  }

 private:
  std::size_t index(Int i) const noexcept {
    Int r = i % modulus_;
    return static_cast<std::size_t>(r < 0 ? r + modulus_ : r);
  }

  NumericalSemigroup semigroup_;
  Int modulus_;
  std::vector<Int> omega_;
  std::vector<Int> table_;
};

CocycleTable cocycle(const NumericalSemigroup& s, Int g);

class Gluing;

// A semigroup, optionally remembered as the gluing it came from. Lets
// free/telescopic towers nest: a factor of a gluing may itself be a gluing.
struct Tower {
  Tower(NumericalSemigroup s) : semigroup(std::move(s)) {}  // NOLINT
  Tower(const Gluing& g);                                    // NOLINT

  NumericalSemigroup semigroup;
  std::shared_ptr<const Gluing> gluing;
};

// Gamma = a1 * Gamma1 + a2 * Gamma2 with a1 in Gamma2, a2 in Gamma1,
// gcd(a1, a2) = 1 and neither a1 nor a2 a minimal generator. Validity is
// checked once, here; the cocycle of (Gamma2, a1) is computed eagerly.
class Gluing {
 public:
  // Throws GcdNotOne, NotMember, IsMinimalGenerator, InvalidParameters.
  Gluing(Int a1, Tower part1, Int a2, Tower part2);

  Int a1() const noexcept { return a1_; }
  Int a2() const noexcept { return a2_; }
  const NumericalSemigroup& gamma1() const noexcept { return part1_.semigroup; }
  const NumericalSemigroup& gamma2() const noexcept { return part2_.semigroup; }
  const Tower& part1() const noexcept { return part1_; }
  const Tower& part2() const noexcept { return part2_; }
  const NumericalSemigroup& expanded() const noexcept { return expanded_; }
  const CocycleTable& cocycle() const noexcept { return cocycle_; }

  // The element omega of Ap(Gamma2, a1) with a2 * omega == z (mod a1).
  Int omega_for(Int z) const noexcept;

  // "2*(2,3)+5*(1)"
  std::string to_string() const;

 private:
  Int a1_;
  Int a2_;
  Tower part1_;
  Tower part2_;
  NumericalSemigroup expanded_;
  CocycleTable cocycle_;
  std::vector<Int> residue_to_omega_;
};

Gluing make_gluing(Int a1, Tower part1, Int a2, Tower part2);

// z = a1 * k + a2 * omega, omega in Ap(Gamma2, a1); z is in Gamma iff k is in
// Gamma1. `residue` is omega mod a1, the cocycle index of omega.
struct UniqueForm {
  Int k = 0;
  Int omega = 0;
  Int residue = 0;
  bool member = false;
};
UniqueForm unique_form(const Gluing& g, Int z);

// Ap(Gamma, z) assembled from Gamma1-level Apery sets through the cocycle of
// (Gamma2, a1).
AperySet apery_via_cocycle(const Gluing& g, Int z);
DivisorSet divisors_via_cocycle(const Gluing& g, Int z);

// beta = #{ x in Ap(Gamma2, a1) : x - omega not in Gamma2 } and the lower bound
// (a1 - beta) #Ap(Gamma1, alpha) + beta #Ap(Gamma1, alpha + a2) on #Ap(Gamma, z).
struct BetaBound {
  Int alpha = 0;
  Int omega = 0;
  Int beta = 0;
  Int bound = 0;
};
BetaBound apery_beta_bound(const Gluing& g, Int z);

// Ap(Gamma, a1 z) = a1 Ap(Gamma1, z) + a2 Ap(Gamma2, a1).
AperySet apery_multiple(const Gluing& g, Int z);

// For g1 in Gamma1, g2 in Gamma2 the Apery set of a1 g1 + a2 g2 splits as
//   (a1 Ap(Gamma1, g1) + a2 Ap(Gamma2, a1))
//   u (a1 g1 + a1 Ap(Gamma1, a2) + a2 Ap(Gamma2, g2)),
// a disjoint union.
struct MemberGluedSplit {
  IntSet first;
  IntSet second;
};
MemberGluedSplit apery_of_member_glued(const Gluing& g, Int g1, Int g2);

// Closed forms for Gamma = a1 Gamma1 + a2 N, with z = a1 alpha + a2 beta,
// 0 <= beta < a1.
struct FreeExtension {
  Int alpha = 0;
  Int beta = 0;
  AperySet apery_set;
  DivisorSet divisor_set;
  Int apery_size = 0;
  // (beta + 1) #D(alpha) + (a1 - beta - 1) #D(alpha - a2)
  Int divisor_size = 0;
  // Two-case refinement: (beta + 1) #D(alpha) when alpha in Ap(Gamma1, a2),
  // a1 #D(alpha - a2) + (beta + 1) a2 otherwise; 0 when z is not a member.
  // The second case assumes #D(alpha) - #D(alpha - a2) = a2, which is only
  // guaranteed for alpha - a2 >= 2c(Gamma1) - 1. Below that it can disagree
  // with divisor_size, which is always exact.
  Int divisor_size_refined = 0;
  bool alpha_in_apery_of_a2 = false;
};
// Throws WrongShape unless Gamma2 = N.
FreeExtension free_extension(const Gluing& g, Int z);

// #Ap(<a, b>, z) = (b - u) max{v, 0} + u max{v + a, 0}, z = u a + v b,
// 0 <= u < b. Requires a, b >= 2 coprime (GcdNotOne / InvalidParameters).
Int two_gen_apery_size(Int a, Int b, Int z);

// Floor-mod and modular inverse helpers shared by the closed forms.
Int floor_mod(Int a, Int m) noexcept;
Int mod_inverse(Int a, Int m);

}  // namespace sgfr
