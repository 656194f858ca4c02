#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgfr/gluing.hpp"
#include "sgfr/rational.hpp"
#include "sgfr/semigroup.hpp"

namespace sgfr {

// delta_FR(a) = min { #D(b) : b in S, b >= a }. Exact: the scan stops once
// b + 1 - 2g reaches the best value, since #D(b) >= b + 1 - 2g.
Int feng_rao_distance(const NumericalSemigroup& s, Int a);

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

struct SearchOptions {
  // Cap on tuples (partial and complete) visited by the search.
  std::uint64_t tuple_budget = kDefaultTupleBudget;
};

struct SearchResult {
  Int value = 0;
  // false when the budget ran out: `value` is then only an upper bound.
  bool certified = true;
  std::uint64_t tuples_examined = 0;
  // A tuple a <= a_1 < ... < a_r attaining `value`.
  std::vector<Int> witness;
};

// delta^r_FR(a) = min #(D(a_1) u ... u D(a_r)) over a <= a_1 < ... < a_r in S.
// Tuples are enumerated by increasing a_r; any a_r with a_r + 1 - 2g at or
// above the incumbent is cut, as are partial tuples whose union already is.
SearchResult generalized_feng_rao_search(const NumericalSemigroup& s, Int a, Int r,
                                         const SearchOptions& opts = {});

// As above, but throws SearchBudgetExceeded (witness = best upper bound) when
// the result is not certified. r = 1 is feng_rao_distance.
Int generalized_feng_rao_distance(const NumericalSemigroup& s, Int a, Int r,
                                  const SearchOptions& opts = {});

// E(S, 2) = min { #Ap(S, z) : 1 <= z <= m(S) }. DegenerateSemigroup for N.
Int second_feng_rao_number(const NumericalSemigroup& s);

// E(S, r): 0 for r = 1, second_feng_rao_number for r = 2, otherwise read off
// the linear law at a = 2c - 1.
Int feng_rao_number(const NumericalSemigroup& s, Int r, const SearchOptions& opts = {});

// An arrangement (n_1, ..., n_e) of the minimal generators with
// d_i = gcd(n_1, ..., n_{i-1}) strictly decreasing and c_i n_i in
// <n_1, ..., n_{i-1}>, c_i = d_i / d_{i+1}.
struct FreeArrangement {
  std::vector<Int> generators;
  std::vector<Int> d;  // d_2, ..., d_{e+1}
  std::vector<Int> c;  // c_2, ..., c_e
  bool telescopic = false;
};

struct FreeArrangements {
  std::vector<FreeArrangement> arrangements;
  // Embedding dimension above kMaxPermutedGenerators: only the ascending
  // arrangement was tried.
  bool partial = false;
};

inline constexpr Int kMaxPermutedGenerators = 8;

// Checks one arrangement; nullopt when it is not free.
std::optional<FreeArrangement> free_arrangement(std::vector<Int> arrangement);
FreeArrangements free_arrangements(const NumericalSemigroup& s);
bool is_free(const NumericalSemigroup& s);
bool is_telescopic(const NumericalSemigroup& s);

// A free arrangement with (c_i - 1) n_i >= c_i n_1 for every i >= 3, which
// certifies E(S, 2) = m(S). nullopt if none exists (and always for N).
std::optional<FreeArrangement> apmin_certificate(const NumericalSemigroup& s);

struct CeilingBound {
  Int lhs = 0;  // #Ap(S, z)
  Int rhs = 0;  // n_1 * ceil(z / n_e)
};
// Throws NotTelescopic.
CeilingBound telescopic_apery_bound(const NumericalSemigroup& s, Int z);

// Given #Ap(Gamma1, z) >= m(Gamma1) ceil(z / y) and a2 > a1 y, checks
// #Ap(Gamma, z) >= m(Gamma) ceil(z / a2). Both sides are sampled over
// z in [-3 a2, 3 a2]. Throws HypothesisFailed (witness = violating z when the
// failure is a sampled one). Returns whether the conclusion held.
bool gluing_ceiling_transfer(const Gluing& g, Int y);

// E(Gamma, 2) >= min{ a1 E(Gamma1, 2), (a1 - 1) a2 / a1 } for
// Gamma = a1 Gamma1 + a2 N, Gamma1 != N.
struct LowerBound {
  Rational multiple_term;  // a1 E(Gamma1, 2)
  Rational tail_term;      // (a1 - 1) a2 / a1
  Rational bound;
};
// Throws WrongShape (Gamma2 != N) or DegenerateSemigroup (Gamma1 = N).
LowerBound lembound_lower(const Gluing& g);

// Per-z refinement behind lembound_lower, for z > 0 written as
// z = a1 alpha + a2 beta, 0 <= beta < a1.
struct LowerBoundCase {
  Int alpha = 0;
  Int beta = 0;
  Int apery_size = 0;
  // #Ap > (a1 - beta)(#Ap(Gamma1, alpha) + a2 beta / a1); equality at beta = 0
  bool general_holds = false;
  bool positive_alpha = false;  // alpha > 0: #Ap >= a1 E(Gamma1, 2)
  bool positive_alpha_holds = true;
  bool middle_beta = false;     // beta in {2..a1-2}: #Ap > a2
  bool middle_beta_holds = true;
  bool edge_beta = false;       // beta in {1, a1-1}: #Ap > (a1 - 1) a2 / a1
  bool edge_beta_holds = true;

  bool all_hold() const noexcept {
    return general_holds && positive_alpha_holds && middle_beta_holds &&
           edge_beta_holds;
  }
};
LowerBoundCase lembound_case(const Gluing& g, Int z);

// Closed-form #Ap(<sigma x, sigma y, c_x x + c_y y>, z) for three-generated
// complete intersections. Requires sigma, x, y > 1, x > c_y >= 0, c_x >= 0,
// gcd(x, y) = 1, gcd(sigma, c) = 1 with c = c_x x + c_y y > 0
// (InvalidParameters otherwise).
Int three_gen_ci_apery_size(Int sigma, Int x, Int y, Int cx, Int cy, Int z);
NumericalSemigroup three_gen_ci_semigroup(Int sigma, Int x, Int y, Int cx, Int cy);

// Telescopic semigroups other than N with genus <= genus_max, as ascending
// minimal generator lists, ordered by genus then lexicographically.
struct TelescopicEntry {
  std::vector<Int> generators;
  Int genus = 0;
};
std::vector<TelescopicEntry> enumerate_telescopic(Int genus_max);

struct TelescopicScanReport {
  Int genus_max = 0;
  Int count = 0;
  std::vector<Int> count_by_genus;  // index = genus
  // Entries where E(S, 2) != m(S) or the structural cross-checks disagree.
  std::vector<TelescopicEntry> failures;
};
TelescopicScanReport scan_telescopic(Int genus_max);

}  // namespace sgfr
