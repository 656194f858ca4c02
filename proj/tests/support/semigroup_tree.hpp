#pragma once

#include <vector>

#include "sgfr/semigroup.hpp"

namespace sgfr::testing {

// Walks the tree of all numerical semigroups of genus <= genus_max (children
// remove a minimal generator above the Frobenius number) and keeps those whose
// ascending generator list satisfies the free condition. N is skipped.
// Shares no code with the library; genus_max <= 30.
std::vector<std::vector<Int>> telescopic_by_tree(Int genus_max);

// Number of numerical semigroups of each genus 0..genus_max found by the walk.
std::vector<Int> semigroup_counts_by_tree(Int genus_max);

}  // namespace sgfr::testing
