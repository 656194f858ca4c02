#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgfr/families.hpp"
#include "sgfr/gluing.hpp"
#include "sgfr/semigroup.hpp"

namespace sgfr {

// "4,6,9" -> {4, 6, 9}. Throws ParseError.
std::vector<Int> parse_generator_list(std::string_view text);

// "hermitian:q=2,r=3", "suzuki:p=2,n=1", "suzuki-gamma1:p=2,n=1".
FamilySpec parse_family(std::string_view text);

// "a1*(...)+a2*(...)" where each (...) is a generator list or, recursively, a
// gluing expression: "4*(2*(1)+3*(1))+17*(1)".
Gluing parse_gluing(std::string_view text);

// Any of the three forms above, told apart by ':' (family) and '*' (gluing).
struct SemigroupSpec {
  enum class Kind { Generators, Family, Gluing };
  Kind kind = Kind::Generators;
  std::string text;
  NumericalSemigroup semigroup = NumericalSemigroup::naturals();
  std::optional<FamilySpec> family;
  std::shared_ptr<const Gluing> gluing;
};
SemigroupSpec parse_semigroup_spec(std::string_view text);

}  // namespace sgfr
