#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sgfr {

using Int = std::int64_t;

// An immutable numerical semigroup <n_1, ..., n_e> with an O(1) membership
// sieve over [0, conductor + max generator). Copies share the underlying
// storage, so passing by value is cheap.
class NumericalSemigroup {
 public:
  // Builds <raw_generators>, reducing the input to the minimal generating set.
  // Throws Error{EmptyGenerators} or Error{GcdNotOne}; non-positive inputs are
  // InvalidParameters.
  explicit NumericalSemigroup(std::span<const Int> raw_generators);
  NumericalSemigroup(std::initializer_list<Int> raw_generators);

  // The semigroup N = <1>.
  static NumericalSemigroup naturals();

  // Minimal generators, ascending.
  const std::vector<Int>& generators() const noexcept { return data_->generators; }
  Int embedding_dimension() const noexcept {
    return static_cast<Int>(data_->generators.size());
  }
  Int multiplicity() const noexcept { return data_->generators.front(); }
  Int largest_generator() const noexcept { return data_->generators.back(); }
  // -1 for N.
  Int frobenius() const noexcept { return data_->conductor - 1; }
  Int conductor() const noexcept { return data_->conductor; }
  Int genus() const noexcept { return data_->genus; }
  bool is_naturals() const noexcept { return data_->conductor == 0; }

  bool contains(Int z) const noexcept {
    if (z < 0) return false;
    if (z >= data_->conductor) return true;
    return data_->sieve[static_cast<std::size_t>(z)] != 0;
  }

  // The r-th smallest element (rho(1) = 0, rho(2) = multiplicity).
  Int rho(Int r) const;

  // Elements of the semigroup in [lo, hi), ascending.
  std::vector<Int> elements_in(Int lo, Int hi) const;

  // Gaps (elements of N not in the semigroup), ascending.
  std::vector<Int> gaps() const;

  // "4,6,9"
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) noexcept {
    return a.data_ == b.data_ || a.data_->generators == b.data_->generators;
  }

 private:
  struct Data {
    std::vector<Int> generators;
    std::vector<std::uint8_t> sieve;
    Int conductor = 0;
    Int genus = 0;
  };

  explicit NumericalSemigroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend NumericalSemigroup corrupt_sieve_entry(const NumericalSemigroup&, Int);
};

// Test hook: a copy of `s` whose membership table has entry `z` flipped
// (0 <= z < conductor). Used to check that the oracle suite notices sieve
// corruption; never use it for real computation.
NumericalSemigroup corrupt_sieve_entry(const NumericalSemigroup& s, Int z);

Int gcd_of(std::span<const Int> values) noexcept;

}  // namespace sgfr
