#include "sgfr/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgfr/error.hpp"

namespace sgfr {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotMember: return "NotMember";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::IsMinimalGenerator: return "IsMinimalGenerator";
    case Errc::WrongShape: return "WrongShape";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::DegenerateSemigroup: return "DegenerateSemigroup";
    case Errc::NotTelescopic: return "NotTelescopic";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::IndexBelowConductor: return "IndexBelowConductor";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

// Keeps the sieve (and therefore the Frobenius number) within a few hundred
// megabytes of work.
constexpr Int kMaxGenerator = Int{1} << 24;
constexpr Int kMaxConductor = Int{1} << 27;

std::vector<Int> minimal_generators(std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const Int top = gens.back();
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(top) + 1, 0);
  reach[0] = 1;
  std::vector<Int> kept;
  for (Int n : gens) {
    if (reach[static_cast<std::size_t>(n)]) continue;
    kept.push_back(n);
    for (Int z = n; z <= top; ++z) {
      if (reach[static_cast<std::size_t>(z - n)]) reach[static_cast<std::size_t>(z)] = 1;
    }
  }
  return kept;
}

}  // namespace

Int gcd_of(std::span<const Int> values) noexcept {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Int> raw_generators)
    : NumericalSemigroup(std::span<const Int>(raw_generators.begin(),
                                              raw_generators.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> raw_generators) {
  if (raw_generators.empty()) {
    throw Error(Errc::EmptyGenerators, "a semigroup needs at least one generator");
  }
  for (Int n : raw_generators) {
    if (n < 1) {
      throw Error(Errc::InvalidParameters,
                  "generators must be positive, got " + std::to_string(n));
    }
    if (n > kMaxGenerator) {
      throw Error(Errc::InvalidParameters,
                  "generator " + std::to_string(n) + " exceeds supported size");
    }
  }
  if (gcd_of(raw_generators) != 1) {
    throw Error(Errc::GcdNotOne, "gcd of the generators must be 1");
  }

  auto data = std::make_shared<Data>();
  data->generators = minimal_generators(
      std::vector<Int>(raw_generators.begin(), raw_generators.end()));
  const auto& gens = data->generators;
  const Int m = gens.front();

  // Grow the sieve until m consecutive members appear; everything beyond is a
  // member, and the start of that run is the conductor.
  std::vector<std::uint8_t> sieve{1};
  Int run = 1;
  Int conductor = 0;
  for (Int z = 1; run < m; ++z) {
    if (z > kMaxConductor) {
      throw Error(Errc::InvalidParameters, "conductor exceeds supported size");
    }
    std::uint8_t in = 0;
    for (Int n : gens) {
      if (n > z) break;
      if (sieve[static_cast<std::size_t>(z - n)]) {
        in = 1;
        break;
      }
    }
    sieve.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      conductor = z + 1;
    }
  }
  sieve.resize(static_cast<std::size_t>(conductor + gens.back()), 1);
  data->conductor = conductor;
  data->genus = std::count(sieve.begin(), sieve.begin() + conductor, 0);
  data->sieve = std::move(sieve);
  data_ = std::move(data);
}

NumericalSemigroup NumericalSemigroup::naturals() { return NumericalSemigroup{1}; }

Int NumericalSemigroup::rho(Int r) const {
  if (r < 1) throw Error(Errc::InvalidParameters, "rho index must be >= 1");
  Int seen = 0;
  for (Int z = 0;; ++z) {
    if (contains(z) && ++seen == r) return z;
  }
}

std::vector<Int> NumericalSemigroup::elements_in(Int lo, Int hi) const {
  std::vector<Int> out;
  for (Int z = std::max<Int>(lo, 0); z < hi; ++z) {
    if (contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int z = 1; z < conductor(); ++z) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i) os << ',';
    os << generators()[i];
  }
  return os.str();
}

NumericalSemigroup corrupt_sieve_entry(const NumericalSemigroup& s, Int z) {
  if (z < 0 || z >= s.conductor()) {
    throw Error(Errc::InvalidParameters, "corruption index outside the sieve");
  }
  auto copy = std::make_shared<NumericalSemigroup::Data>(*s.data_);
  copy->sieve[static_cast<std::size_t>(z)] ^= 1;
  return NumericalSemigroup(std::move(copy));
}

}  // namespace sgfr
