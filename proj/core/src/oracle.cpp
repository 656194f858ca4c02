#include "sgfr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "sgfr/error.hpp"

namespace sgfr {

Oracle::Oracle(std::vector<Int> generators, OracleConfig config)
    : generators_(std::move(generators)), config_(config) {
  if (generators_.empty()) throw Error(Errc::EmptyGenerators, "oracle needs generators");
  if (config_.window_slack < 0) {
    throw Error(Errc::InvalidParameters, "window slack must be non-negative");
  }
  multiplicity_ = *std::min_element(generators_.begin(), generators_.end());
  memo_.push_back(1);
}

Oracle::Oracle(const NumericalSemigroup& s, OracleConfig config)
    : Oracle(s.generators(), config) {}

bool Oracle::member(Int z) {
  if (z < 0) return false;
  // Fill upward so every subtraction lands on a known entry.
  while (static_cast<Int>(memo_.size()) <= z) {
    const Int v = static_cast<Int>(memo_.size());
    std::int8_t in = 0;
    for (Int n : generators_) {
      const Int rest = v - n;
      if (rest >= 0 && memo_[static_cast<std::size_t>(rest)] == 1) {
        in = 1;
        break;
      }
    }
    memo_.push_back(in);
  }
  return memo_[static_cast<std::size_t>(z)] == 1;
}

Int Oracle::conductor() {
  if (conductor_ >= 0) return conductor_;
  Int run = 0;
  Int last_gap = -1;
  for (Int z = 0; run < multiplicity_; ++z) {
    if (member(z)) {
      ++run;
    } else {
      run = 0;
      last_gap = z;
    }
  }
  conductor_ = last_gap + 1;
  genus_ = 0;
  for (Int z = 0; z < conductor_; ++z) genus_ += member(z) ? 0 : 1;
  return conductor_;
}

Int Oracle::genus() {
  conductor();
  return genus_;
}

IntSet Oracle::apery(Int x) {
  const Int end = conductor() + (x < 0 ? -x : x) + config_.window_slack;
  IntSet out;
  for (Int w = 0; w <= end; ++w) {
    if (member(w) && !member(w - x)) out.push_back(w);
  }
  return out;
}

IntSet Oracle::divisors(Int z) {
  IntSet out;
  if (z < 0 || !member(z)) return out;
  for (Int s = 0; s <= z; ++s) {
    if (member(s) && member(z - s)) out.push_back(s);
  }
  return out;
}

Int Oracle::second_feng_rao() {
  Int best = std::numeric_limits<Int>::max();
  for (Int z = 1; z <= multiplicity_; ++z) {
    best = std::min(best, static_cast<Int>(apery(z).size()));
  }
  return best;
}

Int Oracle::delta_r(Int a, Int r) {
  if (r < 1 || r > 3) throw Error(Errc::InvalidParameters, "oracle handles r in {1, 2, 3}");
  a = std::max<Int>(a, 0);
  const Int two_g = 2 * genus();

  std::vector<Int> members;
  std::vector<std::set<Int>> dsets;
  auto extend_to = [&](Int limit) {
    for (Int b = members.empty() ? a : members.back() + 1; b <= limit; ++b) {
      if (member(b)) {
        members.push_back(b);
        const IntSet d = divisors(b);
        dsets.emplace_back(d.begin(), d.end());
      }
    }
  };
  auto union_size = [&](std::initializer_list<std::size_t> idx) {
    std::set<Int> u;
    for (std::size_t i : idx) u.insert(dsets[i].begin(), dsets[i].end());
    return static_cast<Int>(u.size());
  };

  // Start from the r smallest admissible members.
  Int limit = a;
  while (static_cast<Int>(members.size()) < r) extend_to(limit++);
  Int best = r == 1 ? union_size({0}) : r == 2 ? union_size({0, 1}) : union_size({0, 1, 2});

  std::uint64_t examined = 0;
  auto tick = [&]() {
    if (++examined > config_.tuple_budget) {
      throw Error(Errc::SearchBudgetExceeded, "oracle tuple budget exhausted", best);
    }
  };

  for (std::size_t top = 0;; ++top) {
    while (top >= members.size()) extend_to(members.back() + members.back() / 2 + multiplicity_);
    if (members[top] + 1 - two_g >= best) break;
    if (r == 1) {
      tick();
      best = std::min(best, union_size({top}));
    } else if (r == 2) {
      for (std::size_t i = 0; i < top; ++i) {
        tick();
        best = std::min(best, union_size({i, top}));
      }
    } else {
      for (std::size_t i = 0; i < top; ++i) {
        for (std::size_t j = i + 1; j < top; ++j) {
          tick();
          best = std::min(best, union_size({i, j, top}));
        }
      }
    }
  }
  return best;
}

IntSet oracle_apery(const NumericalSemigroup& s, Int x, OracleConfig config) {
  return Oracle(s, config).apery(x);
}

IntSet oracle_divisors(const NumericalSemigroup& s, Int z, OracleConfig config) {
  return Oracle(s, config).divisors(z);
}

Int oracle_delta_r(const NumericalSemigroup& s, Int a, Int r, OracleConfig config) {
  return Oracle(s, config).delta_r(a, r);
}

}  // namespace sgfr
