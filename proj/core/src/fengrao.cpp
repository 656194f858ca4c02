#include "sgfr/fengrao.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "sgfr/apery.hpp"
#include "sgfr/error.hpp"

namespace sgfr {

Int feng_rao_distance(const NumericalSemigroup& s, Int a) {
  const Int two_g = 2 * s.genus();
  Int best = std::numeric_limits<Int>::max();
  for (Int b = std::max<Int>(a, 0); b + 1 - two_g < best; ++b) {
    if (s.contains(b)) best = std::min(best, divisor_count(s, b));
  }
  return best;
}

namespace {

// Divisor sets as bit rows over [0, width).
class DivisorRows {
 public:
  DivisorRows(const NumericalSemigroup& s, const std::vector<Int>& targets, Int width)
      : words_(static_cast<std::size_t>((width + 63) / 64)) {
    rows_.resize(targets.size() * words_, 0);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      std::uint64_t* row = rows_.data() + t * words_;
      for (Int d : divisors(s, targets[t]).elements) {
        row[static_cast<std::size_t>(d) / 64] |= std::uint64_t{1} << (d % 64);
      }
    }
  }

  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* row(std::size_t t) const noexcept {
    return rows_.data() + t * words_;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

Int popcount(const std::uint64_t* bits, std::size_t words) noexcept {
  Int n = 0;
  for (std::size_t w = 0; w < words; ++w) n += std::popcount(bits[w]);
  return n;
}

class TupleSearch {
 public:
  TupleSearch(const DivisorRows& rows, Int r, std::uint64_t budget, Int best,
              std::vector<std::size_t> best_tuple)
      : rows_(rows),
        r_(r),
        budget_(budget),
        best_(best),
        best_tuple_(std::move(best_tuple)),
        scratch_(static_cast<std::size_t>(r) * rows.words(), 0),
        chosen_(static_cast<std::size_t>(r), 0) {}

  // Tries every tuple whose largest entry is `top`.
  void run_top(std::size_t top) {
    std::copy_n(rows_.row(top), rows_.words(), scratch_.data());
    chosen_[0] = top;
    descend(1, top);
  }

  bool exhausted() const noexcept { return examined_ > budget_; }
  Int best() const noexcept { return best_; }
  const std::vector<std::size_t>& best_tuple() const noexcept { return best_tuple_; }
  std::uint64_t examined() const noexcept { return examined_; }

 private:
  // `depth` entries are chosen; the union so far sits in scratch row depth-1.
  void descend(Int depth, std::size_t below) {
    if (exhausted()) return;
    ++examined_;
    const std::size_t w = rows_.words();
    const std::uint64_t* acc = scratch_.data() + static_cast<std::size_t>(depth - 1) * w;
    const Int size = popcount(acc, w);
    if (size >= best_) return;
    if (depth == r_) {
      best_ = size;
      best_tuple_.assign(chosen_.begin(), chosen_.end());
      return;
    }
    // Need r - depth more indices strictly below `below`.
    const auto remaining = static_cast<std::size_t>(r_ - depth);
    if (below < remaining) return;
    std::uint64_t* next = scratch_.data() + static_cast<std::size_t>(depth) * w;
    for (std::size_t i = below; i-- > remaining - 1;) {
      const std::uint64_t* row = rows_.row(i);
      for (std::size_t k = 0; k < w; ++k) next[k] = acc[k] | row[k];
      chosen_[static_cast<std::size_t>(depth)] = i;
      descend(depth + 1, i);
      if (exhausted()) return;
    }
  }

  const DivisorRows& rows_;
  Int r_;
  std::uint64_t budget_;
  Int best_;
  std::vector<std::size_t> best_tuple_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::size_t> chosen_;
  std::uint64_t examined_ = 0;
};

}  // namespace

SearchResult generalized_feng_rao_search(const NumericalSemigroup& s, Int a, Int r,
                                         const SearchOptions& opts) {
  if (r < 1) throw Error(Errc::InvalidParameters, "r must be >= 1");
  a = std::max<Int>(a, 0);
  const Int two_g = 2 * s.genus();

  // Greedy start: the r smallest members >= a.
  std::vector<Int> members;
  for (Int b = a; static_cast<Int>(members.size()) < r; ++b) {
    if (s.contains(b)) members.push_back(b);
  }
  const Int greedy = static_cast<Int>(divisors_union(s, members).size());
  // No tuple with a_r + 1 - 2g >= greedy can win, so this bounds the whole scan.
  const Int horizon = greedy + two_g - 1;
  for (Int b = members.back() + 1; b < horizon; ++b) {
    if (s.contains(b)) members.push_back(b);
  }

  const DivisorRows rows(s, members, horizon + 1);
  std::vector<std::size_t> greedy_tuple(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < greedy_tuple.size(); ++i) {
    greedy_tuple[i] = greedy_tuple.size() - 1 - i;
  }
  TupleSearch search(rows, r, opts.tuple_budget, greedy, greedy_tuple);
  for (std::size_t top = static_cast<std::size_t>(r) - 1; top < members.size(); ++top) {
    if (members[top] + 1 - two_g >= search.best()) break;
    search.run_top(top);
    if (search.exhausted()) break;
  }

  SearchResult out;
  out.value = search.best();
  out.certified = !search.exhausted();
  out.tuples_examined = search.examined();
  for (auto it = search.best_tuple().rbegin(); it != search.best_tuple().rend(); ++it) {
    out.witness.push_back(members[*it]);
  }
  return out;
}

Int generalized_feng_rao_distance(const NumericalSemigroup& s, Int a, Int r,
                                  const SearchOptions& opts) {
  if (r == 1) return feng_rao_distance(s, a);
  const SearchResult res = generalized_feng_rao_search(s, a, r, opts);
  if (!res.certified) {
    throw Error(Errc::SearchBudgetExceeded,
                "tuple budget of " + std::to_string(opts.tuple_budget) +
                    " exhausted; best upper bound " + std::to_string(res.value),
                res.value);
  }
  return res.value;
}

Int second_feng_rao_number(const NumericalSemigroup& s) {
  if (s.is_naturals()) {
    throw Error(Errc::DegenerateSemigroup, "E(N, 2) is not defined");
  }
  Int best = std::numeric_limits<Int>::max();
  for (Int z = 1; z <= s.multiplicity(); ++z) best = std::min(best, apery_size(s, z));
  return best;
}

Int feng_rao_number(const NumericalSemigroup& s, Int r, const SearchOptions& opts) {
  if (r < 1) throw Error(Errc::InvalidParameters, "r must be >= 1");
  if (r == 1) return 0;
  if (s.is_naturals()) {
    throw Error(Errc::DegenerateSemigroup, "E(N, r) is not defined for r >= 2");
  }
  if (r == 2) return second_feng_rao_number(s);
  const Int a = 2 * s.conductor() - 1;
  return generalized_feng_rao_distance(s, a, r, opts) - a - 1 + 2 * s.genus();
}

// ---------------------------------------------------------------------------

bool gluing_ceiling_transfer(const Gluing& g, Int y) {
  const NumericalSemigroup& g1 = g.gamma1();
  if (y < 1 || y < g1.multiplicity()) {
    throw Error(Errc::HypothesisFailed,
                "y = " + std::to_string(y) + " must be at least m(Gamma1) = " +
                    std::to_string(g1.multiplicity()));
  }
  if (g.a2() <= g.a1() * y) {
    throw Error(Errc::HypothesisFailed, "need a2 > a1 * y");
  }
  const Int reach = 3 * g.a2();
  for (Int z = -reach; z <= reach; ++z) {
    if (apery_size(g1, z) < g1.multiplicity() * ceil_div(z, y)) {
      throw Error(Errc::HypothesisFailed,
                  "#Ap(Gamma1, z) >= m(Gamma1) ceil(z / y) fails at z = " +
                      std::to_string(z),
                  z);
    }
  }
  const NumericalSemigroup& s = g.expanded();
  for (Int z = -reach; z <= reach; ++z) {
    if (apery_size(s, z) < s.multiplicity() * ceil_div(z, g.a2())) return false;
  }
  return true;
}

namespace {

void require_free_extension(const Gluing& g) {
  if (!g.gamma2().is_naturals()) {
    throw Error(Errc::WrongShape, "the lower bound needs Gamma2 = N");
  }
  if (g.gamma1().is_naturals()) {
    throw Error(Errc::DegenerateSemigroup, "the lower bound needs Gamma1 != N");
  }
}

}  // namespace

LowerBound lembound_lower(const Gluing& g) {
  require_free_extension(g);
  LowerBound out;
  out.multiple_term = Rational(g.a1() * second_feng_rao_number(g.gamma1()));
  out.tail_term = Rational((g.a1() - 1) * g.a2(), g.a1());
  out.bound = std::min(out.multiple_term, out.tail_term);
  return out;
}

LowerBoundCase lembound_case(const Gluing& g, Int z) {
  require_free_extension(g);
  if (z <= 0) throw Error(Errc::InvalidParameters, "z must be positive");
  const Int a1 = g.a1();
  const Int a2 = g.a2();
  const UniqueForm f = unique_form(g, z);

  LowerBoundCase out;
  out.alpha = f.k;
  out.beta = f.omega;
  out.apery_size = apery_size(g.expanded(), z);
  const Int size = out.apery_size;
  const Int beta = out.beta;

  // Strict only for beta > 0; at beta = 0 both sides are a1 #Ap(Gamma1, alpha).
  const Int lhs = a1 * size;
  const Int rhs = (a1 - beta) * (a1 * apery_size(g.gamma1(), out.alpha) + a2 * beta);
  out.general_holds = beta > 0 ? lhs > rhs : lhs >= rhs;
  out.positive_alpha = out.alpha > 0;
  if (out.positive_alpha) {
    out.positive_alpha_holds = size >= a1 * second_feng_rao_number(g.gamma1());
  }
  out.middle_beta = beta >= 2 && beta <= a1 - 2;
  if (out.middle_beta) out.middle_beta_holds = size > a2;
  out.edge_beta = beta == 1 || beta == a1 - 1;
  if (out.edge_beta) out.edge_beta_holds = a1 * size > (a1 - 1) * a2;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct CiParams {
  Int c;
};

CiParams validate_ci(Int sigma, Int x, Int y, Int cx, Int cy) {
  auto fail = [](const std::string& why) {
    throw Error(Errc::InvalidParameters, why);
  };
  if (sigma <= 1 || x <= 1 || y <= 1) fail("sigma, x, y must exceed 1");
  if (cy < 0 || cx < 0) fail("c_x, c_y must be non-negative");
  if (x <= cy) fail("need x > c_y");
  if (std::gcd(x, y) != 1) fail("need gcd(x, y) = 1");
  const Int c = cx * x + cy * y;
  if (c <= 0) fail("c = c_x x + c_y y must be positive");
  if (std::gcd(sigma, c) != 1) fail("need gcd(sigma, c) = 1");
  return {c};
}

Int pos(Int v) noexcept { return std::max<Int>(v, 0); }

}  // namespace

NumericalSemigroup three_gen_ci_semigroup(Int sigma, Int x, Int y, Int cx, Int cy) {
  const CiParams p = validate_ci(sigma, x, y, cx, cy);
  return NumericalSemigroup{sigma * x, sigma * y, p.c};
}

Int three_gen_ci_apery_size(Int sigma, Int x, Int y, Int cx, Int cy, Int z) {
  const Int c = validate_ci(sigma, x, y, cx, cy).c;
  // z = z_s sigma + z_c c with 0 <= z_c < sigma; z_s = z_x x + z_y y with
  // 0 <= z_y < x.
  const Int zc = floor_mod(floor_mod(z, sigma) * mod_inverse(c, sigma), sigma);
  const Int zs = (z - zc * c) / sigma;
  const Int zy = floor_mod(floor_mod(zs, x) * mod_inverse(y, x), x);
  const Int zx = (zs - zy * y) / x;

  const Int base = (sigma - zc) * ((x - zy) * pos(zx) + zy * pos(zx + y));
  if (zy + cy < x) {
    return base + zc * ((x - zy - cy) * pos(zx + cx) + (zy + cy) * pos(zx + cx + y));
  }
  return base + zc * ((2 * x - zy - cy) * pos(zx + cx + y) +
                      (zy + cy - x) * pos(zx + cx + 2 * y));
}

}  // namespace sgfr
