#include <algorithm>
#include <numeric>

#include "sgfr/apery.hpp"
#include "sgfr/error.hpp"
#include "sgfr/fengrao.hpp"

namespace sgfr {

namespace {

// value in <gens>, where gens may have a common divisor.
bool in_submonoid(Int value, std::span<const Int> gens) {
  if (value < 0) return false;
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(value) + 1, 0);
  reach[0] = 1;
  for (Int z = 1; z <= value; ++z) {
    for (Int n : gens) {
      if (n <= z && reach[static_cast<std::size_t>(z - n)]) {
        reach[static_cast<std::size_t>(z)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(value)] != 0;
}

}  // namespace

std::optional<FreeArrangement> free_arrangement(std::vector<Int> arrangement) {
  if (arrangement.empty()) return std::nullopt;
  const std::size_t e = arrangement.size();
  FreeArrangement out;
  // d_i for i = 2..e+1, stored at index i - 2.
  Int d = 0;
  for (std::size_t i = 0; i < e; ++i) {
    d = std::gcd(d, arrangement[i]);
    out.d.push_back(d);
  }
  if (out.d.back() != 1) return std::nullopt;
  for (std::size_t i = 1; i < e; ++i) {
    const Int di = out.d[i - 1];
    const Int dnext = out.d[i];
    if (di <= dnext) return std::nullopt;
    const Int ci = di / dnext;
    out.c.push_back(ci);
    // c_i n_i / d_i in <n_1 / d_i, ..., n_{i-1} / d_i>.
    std::vector<Int> scaled;
    for (std::size_t j = 0; j < i; ++j) scaled.push_back(arrangement[j] / di);
    if (!in_submonoid(ci * arrangement[i] / di, scaled)) return std::nullopt;
  }
  out.telescopic = std::is_sorted(arrangement.begin(), arrangement.end());
  out.generators = std::move(arrangement);
  return out;
}

FreeArrangements free_arrangements(const NumericalSemigroup& s) {
  FreeArrangements out;
  std::vector<Int> perm = s.generators();
  if (s.embedding_dimension() > kMaxPermutedGenerators) {
    out.partial = true;
    if (auto fa = free_arrangement(perm)) out.arrangements.push_back(std::move(*fa));
    return out;
  }
  do {
    if (auto fa = free_arrangement(perm)) out.arrangements.push_back(std::move(*fa));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_free(const NumericalSemigroup& s) {
  return !free_arrangements(s).arrangements.empty();
}

bool is_telescopic(const NumericalSemigroup& s) {
  return s.is_naturals() || free_arrangement(s.generators()).has_value();
}

std::optional<FreeArrangement> apmin_certificate(const NumericalSemigroup& s) {
  if (s.is_naturals()) return std::nullopt;
  for (auto& fa : free_arrangements(s).arrangements) {
    bool ok = true;
    const Int n1 = fa.generators.front();
    for (std::size_t i = 2; i < fa.generators.size() && ok; ++i) {
      const Int ci = fa.c[i - 1];
      ok = (ci - 1) * fa.generators[i] >= ci * n1;
    }
    if (ok) return std::move(fa);
  }
  return std::nullopt;
}

CeilingBound telescopic_apery_bound(const NumericalSemigroup& s, Int z) {
  if (!is_telescopic(s)) {
    throw Error(Errc::NotTelescopic, "<" + s.to_string() + "> is not telescopic");
  }
  return {apery_size(s, z), s.multiplicity() * ceil_div(z, s.largest_generator())};
}

// ---------------------------------------------------------------------------
// Enumeration. Every telescopic semigroup other than N is d * T + n * N for a
// telescopic T (possibly N) with d >= 2, n in T, gcd(d, n) = 1 and n larger
// than d times every generator of T; its genus is d g(T) + (d - 1)(n - 1) / 2.
// The ascending generator list pins down T, so each semigroup appears once.

namespace {

void extend_towers(const std::vector<Int>& gens, Int genus, Int genus_max,
                   std::vector<TelescopicEntry>& out) {
  const NumericalSemigroup base(gens);
  const Int top = gens.back();
  for (Int d = 2;; ++d) {
    const Int n_min = d * top + 1;
    if (d * genus + (d - 1) * (n_min - 1) / 2 > genus_max) break;
    for (Int n = n_min;; ++n) {
      const Int g = d * genus + (d - 1) * (n - 1) / 2;
      if (g > genus_max) break;
      if (std::gcd(d, n) != 1 || !base.contains(n)) continue;
      std::vector<Int> next;
      for (Int v : gens) next.push_back(d * v);
      next.push_back(n);
      out.push_back({next, g});
      extend_towers(next, g, genus_max, out);
    }
  }
}

}  // namespace

std::vector<TelescopicEntry> enumerate_telescopic(Int genus_max) {
  std::vector<TelescopicEntry> out;
  if (genus_max >= 1) extend_towers({1}, 0, genus_max, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.genus != b.genus ? a.genus < b.genus : a.generators < b.generators;
  });
  return out;
}

TelescopicScanReport scan_telescopic(Int genus_max) {
  TelescopicScanReport report;
  report.genus_max = genus_max;
  report.count_by_genus.assign(static_cast<std::size_t>(std::max<Int>(genus_max, 0)) + 1, 0);
  for (auto& entry : enumerate_telescopic(genus_max)) {
    const NumericalSemigroup s(entry.generators);
    ++report.count;
    ++report.count_by_genus[static_cast<std::size_t>(entry.genus)];
    const bool consistent = s.generators() == entry.generators &&
                            s.genus() == entry.genus && is_telescopic(s) &&
                            s.conductor() == 2 * s.genus();
    if (!consistent || second_feng_rao_number(s) != s.multiplicity()) {
      report.failures.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace sgfr
