#include "sgfr/apery.hpp"

#include <algorithm>
#include <iterator>

#include "sgfr/error.hpp"

namespace sgfr {

namespace sets {

IntSet normalize(IntSet a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

IntSet unite(const IntSet& a, const IntSet& b) {
  IntSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IntSet intersect(const IntSet& a, const IntSet& b) {
  IntSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

IntSet translate(const IntSet& a, Int offset) {
  IntSet out(a);
  for (Int& v : out) v += offset;
  return out;
}

IntSet scale(const IntSet& a, Int factor) {
  IntSet out(a);
  for (Int& v : out) v *= factor;
  if (factor < 0) std::reverse(out.begin(), out.end());
  return out;
}

IntSet minkowski_sum(const IntSet& a, const IntSet& b) {
  IntSet out;
  out.reserve(a.size() * b.size());
  for (Int x : a) {
    for (Int y : b) out.push_back(x + y);
  }
  return normalize(std::move(out));
}

bool disjoint(const IntSet& a, const IntSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

IntSet positive_differences(const IntSet& a) {
  IntSet out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) out.push_back(a[j] - a[i]);
  }
  return normalize(std::move(out));
}

}  // namespace sets

namespace {

// Any w in Ap(S, x) lies below conductor + |x|: otherwise w - x >= conductor.
Int apery_window(const NumericalSemigroup& s, Int x) {
  return s.conductor() + (x > 0 ? x : -x);
}

}  // namespace

AperySet apery(const NumericalSemigroup& s, Int x) {
  AperySet out{s, x, {}};
  const Int end = apery_window(s, x);
  for (Int w = 0; w < end; ++w) {
    if (s.contains(w) && !s.contains(w - x)) out.elements.push_back(w);
  }
  return out;
}

Int apery_size(const NumericalSemigroup& s, Int x) {
  Int n = 0;
  const Int end = apery_window(s, x);
  for (Int w = 0; w < end; ++w) {
    if (s.contains(w) && !s.contains(w - x)) ++n;
  }
  return n;
}

DivisorSet divisors(const NumericalSemigroup& s, Int z) {
  DivisorSet out{s, z, {}};
  if (!s.contains(z)) return out;
  for (Int d = 0; d <= z; ++d) {
    if (s.contains(d) && s.contains(z - d)) out.elements.push_back(d);
  }
  return out;
}

Int divisor_count(const NumericalSemigroup& s, Int z) {
  if (!s.contains(z)) return 0;
  Int n = 0;
  for (Int d = 0; d <= z; ++d) {
    if (s.contains(d) && s.contains(z - d)) ++n;
  }
  return n;
}

IntSet divisors_union(const NumericalSemigroup& s, std::span<const Int> targets) {
  if (targets.empty()) {
    throw Error(Errc::InvalidParameters, "divisors_union needs at least one target");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!s.contains(targets[i])) {
      throw Error(Errc::NotMember,
                  std::to_string(targets[i]) + " is not in <" + s.to_string() + ">");
    }
    if (i > 0 && targets[i] <= targets[i - 1]) {
      throw Error(Errc::NotIncreasing, "targets must be strictly increasing");
    }
  }
  IntSet out;
  for (Int t : targets) out = sets::unite(out, divisors(s, t).elements);
  return out;
}

ApSumSplit apery_sum_split(const NumericalSemigroup& s, Int g, Int h) {
  if (!s.contains(g) || !s.contains(h)) {
    throw Error(Errc::NotMember, "both summands must lie in the semigroup");
  }
  return {apery(s, g), sets::translate(apery(s, h).elements, g)};
}

IntSet ApShiftSplit::united() const {
  return sets::unite(sets::unite(ap_x, y_plus_ap_x), intersection);
}

ApShiftSplit apery_shift_split(const NumericalSemigroup& s, Int x, Int y) {
  if (!s.contains(y)) {
    throw Error(Errc::NotMember, std::to_string(y) + " is not in <" + s.to_string() + ">");
  }
  ApShiftSplit out;
  out.ap_x = apery(s, x).elements;
  out.y_plus_ap_x = sets::translate(out.ap_x, y);
  const IntSet ap_y = apery(s, y).elements;
  out.intersection = sets::intersect(ap_y, sets::translate(ap_y, x));
  out.negated_shift_is_member = s.contains(-x);
  const Int ax = x < 0 ? -x : x;
  const IntSet diffs = sets::positive_differences(ap_y);
  out.shift_avoids_differences =
      ax != 0 && !std::binary_search(diffs.begin(), diffs.end(), ax);
  return out;
}

}  // namespace sgfr
