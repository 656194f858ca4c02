#include "sgfr/bounds.hpp"

#include "sgfr/error.hpp"
#include "sgfr/rational.hpp"

namespace sgfr {

namespace {

BoundsRow row_with_e2(const NumericalSemigroup& s, Int a, Int field_size, Int e2,
                      const SearchOptions& opts) {
  BoundsRow row;
  row.a = a;
  row.kp = feng_rao_distance(s, a + 2);
  const Int d1 = feng_rao_distance(s, a + 1);
  row.gob = d1 + ceil_div(d1, field_size);
  row.e2_bound = a + 2 - 2 * s.genus() + e2;
  const SearchResult exact = generalized_feng_rao_search(s, a + 1, 2, opts);
  row.exact = exact.value;
  row.exact_certified = exact.certified;
  return row;
}

void check_arguments(const NumericalSemigroup& s, Int a, Int field_size) {
  if (a < s.conductor()) {
    throw Error(Errc::IndexBelowConductor,
                "a = " + std::to_string(a) + " is below the conductor " +
                    std::to_string(s.conductor()));
  }
  if (field_size < 2) throw Error(Errc::InvalidParameters, "field size must be >= 2");
}

}  // namespace

BoundsRow bounds_row(const NumericalSemigroup& s, Int a, Int field_size,
                     const SearchOptions& opts) {
  check_arguments(s, a, field_size);
  return row_with_e2(s, a, field_size, second_feng_rao_number(s), opts);
}

std::vector<BoundsRow> bounds_table(const NumericalSemigroup& s, Int a_from, Int a_to,
                                    Int field_size, const SearchOptions& opts) {
  if (a_to < a_from) throw Error(Errc::InvalidParameters, "empty index range");
  check_arguments(s, a_from, field_size);
  const Int e2 = second_feng_rao_number(s);
  std::vector<BoundsRow> rows;
  for (Int a = a_from; a <= a_to; ++a) {
    rows.push_back(row_with_e2(s, a, field_size, e2, opts));
  }
  return rows;
}

}  // namespace sgfr
