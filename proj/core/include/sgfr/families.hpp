#pragma once

#include <string>

#include "sgfr/gluing.hpp"
#include "sgfr/semigroup.hpp"

namespace sgfr {

enum class Family { Hermitian, Suzuki, SuzukiGamma1 };

std::string_view to_string(Family f) noexcept;

// A named semigroup family member: the flat generator list, the gluing tower
// that produces it, and the closed-form second Feng-Rao number.
struct FamilySpec {
  Family family = Family::Hermitian;
  // (q, r) for Hermitian, (p, n) otherwise.
  Int first = 0;
  Int second = 0;
  NumericalSemigroup expanded = NumericalSemigroup::naturals();
  Tower tower = NumericalSemigroup::naturals();
  Int closed_form_e2 = 0;

  // "hermitian:q=2,r=3"
  std::string label() const;
};

// H_{q,r} = <q^{r-1}, q^{r-1} + q^{r-2}, q^r + 1>, tower
// q^{r-2} <q, q+1> + (q^r + 1) N (for r = 2: q N + (q + 1) N). E2 = q^{r-1}.
FamilySpec hermitian(Int q, Int r);

// S_{p,n} = <p^{2n+1}, p^{2n+1} + p^n, p^{2n+1} + p^{n+1}, p^{2n+1} + p^{n+1} + 1>,
// tower p^n Gamma1(p, n) + (p^{2n+1} + p^{n+1} + 1) N.
// E2 = p^{2n+1} - p^{2n} + p^n.
FamilySpec suzuki(Int p, Int n);

// Gamma1(p, n) = <p^{n+1}, p^{n+1} + 1, p^{n+1} + p>
//              = p <p^n, p^n + 1> + (p^{n+1} + 1) N.  E2 = p^{n+1} - p^n + 1.
FamilySpec suzuki_gamma1(Int p, Int n);

Int ipow(Int base, Int exp);

}  // namespace sgfr
