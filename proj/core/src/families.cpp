#include "sgfr/families.hpp"

#include "sgfr/error.hpp"

namespace sgfr {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Hermitian: return "hermitian";
    case Family::Suzuki: return "suzuki";
    case Family::SuzukiGamma1: return "suzuki-gamma1";
  }
  return "unknown";
}

std::string FamilySpec::label() const {
  const bool h = family == Family::Hermitian;
  return std::string(to_string(family)) + ":" + (h ? "q=" : "p=") +
         std::to_string(first) + "," + (h ? "r=" : "n=") + std::to_string(second);
}

Int ipow(Int base, Int exp) {
  Int out = 1;
  for (Int i = 0; i < exp; ++i) {
    if (out > (Int{1} << 40) / std::max<Int>(base, 1)) {
      throw Error(Errc::InvalidParameters, "family parameters too large");
    }
    out *= base;
  }
  return out;
}

namespace {

// <k, k + 1> as the gluing k N + (k + 1) N.
Tower consecutive_pair(Int k) {
  const auto n = NumericalSemigroup::naturals();
  return Gluing(k, n, k + 1, n);
}

FamilySpec finish(Family family, Int first, Int second, std::vector<Int> flat,
                  Tower tower, Int e2) {
  FamilySpec out;
  out.family = family;
  out.first = first;
  out.second = second;
  out.expanded = NumericalSemigroup(flat);
  if (!(out.expanded == tower.semigroup)) {
    throw Error(Errc::InvalidParameters,
                "flat generators <" + out.expanded.to_string() +
                    "> disagree with the tower <" + tower.semigroup.to_string() + ">");
  }
  out.tower = std::move(tower);
  out.closed_form_e2 = e2;
  return out;
}

}  // namespace

FamilySpec hermitian(Int q, Int r) {
  if (q < 2 || r < 2) throw Error(Errc::InvalidParameters, "hermitian needs q, r >= 2");
  const Int qr1 = ipow(q, r - 1);
  const Int qr2 = ipow(q, r - 2);
  const Int qr = ipow(q, r);
  Tower tower = r == 2 ? consecutive_pair(q)
                       : Tower(Gluing(qr2, consecutive_pair(q), qr + 1,
                                      NumericalSemigroup::naturals()));
  return finish(Family::Hermitian, q, r, {qr1, qr1 + qr2, qr + 1}, std::move(tower), qr1);
}

FamilySpec suzuki_gamma1(Int p, Int n) {
  if (p < 2 || n < 1) throw Error(Errc::InvalidParameters, "suzuki-gamma1 needs p >= 2, n >= 1");
  const Int pn = ipow(p, n);
  const Int pn1 = pn * p;
  Tower tower = Gluing(p, consecutive_pair(pn), pn1 + 1, NumericalSemigroup::naturals());
  return finish(Family::SuzukiGamma1, p, n, {pn1, pn1 + 1, pn1 + p}, std::move(tower),
                pn1 - pn + 1);
}

FamilySpec suzuki(Int p, Int n) {
  if (p < 2 || n < 1) throw Error(Errc::InvalidParameters, "suzuki needs p >= 2, n >= 1");
  const Int pn = ipow(p, n);
  const Int pn1 = pn * p;
  const Int p2n1 = ipow(p, 2 * n + 1);
  const Int p2n = p2n1 / p;
  Tower tower = Gluing(pn, suzuki_gamma1(p, n).tower, p2n1 + pn1 + 1,
                       NumericalSemigroup::naturals());
  return finish(Family::Suzuki, p, n, {p2n1, p2n1 + pn, p2n1 + pn1, p2n1 + pn1 + 1},
                std::move(tower), p2n1 - p2n + pn);
}

}  // namespace sgfr
