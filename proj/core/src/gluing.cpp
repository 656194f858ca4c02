#include "sgfr/gluing.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "sgfr/error.hpp"

namespace sgfr {

Int floor_mod(Int a, Int m) noexcept {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int mod_inverse(Int a, Int m) {
  // Extended Euclid on (a mod m, m).
  Int old_r = floor_mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(Errc::GcdNotOne, std::to_string(a) + " is not invertible mod " +
                                     std::to_string(m));
  }
  return floor_mod(old_s, m);
}

// ---------------------------------------------------------------------------
// Cocycle

CocycleTable::CocycleTable(const NumericalSemigroup& s, Int g)
    : semigroup_(s), modulus_(g) {
  if (g < 1 || !s.contains(g)) {
    throw Error(Errc::NotMember,
                "cocycle modulus " + std::to_string(g) + " must be a positive member");
  }
  omega_.assign(static_cast<std::size_t>(g), -1);
  for (Int w : apery(s, g).elements) omega_[static_cast<std::size_t>(w % g)] = w;
  const auto n = static_cast<std::size_t>(g);
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table_[i * n + j] = (omega_[i] - omega_[(i + j) % n] + omega_[j]) / g;
    }
  }
}

CocycleTable cocycle(const NumericalSemigroup& s, Int g) { return CocycleTable(s, g); }

// ---------------------------------------------------------------------------
// Gluing

Tower::Tower(const Gluing& g)
    : semigroup(g.expanded()), gluing(std::make_shared<const Gluing>(g)) {}

namespace {

bool is_minimal_generator(const NumericalSemigroup& s, Int n) {
  const auto& gens = s.generators();
  return std::binary_search(gens.begin(), gens.end(), n);
}

NumericalSemigroup expand(Int a1, const NumericalSemigroup& g1, Int a2,
                          const NumericalSemigroup& g2) {
  std::vector<Int> gens;
  for (Int n : g1.generators()) gens.push_back(a1 * n);
  for (Int n : g2.generators()) gens.push_back(a2 * n);
  return NumericalSemigroup(gens);
}

std::string tower_text(const Tower& t) {
  return t.gluing ? t.gluing->to_string() : t.semigroup.to_string();
}

CocycleTable validated_cocycle(Int a1, const Tower& part1, Int a2, const Tower& part2) {
  if (a1 < 1 || a2 < 1) {
    throw Error(Errc::InvalidParameters, "gluing coefficients must be positive");
  }
  if (std::gcd(a1, a2) != 1) {
    throw Error(Errc::GcdNotOne, "gcd(a1, a2) = " + std::to_string(std::gcd(a1, a2)));
  }
  if (!part2.semigroup.contains(a1)) {
    throw Error(Errc::NotMember, "a1 = " + std::to_string(a1) + " is not in <" +
                                     part2.semigroup.to_string() + ">");
  }
  if (!part1.semigroup.contains(a2)) {
    throw Error(Errc::NotMember, "a2 = " + std::to_string(a2) + " is not in <" +
                                     part1.semigroup.to_string() + ">");
  }
  if (is_minimal_generator(part2.semigroup, a1)) {
    throw Error(Errc::IsMinimalGenerator,
                "a1 = " + std::to_string(a1) + " is a minimal generator of <" +
                    part2.semigroup.to_string() + ">");
  }
  if (is_minimal_generator(part1.semigroup, a2)) {
    throw Error(Errc::IsMinimalGenerator,
                "a2 = " + std::to_string(a2) + " is a minimal generator of <" +
                    part1.semigroup.to_string() + ">");
  }
  return CocycleTable(part2.semigroup, a1);
}

}  // namespace

Gluing::Gluing(Int a1, Tower part1, Int a2, Tower part2)
    : a1_(a1),
      a2_(a2),
      part1_(std::move(part1)),
      part2_(std::move(part2)),
      expanded_(NumericalSemigroup::naturals()),
      cocycle_(validated_cocycle(a1, part1_, a2, part2_)) {
  expanded_ = expand(a1_, part1_.semigroup, a2_, part2_.semigroup);
  residue_to_omega_.assign(static_cast<std::size_t>(a1_), 0);
  for (Int w : cocycle_.omega()) {
    residue_to_omega_[static_cast<std::size_t>(floor_mod(a2_ * w, a1_))] = w;
  }
}

Int Gluing::omega_for(Int z) const noexcept {
  return residue_to_omega_[static_cast<std::size_t>(floor_mod(z, a1_))];
}

std::string Gluing::to_string() const {
  return std::to_string(a1_) + "*(" + tower_text(part1_) + ")+" +
         std::to_string(a2_) + "*(" + tower_text(part2_) + ")";
}

Gluing make_gluing(Int a1, Tower part1, Int a2, Tower part2) {
  return Gluing(a1, std::move(part1), a2, std::move(part2));
}

UniqueForm unique_form(const Gluing& g, Int z) {
  UniqueForm f;
  f.omega = g.omega_for(z);
  f.k = (z - g.a2() * f.omega) / g.a1();
  f.residue = f.omega % g.a1();
  f.member = g.gamma1().contains(f.k);
  return f;
}

AperySet apery_via_cocycle(const Gluing& g, Int z) {
  const UniqueForm f = unique_form(g, z);
  const CocycleTable& h = g.cocycle();
  IntSet out;
  for (Int j = 0; j < g.a1(); ++j) {
    const Int shift = f.k + g.a2() * h.h(j - f.residue, f.residue);
    for (Int p : apery(g.gamma1(), shift).elements) {
      out.push_back(g.a1() * p + g.a2() * h.omega(j));
    }
  }
  return {g.expanded(), z, sets::normalize(std::move(out))};
}

DivisorSet divisors_via_cocycle(const Gluing& g, Int z) {
  const UniqueForm f = unique_form(g, z);
  const CocycleTable& h = g.cocycle();
  IntSet out;
  for (Int j = 0; j < g.a1(); ++j) {
    const Int target = f.k - g.a2() * h.h(f.residue - j, j);
    for (Int p : divisors(g.gamma1(), target).elements) {
      out.push_back(g.a1() * p + g.a2() * h.omega(j));
    }
  }
  return {g.expanded(), z, sets::normalize(std::move(out))};
}

BetaBound apery_beta_bound(const Gluing& g, Int z) {
  const UniqueForm f = unique_form(g, z);
  BetaBound b;
  b.alpha = f.k;
  b.omega = f.omega;
  for (Int x : g.cocycle().omega()) {
    if (!g.gamma2().contains(x - f.omega)) ++b.beta;
  }
  b.bound = (g.a1() - b.beta) * apery_size(g.gamma1(), b.alpha) +
            b.beta * apery_size(g.gamma1(), b.alpha + g.a2());
  return b;
}

AperySet apery_multiple(const Gluing& g, Int z) {
  const IntSet left = sets::scale(apery(g.gamma1(), z).elements, g.a1());
  const IntSet right = sets::scale(g.cocycle().omega(), g.a2());
  return {g.expanded(), g.a1() * z,
          sets::minkowski_sum(left, sets::normalize(right))};
}

MemberGluedSplit apery_of_member_glued(const Gluing& g, Int g1, Int g2) {
  if (!g.gamma1().contains(g1)) {
    throw Error(Errc::NotMember, "g1 = " + std::to_string(g1) + " is not in Gamma1");
  }
  if (!g.gamma2().contains(g2)) {
    throw Error(Errc::NotMember, "g2 = " + std::to_string(g2) + " is not in Gamma2");
  }
  MemberGluedSplit out;
  out.first = sets::minkowski_sum(sets::scale(apery(g.gamma1(), g1).elements, g.a1()),
                                  sets::scale(apery(g.gamma2(), g.a1()).elements, g.a2()));
  out.second = sets::translate(
      sets::minkowski_sum(sets::scale(apery(g.gamma1(), g.a2()).elements, g.a1()),
                          sets::scale(apery(g.gamma2(), g2).elements, g.a2())),
      g.a1() * g1);
  return out;
}

namespace {

IntSet multiples_of(Int step, Int from, Int to_exclusive) {
  IntSet out;
  for (Int j = from; j < to_exclusive; ++j) out.push_back(step * j);
  return out;
}

}  // namespace

FreeExtension free_extension(const Gluing& g, Int z) {
  if (!g.gamma2().is_naturals()) {
    throw Error(Errc::WrongShape, "closed forms need Gamma2 = N");
  }
  const Int a1 = g.a1();
  const Int a2 = g.a2();
  const NumericalSemigroup& g1 = g.gamma1();

  FreeExtension out;
  // With Gamma2 = N the unique form has omega = beta in {0, ..., a1 - 1}.
  const UniqueForm f = unique_form(g, z);
  out.alpha = f.k;
  out.beta = f.omega;
  const Int alpha = out.alpha;
  const Int beta = out.beta;

  const IntSet ap_shifted = sets::scale(apery(g1, alpha + a2).elements, a1);
  const IntSet ap_plain = sets::scale(apery(g1, alpha).elements, a1);
  out.apery_set = {g.expanded(), z,
                   sets::unite(sets::minkowski_sum(ap_shifted, multiples_of(a2, 0, beta)),
                               sets::minkowski_sum(ap_plain, multiples_of(a2, beta, a1)))};

  const IntSet d_plain = sets::scale(divisors(g1, alpha).elements, a1);
  const IntSet d_lower = sets::scale(divisors(g1, alpha - a2).elements, a1);
  out.divisor_set = {g.expanded(), z,
                     sets::unite(sets::minkowski_sum(d_plain, multiples_of(a2, 0, beta + 1)),
                                 sets::minkowski_sum(d_lower, multiples_of(a2, beta + 1, a1)))};

  out.apery_size = beta * apery_size(g1, alpha + a2) + (a1 - beta) * apery_size(g1, alpha);
  out.divisor_size = (beta + 1) * divisor_count(g1, alpha) +
                     (a1 - beta - 1) * divisor_count(g1, alpha - a2);

  out.alpha_in_apery_of_a2 = g1.contains(alpha) && !g1.contains(alpha - a2);
  if (!g1.contains(alpha)) {
    out.divisor_size_refined = 0;
  } else if (out.alpha_in_apery_of_a2) {
    out.divisor_size_refined = (beta + 1) * divisor_count(g1, alpha);
  } else {
    out.divisor_size_refined = a1 * divisor_count(g1, alpha - a2) + (beta + 1) * a2;
  }
  return out;
}

Int two_gen_apery_size(Int a, Int b, Int z) {
  if (a < 2 || b < 2) {
    throw Error(Errc::InvalidParameters, "two-generator formula needs a, b >= 2");
  }
  if (std::gcd(a, b) != 1) throw Error(Errc::GcdNotOne, "gcd(a, b) must be 1");
  const Int u = floor_mod(floor_mod(z, b) * mod_inverse(a, b), b);
  const Int v = (z - u * a) / b;
  return (b - u) * std::max<Int>(v, 0) + u * std::max<Int>(v + a, 0);
}

}  // namespace sgfr
