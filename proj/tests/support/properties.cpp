#include "properties.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "sgfr/apery.hpp"
#include "sgfr/fengrao.hpp"
#include "sgfr/gluing.hpp"
#include "sgfr/oracle.hpp"
#include "sgfr/rational.hpp"

namespace sgfr::testing {
namespace {

std::string show(const IntSet& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Int size_of(const IntSet& v) { return static_cast<Int>(v.size()); }

Int random_member(Rng& rng, const NumericalSemigroup& s, Int lo, Int hi) {
  const auto pool = s.elements_in(lo, hi + 1);
  return pool[static_cast<std::size_t>(uniform(rng, 0, size_of(pool) - 1))];
}

// Members of <prefix> by the same subtraction DP the oracle uses.
bool in_prefix(const std::vector<Int>& prefix, Int v) {
  return Oracle(prefix).member(v);
}

}  // namespace

PropertyResult prop_lemma1(std::uint64_t seed, Int cases) {
  PropertyResult r{"apery size: #Ap(S,x) = x + #Ap(S,-x)"};
  Rng rng(seed);
  for (Int i = 0; i < cases; ++i) {
    const auto s = random_semigroup(rng);
    const Int m = s.multiplicity();
    const Int x = uniform(rng, -3 * m, 3 * m);
    Oracle o(s);
    const Int fast_pos = apery_size(s, x);
    const Int fast_neg = apery_size(s, -x);
    const Int slow_pos = size_of(o.apery(x));
    const Int slow_neg = size_of(o.apery(-x));
    const bool ok = fast_pos == x + fast_neg && slow_pos == x + slow_neg && fast_pos == slow_pos;
    r.add(ok, [&] {
      return cat("S=<", s.to_string(), "> x=", x, " fast ", fast_pos, "/", fast_neg, " oracle ",
                 slow_pos, "/", slow_neg);
    });
  }
  return r;
}

PropertyResult prop_subadditivity(std::uint64_t seed, Int cases) {
  PropertyResult r{"apery subadditivity: #Ap(S,x+y) <= #Ap(S,x) + #Ap(S,y)"};
  Rng rng(seed + 1);
  for (Int i = 0; i < cases; ++i) {
    const auto s = random_semigroup(rng);
    const Int m = s.multiplicity();
    const Int x = uniform(rng, -3 * m, 3 * m);
    const Int y = uniform(rng, -3 * m, 3 * m);
    const Int lhs = apery_size(s, x + y);
    const Int rhs = apery_size(s, x) + apery_size(s, y);
    r.add(lhs <= rhs, [&] {
      return cat("S=<", s.to_string(), "> x=", x, " y=", y, " lhs=", lhs, " rhs=", rhs);
    });
  }
  return r;
}

PropertyResult prop_sum_split(std::uint64_t seed, Int cases) {
  PropertyResult r{"apery sum split: Ap(S,g+h) = Ap(S,g) u (g + Ap(S,h)), disjoint"};
  Rng rng(seed + 2);
  for (Int i = 0; i < cases; ++i) {
    const auto s = random_semigroup(rng);
    const Int c = s.conductor();
    const Int g = random_member(rng, s, 0, 2 * c);
    const Int h = random_member(rng, s, 0, 2 * c);
    const auto split = apery_sum_split(s, g, h);
    const IntSet united = sets::unite(split.first.elements, split.shifted);
    const IntSet truth = oracle_apery(s, g + h);
    const bool ok = sets::disjoint(split.first.elements, split.shifted) && united == truth;
    r.add(ok, [&] {
      return cat("S=<", s.to_string(), "> g=", g, " h=", h, " union=", show(united),
                 " oracle=", show(truth));
    });
  }
  return r;
}

PropertyResult prop_shift_split(std::uint64_t seed, Int cases) {
  PropertyResult r{"apery shift split: triple union and special-case flags"};
  Rng rng(seed + 3);
  for (Int i = 0; i < cases; ++i) {
    const auto s = random_semigroup(rng);
    const Int c = s.conductor();
    const Int m = s.multiplicity();
    const Int x = uniform(rng, -2 * c - m, 2 * c + m);
    const Int y = random_member(rng, s, 0, 2 * c);
    Oracle o(s);
    const auto split = apery_shift_split(s, x, y);
    const IntSet united = split.united();
    const IntSet truth = o.apery(x + y);

    const bool negated = o.member(-x);
    const IntSet diffs = sets::positive_differences(o.apery(y));
    const Int ax = x < 0 ? -x : x;
    const bool avoids = x != 0 && !std::binary_search(diffs.begin(), diffs.end(), ax);

    bool ok = united == truth && split.negated_shift_is_member == negated &&
              split.shift_avoids_differences == avoids;
    if (negated) ok = ok && split.intersection == truth;
    if (avoids) ok = ok && sets::minkowski_sum(IntSet{0, y}, o.apery(x)) == truth;
    r.add(ok, [&] {
      return cat("S=<", s.to_string(), "> x=", x, " y=", y, " union=", show(united),
                 " oracle=", show(truth), " flags ", split.negated_shift_is_member, "/",
                 split.shift_avoids_differences, " expected ", negated, "/", avoids);
    });
  }
  return r;
}

PropertyResult prop_cocycle_formulas(std::uint64_t seed, Int cases) {
  PropertyResult r{"cocycle: Apery and divisor sets through the cocycle"};
  Rng rng(seed + 4);
  for (Int i = 0; i < cases; ++i) {
    const Gluing g = random_gluing(rng);
    const auto& s = g.expanded();
    const Int c = std::max<Int>(s.conductor(), 1);
    const Int z = uniform(rng, -2 * c, 2 * c);
    Oracle o(s);
    const IntSet ap = apery_via_cocycle(g, z).elements;
    const IntSet dv = divisors_via_cocycle(g, z).elements;
    const IntSet ap_truth = o.apery(z);
    const IntSet dv_truth = o.divisors(z);

    const auto& table = g.cocycle();
    bool reconstructs = true;
    for (Int k = 0; k < table.modulus(); ++k) {
      Int sum = 0;
      for (Int j = 0; j < table.modulus(); ++j) sum += table.h(j, k);
      reconstructs = reconstructs && sum == table.omega(k);
    }
    const bool member_ok = unique_form(g, z).member == o.member(z);
    const bool ok = ap == ap_truth && dv == dv_truth && reconstructs && member_ok;
    r.add(ok, [&] {
      return cat(g.to_string(), " z=", z, " Ap=", show(ap), " oracle=", show(ap_truth),
                 " D=", show(dv), " oracle=", show(dv_truth), " reconstruction=", reconstructs,
                 " membership=", member_ok);
    });
  }
  return r;
}

PropertyResult prop_apery_multiple(std::uint64_t seed, Int cases) {
  PropertyResult r{"apery multiple: Ap(S, a1 z) = a1 Ap(S1, z) + a2 Ap(S2, a1)"};
  Rng rng(seed + 5);
  for (Int i = 0; i < cases; ++i) {
    const Gluing g = random_gluing(rng);
    const auto& s1 = g.gamma1();
    const Int span = 2 * s1.conductor() + 2 * s1.multiplicity() + 3;
    const Int z = uniform(rng, -span, span);
    const AperySet got = apery_multiple(g, z);
    const IntSet truth = oracle_apery(g.expanded(), g.a1() * z);
    const Int size1 = size_of(oracle_apery(s1, z));
    const bool ok = got.elements == truth && got.size() == g.a1() * size1;
    r.add(ok, [&] {
      return cat(g.to_string(), " z=", z, " got=", show(got.elements), " oracle=", show(truth));
    });
  }
  return r;
}

PropertyResult prop_member_glued(std::uint64_t seed, Int cases) {
  PropertyResult r{"member glued: Ap(S, a1 g1 + a2 g2) splits disjointly"};
  Rng rng(seed + 6);
  for (Int i = 0; i < cases; ++i) {
    const Gluing g = random_gluing(rng);
    const auto& s1 = g.gamma1();
    const auto& s2 = g.gamma2();
    const Int g1 = random_member(rng, s1, 0, 2 * s1.conductor() + s1.multiplicity());
    const Int g2 = random_member(rng, s2, 0, 2 * s2.conductor() + s2.multiplicity());
    const auto split = apery_of_member_glued(g, g1, g2);
    const IntSet united = sets::unite(split.first, split.second);
    const IntSet truth = oracle_apery(g.expanded(), g.a1() * g1 + g.a2() * g2);
    const bool ok = sets::disjoint(split.first, split.second) && united == truth;
    r.add(ok, [&] {
      return cat(g.to_string(), " g1=", g1, " g2=", g2, " union=", show(united),
                 " oracle=", show(truth));
    });
  }
  return r;
}

PropertyResult prop_free_extension(std::uint64_t seed, Int cases) {
  PropertyResult r{"free extension: Apery/divisor closed forms for S1 glued with N"};
  Rng rng(seed + 7);
  for (Int i = 0; i < cases; ++i) {
    const Gluing g = random_free_extension(rng, 7, 60, true);
    const auto& s = g.expanded();
    const Int c = std::max<Int>(s.conductor(), 1);
    const Int z = uniform(rng, -2 * c, 2 * c);
    Oracle o(s);
    const auto f = free_extension(g, z);
    const IntSet ap = o.apery(z);
    const IntSet dv = o.divisors(z);
    const bool i1 = f.apery_set.elements == ap;
    const bool i2 = f.divisor_set.elements == dv;
    const bool i3 = f.apery_size == size_of(ap);
    const bool i4 = f.divisor_size == size_of(dv);
    r.add(i1 && i2 && i3 && i4, [&] {
      return cat(g.to_string(), " z=", z, " items ", i1, i2, i3, i4, " #Ap=", f.apery_size,
                 " oracle=", size_of(ap), " #D=", f.divisor_size, " oracle=", size_of(dv));
    });
  }
  return r;
}

PropertyResult prop_divisor_case_split(std::uint64_t seed, Int cases) {
  PropertyResult r{"refined divisor count: two-case formula agrees with the exact count and the oracle"};
  Rng rng(seed + 8);
  Int done = 0;
  while (done < cases) {
    const Gluing g = random_free_extension(rng, 7, 60, true);
    const auto& s = g.expanded();
    const Int z = uniform(rng, 0, 2 * s.conductor() + 10);
    Oracle o(s);
    if (!o.member(z)) continue;
    ++done;
    const auto f = free_extension(g, z);
    const auto& s1 = g.gamma1();
    const Int a1 = g.a1();
    const Int a2 = g.a2();
    Oracle o1(s1);
    const bool in_ap = o1.member(f.alpha) && !o1.member(f.alpha - a2);
    const Int formula = in_ap ? (f.beta + 1) * size_of(o1.divisors(f.alpha))
                              : a1 * size_of(o1.divisors(f.alpha - a2)) + (f.beta + 1) * a2;
    const Int truth = size_of(o.divisors(z));
    const bool ok = f.alpha_in_apery_of_a2 == in_ap && f.divisor_size_refined == formula &&
                    formula == f.divisor_size && formula == truth;
    r.add(ok, [&] {
      return cat(g.to_string(), " z=", z, " alpha=", f.alpha, " beta=", f.beta,
                 in_ap ? " (alpha in Ap(S1,a2))" : " (otherwise)", " refined=", formula,
                 " exact=", f.divisor_size, " oracle=", truth);
    });
  }
  return r;
}

PropertyResult prop_two_generator(std::uint64_t seed, Int cases) {
  PropertyResult r{"two generators: #Ap(<a,b>, z) closed form"};
  Rng rng(seed + 9);
  Int done = 0;
  while (done < cases) {
    const Int a = uniform(rng, 2, 25);
    const Int b = uniform(rng, 2, 25);
    if (std::gcd(a, b) != 1) continue;
    ++done;
    const Int z = uniform(rng, -a * b, a * b + a + b);
    const NumericalSemigroup s{a, b};
    const Int formula = two_gen_apery_size(a, b, z);
    const Int via_theorem = free_extension(Gluing(b, NumericalSemigroup::naturals(), a,
                                                  NumericalSemigroup::naturals()),
                                           z)
                                .apery_size;
    const Int truth = size_of(oracle_apery(s, z));
    r.add(formula == truth && via_theorem == truth, [&] {
      return cat("<", a, ",", b, "> z=", z, " formula=", formula, " theorem=", via_theorem,
                 " oracle=", truth);
    });
  }
  return r;
}

PropertyResult prop_telescopic_ceiling(std::uint64_t seed, Int cases) {
  PropertyResult r{"telescopic ceiling: #Ap(S,z) >= n1 ceil(z / n_e)"};
  Rng rng(seed + 10);
  for (Int i = 0; i < cases; ++i) {
    const NumericalSemigroup s = random_telescopic_gluing(rng, uniform(rng, 1, 3)).expanded();
    const Int ne = s.largest_generator();
    const Int z = uniform(rng, -2 * ne, 4 * ne);
    const CeilingBound b = telescopic_apery_bound(s, z);
    const Int truth = size_of(oracle_apery(s, z));
    const Int rhs = s.multiplicity() * ceil_div(z, ne);
    r.add(b.lhs == truth && b.rhs == rhs && b.lhs >= b.rhs, [&] {
      return cat("S=<", s.to_string(), "> z=", z, " lhs=", b.lhs, " oracle=", truth,
                 " rhs=", b.rhs);
    });
  }
  return r;
}

PropertyResult prop_lower_bound(std::uint64_t seed, Int cases) {
  PropertyResult r{"free extension lower bound: bound <= E(S,2) and its per-z cases"};
  Rng rng(seed + 11);
  for (Int i = 0; i < cases; ++i) {
    const Gluing g = random_free_extension(rng, 7, 60, false);
    const auto& s = g.expanded();
    Oracle o(s);
    const Int e2 = o.second_feng_rao();
    const LowerBound lb = lembound_lower(g);
    const Int z = uniform(rng, 1, 2 * s.conductor() + 2);
    const LowerBoundCase lc = lembound_case(g, z);
    const bool ok = lb.bound <= Rational(e2) && lc.all_hold() &&
                    lc.apery_size == size_of(o.apery(z));
    r.add(ok, [&] {
      std::ostringstream os;
      os << g.to_string() << " bound=" << lb.bound << " E2=" << e2 << " z=" << z
         << " alpha=" << lc.alpha << " beta=" << lc.beta << " cases " << lc.general_holds
         << lc.positive_alpha_holds << lc.middle_beta_holds << lc.edge_beta_holds;
      return os.str();
    });
  }
  return r;
}

PropertyResult prop_certificate(std::uint64_t seed, Int cases) {
  PropertyResult r{"certificate: certified arrangement implies E(S,2) = m(S)"};
  Rng rng(seed + 12);
  const Int max_draws = 100 * cases;
  for (Int draw = 0; draw < max_draws && r.cases < cases; ++draw) {
    NumericalSemigroup s = NumericalSemigroup::naturals();
    switch (draw % 3) {
      case 0: s = random_free_semigroup(rng); break;
      case 1: s = random_telescopic_gluing(rng, uniform(rng, 1, 3)).expanded(); break;
      default: s = random_semigroup(rng, 30, 4); break;
    }
    const auto cert = apmin_certificate(s);
    if (!cert) continue;

    // Re-check the certificate from scratch.
    const auto& n = cert->generators;
    bool valid = std::is_permutation(n.begin(), n.end(), s.generators().begin(),
                                     s.generators().end());
    Int d_prev = n.front();
    for (std::size_t k = 1; valid && k < n.size(); ++k) {
      const std::vector<Int> prefix(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(k));
      const Int d_next = std::gcd(d_prev, n[k]);
      const Int ck = d_prev / d_next;
      valid = d_next < d_prev && in_prefix(prefix, ck * n[k]);
      if (k >= 2) valid = valid && (ck - 1) * n[k] >= ck * n.front();
      d_prev = d_next;
    }
    const Int e2 = Oracle(s).second_feng_rao();
    r.add(valid && e2 == s.multiplicity(), [&] {
      return cat("S=<", s.to_string(), "> certificate ", show(n), " valid=", valid, " E2=", e2);
    });
  }
  return r;
}

PropertyResult prop_three_generated(std::uint64_t seed, Int cases) {
  PropertyResult r{"three generated: complete intersection closed form"};
  Rng rng(seed + 13);
  for (Int i = 0; i < cases; ++i) {
    const ThreeGenParams p = random_three_gen(rng);
    const NumericalSemigroup s = three_gen_ci_semigroup(p.sigma, p.x, p.y, p.cx, p.cy);
    Oracle o(s);
    Int bad_z = 0;
    Int bad_formula = 0;
    Int bad_truth = 0;
    bool ok = true;
    for (Int z = -20; z <= 60 && ok; ++z) {
      const Int formula = three_gen_ci_apery_size(p.sigma, p.x, p.y, p.cx, p.cy, z);
      const Int truth = size_of(o.apery(z));
      if (formula != truth) {
        ok = false;
        bad_z = z;
        bad_formula = formula;
        bad_truth = truth;
      }
    }
    r.add(ok, [&] {
      return cat("sigma=", p.sigma, " x=", p.x, " y=", p.y, " cx=", p.cx, " cy=", p.cy, " z=",
                 bad_z, " formula=", bad_formula, " oracle=", bad_truth);
    });
  }
  return r;
}

PropertyResult prop_goppa(std::uint64_t seed, Int cases) {
  PropertyResult r{"Goppa regime: delta_FR(a) = a+1-2g for a >= 2c-1"};
  Rng rng(seed + 14);
  for (Int i = 0; i < cases; ++i) {
    const auto s = random_semigroup(rng, 30, 4);
    const Int c = s.conductor();
    const Int a = uniform(rng, 2 * c - 1, 2 * c + 20);
    const Int expected = a + 1 - 2 * s.genus();
    const Int fast = feng_rao_distance(s, a);
    const Int slow = oracle_delta_r(s, a, 1);
    r.add(fast == expected && slow == expected, [&] {
      return cat("S=<", s.to_string(), "> a=", a, " fast=", fast, " oracle=", slow,
                 " expected=", expected);
    });
  }
  return r;
}

PropertyResult prop_linear_law(std::uint64_t seed, Int cases) {
  PropertyResult r{"Linear law: delta2_FR(a) = a+1-2g+E2 for a in [2c-1, 2c+10]"};
  Rng rng(seed + 15);
  for (Int i = 0; i < cases; ++i) {
    const auto s = random_semigroup(rng, 20, 3);
    const Int c = s.conductor();
    const Int a = uniform(rng, 2 * c - 1, 2 * c + 10);
    const Int e2 = second_feng_rao_number(s);
    const Int expected = a + 1 - 2 * s.genus() + e2;
    const Int fast = generalized_feng_rao_distance(s, a, 2);
    const Int slow = oracle_delta_r(s, a, 2);
    r.add(fast == expected && slow == expected, [&] {
      return cat("S=<", s.to_string(), "> a=", a, " fast=", fast, " oracle=", slow,
                 " expected=", expected);
    });
  }
  return r;
}

std::vector<PropertyResult> run_acceptance_properties(std::uint64_t seed, Int cases,
                                                      Int three_gen_sets) {
  return {
      prop_lemma1(seed, cases),
      prop_subadditivity(seed, cases),
      prop_sum_split(seed, cases),
      prop_shift_split(seed, cases),
      prop_cocycle_formulas(seed, cases),
      prop_apery_multiple(seed, cases),
      prop_member_glued(seed, cases),
      prop_free_extension(seed, cases),
      prop_divisor_case_split(seed, cases),
      prop_two_generator(seed, cases),
      prop_telescopic_ceiling(seed, cases),
      prop_lower_bound(seed, cases),
      prop_certificate(seed, cases),
      prop_three_generated(seed, three_gen_sets),
      prop_goppa(seed, cases),
      prop_linear_law(seed, cases),
  };
}

PropertyResult oracle_equivalence(const NumericalSemigroup& s, Int arguments) {
  PropertyResult r{"oracle equivalence on <" + s.to_string() + ">"};
  Oracle o(s.generators());
  const Int c = s.conductor();
  const Int m = s.multiplicity();
  const Int lo = -c - m;
  const Int width = 3 * c + 2 * m + 1;
  for (Int k = 0; k < arguments; ++k) {
    const Int x = lo + k % width;
    const bool member_ok = s.contains(x) == o.member(x);
    const IntSet ap = apery(s, x).elements;
    const IntSet dv = divisors(s, x).elements;
    const bool ok = member_ok && ap == o.apery(x) && dv == o.divisors(x);
    r.add(ok, [&] {
      return cat("x=", x, " member=", s.contains(x), " Ap=", show(ap), " oracle=",
                 show(o.apery(x)), " D=", show(dv), " oracle=", show(o.divisors(x)));
    });
  }
  return r;
}

}  // namespace sgfr::testing
