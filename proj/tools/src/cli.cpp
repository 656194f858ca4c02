#include "sgfr/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgfr/apery.hpp"
#include "sgfr/bounds.hpp"
#include "sgfr/error.hpp"
#include "sgfr/families.hpp"
#include "sgfr/fengrao.hpp"
#include "sgfr/gluing.hpp"
#include "sgfr/oracle.hpp"
#include "sgfr/semigroup.hpp"
#include "sgfr/text.hpp"

namespace sgfr::cli {
namespace {

using json = nlohmann::ordered_json;

std::string braces(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::string comma_list(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collects disagreements between the fast path and the oracle.
class Verifier {
 public:
  explicit Verifier(bool enabled) : enabled_(enabled) {}
  bool enabled() const noexcept { return enabled_; }

  template <class T>
  void check(const std::string& what, const T& fast, const T& slow) {
    if (fast == slow) return;
    std::ostringstream os;
    os << what << ": fast=" << show(fast) << " oracle=" << show(slow);
    mismatches_.push_back(os.str());
  }

  int finish(std::ostream& err, int code) const {
    if (!enabled_) return code;
    if (mismatches_.empty()) {
      err << "verify: ok\n";
      return code;
    }
    for (const auto& m : mismatches_) err << "verify: mismatch: " << m << '\n';
    return kComputationError;
  }

 private:
  static std::string show(Int v) { return std::to_string(v); }
  static std::string show(const std::vector<Int>& v) { return braces(v); }

  bool enabled_;
  std::vector<std::string> mismatches_;
};

struct Options {
  std::string format;
  bool verify = false;
  SearchOptions search;
};

std::string resolve_format(const Options& opt, std::initializer_list<std::string_view> allowed) {
  const std::string f = opt.format.empty() ? std::string(*allowed.begin()) : opt.format;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw UsageError("--format must be one of " + list + " for this subcommand");
  }
  return f;
}

OracleConfig oracle_config(const Options& opt) {
  OracleConfig c;
  c.tuple_budget = opt.search.tuple_budget;
  return c;
}

std::string tower_text(const SemigroupSpec& spec) {
  if (spec.gluing) return spec.gluing->to_string();
  if (spec.family && spec.family->tower.gluing) return spec.family->tower.gluing->to_string();
  return {};
}

json arrangement_json(const FreeArrangement& a) {
  return json{{"arrangement", a.generators}, {"d", a.d}, {"c", a.c}, {"telescopic", a.telescopic}};
}

int cmd_info(const std::string& text, const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fmt = resolve_format(opt, {"text", "json"});
  const SemigroupSpec spec = parse_semigroup_spec(text);
  const NumericalSemigroup& s = spec.semigroup;
  const FreeArrangements arr = free_arrangements(s);
  const bool telescopic = is_telescopic(s);
  const auto cert = apmin_certificate(s);
  const std::string tower = tower_text(spec);

  if (fmt == "json") {
    json j;
    j["semigroup"] = s.to_string();
    j["generators"] = s.generators();
    j["tower"] = tower.empty() ? json(nullptr) : json(tower);
    j["embedding_dimension"] = s.embedding_dimension();
    j["multiplicity"] = s.multiplicity();
    j["frobenius"] = s.frobenius();
    j["conductor"] = s.conductor();
    j["genus"] = s.genus();
    j["free"] = !arr.arrangements.empty();
    j["telescopic"] = telescopic;
    json list = json::array();
    for (const auto& a : arr.arrangements) list.push_back(arrangement_json(a));
    j["free_arrangements"] = list;
    j["free_arrangements_partial"] = arr.partial;
    j["apmin_certificate"] = cert ? arrangement_json(*cert) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "semigroup: " << s.to_string() << '\n';
    if (!tower.empty()) out << "tower: " << tower << '\n';
    out << "embedding dimension: " << s.embedding_dimension() << '\n'
        << "multiplicity: " << s.multiplicity() << '\n'
        << "frobenius: " << s.frobenius() << '\n'
        << "conductor: " << s.conductor() << '\n'
        << "genus: " << s.genus() << '\n'
        << "free: " << yes_no(!arr.arrangements.empty())
        << (arr.partial ? " (ascending arrangement only)" : "") << '\n'
        << "telescopic: " << yes_no(telescopic) << '\n'
        << "apmin certificate: " << (cert ? comma_list(cert->generators) : "none") << '\n';
  }

  Verifier v(opt.verify);
  if (v.enabled()) {
    Oracle o(s, oracle_config(opt));
    v.check("conductor", s.conductor(), o.conductor());
    v.check("genus", s.genus(), o.genus());
  }
  return v.finish(err, kOk);
}

template <class Set>
void print_set(const Set& set, std::string_view key, Int arg, const std::string& fmt,
               std::ostream& out) {
  if (fmt == "json") {
    json j;
    j["semigroup"] = set.semigroup.to_string();
    j[std::string(key)] = arg;
    j["elements"] = set.elements;
    out << j.dump(2) << '\n';
  } else {
    out << braces(set.elements) << '\n' << "size: " << set.size() << '\n';
  }
}

int cmd_apery(const std::string& text, Int x, const Options& opt, std::ostream& out,
              std::ostream& err) {
  const auto fmt = resolve_format(opt, {"text", "json"});
  const SemigroupSpec spec = parse_semigroup_spec(text);
  const AperySet ap = spec.gluing ? apery_via_cocycle(*spec.gluing, x) : apery(spec.semigroup, x);
  print_set(ap, "shift", x, fmt, out);
  Verifier v(opt.verify);
  if (v.enabled())
    v.check("apery", ap.elements, oracle_apery(spec.semigroup, x, oracle_config(opt)));
  return v.finish(err, kOk);
}

int cmd_divisors(const std::string& text, Int z, const Options& opt, std::ostream& out,
                 std::ostream& err) {
  const auto fmt = resolve_format(opt, {"text", "json"});
  const SemigroupSpec spec = parse_semigroup_spec(text);
  const DivisorSet d =
      spec.gluing ? divisors_via_cocycle(*spec.gluing, z) : divisors(spec.semigroup, z);
  print_set(d, "target", z, fmt, out);
  Verifier v(opt.verify);
  if (v.enabled())
    v.check("divisors", d.elements, oracle_divisors(spec.semigroup, z, oracle_config(opt)));
  return v.finish(err, kOk);
}

int cmd_fr(const std::string& text, Int a, Int r, const Options& opt, std::ostream& out,
           std::ostream& err) {
  const auto fmt = resolve_format(opt, {"text", "json"});
  const SemigroupSpec spec = parse_semigroup_spec(text);
  const NumericalSemigroup& s = spec.semigroup;
  SearchResult res;
  if (r == 1) {
    res.value = feng_rao_distance(s, a);
  } else {
    res = generalized_feng_rao_search(s, a, r, opt.search);
    if (!res.certified)
      throw Error(Errc::SearchBudgetExceeded,
                  "tuple budget exhausted; best upper bound " + std::to_string(res.value) +
                      " (raise SGFR_TUPLE_BUDGET)",
                  res.value);
  }
  if (fmt == "json") {
    json j;
    j["semigroup"] = s.to_string();
    j["a"] = a;
    j["r"] = r;
    j["value"] = res.value;
    j["certified"] = res.certified;
    j["witness"] = res.witness;
    out << j.dump(2) << '\n';
  } else {
    out << res.value << '\n';
  }
  Verifier v(opt.verify);
  if (v.enabled()) {
    if (r <= 3)
      v.check("delta_r", res.value, oracle_delta_r(s, a, r, oracle_config(opt)));
    else
      err << "verify: skipped (oracle covers r <= 3)\n";
  }
  return v.finish(err, kOk);
}

int cmd_frnumber(const std::string& text, Int r, const Options& opt, std::ostream& out,
                 std::ostream& err) {
  const auto fmt = resolve_format(opt, {"text", "json"});
  const SemigroupSpec spec = parse_semigroup_spec(text);
  const NumericalSemigroup& s = spec.semigroup;
  const Int value = feng_rao_number(s, r, opt.search);
  if (fmt == "json") {
    json j;
    j["semigroup"] = s.to_string();
    j["r"] = r;
    j["value"] = value;
    out << j.dump(2) << '\n';
  } else {
    out << value << '\n';
  }
  Verifier v(opt.verify);
  if (v.enabled()) {
    Oracle o(s, oracle_config(opt));
    if (r == 2) {
      v.check("E2", value, o.second_feng_rao());
    } else if (r == 3) {
      const Int a = 2 * s.conductor() - 1;
      v.check("E3", value, o.delta_r(a, 3) - (a + 1 - 2 * s.genus()));
    } else if (r > 3) {
      err << "verify: skipped (oracle covers r <= 3)\n";
    }
  }
  return v.finish(err, kOk);
}

int cmd_family(const std::string& text, const Options& opt, std::ostream& out,
               std::ostream& err) {
  const auto fmt = resolve_format(opt, {"text", "json"});
  const FamilySpec fam = parse_family(text);
  const NumericalSemigroup& s = fam.expanded;
  const Int computed = second_feng_rao_number(s);
  const bool match = computed == fam.closed_form_e2;
  const std::string tower = fam.tower.gluing ? fam.tower.gluing->to_string() : s.to_string();
  if (fmt == "json") {
    json j;
    j["family"] = fam.label();
    j["semigroup"] = s.to_string();
    j["generators"] = s.generators();
    j["tower"] = tower;
    j["genus"] = s.genus();
    j["conductor"] = s.conductor();
    j["closed_form_e2"] = fam.closed_form_e2;
    j["computed_e2"] = computed;
    j["match"] = match;
    out << j.dump(2) << '\n';
  } else {
    out << "family: " << fam.label() << '\n'
        << "semigroup: " << s.to_string() << '\n'
        << "tower: " << tower << '\n'
        << "genus: " << s.genus() << '\n'
        << "conductor: " << s.conductor() << '\n'
        << "closed-form E2: " << fam.closed_form_e2 << '\n'
        << "computed E2: " << computed << '\n'
        << "match: " << yes_no(match) << '\n';
  }
  if (!match) err << "error: closed-form E2 disagrees with the computed value\n";
  Verifier v(opt.verify);
  if (v.enabled()) v.check("E2", computed, Oracle(s, oracle_config(opt)).second_feng_rao());
  return v.finish(err, match ? kOk : kComputationError);
}

std::string exact_cell(const BoundsRow& r) {
  return (r.exact_certified ? "" : "<=") + std::to_string(r.exact);
}

void print_bounds(const std::vector<BoundsRow>& rows, const std::string& fmt, bool transposed,
                  std::ostream& out) {
  static constexpr const char* kLabels[] = {"delta_FR(a+2)", "GOB(a+1)", "a+2-2g+E2",
                                            "delta2_FR(a+1)"};
  if (fmt == "json") {
    json list = json::array();
    for (const auto& r : rows)
      list.push_back(json{{"a", r.a},
                          {"kp", r.kp},
                          {"gob", r.gob},
                          {"e2_bound", r.e2_bound},
                          {"exact", r.exact},
                          {"exact_certified", r.exact_certified}});
    out << list.dump(2) << '\n';
    return;
  }
  if (fmt == "csv") {
    out << "a,kp,gob,e2_bound,exact,exact_certified\n";
    for (const auto& r : rows)
      out << r.a << ',' << r.kp << ',' << r.gob << ',' << r.e2_bound << ',' << r.exact << ','
          << (r.exact_certified ? "true" : "false") << '\n';
    return;
  }
  if (!transposed) {
    out << "| a | " << kLabels[0] << " | " << kLabels[1] << " | " << kLabels[2] << " | "
        << kLabels[3] << " |\n";
    out << "|---:|---:|---:|---:|---:|\n";
    for (const auto& r : rows)
      out << "| " << r.a << " | " << r.kp << " | " << r.gob << " | " << r.e2_bound << " | "
          << exact_cell(r) << " |\n";
    return;
  }
  out << "| a |";
  for (const auto& r : rows) out << ' ' << r.a << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < rows.size(); ++i) out << "---:|";
  out << '\n';
  auto line = [&](const char* label, auto cell) {
    out << "| " << label << " |";
    for (const auto& r : rows) out << ' ' << cell(r) << " |";
    out << '\n';
  };
  line(kLabels[0], [](const BoundsRow& r) { return std::to_string(r.kp); });
  line(kLabels[1], [](const BoundsRow& r) { return std::to_string(r.gob); });
  line(kLabels[2], [](const BoundsRow& r) { return std::to_string(r.e2_bound); });
  line(kLabels[3], exact_cell);
}

int cmd_bounds(const std::string& text, Int q, std::optional<Int> from, std::optional<Int> to,
               bool transposed, const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fmt = resolve_format(opt, {"md", "csv", "json"});
  if (transposed && fmt != "md") throw UsageError("--paper-layout requires --format md");
  const SemigroupSpec spec = parse_semigroup_spec(text);
  const NumericalSemigroup& s = spec.semigroup;
  const Int a_from = from.value_or(s.conductor());
  const Int a_to = to.value_or(a_from);
  if (a_to < a_from) throw UsageError("--to must be >= --from");
  const auto rows = bounds_table(s, a_from, a_to, q, opt.search);
  print_bounds(rows, fmt, transposed, out);

  Verifier v(opt.verify);
  if (v.enabled()) {
    Oracle o(s, oracle_config(opt));
    const Int e2 = o.second_feng_rao();
    for (const auto& r : rows) {
      const std::string at = " at a=" + std::to_string(r.a);
      const Int d1 = o.delta_r(r.a + 1, 1);
      v.check("kp" + at, r.kp, o.delta_r(r.a + 2, 1));
      v.check("gob" + at, r.gob, d1 + ceil_div(d1, q));
      v.check("e2_bound" + at, r.e2_bound, r.a + 2 - 2 * o.genus() + e2);
      if (r.exact_certified) v.check("exact" + at, r.exact, o.delta_r(r.a + 1, 2));
    }
  }
  return v.finish(err, kOk);
}

int cmd_scan(Int genus_max, const Options& opt, std::ostream& out, std::ostream& err) {
  const auto fmt = resolve_format(opt, {"text", "json"});
  if (genus_max < 0) throw UsageError("--genus-max must be >= 0");
  const TelescopicScanReport rep = scan_telescopic(genus_max);
  if (fmt == "json") {
    json j;
    j["genus_max"] = rep.genus_max;
    j["count"] = rep.count;
    json by = json::array();
    for (std::size_t g = 1; g < rep.count_by_genus.size(); ++g)
      by.push_back(json{{"genus", g}, {"count", rep.count_by_genus[g]}});
    j["count_by_genus"] = by;
    json fails = json::array();
    for (const auto& f : rep.failures) fails.push_back(f.generators);
    j["failures"] = fails;
    out << j.dump(2) << '\n';
  } else {
    out << "genus_max: " << rep.genus_max << '\n'
        << "telescopic semigroups: " << rep.count << '\n'
        << "failures: " << rep.failures.size() << '\n';
    for (std::size_t g = 1; g < rep.count_by_genus.size(); ++g)
      out << "genus " << g << ": " << rep.count_by_genus[g] << '\n';
    for (const auto& f : rep.failures) out << "failed: " << comma_list(f.generators) << '\n';
  }
  if (!rep.failures.empty()) err << "error: " << rep.failures.size() << " failures\n";

  Verifier v(opt.verify);
  if (v.enabled()) {
    for (const auto& e : enumerate_telescopic(genus_max)) {
      Oracle o(e.generators, oracle_config(opt));
      const std::string at = " of " + comma_list(e.generators);
      v.check("genus" + at, e.genus, o.genus());
      v.check("E2" + at, e.generators.front(), o.second_feng_rao());
    }
  }
  return v.finish(err, rep.failures.empty() ? kOk : kComputationError);
}

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("SGFR_TUPLE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultTupleBudget;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("SGFR_TUPLE_BUDGET must be a positive integer");
  std::uint64_t v = 0;
  try {
    v = std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError("SGFR_TUPLE_BUDGET is out of range");
  }
  if (v == 0) throw UsageError("SGFR_TUPLE_BUDGET must be a positive integer");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, Apery sets and Feng-Rao distances", "sgfr"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format: text|json (bounds: md|csv|json)");
  app.add_flag("--verify", opt.verify, "Re-run through the brute-force oracle and diff");

  std::string spec;
  Int x = 0;
  Int r = 2;
  Int q = 0;
  std::optional<Int> from;
  std::optional<Int> to;
  bool transposed = false;
  Int genus_max = 0;

  auto* info = app.add_subcommand("info", "Invariants and free/telescopic structure");
  info->add_option("S", spec, "Generators, family or gluing")->required();

  auto* ap = app.add_subcommand("apery", "Apery set Ap(S, x)");
  ap->add_option("S", spec)->required();
  ap->add_option("x", x)->required();

  auto* dv = app.add_subcommand("divisors", "Divisor set D(z)");
  dv->add_option("S", spec)->required();
  dv->add_option("z", x)->required();

  auto* fr = app.add_subcommand("fr", "Generalized Feng-Rao distance");
  fr->add_option("S", spec)->required();
  fr->add_option("a", x)->required();
  auto* fr_r = fr->add_option("--r", r, "Order r (default 1)");

  auto* frn = app.add_subcommand("frnumber", "Feng-Rao number E(S, r)");
  frn->add_option("S", spec)->required();
  frn->add_option("--r", r, "Order r (default 2)");

  auto* fam = app.add_subcommand("family", "Expand a named family and check its E2");
  fam->add_option("spec", spec, "hermitian:q=,r= | suzuki:p=,n= | suzuki-gamma1:p=,n=")
      ->required();

  auto* bd = app.add_subcommand("bounds", "Bounds table for one-point codes");
  bd->add_option("S", spec)->required();
  bd->add_option("--q", q, "Field size")->required();
  bd->add_option("--from", from, "First index a (default: conductor)");
  bd->add_option("--to", to, "Last index a (default: --from)");
  bd->add_flag("--paper-layout", transposed, "Columns are a values (Markdown only)");

  auto* sc = app.add_subcommand("scan-telescopic", "Check E2 = m on telescopic semigroups");
  sc->add_option("--genus-max", genus_max)->required();

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run 'sgfr --help' for the grammar\n";
    return kUsageError;
  }

  try {
    opt.search.tuple_budget = budget_from_env();
    if (*info) return cmd_info(spec, opt, out, err);
    if (*ap) return cmd_apery(spec, x, opt, out, err);
    if (*dv) return cmd_divisors(spec, x, opt, out, err);
    if (*fr) return cmd_fr(spec, x, fr_r->count() ? r : 1, opt, out, err);
    if (*frn) return cmd_frnumber(spec, r, opt, out, err);
    if (*fam) return cmd_family(spec, opt, out, err);
    if (*bd) return cmd_bounds(spec, q, from, to, transposed, opt, out, err);
    if (*sc) return cmd_scan(genus_max, opt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::ParseError ? kUsageError : kComputationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace sgfr::cli
