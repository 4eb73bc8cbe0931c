#include "brauerlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "brauerlab/catalog.hpp"
#include "brauerlab/construct.hpp"
#include "brauerlab/error.hpp"
#include "brauerlab/geometry.hpp"
#include "brauerlab/io.hpp"

namespace brauerlab::cli {

namespace {

using io::Json;

struct Options {
  std::string catalog;
  std::string catalog_dir;
  std::string profile;
  std::string profile2;
  std::string bijection;
  std::string class1;
  std::string class2;
  std::string side = "source";
  std::string mode;
  std::string policy = "local";
  std::string free_class;
  std::string scenario;
  std::int64_t d = 0;
  std::int64_t r = 0;
  std::int64_t prime_bound = 30;
  std::int64_t free_count = 0;
  std::size_t limit = 1000;
  bool enumerate = false;
  bool json = false;
};

// Output of one verb: the JSON document, its text rendering and whether the
// domain check it performed passed.
struct Outcome {
  Json json;
  std::string text;
  bool ok = true;
};

std::string render(const Report& r, const std::string& title) {
  std::string out = title + ": " + (r.ok() ? "PASS" : "FAIL") + "\n";
  for (const auto& v : r.violations) out += "  violation: " + v + "\n";
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  return out;
}

std::string render(const BrauerClass& a, const std::string& title) {
  std::string out = title + ": " + describe(a) + "\n";
  out += "  index " + std::to_string(index(a)) + (is_division(a) ? " (division)" : "") + "\n";
  return out;
}

std::string render(const FiberDescription& f, const std::string& title) {
  std::ostringstream os;
  os << title << ": fiber over " << f.algebra << " (d=" << f.d << ")\n";
  for (const auto& [q, values] : f.profiled) os << "  q=" << q << ": " << format_values(values) << "\n";
  os << "  inf: " << format_values(f.arch) << "\n";
  for (const auto& c : f.classes) {
    os << "  class " << c.label << (c.infinite ? " (infinite)" : "") << ": " << format_values(c.values) << "\n";
  }
  os << "  cardinality: " << f.cardinality.str();
  if (f.cardinality.kind == CardinalityKind::Finite) os << ", division algebras " << f.cardinality.division_count;
  os << "\n";
  for (const auto& n : f.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render(const ComparisonResult& c) {
  std::string out = "compare: " + to_string(c.verdict) + ", intersection " + c.intersection_cardinality.str() + "\n";
  for (const auto& w : c.witness_differences) {
    out += "  differs at " + w.location + ": " + format_values(w.first) + " vs " + format_values(w.second) + "\n";
  }
  return out;
}

std::string render(const ReciprocityCertificate& c, const std::string& title) {
  return title + ": r*n/d = " + std::to_string(c.symbolic_num) + "/" + std::to_string(c.symbolic_den) +
         " = " + c.symbolic.str() + " mod Z, recomputed " + c.recomputed.str() + "\n";
}

CatalogOptions catalog_options(const Options& o) {
  CatalogOptions c;
  if (!o.catalog_dir.empty()) c.directory = o.catalog_dir;
  return c;
}

// Resolves the pair slot. Catalog names resolve first; a catalog together with
// explicit profile files fills the same slot twice and is rejected.
CatalogPair resolve_pair(const Options& o) {
  if (!o.catalog.empty()) {
    if (!o.profile.empty() || !o.profile2.empty() || !o.bijection.empty()) {
      throw Error(ErrorCode::DuplicateInput, "--catalog and profile/bijection files name the same slot");
    }
    return load_catalog(o.catalog, catalog_options(o));
  }
  if (o.profile.empty() || o.profile2.empty()) {
    throw Error(ErrorCode::ParseError, "a pair needs --catalog or both --profile and --profile2");
  }
  CatalogPair pair;
  pair.entry = "files";
  pair.source = io::profile_from_json(io::read_file(o.profile), o.profile);
  pair.target = io::profile_from_json(io::read_file(o.profile2), o.profile2);
  if (pair.source.name == pair.target.name) {
    throw Error(ErrorCode::DuplicateInput, "both profiles are named " + pair.source.name);
  }
  pair.bijection = o.bijection.empty() ? profile_order_bijection(pair.source, pair.target)
                                       : io::bijection_from_json(io::read_file(o.bijection), o.bijection);
  pair.equivalence = Equivalence::Local;
  return pair;
}

FieldProfile resolve_profile(const Options& o, const std::string& file, bool second) {
  if (!o.catalog.empty()) {
    if (!file.empty()) throw Error(ErrorCode::DuplicateInput, "--catalog and " + file + " name the same profile slot");
    auto pair = load_catalog(o.catalog, catalog_options(o));
    const bool target = second || o.side == "target";
    return target ? pair.target : pair.source;
  }
  if (file.empty()) throw Error(ErrorCode::ParseError, "missing profile input (--profile or --catalog)");
  return io::profile_from_json(io::read_file(file), file);
}

BrauerClass read_class(const std::string& file) {
  if (file.empty()) throw Error(ErrorCode::ParseError, "missing --class input");
  return io::class_from_json(io::read_file(file), file);
}

void require_valid_class(const BrauerClass& a, const FieldProfile& p) {
  const auto report = validate_class(a, p);
  if (!report.ok()) throw Error(ErrorCode::PlanViolation, "class is invalid: " + report.violations.front());
}

Outcome cmd_validate(const Options& o) {
  Outcome out;
  if (!o.class1.empty()) {
    const auto a = read_class(o.class1);
    const FieldProfile p = a.field() == kRationalsName ? rationals() : resolve_profile(o, o.profile, false);
    const auto report = validate_class(a, p);
    out.json = Json{{"class", io::to_json(report)}};
    out.text = render(report, "class " + describe(a));
    out.ok = report.ok();
    return out;
  }
  if (!o.catalog.empty()) {
    const auto pair = resolve_pair(o);
    const auto rs = validate_profile(pair.source);
    const auto rt = validate_profile(pair.target);
    const auto eq = check_equivalence(pair);
    out.json = Json{{"source", io::to_json(rs)}, {"target", io::to_json(rt)},
                    {to_string(pair.equivalence) + "_equivalence", io::to_json(eq)}};
    out.text = render(rs, "profile " + pair.source.name) + render(rt, "profile " + pair.target.name) +
               render(eq, to_string(pair.equivalence) + " equivalence");
    out.ok = rs.ok() && rt.ok() && eq.ok();
    return out;
  }
  const auto p = resolve_profile(o, o.profile, false);
  const auto report = validate_profile(p);
  out.json = Json{{"profile", io::to_json(report)}};
  out.text = render(report, "profile " + p.name);
  out.ok = report.ok();
  return out;
}

Outcome cmd_equiv(const Options& o) {
  const auto pair = resolve_pair(o);
  std::string mode = o.mode;
  if (mode.empty()) mode = o.catalog.empty() ? "local" : to_string(pair.equivalence);
  if (mode != "local" && mode != "arithmetic") throw Error(ErrorCode::ParseError, "--mode must be local or arithmetic");
  const auto local = check_local_equivalence(pair.source, pair.target, pair.bijection);
  const auto arith = check_arithmetic_equivalence(pair.source, pair.target, pair.bijection);
  Outcome out;
  out.json = Json{{"source", pair.source.name}, {"target", pair.target.name}, {"mode", mode},
                  {"local", io::to_json(local)}, {"arithmetic", io::to_json(arith)}};
  out.text = render(local, "local equivalence") + render(arith, "arithmetic equivalence");
  out.ok = mode == "local" ? local.ok() : arith.ok();
  return out;
}

Outcome cmd_restrict(const Options& o) {
  const auto b = read_class(o.class1);
  require_valid_class(b, rationals());
  const auto p = resolve_profile(o, o.profile, false);
  const auto a = restrict(b, p);
  const auto report = validate_class(a, p);
  Outcome out;
  out.json = Json{{"restriction", io::to_json(a)}, {"validation", io::to_json(report)}};
  out.text = render(a, "restriction to " + p.name) + render(report, "validation");
  out.ok = report.ok();
  return out;
}

Outcome cmd_fiber(const Options& o) {
  const auto a = read_class(o.class1);
  const auto p = resolve_profile(o, o.profile, false);
  require_valid_class(a, p);
  const auto f = fiber_description(a, p, o.d > 0 ? o.d : a.degree());
  Outcome out;
  out.json = Json{{"fiber", io::to_json(f)}};
  out.text = render(f, "fiber");
  if (o.enumerate) {
    const auto members = enumerate(f, o.prime_bound, o.limit);
    Json list = Json::array();
    out.text += "members with support <= " + std::to_string(o.prime_bound) + ": " + std::to_string(members.size()) + "\n";
    for (const auto& b : members) {
      list.push_back(io::to_json(b));
      out.text += "  " + describe(b) + "\n";
    }
    out.json["members"] = std::move(list);
  }
  return out;
}

Outcome cmd_compare(const Options& o) {
  const auto a1 = read_class(o.class1);
  const auto a2 = read_class(o.class2);
  const auto p1 = resolve_profile(o, o.profile, false);
  const auto p2 = o.catalog.empty() ? resolve_profile(o, o.profile2, true)
                                    : load_catalog(o.catalog, catalog_options(o)).target;
  require_valid_class(a1, p1);
  require_valid_class(a2, p2);
  const std::int64_t d = o.d > 0 ? o.d : a1.degree();
  const auto f1 = fiber_description(a1, p1, d);
  const auto f2 = fiber_description(a2, p2, d);
  const auto c = compare(f1, f2);
  Outcome out;
  out.json = Json{{"first", io::to_json(f1)}, {"second", io::to_json(f2)}, {"comparison", io::to_json(c)}};
  out.text = render(f1, "first") + render(f2, "second") + render(c);
  return out;
}

TransportPolicy policy_of(const Options& o) {
  if (o.policy == "local") return TransportPolicy::LocalEquivalence;
  if (o.policy == "arithmetic") return TransportPolicy::ArithmeticAtPlanPrimes;
  throw Error(ErrorCode::ParseError, "--policy must be local or arithmetic");
}

ConstructionPlan plan_from(const Options& o, const CatalogPair& pair) {
  return make_plan(pair.source, pair.target, pair.bijection, o.d > 0 ? o.d : 2, o.r > 0 ? o.r : (o.d > 0 ? o.d : 2));
}

Outcome cmd_construct_pair(const Options& o) {
  const auto pair = resolve_pair(o);
  const auto plan = plan_from(o, pair);
  const auto policy = policy_of(o);
  const auto built = build_pair(plan, policy);
  const auto cert = reciprocity_certificate(plan, built.source);
  const auto cert2 = reciprocity_certificate(plan, built.target);
  const auto witness = build_witness(plan, built.source);
  const bool in_target = member(witness, built.target, plan.target);
  const auto c = compare(fiber_description(built.source, plan.source), fiber_description(built.target, plan.target));
  Json primes = Json::array();
  std::string text = "plan: d=" + std::to_string(plan.d) + ", r=" + std::to_string(plan.r()) + ", primes";
  for (const auto& p : plan.primes) {
    primes.push_back(Json{{"q", p.q}, {"place", p.place}});
    text += " " + std::to_string(p.q) + "." + std::to_string(p.place);
  }
  text += "\n";
  Outcome out;
  out.json = Json{{"d", plan.d},
                  {"r", plan.r()},
                  {"primes", std::move(primes)},
                  {"A", io::to_json(built.source)},
                  {"A_prime", io::to_json(built.target)},
                  {"certificate", io::to_json(cert)},
                  {"certificate_target", io::to_json(cert2)},
                  {"witness", io::to_json(witness)},
                  {"witness_in_target_fiber", in_target},
                  {"comparison", io::to_json(c)}};
  out.text = text + render(built.source, "A") + render(built.target, "A'") + render(cert, "certificate A") +
             render(cert2, "certificate A'") + "witness: " + describe(witness) +
             (in_target ? " (member of both fibers)\n" : " (NOT a member of the target fiber)\n") + render(c);
  // Equal fibers are guaranteed only when the whole bijection is local.
  out.ok = in_target && (c.verdict == Verdict::Equal || policy == TransportPolicy::ArithmeticAtPlanPrimes);
  return out;
}

Outcome cmd_witness(const Options& o) {
  const auto pair = resolve_pair(o);
  const auto plan = plan_from(o, pair);
  const auto built = build_pair(plan, policy_of(o));
  auto witness = build_witness(plan, built.source);
  if (!o.free_class.empty()) {
    auto members = class_members(plan.source, o.free_class);
    if (o.free_count > static_cast<std::int64_t>(members.size()) || o.free_count < 0) {
      throw Error(ErrorCode::InsufficientPrimes, "class " + o.free_class + " lists " + std::to_string(members.size()) +
                                                     " primes");
    }
    members.resize(static_cast<std::size_t>(o.free_count));
    witness = extend_witness(witness, members, plan.d);
  }
  const bool in_source = member(witness, built.source, plan.source);
  const bool in_target = member(witness, built.target, plan.target);
  Outcome out;
  out.json = Json{{"witness", io::to_json(witness)}, {"member_source", in_source}, {"member_target", in_target},
                  {"arithmetic_subgroup", produces_arithmetic_subgroup(witness)}};
  out.text = render(witness, "witness") + "  member of " + plan.source.name + " fiber: " + (in_source ? "yes" : "no") +
             "\n  member of " + plan.target.name + " fiber: " + (in_target ? "yes" : "no") + "\n";
  out.ok = in_source && in_target;
  return out;
}

Outcome cmd_scenario(const Options& o) {
  if (o.scenario != "almost-equal") throw Error(ErrorCode::UnknownEntry, "unknown scenario '" + o.scenario + "'");
  ScenarioOptions opts;
  opts.prime_bound = o.prime_bound;
  if (!o.catalog_dir.empty() || std::getenv("BRAUERLAB_CATALOG") != nullptr) {
    const auto pair = load_catalog("perlis8", catalog_options(o));
    opts.source = pair.source;
    opts.target = pair.target;
    opts.bijection = pair.bijection;
  }
  const auto rep = almost_equal_scenario(opts);
  Outcome out;
  out.json = io::to_json(rep);
  std::string text = "scenario almost-equal: " + rep.plan.source.name + " vs " + rep.plan.target.name + "\n";
  for (const auto& line : rep.transcript) text += "  " + line + "\n";
  for (const auto& n : rep.notes) text += "  note: " + n + "\n";
  text += "verdict: " + to_string(rep.comparison.verdict) + ", intersection " +
          rep.comparison.intersection_cardinality.str() + "\n";
  out.text = text;
  return out;
}

Outcome cmd_geometry(const Options& o) {
  Outcome out;
  if (!o.class1.empty()) {
    const auto a = read_class(o.class1);
    const FieldProfile p = a.field() == kRationalsName ? rationals() : resolve_profile(o, o.profile, false);
    require_valid_class(a, p);
    const auto g = archimedean_group(a, p);
    out.json = Json{{"descriptor", io::to_json(g)}};
    out.text = "group: " + g.str() + "\n";
    if (a.field() == kRationalsName) {
      const bool arithmetic = produces_arithmetic_subgroup(a);
      out.json["arithmetic_subgroup"] = arithmetic;
      out.text += std::string("arithmetic subgroup: ") + (arithmetic ? "yes" : "no") + "\n";
    }
    return out;
  }
  const auto pair = resolve_pair(o);
  const auto plan = plan_from(o, pair);
  const auto built = build_pair(plan, policy_of(o));
  const auto report = shared_submanifolds(built.source, plan.source, built.target, plan.target, plan.d,
                                          o.prime_bound, o.limit);
  out.json = io::to_json(report);
  std::string text = "M_A: " + report.ambient_first.str() + ", M_A': " + report.ambient_second.str() + "\n";
  text += "submanifold classes from Q (support <= " + std::to_string(o.prime_bound) + "): shared " +
          std::to_string(report.shared) + ", first only " + std::to_string(report.first_only) + ", second only " +
          std::to_string(report.second_only) + ", non-arithmetic skipped " + std::to_string(report.non_arithmetic) + "\n";
  for (const auto& c : report.classes) text += "  [" + to_string(c.membership) + "] " + c.label + "\n";
  for (const auto& n : report.notes) text += "  note: " + n + "\n";
  out.text = text;
  return out;
}

void add_pair_inputs(CLI::App* sub, Options& o) {
  sub->add_option("--catalog", o.catalog, "Catalog entry (perlis8, twin4, twin8 or a file entry)");
  sub->add_option("--profile", o.profile, "Profile JSON file (first slot)");
  sub->add_option("--profile2", o.profile2, "Profile JSON file (second slot)");
  sub->add_option("--bijection", o.bijection, "Place bijection JSON file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"brauerlab: Brauer classes over profiled number fields and fibers of restriction"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--catalog-dir", o.catalog_dir, "Directory of catalog override files");

  auto* validate = app.add_subcommand("validate", "Validate a profile, a catalog pair or a class");
  add_pair_inputs(validate, o);
  validate->add_option("--class", o.class1, "Brauer class JSON file");
  validate->add_option("--side", o.side, "Catalog side for --class")->check(CLI::IsMember({"source", "target"}));

  auto* equiv = app.add_subcommand("equiv", "Check local/arithmetic equivalence certificates");
  add_pair_inputs(equiv, o);
  equiv->add_option("--mode", o.mode, "local or arithmetic (default: the catalog's advertised equivalence)");

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a rational class to a profile");
  add_pair_inputs(restrict_cmd, o);
  restrict_cmd->add_option("--class", o.class1, "Rational Brauer class JSON file")->required();
  restrict_cmd->add_option("--side", o.side)->check(CLI::IsMember({"source", "target"}));

  auto* fiber = app.add_subcommand("fiber", "Describe the fiber of restriction over a class");
  add_pair_inputs(fiber, o);
  fiber->add_option("--class", o.class1, "Brauer class JSON file")->required();
  fiber->add_option("--side", o.side)->check(CLI::IsMember({"source", "target"}));
  fiber->add_option("--d", o.d, "Degree of the rational algebras (default: the class degree)");
  fiber->add_flag("--enumerate", o.enumerate, "List members with bounded support");
  fiber->add_option("--prime-bound", o.prime_bound);
  fiber->add_option("--limit", o.limit);

  auto* cmp = app.add_subcommand("compare", "Compare the fibers of two classes");
  add_pair_inputs(cmp, o);
  cmp->add_option("--class", o.class1, "Class over the first profile")->required();
  cmp->add_option("--class2", o.class2, "Class over the second profile")->required();
  cmp->add_option("--d", o.d);

  for (const char* name : {"construct-pair", "witness", "geometry"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "construct-pair"
                                             ? "Build a pair of algebras with equal fibers"
                                         : std::string(name) == "witness"
                                             ? "Build (and optionally extend) a witness algebra over Q"
                                             : "Archimedean groups and shared submanifold classes");
    add_pair_inputs(sub, o);
    sub->add_option("--d", o.d, "Algebra degree (default 2)");
    sub->add_option("--r", o.r, "Number of primes, a multiple of d (default d)");
    sub->add_option("--policy", o.policy, "Transport policy: local or arithmetic");
    if (std::string(name) == "witness") {
      sub->add_option("--free-class", o.free_class, "Cebotarev class supplying free primes");
      sub->add_option("--free-count", o.free_count, "Number of free primes (a multiple of d)");
    }
    if (std::string(name) == "geometry") {
      sub->add_option("--class", o.class1, "Report the archimedean group of this class");
      sub->add_option("--side", o.side)->check(CLI::IsMember({"source", "target"}));
      sub->add_option("--prime-bound", o.prime_bound);
      sub->add_option("--limit", o.limit);
    }
  }

  auto* scenario = app.add_subcommand("scenario", "Run a packaged scenario");
  scenario->add_option("name", o.scenario, "Scenario name (almost-equal)")->required();
  scenario->add_option("--prime-bound", o.prime_bound);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Outcome outcome;
    const auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    if (verb == "validate") outcome = cmd_validate(o);
    else if (verb == "equiv") outcome = cmd_equiv(o);
    else if (verb == "restrict") outcome = cmd_restrict(o);
    else if (verb == "fiber") outcome = cmd_fiber(o);
    else if (verb == "compare") outcome = cmd_compare(o);
    else if (verb == "construct-pair") outcome = cmd_construct_pair(o);
    else if (verb == "witness") outcome = cmd_witness(o);
    else if (verb == "scenario") outcome = cmd_scenario(o);
    else outcome = cmd_geometry(o);

    const std::string text = o.json ? outcome.json.dump(2) + "\n" : outcome.text;
    out << text << std::flush;
    return outcome.ok ? kExitOk : kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::DuplicateInput:
      case ErrorCode::UnknownEntry:
        return kExitInput;
      default:
        return kExitDomain;
    }
  }
}

}  // namespace brauerlab::cli
