#include "brauerlab/construct.hpp"

#include <algorithm>
#include <set>

#include "brauerlab/catalog.hpp"
#include "brauerlab/error.hpp"

namespace brauerlab {

namespace {

void require_multiple(std::int64_t d, std::int64_t r) {
  if (d < 2 || d > kMaxDegree) {
    throw Error(ErrorCode::DegreeConstraint, "degree must lie in [2, " + std::to_string(kMaxDegree) + "]");
  }
  if (r < 1 || r % d != 0) {
    throw Error(ErrorCode::DegreeConstraint,
                "r = " + std::to_string(r) + " is not a positive multiple of d = " + std::to_string(d));
  }
}

std::optional<std::size_t> degree_one_place(const PrimeDecomposition& dec) {
  for (std::size_t i = 0; i < dec.places.size(); ++i) {
    if (dec.places[i].local_degree() == 1) return i;
  }
  return std::nullopt;
}

void validate_plan(const ConstructionPlan& plan) {
  require_multiple(plan.d, plan.r());
  std::set<std::int64_t> seen;
  for (const auto& p : plan.primes) {
    const std::string where = "q=" + std::to_string(p.q);
    const auto* dec = plan.source.decomposition(p.q);
    if (dec == nullptr) throw Error(ErrorCode::PlanViolation, where + " is not profiled in " + plan.source.name);
    if (plan.source.is_ramified(p.q)) throw Error(ErrorCode::PlanViolation, where + " is ramified");
    if (p.place >= dec->places.size() || dec->places[p.place].local_degree() != 1) {
      throw Error(ErrorCode::PlanViolation, where + ": designated place does not have e = f = 1");
    }
    if (!seen.insert(p.q).second) throw Error(ErrorCode::PlanViolation, where + " appears twice");
  }
}

void require_transport(const ConstructionPlan& plan, TransportPolicy policy) {
  if (policy == TransportPolicy::LocalEquivalence) {
    const auto report = check_local_equivalence(plan.source, plan.target, plan.bijection);
    if (!report.ok()) throw Error(ErrorCode::BijectionNotLocal, report.violations.front());
    return;
  }
  const auto report = check_arithmetic_equivalence(plan.source, plan.target, plan.bijection);
  if (!report.ok()) throw Error(ErrorCode::BijectionNotLocal, report.violations.front());
  for (const auto& p : plan.primes) {
    const auto* src = plan.source.decomposition(p.q);
    const auto* dst = plan.target.decomposition(p.q);
    const auto* pairing = plan.bijection.pairing(p.q);
    for (std::size_t i = 0; i < src->places.size(); ++i) {
      if (!(src->places[i] == dst->places[pairing->image[i]])) {
        throw Error(ErrorCode::BijectionNotLocal,
                    "q=" + std::to_string(p.q) + ": place " + std::to_string(i) + " changes (e, f)");
      }
    }
  }
}

void expect(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::ScenarioFailure, what);
}

}  // namespace

std::vector<PlannedPrime> select_prime_tuple(const FieldProfile& profile, std::int64_t d, std::int64_t r) {
  require_multiple(d, r);
  std::vector<PlannedPrime> out;
  for (std::int64_t q : profile.profiled_primes()) {
    if (static_cast<std::int64_t>(out.size()) == r) break;
    if (profile.is_ramified(q)) continue;
    if (const auto place = degree_one_place(*profile.decomposition(q))) out.push_back({q, *place});
  }
  if (static_cast<std::int64_t>(out.size()) < r) {
    throw Error(ErrorCode::InsufficientPrimes, profile.name + " has " + std::to_string(out.size()) +
                                                   " qualifying primes, " + std::to_string(r) + " needed");
  }
  return out;
}

ConstructionPlan make_plan(const FieldProfile& source, const FieldProfile& target,
                           const PlaceBijection& bijection, std::int64_t d, std::int64_t r) {
  return ConstructionPlan{source, target, bijection, select_prime_tuple(source, d, r), d};
}

AlgebraPair build_pair(const ConstructionPlan& plan, TransportPolicy policy) {
  validate_plan(plan);
  require_transport(plan, policy);

  const auto inverse_d = make_invariant(1, plan.d);
  BrauerClass a = zero_class(plan.source, plan.d);
  for (const auto& p : plan.primes) {
    const auto& places = plan.source.decomposition(p.q)->places;
    for (std::size_t i = 0; i < places.size(); ++i) a.set(p.q, i, scale(places[i].local_degree(), inverse_d));
  }

  BrauerClass a_prime = zero_class(plan.target, plan.d);
  for (const auto& [key, v] : a.finite()) {
    const auto* pairing = plan.bijection.pairing(key.q);
    a_prime.set(key.q, pairing->image.at(key.index), v);
  }

  for (const auto* side : {&a, &a_prime}) {
    const auto& profile = side == &a ? plan.source : plan.target;
    const auto report = validate_class(*side, profile);
    if (!report.ok()) throw Error(ErrorCode::PlanViolation, report.violations.front());
  }
  return {std::move(a), std::move(a_prime)};
}

ReciprocityCertificate reciprocity_certificate(const ConstructionPlan& plan, const BrauerClass& a) {
  ReciprocityCertificate cert;
  cert.recomputed = sum(a.all_invariants());
  cert.symbolic_num = plan.r() * plan.source.degree;
  cert.symbolic_den = plan.d;
  cert.symbolic = make_invariant(cert.symbolic_num, cert.symbolic_den);
  if (cert.recomputed != cert.symbolic) {
    throw Error(ErrorCode::CertificateMismatch, "recomputed sum " + cert.recomputed.str() +
                                                    " differs from r*n/d = " + cert.symbolic.str());
  }
  return cert;
}

BrauerClass build_witness(const ConstructionPlan& plan, const BrauerClass& a) {
  validate_plan(plan);
  std::map<std::int64_t, InvariantValue> finite;
  for (const auto& p : plan.primes) finite[p.q] = make_invariant(1, plan.d);
  BrauerClass b = rational_class(plan.d, finite);
  const FieldProfile& profile = a.field() == plan.target.name ? plan.target : plan.source;
  if (!member(b, a, profile)) {
    throw Error(ErrorCode::PlanViolation, "witness does not restrict to " + describe(a));
  }
  return b;
}

BrauerClass extend_witness(const BrauerClass& b, std::span<const FreePrime> free_primes, std::int64_t d) {
  const auto r_free = static_cast<std::int64_t>(free_primes.size());
  if (r_free < 1 || r_free % d != 0) {
    throw Error(ErrorCode::DegreeConstraint, std::to_string(r_free) + " free primes, not a positive multiple of " +
                                                 std::to_string(d));
  }
  BrauerClass out = b;
  const auto inverse_d = make_invariant(1, d);
  for (const auto& fp : free_primes) {
    if (!is_prime(fp.q)) throw Error(ErrorCode::NotFreePrime, std::to_string(fp.q) + " is not a prime");
    if (!is_free_prime(fp.splitting, d)) {
      throw Error(ErrorCode::NotFreePrime, "q=" + std::to_string(fp.q) + " has a local degree not divisible by " +
                                               std::to_string(d));
    }
    if (!out.at(fp.q, 0).is_zero()) {
      throw Error(ErrorCode::PlanViolation, "q=" + std::to_string(fp.q) + " is already ramified");
    }
    out.set(fp.q, 0, inverse_d);
  }
  const auto report = validate_class(out, rationals());
  if (!report.ok()) throw Error(ErrorCode::PlanViolation, report.violations.front());
  return out;
}

std::vector<FreePrime> class_members(const FieldProfile& profile, std::string_view label) {
  const auto* c = profile.find_class(label);
  if (c == nullptr) throw Error(ErrorCode::UnknownEntry, "no class '" + std::string(label) + "' in " + profile.name);
  std::vector<FreePrime> out;
  for (std::int64_t q : c->primes) out.push_back({q, c->splitting_type});
  return out;
}

ScenarioReport almost_equal_scenario(const ScenarioOptions& options) {
  constexpr std::int64_t kDegree = 2;
  constexpr std::int64_t kRamifiedPrime = 2;
  CatalogPair catalog;
  if (!(options.source && options.target && options.bijection)) catalog = load_catalog("perlis8");
  const FieldProfile source = options.source.value_or(catalog.source);
  const FieldProfile target = options.target.value_or(catalog.target);
  const PlaceBijection phi = options.bijection.value_or(catalog.bijection);

  ScenarioReport rep;
  rep.name = "almost-equal";
  auto& log = rep.transcript;
  for (const auto* p : {&source, &target}) {
    const auto report = validate_profile(*p);
    expect(report.ok(), "profile " + p->name + " is invalid");
    for (const auto& n : report.notes) rep.notes.push_back(n);
  }
  const auto arith = check_arithmetic_equivalence(source, target, phi);
  expect(arith.ok(), "bijection is not f-preserving");
  const auto local = check_local_equivalence(source, target, phi);
  expect(!local.ok(), "pair is unexpectedly locally equivalent");
  log.push_back("certificate: " + source.name + " and " + target.name +
                " are arithmetically equivalent and not locally equivalent (" + local.violations.front() + ")");

  rep.plan = make_plan(source, target, phi, kDegree, kDegree);
  rep.pair = build_pair(rep.plan, TransportPolicy::ArithmeticAtPlanPrimes);
  const auto& a = rep.pair.source;
  const auto& a_prime = rep.pair.target;
  for (const auto& p : rep.plan.primes) {
    const auto& places = source.decomposition(p.q)->places;
    log.push_back("(a) q=" + std::to_string(p.q) + ": Inv at place " + std::to_string(p.place) + " = " +
                  a.at(p.q, p.place).str());
    for (std::size_t i = 0; i < places.size(); ++i) {
      if (i == p.place) continue;
      log.push_back("(b) q=" + std::to_string(p.q) + ": place " + std::to_string(i) + " has local degree " +
                    std::to_string(places[i].local_degree()) + ", Inv = " + a.at(p.q, i).str());
    }
  }
  log.push_back("(c) every other place of " + source.name + " has Inv = 0");

  rep.certificate = reciprocity_certificate(rep.plan, a);
  rep.certificate_target = reciprocity_certificate(rep.plan, a_prime);
  log.push_back("reciprocity: r*n/d = " + std::to_string(rep.certificate.symbolic_num) + "/" +
                std::to_string(rep.certificate.symbolic_den) + " = " + rep.certificate.symbolic.str() +
                " mod Z; recomputed sums " + rep.certificate.recomputed.str() + " and " +
                rep.certificate_target.recomputed.str());
  expect(validate_class(a, source).ok() && validate_class(a_prime, target).ok(), "constructed classes invalid");

  rep.fiber = fiber_description(a, source, kDegree);
  rep.fiber_target = fiber_description(a_prime, target, kDegree);
  rep.ramified_prime_source = admissible_set(a, source, kRamifiedPrime, kDegree);
  rep.ramified_prime_target = admissible_set(a_prime, target, kRamifiedPrime, kDegree);
  const ValueSet both{InvariantValue{}, make_invariant(1, 2)};
  const ValueSet zero_only{InvariantValue{}};
  expect(rep.ramified_prime_source.values == both, "admissible set at 2 over " + source.name + " is " +
                                                       format_values(rep.ramified_prime_source.values));
  expect(rep.ramified_prime_target.values == zero_only, "admissible set at 2 over " + target.name + " is " +
                                                            format_values(rep.ramified_prime_target.values));
  log.push_back("local equations at 2: " + source.name + " admits " +
                format_values(rep.ramified_prime_source.values) + ", " + target.name + " admits " +
                format_values(rep.ramified_prime_target.values));

  rep.comparison = compare(rep.fiber, rep.fiber_target);
  expect(rep.comparison.verdict == Verdict::Unequal, "fibers compare EQUAL");
  expect(rep.comparison.witness_differences.size() == 1 &&
             rep.comparison.witness_differences.front().location == "q=2",
         "fibers differ somewhere other than q=2 alone");
  expect(rep.comparison.intersection_cardinality.kind == CardinalityKind::Infinite,
         "intersection is " + rep.comparison.intersection_cardinality.str());
  log.push_back("compare: " + to_string(rep.comparison.verdict) + ", sole difference at q=2; intersection " +
                rep.comparison.intersection_cardinality.str());

  rep.witness = build_witness(rep.plan, a);
  expect(member(rep.witness, a_prime, target), "witness is not a member of the target fiber");
  log.push_back("witness " + describe(rep.witness) + " lies in both fibers");

  const auto members = enumerate(rep.fiber, options.prime_bound);
  std::vector<BrauerClass> ramified;
  for (const auto& b : members) {
    if (!b.at(kRamifiedPrime, 0).is_zero()) ramified.push_back(b);
  }
  expect(!ramified.empty(), "no member ramified at 2 with support <= " + std::to_string(options.prime_bound));
  rep.ramified_members_enumerated = ramified.size();
  rep.ramified_member = ramified.front();
  rep.ramified_member_in_source = member(rep.ramified_member, a, source);
  rep.ramified_member_in_target = member(rep.ramified_member, a_prime, target);
  expect(rep.ramified_member_in_source && !rep.ramified_member_in_target,
         "2-ramified member does not separate the fibers");
  log.push_back("2-ramified member " + describe(rep.ramified_member) + " restricts to A but not to A'");

  // Cross-check the count by testing every rational class of order dividing 2
  // supported on primes <= bound.
  std::vector<std::int64_t> primes;
  for (std::int64_t q = 2; q <= options.prime_bound; ++q) {
    if (is_prime(q)) primes.push_back(q);
  }
  expect(primes.size() < 24, "prime bound too large for the brute-force cross-check");
  const auto half = make_invariant(1, 2);
  std::size_t brute = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (primes.size() + 1)); ++mask) {
    if ((mask & 1) == 0) continue;  // prime 2 = bit 0 must be ramified
    if (__builtin_popcountll(mask) % 2 != 0) continue;
    std::map<std::int64_t, InvariantValue> finite;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) finite[primes[k]] = half;
    }
    const bool arch = mask & (std::uint64_t{1} << primes.size());
    if (member(rational_class(kDegree, finite, arch ? half : InvariantValue{}), a, source)) ++brute;
  }
  rep.ramified_members_brute_force = brute;
  expect(brute == rep.ramified_members_enumerated, "enumeration found " + std::to_string(ramified.size()) +
                                                       " 2-ramified members, brute force " + std::to_string(brute));
  log.push_back("2-ramified members with support <= " + std::to_string(options.prime_bound) + ": " +
                std::to_string(brute) + " (enumeration and brute force agree)");
  rep.notes.push_back("submanifold reports require B split at the real place for every degree, "
                      "including even degrees where the corollary statement omits it");
  return rep;
}

RigidityReport same_field_rigidity_check(const BrauerClass& a1, const BrauerClass& a2,
                                         const FieldProfile& profile, std::int64_t prime_bound,
                                         std::size_t limit) {
  if (a1.field() != profile.name || a2.field() != profile.name) {
    throw Error(ErrorCode::FieldMismatch, "both classes must lie over " + profile.name);
  }
  if (a1.degree() != a2.degree()) {
    throw Error(ErrorCode::DegreeMismatch, std::to_string(a1.degree()) + " vs " + std::to_string(a2.degree()));
  }
  RigidityReport report;
  report.classes_equal = equal(a1, a2);
  const auto members = enumerate(fiber_description(a1, profile), prime_bound, limit);
  for (const auto& b : members) {
    ++report.members_checked;
    if (member(b, a2, profile)) {
      report.common_member_found = true;
      report.witness = b;
      break;
    }
  }
  report.consistent = !report.common_member_found || report.classes_equal;
  return report;
}

}  // namespace brauerlab
