// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brauerlab/catalog.hpp"
#include "brauerlab/construct.hpp"
#include "brauerlab/error.hpp"
#include "brauerlab/fiber.hpp"
#include "brauerlab/geometry.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace brauerlab;

namespace {

// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0: no time limit
  std::function<std::string(Checker&)> body;
};

bool canonical(const InvariantValue& x) {
  return x.den() >= 1 && x.num() >= 0 && x.num() < x.den() && std::gcd(x.num(), x.den()) == 1;
}

bool all_canonical(const BrauerClass& a) {
  for (const auto& x : a.all_invariants()) {
    if (!canonical(x)) return false;
  }
  for (const auto& x : a.arch()) {
    if (!canonical(x)) return false;
  }
  return true;
}

std::set<std::string> keys(const std::vector<BrauerClass>& members) {
  std::set<std::string> out;
  for (const auto& b : members) out.insert(describe(b));
  return out;
}

struct PlanCase {
  std::string entry;
  std::int64_t d;
  std::int64_t r;
};

// twin4 has two qualifying primes, so only (d, r) = (2, 2) fits there.
std::vector<PlanCase> theorem_cases() {
  std::vector<PlanCase> out{{"twin4", 2, 2}};
  for (std::int64_t d : {2, 3, 4}) {
    for (std::int64_t r : {d, 2 * d}) out.push_back({"twin8", d, r});
  }
  return out;
}

ConstructionPlan plan_for(const PlanCase& c) {
  const auto pair = load_catalog(c.entry);
  return make_plan(pair.source, pair.target, pair.bijection, c.d, c.r);
}

std::string criterion1(Checker& ck) {
  std::size_t n = 0;
  for (const auto& c : theorem_cases()) {
    const std::string tag = c.entry + " d=" + std::to_string(c.d) + " r=" + std::to_string(c.r);
    try {
      const auto plan = plan_for(c);
      const auto built = build_pair(plan);
      ck.expect(validate_class(built.source, plan.source).ok(), tag + ": A invalid");
      ck.expect(validate_class(built.target, plan.target).ok(), tag + ": A' invalid");
      for (const auto* a : {&built.source, &built.target}) {
        const auto cert = reciprocity_certificate(plan, *a);
        ck.expect(cert.recomputed.is_zero(), tag + ": recomputed sum " + cert.recomputed.str());
        ck.expect(cert.symbolic_num == c.r * plan.source.degree && cert.symbolic_den == c.d &&
                      cert.symbolic_num % cert.symbolic_den == 0 && cert.symbolic.is_zero(),
                  tag + ": symbolic r*n/d not integral");
        ck.expect(is_division(*a), tag + ": not a division class");
      }
      const auto f = fiber_description(built.source, plan.source);
      const auto g = fiber_description(built.target, plan.target);
      const auto cmp = compare(f, g);
      ck.expect(cmp.verdict == Verdict::Equal, tag + ": compare " + to_string(cmp.verdict));
      ck.expect(f.cardinality.kind != CardinalityKind::Empty, tag + ": empty fiber");
      const auto w = build_witness(plan, built.source);
      ck.expect(member(w, built.source, plan.source) && member(w, built.target, plan.target),
                tag + ": witness not in both fibers");
      ++n;
    } catch (const Error& e) {
      ck.expect(false, tag + ": " + e.what());
    }
  }
  return std::to_string(n) + " plans";
}

std::string criterion2(Checker& ck) {
  const auto rep = almost_equal_scenario();
  const ValueSet both{InvariantValue{}, make_invariant(1, 2)};
  const ValueSet zero{InvariantValue{}};
  ck.expect(rep.ramified_prime_source.values == both, "K at 2: " + format_values(rep.ramified_prime_source.values));
  ck.expect(rep.ramified_prime_target.values == zero, "K' at 2: " + format_values(rep.ramified_prime_target.values));
  ck.expect(rep.comparison.verdict == Verdict::Unequal, "verdict " + to_string(rep.comparison.verdict));
  std::size_t profiled_diffs = 0;
  bool at_two = false;
  for (const auto& w : rep.comparison.witness_differences) {
    if (w.location.rfind("q=", 0) == 0) {
      ++profiled_diffs;
      at_two = at_two || w.location == "q=2";
    }
  }
  ck.expect(profiled_diffs == 1 && at_two, "profiled witness differences are not exactly {q=2}");
  ck.expect(rep.comparison.intersection_cardinality.kind == CardinalityKind::Infinite,
            "intersection " + rep.comparison.intersection_cardinality.str());
  bool declared = false;
  for (const auto& c : rep.fiber.classes) declared = declared || (c.infinite && c.label == "all-f-even");
  ck.expect(declared, "no declared infinite all-f-even class");
  const bool ramified = !rep.ramified_member.at(2, 0).is_zero();
  ck.expect(ramified && member(rep.ramified_member, rep.pair.source, rep.plan.source) &&
                !member(rep.ramified_member, rep.pair.target, rep.plan.target),
            "2-ramified member does not separate the fibers");
  return "verdict " + to_string(rep.comparison.verdict) + ", intersection " +
         rep.comparison.intersection_cardinality.str() + ", K-only member " + describe(rep.ramified_member);
}

std::string criterion3_config(Checker& ck, std::int64_t d, std::int64_t bound, std::uint64_t seed) {
  gen::Rng rng(seed);
  std::size_t classes = 0, members = 0, nonempty = 0;
  for (const auto& entry : embedded_catalog_entries()) {
    const auto pair = load_catalog(entry);
    for (const auto* p : {&pair.source, &pair.target}) {
      // Every third class is moved off the image of restriction.
      const auto a = gen::over_profile(rng, *p, d, bound, classes % 3 == 2 ? 1.0 : 0.0);
      const auto f = fiber_description(a, *p, d);
      const auto mine = keys(enumerate(f, bound, kNoLimit));
      const auto brute = oracle::member_fiber(
          a, *p, d, bound, [](const BrauerClass& b, const BrauerClass& x, const FieldProfile& q) {
            return member(b, x, q);
          });
      ck.expect(mine == brute, p->name + " " + describe(a) + ": enumerate " + std::to_string(mine.size()) +
                                   " vs brute force " + std::to_string(brute.size()));
      ++classes;
      members += brute.size();
      nonempty += brute.empty() ? 0 : 1;
    }
  }
  return std::to_string(classes) + " classes, " + std::to_string(nonempty) + " non-empty, " +
         std::to_string(members) + " members";
}

std::string criterion4(Checker& ck) {
  gen::Rng rng(4);
  std::vector<CatalogPair> pairs;
  for (const auto& entry : embedded_catalog_entries()) pairs.push_back(load_catalog(entry));
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& pair = pairs[static_cast<std::size_t>(trial) % pairs.size()];
    const auto& p = rng.coin() ? pair.source : pair.target;
    const auto d = rng.pick(std::vector<std::int64_t>{2, 3, 4, 6, 8});
    const auto support = gen::covered_primes(p, 50);
    const auto b1 = gen::rational(rng, d, support);
    const auto b2 = gen::rational(rng, d, support);
    const auto lhs = restrict(tensor(b1, b2), p);
    const auto rhs = tensor(restrict(b1, p), restrict(b2, p));
    const std::string tag = "trial " + std::to_string(trial);
    ck.expect(lhs == rhs, tag + ": restriction is not multiplicative");
    ck.expect(all_canonical(lhs) && all_canonical(rhs) && all_canonical(b1), tag + ": non-canonical invariant");
    ck.expect(validate_class(lhs, p).ok(), tag + ": restriction invalid");

    const auto x = gen::invariant(rng, 64);
    const auto y = gen::invariant(rng, 64);
    const auto z = gen::invariant(rng, 64);
    const auto m = rng.uniform(0, 64);
    const auto n = rng.uniform(0, 64);
    ck.expect(add(x, y) == add(y, x), tag + ": add not commutative");
    ck.expect(add(add(x, y), z) == add(x, add(y, z)), tag + ": add not associative");
    ck.expect(add(x, InvariantValue{}) == x, tag + ": zero is not neutral");
    ck.expect(add(x, make_invariant(x.den() - x.num(), x.den())).is_zero(), tag + ": inverse law");
    ck.expect(scale(m, scale(n, x)) == scale(m * n, x), tag + ": scale composition");
    ck.expect(scale(order(x), x).is_zero(), tag + ": order does not annihilate");
    for (const auto& v : {add(x, y), scale(m, x), negate(x)}) ck.expect(canonical(v), tag + ": non-canonical");
  }
  return "1000 trials";
}

std::string criterion5(Checker& ck) {
  gen::Rng rng(5);
  std::vector<CatalogPair> pairs;
  for (const auto& entry : embedded_catalog_entries()) pairs.push_back(load_catalog(entry));
  std::size_t common = 0, unequal_pairs = 0, unequal_nonempty = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& pair = pairs[static_cast<std::size_t>(trial) % pairs.size()];
    const auto& p = trial % 2 == 0 ? pair.source : pair.target;
    const std::int64_t d = trial % 4 < 2 ? 2 : 3;
    const auto a1 = gen::over_profile(rng, p, d, 50);
    BrauerClass a2;
    switch (rng.uniform(0, 2)) {
      case 0: a2 = a1; break;
      case 1: a2 = gen::over_profile(rng, p, d, 50); break;
      default: a2 = tensor(a1, restrict(gen::rational(rng, d, gen::covered_primes(p, 50), 0.1), p)); break;
    }
    const std::string tag = "trial " + std::to_string(trial) + " " + p.name;
    const auto rep = same_field_rigidity_check(a1, a2, p, 50);
    ck.expect(rep.consistent, tag + ": common member but unequal classes");
    if (rep.common_member_found) {
      ++common;
      ck.expect(equal(a1, a2), tag + ": common member " + describe(*rep.witness) + " with unequal classes");
    }
    if (!equal(a1, a2)) {
      ++unequal_pairs;
      const auto f1 = keys(enumerate(fiber_description(a1, p, d), 50, kNoLimit));
      const auto f2 = keys(enumerate(fiber_description(a2, p, d), 50, kNoLimit));
      std::vector<std::string> shared;
      std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(shared));
      ck.expect(shared.empty(), tag + ": unequal classes share " + std::to_string(shared.size()) + " members");
      if (!f1.empty() && !f2.empty()) ++unequal_nonempty;
    }
  }
  ck.expect(common > 0 && unequal_nonempty > 0, "trials did not exercise both outcomes");
  return "100 pairs, " + std::to_string(common) + " with a common member, " + std::to_string(unequal_pairs) +
         " unequal (" + std::to_string(unequal_nonempty) + " with both fibers non-empty)";
}

std::string criterion6(Checker& ck) {
  std::size_t profiles = 0, witnesses = 0, cubic = 0;
  for (const auto& entry : embedded_catalog_entries()) {
    const auto pair = load_catalog(entry);
    for (const auto* p : {&pair.source, &pair.target}) {
      const auto g = archimedean_group(zero_class(*p, 2), *p);
      std::string expected;
      const auto part = [](const std::string& base, std::int64_t n) {
        return n == 1 ? base : base + "^" + std::to_string(n);
      };
      if (p->signature.real > 0) expected = part("SL(2,R)", p->signature.real);
      if (p->signature.complex > 0) {
        expected += (expected.empty() ? "" : " x ") + part("SL(2,C)", p->signature.complex);
      }
      ck.expect(g.r == p->signature.real && g.s == p->signature.complex && g.quaternionic == 0 &&
                    g.str() == expected,
                p->name + ": " + g.str() + " vs " + expected);
      ++profiles;
    }
  }
  for (const auto& c : theorem_cases()) {
    const auto plan = plan_for(c);
    const auto w = build_witness(plan, build_pair(plan).source);
    ck.expect(produces_arithmetic_subgroup(w), "witness " + describe(w) + " fails");
    ++witnesses;
  }
  oracle::for_each_valid_rational(3, 19, [&](const BrauerClass& b) {
    ck.expect(produces_arithmetic_subgroup(b), describe(b) + " fails");
    ++cubic;
  });
  gen::Rng rng(6);
  const auto support = oracle::primes_upto(200);
  for (int i = 0; i < 1000; ++i, ++cubic) {
    const auto b = gen::rational(rng, 3, support);
    ck.expect(produces_arithmetic_subgroup(b), describe(b) + " fails");
  }
  return std::to_string(profiles) + " profiles, " + std::to_string(witnesses) + " witnesses, " +
         std::to_string(cubic) + " degree-3 classes";
}

std::string criterion7(Checker& ck) {
  const auto pair = load_catalog("twin4");
  const auto plan = make_plan(pair.source, pair.target, pair.bijection, 2, 2);
  const auto built = build_pair(plan);
  const auto f = fiber_description(built.source, plan.source);
  std::size_t infinite_free = 0;
  for (const auto& c : f.classes) {
    const auto splitting = c.splitting_type;
    if (c.infinite && is_free_prime(splitting, 2)) ++infinite_free;
  }
  ck.expect(infinite_free == 1, "expected exactly one infinite free class, found " + std::to_string(infinite_free));
  const auto free = class_members(plan.source, "inert");
  ck.expect(free.size() >= 10, "inert class lists fewer than 10 primes");
  if (free.size() < 10) return "";

  std::vector<BrauerClass> members;
  auto current = build_witness(plan, built.source);
  for (std::size_t k = 1; k <= 5; ++k) {
    const std::vector<FreePrime> batch(free.begin() + static_cast<std::ptrdiff_t>(2 * k - 2),
                                       free.begin() + static_cast<std::ptrdiff_t>(2 * k));
    current = extend_witness(current, batch, 2);
    ck.expect(validate_class(current, rationals()).ok(), "batch " + std::to_string(k) + ": invalid");
    ck.expect(member(current, built.source, plan.source) && member(current, built.target, plan.target),
              "batch " + std::to_string(k) + ": not a member of both fibers");
    members.push_back(current);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ck.expect(!equal(members[i], members[j]), "members " + std::to_string(i) + " and " + std::to_string(j));
    }
  }
  const auto card = classify_cardinality(f);
  ck.expect(card.kind == CardinalityKind::Infinite, "cardinality " + card.str());
  return "5 pairwise unequal members, cardinality " + card.str();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "pairs with equal fibers over twin profiles", 1.0, criterion1},
      {2, "almost-equal scenario", 1.0, criterion2},
      {3, "enumeration vs brute force, d=2, bound 50", 30.0,
       [](Checker& ck) { return criterion3_config(ck, 2, 50, 32); }},
      {3, "enumeration vs brute force, d=3, bound 50", 30.0,
       [](Checker& ck) { return criterion3_config(ck, 3, 50, 33); }},
      {3, "enumeration vs brute force, d=2, bound 29", 30.0,
       [](Checker& ck) { return criterion3_config(ck, 2, 29, 34); }},
      {3, "enumeration vs brute force, d=3, bound 29", 30.0,
       [](Checker& ck) { return criterion3_config(ck, 3, 29, 35); }},
      {4, "homomorphism and group laws", 0.0, criterion4},
      {5, "same-field rigidity", 0.0, criterion5},
      {6, "archimedean classification", 0.0, criterion6},
      {7, "infinitely many witnesses", 0.0, criterion7},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Checker ck;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = c.body(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool late = c.budget_seconds > 0 && secs >= c.budget_seconds;
    const bool pass = !ck.failed() && !late;
    all = all && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << "criterion " << c.id << " [" << c.title << "]: " << (pass ? "PASS" : "FAIL") << " (" << detail
              << "; " << ck.checks() << " checks; " << timing;
    if (c.budget_seconds > 0) std::cout << " of " << c.budget_seconds << " s";
    std::cout << ")\n";
    for (const auto& f : ck.failures()) std::cout << "    " << f << "\n";
    if (late) std::cout << "    over time budget\n";
  }
  return all ? 0 : 1;
}
