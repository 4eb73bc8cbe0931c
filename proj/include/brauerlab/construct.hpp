#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauerlab/brauer.hpp"
#include "brauerlab/fiber.hpp"
#include "brauerlab/fields.hpp"

namespace brauerlab {

/// A prime q_j of the construction with the index of a place of local degree 1.
struct PlannedPrime {
  std::int64_t q = 2;
  std::size_t place = 0;

  friend bool operator==(const PlannedPrime&, const PlannedPrime&) = default;
};

struct ConstructionPlan {
  FieldProfile source;
  FieldProfile target;
  PlaceBijection bijection;
  std::vector<PlannedPrime> primes;
  std::int64_t d = 2;

  std::int64_t r() const { return static_cast<std::int64_t>(primes.size()); }
};

/// The first r profiled, unramified primes (ascending) that have a place with
/// e = f = 1, each with its lowest such place. Throws DegreeConstraint unless
/// r is a positive multiple of d, InsufficientPrimes if too few qualify.
std::vector<PlannedPrime> select_prime_tuple(const FieldProfile& profile, std::int64_t d,
                                             std::int64_t r);

ConstructionPlan make_plan(const FieldProfile& source, const FieldProfile& target,
                           const PlaceBijection& bijection, std::int64_t d, std::int64_t r);

/// How much of the bijection must preserve (e, f) before invariants are
/// transported. ArithmeticAtPlanPrimes accepts an f-preserving bijection that
/// is (e, f)-preserving over the plan primes only, which is what a pair of
/// arithmetically equivalent fields offers away from the ramified primes.
enum class TransportPolicy { LocalEquivalence, ArithmeticAtPlanPrimes };

struct AlgebraPair {
  BrauerClass source;
  BrauerClass target;
};

/// Builds A over the source with 1/d at each designated place, [K_w:Q_q]/d at
/// the other places over each q_j and 0 elsewhere, then A' over the target by
/// Inv_{phi(w)}(A') = Inv_w(A).
AlgebraPair build_pair(const ConstructionPlan& plan,
                       TransportPolicy policy = TransportPolicy::LocalEquivalence);

struct ReciprocityCertificate {
  InvariantValue recomputed;      // exact sum of all invariants of A
  std::int64_t symbolic_num = 0;  // r * n
  std::int64_t symbolic_den = 1;  // d
  InvariantValue symbolic;        // r * n / d mod 1
};

/// Throws CertificateMismatch if the recomputed sum differs from r*n/d mod 1.
ReciprocityCertificate reciprocity_certificate(const ConstructionPlan& plan, const BrauerClass& a);

/// The rational class with 1/d at each q_j and 0 elsewhere. `a` may be either
/// side of the pair; membership in its fiber is verified.
BrauerClass build_witness(const ConstructionPlan& plan, const BrauerClass& a);

struct FreePrime {
  std::int64_t q = 2;
  std::vector<LocalPlace> splitting;
};

/// Adds 1/d at each free prime. Requires d | r' (r' = number of free primes)
/// and every splitting to be free for d.
BrauerClass extend_witness(const BrauerClass& b, std::span<const FreePrime> free_primes,
                           std::int64_t d);

/// Listed members of a class, paired with its splitting type.
std::vector<FreePrime> class_members(const FieldProfile& profile, std::string_view label);

struct ScenarioOptions {
  /// Support bound for enumeration and the brute-force cross-check.
  std::int64_t prime_bound = 30;
  /// Overrides for the perlis8 catalog entry.
  std::optional<FieldProfile> source;
  std::optional<FieldProfile> target;
  std::optional<PlaceBijection> bijection;
};

struct ScenarioReport {
  std::string name;
  std::vector<std::string> transcript;
  std::vector<std::string> notes;
  ConstructionPlan plan;
  AlgebraPair pair;
  ReciprocityCertificate certificate;
  ReciprocityCertificate certificate_target;
  FiberDescription fiber;
  FiberDescription fiber_target;
  AdmissibleSet ramified_prime_source;
  AdmissibleSet ramified_prime_target;
  ComparisonResult comparison;
  BrauerClass witness;
  BrauerClass ramified_member;
  bool ramified_member_in_source = false;
  bool ramified_member_in_target = false;
  std::size_t ramified_members_enumerated = 0;
  std::size_t ramified_members_brute_force = 0;
};

/// Degree-8 arithmetically equivalent pair differing over 2: builds A, A'
/// over unramified primes, solves both fibers and checks that they differ
/// exactly at 2 while sharing infinitely many members. Throws
/// ScenarioFailure if any recomputed fact disagrees with that outcome.
ScenarioReport almost_equal_scenario(const ScenarioOptions& options = {});

struct RigidityReport {
  bool common_member_found = false;
  std::optional<BrauerClass> witness;
  bool classes_equal = false;
  std::size_t members_checked = 0;
  /// False only if a common member exists while the classes differ.
  bool consistent = true;
};

/// Searches the fiber of a1 (support <= prime_bound) for a member of the
/// fiber of a2 over the same profile.
RigidityReport same_field_rigidity_check(const BrauerClass& a1, const BrauerClass& a2,
                                         const FieldProfile& profile, std::int64_t prime_bound,
                                         std::size_t limit = kNoLimit);

}  // namespace brauerlab
