#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "brauerlab/brauer.hpp"
#include "brauerlab/fields.hpp"
#include "brauerlab/invariant.hpp"

namespace brauerlab {

/// Location value standing for the archimedean place of Q.
inline constexpr std::int64_t kArchimedean = 0;

using ValueSet = std::vector<InvariantValue>;  // sorted, duplicate free

/// Candidate values of Inv_q(B) for rational B restricting to A at every
/// place over q.
struct AdmissibleSet {
  std::int64_t q = kArchimedean;
  ValueSet values;

  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;
};

AdmissibleSet admissible_set(const BrauerClass& a, const FieldProfile& profile, std::int64_t q,
                             std::int64_t d);
inline AdmissibleSet admissible_set(const BrauerClass& a, const FieldProfile& profile,
                                    std::int64_t q) {
  return admissible_set(a, profile, q, a.degree());
}

/// The local equations over q admit a common solution of order dividing d.
bool compatibility(const BrauerClass& a, const FieldProfile& profile, std::int64_t q);

/// d divides every local degree e*f, so any invariant of order dividing d
/// restricts to zero at each place.
bool is_free_prime(std::span<const LocalPlace> splitting, std::int64_t d);

enum class CardinalityKind { Empty, Finite, Infinite, Unknown };

struct Cardinality {
  CardinalityKind kind = CardinalityKind::Unknown;
  /// For Finite: number of members, and the subcount that are division algebras.
  std::uint64_t count = 0;
  std::uint64_t division_count = 0;

  std::string str() const;
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

/// Admissible values at the primes of one Cebotarev class, with A unramified
/// there.
struct ClassEntry {
  std::string label;
  bool infinite = false;
  std::vector<LocalPlace> splitting_type;
  std::vector<std::int64_t> primes;
  ValueSet values;

  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

/// Symbolic description of the fiber of Res_{K/Q} over A: a rational class B
/// is a member iff it picks, at every prime, a value from the set governing
/// that prime (0 at primes outside all sets), an archimedean value from
/// `arch`, and its values sum to 0 in Q/Z.
struct FiberDescription {
  std::string algebra;
  std::int64_t d = 1;
  std::map<std::int64_t, ValueSet> profiled;
  ValueSet arch;
  std::vector<ClassEntry> classes;
  Cardinality cardinality;
  std::vector<std::string> notes;

  /// Set governing q: profiled set, else the set of the class listing q.
  const ValueSet* values_at(std::int64_t q) const;
  friend bool operator==(const FiberDescription&, const FiberDescription&) = default;
};

FiberDescription fiber_description(const BrauerClass& a, const FieldProfile& profile, std::int64_t d);
inline FiberDescription fiber_description(const BrauerClass& a, const FieldProfile& profile) {
  return fiber_description(a, profile, a.degree());
}

/// EMPTY when no selection can satisfy reciprocity, even after absorbing the
/// residue with values from infinite classes. INFINITE when a selection
/// exists and some infinite class admits a nonzero value v (order(v) primes
/// carrying v can always be added without changing the sum). UNKNOWN when a
/// finite class of unlisted primes admits nonzero values. FINITE otherwise,
/// with exact counts over the profiled, archimedean and listed slots.
Cardinality classify_cardinality(const FiberDescription& fiber);

enum class Verdict { Equal, Unequal };

struct WitnessDifference {
  std::string location;
  ValueSet first;
  ValueSet second;

  friend bool operator==(const WitnessDifference&, const WitnessDifference&) = default;
};

struct ComparisonResult {
  Verdict verdict = Verdict::Equal;
  Cardinality intersection_cardinality;
  FiberDescription intersection;
  std::vector<WitnessDifference> witness_differences;
};

ComparisonResult compare(const FiberDescription& f1, const FiberDescription& f2);

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Every member supported on primes <= prime_bound, up to `limit`, ordered by
/// the archimedean value and then lexicographically by ascending prime.
/// Throws Error(CoverageGap) if some prime <= prime_bound has no governing set.
std::vector<BrauerClass> enumerate(const FiberDescription& fiber, std::int64_t prime_bound,
                                   std::size_t limit = kNoLimit);

/// restrict(B, P) equals A.
bool member(const BrauerClass& b, const BrauerClass& a, const FieldProfile& profile);

std::string to_string(Verdict v);
std::string to_string(CardinalityKind k);
std::string format_values(const ValueSet& values);

}  // namespace brauerlab
