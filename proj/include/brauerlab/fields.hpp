#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauerlab/report.hpp"

namespace brauerlab {

/// One place over a rational prime q, known only by its ramification degree e
/// and inertial degree f. The local degree [K_w : Q_q] is e*f.
struct LocalPlace {
  std::int64_t e = 1;
  std::int64_t f = 1;

  std::int64_t local_degree() const { return e * f; }
  friend bool operator==(const LocalPlace&, const LocalPlace&) = default;
  friend auto operator<=>(const LocalPlace&, const LocalPlace&) = default;
};

struct PrimeDecomposition {
  std::int64_t q = 2;
  std::vector<LocalPlace> places;

  friend bool operator==(const PrimeDecomposition&, const PrimeDecomposition&) = default;
};

struct ArchSignature {
  std::int64_t real = 0;
  std::int64_t complex = 0;

  std::int64_t place_count() const { return real + complex; }
  friend bool operator==(const ArchSignature&, const ArchSignature&) = default;
};

/// A declared family of primes sharing one splitting type. `infinite` records
/// that the family is known to be infinite (a density statement taken as
/// input). `primes` lists known members; those primes are then covered by the
/// profile even though they are not individually profiled.
struct CebotarevClass {
  std::string label;
  bool infinite = false;
  std::vector<LocalPlace> splitting_type;
  std::vector<std::int64_t> primes;

  friend bool operator==(const CebotarevClass&, const CebotarevClass&) = default;
};

/// A number field seen only through local decomposition data.
///
/// Splitting data is known at a prime q when q is profiled (has a
/// PrimeDecomposition), when q is listed in a CebotarevClass, or trivially when
/// the degree is 1. Everywhere else it is unknown and operations that need it
/// raise rather than guess.
struct FieldProfile {
  std::string name;
  std::int64_t degree = 1;
  ArchSignature signature;
  std::vector<PrimeDecomposition> decompositions;
  std::vector<CebotarevClass> cebotarev_classes;
  /// Profiled primes with some place of e > 1, ascending.
  std::vector<std::int64_t> ramified_primes;
  /// False when the archimedean signature is a declared default rather than
  /// known data.
  bool signature_verified = true;

  const PrimeDecomposition* decomposition(std::int64_t q) const;
  bool is_profiled(std::int64_t q) const { return decomposition(q) != nullptr; }
  /// The class listing q as a known member, if any.
  const CebotarevClass* class_listing(std::int64_t q) const;
  const CebotarevClass* find_class(std::string_view label) const;
  /// Places over q in profile order, or nullopt when the splitting is unknown.
  std::optional<std::span<const LocalPlace>> places_over(std::int64_t q) const;
  bool is_covered(std::int64_t q) const { return places_over(q).has_value(); }
  bool is_ramified(std::int64_t q) const;
  std::vector<std::int64_t> profiled_primes() const;

  friend bool operator==(const FieldProfile&, const FieldProfile&) = default;
};

/// Builds a profile and derives ramified_primes from the decomposition data.
/// Decompositions are sorted by q.
FieldProfile make_profile(std::string name, std::int64_t degree, ArchSignature signature,
                          std::vector<PrimeDecomposition> decompositions,
                          std::vector<CebotarevClass> classes = {});

/// The profile of Q itself: degree 1, one real place.
const FieldProfile& rationals();
inline constexpr std::string_view kRationalsName = "Q";

bool is_prime(std::int64_t n);

Report validate_profile(const FieldProfile& profile);

/// [e*f] over the places above q. Consults class listings for primes that are
/// not individually profiled; throws Error(UnprofiledPrime) when neither knows q.
std::vector<std::int64_t> local_degrees(const FieldProfile& profile, std::int64_t q);

/// Certificate of a bijection between profiled places of two fields. For each
/// pairing, image[i] is the target place index matched with source place i.
struct PrimePairing {
  std::int64_t q = 2;
  std::vector<std::size_t> image;

  friend bool operator==(const PrimePairing&, const PrimePairing&) = default;
};

struct PlaceBijection {
  std::string source;
  std::string target;
  std::vector<PrimePairing> pairs;

  const PrimePairing* pairing(std::int64_t q) const;
  friend bool operator==(const PlaceBijection&, const PlaceBijection&) = default;
};

/// Pairs places in profile order at every prime profiled in both fields.
PlaceBijection profile_order_bijection(const FieldProfile& source, const FieldProfile& target);

/// Passes iff degrees and signatures agree and every matched pair of places
/// agrees in both e and f.
Report check_local_equivalence(const FieldProfile& source, const FieldProfile& target,
                               const PlaceBijection& phi);

/// Passes iff degrees agree and every matched pair agrees in f.
Report check_arithmetic_equivalence(const FieldProfile& source, const FieldProfile& target,
                                    const PlaceBijection& phi);

}  // namespace brauerlab
