#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerlab/brauer.hpp"
#include "brauerlab/fiber.hpp"
#include "brauerlab/fields.hpp"

namespace brauerlab {

/// Norm-one group of A at one archimedean place, by Wedderburn.
enum class ArchFactorKind { SL_d_R, SL_d_C, SL_halfd_H };

struct ArchFactor {
  ArchFactorKind kind = ArchFactorKind::SL_d_R;
  std::int64_t d = 2;

  friend bool operator==(const ArchFactor&, const ArchFactor&) = default;
};

/// Product of the archimedean factors, e.g. SL(d,R)^r x SL(d,C)^s.
struct GroupDescriptor {
  std::int64_t d = 2;
  std::vector<ArchFactor> factors;
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t quaternionic = 0;

  std::string str() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Complex places give SL(d,C), split real places SL(d,R), real places with
/// invariant 1/2 (d even) SL(d/2,H). Throws InconsistentArch for a ramified
/// real place when d is odd.
GroupDescriptor archimedean_group(const BrauerClass& a, const FieldProfile& profile);

/// A rational class yields an arithmetic subgroup only when it splits at the
/// real place of Q, which is automatic for odd degree.
bool produces_arithmetic_subgroup(const BrauerClass& b);

enum class Membership { Both, FirstOnly, SecondOnly };

/// A commensurability class of submanifolds N_B coming from a rational class B.
struct SubmanifoldClass {
  BrauerClass algebra;
  std::string label;
  GroupDescriptor descriptor;
  Membership membership = Membership::Both;
};

struct SubmanifoldReport {
  std::vector<SubmanifoldClass> classes;
  std::size_t shared = 0;
  std::size_t first_only = 0;
  std::size_t second_only = 0;
  /// Fiber members dropped because they ramify at the real place.
  std::size_t non_arithmetic = 0;
  GroupDescriptor ambient_first;
  GroupDescriptor ambient_second;
  std::vector<std::string> notes;
};

/// Rational members (support <= prime_bound) of either fiber that give
/// arithmetic subgroups, tagged by which fibers contain them.
SubmanifoldReport shared_submanifolds(const BrauerClass& a, const FieldProfile& profile,
                                      const BrauerClass& a_prime, const FieldProfile& profile_prime,
                                      std::int64_t d, std::int64_t prime_bound,
                                      std::size_t limit = kNoLimit);

std::string to_string(ArchFactorKind kind);
std::string to_string(Membership m);

}  // namespace brauerlab
