#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brauerlab/fields.hpp"
#include "brauerlab/invariant.hpp"
#include "brauerlab/report.hpp"

namespace brauerlab {

/// A finite place: rational prime q and the index of a place over q in the
/// profile's order.
struct PlaceKey {
  std::int64_t q = 2;
  std::size_t index = 0;

  friend bool operator==(const PlaceKey&, const PlaceKey&) = default;
  friend auto operator<=>(const PlaceKey&, const PlaceKey&) = default;
};

/// Identifies any place of a field: finite places by (q, index), archimedean
/// places by their position in the arch list (real places first).
struct PlaceId {
  bool archimedean = false;
  std::int64_t q = 0;
  std::size_t index = 0;

  std::string str() const;
  friend bool operator==(const PlaceId&, const PlaceId&) = default;
};

/// A degree-d central simple algebra over a profiled field, recorded by its
/// local invariants. Zero finite invariants are never stored, so two classes
/// with the same invariants compare equal structurally.
class BrauerClass {
 public:
  BrauerClass() = default;
  BrauerClass(std::string field, std::int64_t degree, std::size_t arch_places)
      : field_(std::move(field)), degree_(degree), arch_(arch_places) {}

  const std::string& field() const { return field_; }
  std::int64_t degree() const { return degree_; }
  const std::map<PlaceKey, InvariantValue>& finite() const { return finite_; }
  const std::vector<InvariantValue>& arch() const { return arch_; }

  InvariantValue at(std::int64_t q, std::size_t index) const;
  void set(std::int64_t q, std::size_t index, InvariantValue value);
  void set_arch(std::size_t index, InvariantValue value);

  /// Every stored invariant, finite entries first.
  std::vector<InvariantValue> all_invariants() const;

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

 private:
  std::string field_;
  std::int64_t degree_ = 1;
  std::map<PlaceKey, InvariantValue> finite_;
  std::vector<InvariantValue> arch_;
};

/// The matrix algebra Mat(d, K): every invariant zero.
BrauerClass zero_class(const FieldProfile& profile, std::int64_t degree);

/// A rational class of degree d with the given finite invariants (one place per
/// prime) and real-place invariant.
BrauerClass rational_class(std::int64_t degree,
                           const std::map<std::int64_t, InvariantValue>& finite,
                           InvariantValue arch = {});

/// Checks finite support on covered places, the reciprocity sum, the
/// archimedean value groups and that every order divides the degree.
Report validate_class(const BrauerClass& a, const FieldProfile& profile);

/// Places with nonzero invariant, finite places first in key order.
std::vector<PlaceId> ramification_set(const BrauerClass& a);

/// B (over Q) tensored up to the profiled field: each place w over q gets
/// [K_w:Q_q] * Inv_q(B). Throws Error(ProfileGap) when B is ramified at a
/// prime whose splitting the profile does not know.
BrauerClass restrict(const BrauerClass& b, const FieldProfile& profile);

/// Pointwise sum of invariants. Throws FieldMismatch or DegreeMismatch.
BrauerClass tensor(const BrauerClass& a1, const BrauerClass& a2);

/// lcm of the orders of all local invariants.
std::int64_t index(const BrauerClass& a);
bool is_division(const BrauerClass& a);

/// Identical local invariants, i.e. the same Brauer class; the recorded
/// degrees may differ. Throws FieldMismatch across fields.
bool equal(const BrauerClass& a1, const BrauerClass& a2);

/// Compact canonical label built from the invariant data.
std::string describe(const BrauerClass& a);

}  // namespace brauerlab
