#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace brauerlab {

/// Largest algebra degree the library accepts. Every invariant handled here
/// has order dividing some degree <= kMaxDegree, so 64-bit fractions with
/// overflow checks stay exact.
inline constexpr std::int64_t kMaxDegree = 64;

/// An element of Q/Z held as a reduced fraction num/den with 0 <= num < den.
/// Zero is 0/1. Instances are only produced in canonical form.
class InvariantValue {
 public:
  constexpr InvariantValue() = default;

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
  // Orders by the rational value in [0, 1).
  friend std::strong_ordering operator<=>(const InvariantValue& a, const InvariantValue& b);

  std::string str() const;

 private:
  friend InvariantValue make_invariant(std::int64_t num, std::int64_t den);
  constexpr InvariantValue(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Reduces num/den modulo 1 into canonical form. Negative numerators wrap.
/// Throws Error(ZeroDenominator) for den == 0; a negative den flips both signs.
InvariantValue make_invariant(std::int64_t num, std::int64_t den);

InvariantValue add(InvariantValue x, InvariantValue y);
InvariantValue negate(InvariantValue x);
/// n * x mod 1 for n >= 0. Never overflows since n is reduced mod den first.
InvariantValue scale(std::int64_t n, InvariantValue x);
/// Order of x in Q/Z, i.e. its canonical denominator.
std::int64_t order(InvariantValue x);
bool sum_is_integral(std::span<const InvariantValue> values);
InvariantValue sum(std::span<const InvariantValue> values);

/// True iff order(x) divides d.
bool order_divides(InvariantValue x, std::int64_t d);

/// All k/d mod 1 for 0 <= k < d, in increasing order.
std::vector<InvariantValue> multiples_of_inverse(std::int64_t d);

std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

std::ostream& operator<<(std::ostream& os, const InvariantValue& x);

}  // namespace brauerlab
