#include "brauerlab/invariant.hpp"

#include <numeric>
#include <ostream>

#include "brauerlab/error.hpp"

namespace brauerlab {

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "product overflows 64 bits");
  }
  return out;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "sum overflows 64 bits");
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const InvariantValue& a, const InvariantValue& b) {
  // Both operands are below 1, so the cross products fit comfortably for
  // the denominators produced by this library; fall back to 128-bit anyway.
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string InvariantValue::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

InvariantValue make_invariant(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "invariant with denominator 0");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) {
      throw Error(ErrorCode::Overflow, "cannot negate INT64_MIN");
    }
    num = -num;
    den = -den;
  }
  std::int64_t r = num % den;
  if (r < 0) r += den;
  if (r == 0) return InvariantValue(0, 1);
  const std::int64_t g = std::gcd(r, den);
  return InvariantValue(r / g, den / g);
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  return mul_checked(a / g, b);
}

InvariantValue add(InvariantValue x, InvariantValue y) {
  const std::int64_t l = checked_lcm(x.den(), y.den());
  const std::int64_t a = mul_checked(x.num(), l / x.den());
  const std::int64_t b = mul_checked(y.num(), l / y.den());
  return make_invariant(add_checked(a, b), l);
}

InvariantValue negate(InvariantValue x) {
  return make_invariant(x.den() - x.num(), x.den());
}

InvariantValue scale(std::int64_t n, InvariantValue x) {
  if (n < 0) throw Error(ErrorCode::Overflow, "scale expects a non-negative multiplier");
  const std::int64_t reduced = n % x.den();
  return make_invariant(mul_checked(reduced, x.num()), x.den());
}

std::int64_t order(InvariantValue x) { return x.den(); }

bool order_divides(InvariantValue x, std::int64_t d) { return d > 0 && d % x.den() == 0; }

InvariantValue sum(std::span<const InvariantValue> values) {
  InvariantValue total;
  for (const auto& v : values) total = add(total, v);
  return total;
}

bool sum_is_integral(std::span<const InvariantValue> values) { return sum(values).is_zero(); }

std::vector<InvariantValue> multiples_of_inverse(std::int64_t d) {
  std::vector<InvariantValue> out;
  out.reserve(static_cast<std::size_t>(d));
  for (std::int64_t k = 0; k < d; ++k) out.push_back(make_invariant(k, d));
  return out;
}

std::ostream& operator<<(std::ostream& os, const InvariantValue& x) { return os << x.str(); }

}  // namespace brauerlab
