#include "brauerlab/brauer.hpp"

#include "brauerlab/error.hpp"

namespace brauerlab {

namespace {

const InvariantValue kHalf = make_invariant(1, 2);

}  // namespace

std::string PlaceId::str() const {
  if (archimedean) return "inf." + std::to_string(index);
  return std::to_string(q) + "." + std::to_string(index);
}

InvariantValue BrauerClass::at(std::int64_t q, std::size_t index) const {
  const auto it = finite_.find(PlaceKey{q, index});
  return it == finite_.end() ? InvariantValue{} : it->second;
}

void BrauerClass::set(std::int64_t q, std::size_t index, InvariantValue value) {
  if (value.is_zero()) {
    finite_.erase(PlaceKey{q, index});
  } else {
    finite_[PlaceKey{q, index}] = value;
  }
}

void BrauerClass::set_arch(std::size_t index, InvariantValue value) { arch_.at(index) = value; }

std::vector<InvariantValue> BrauerClass::all_invariants() const {
  std::vector<InvariantValue> out;
  out.reserve(finite_.size() + arch_.size());
  for (const auto& [key, v] : finite_) out.push_back(v);
  out.insert(out.end(), arch_.begin(), arch_.end());
  return out;
}

BrauerClass zero_class(const FieldProfile& profile, std::int64_t degree) {
  return BrauerClass(profile.name, degree, static_cast<std::size_t>(profile.signature.place_count()));
}

BrauerClass rational_class(std::int64_t degree, const std::map<std::int64_t, InvariantValue>& finite,
                           InvariantValue arch) {
  BrauerClass b(std::string(kRationalsName), degree, 1);
  for (const auto& [q, v] : finite) b.set(q, 0, v);
  b.set_arch(0, arch);
  return b;
}

Report validate_class(const BrauerClass& a, const FieldProfile& profile) {
  Report report;
  if (a.field() != profile.name) {
    report.fail("class is over " + a.field() + ", profile is " + profile.name);
    return report;
  }
  const std::int64_t d = a.degree();
  if (d < 1 || d > kMaxDegree) {
    report.fail("degree " + std::to_string(d) + " outside [1, " + std::to_string(kMaxDegree) + "]");
    return report;
  }
  for (const auto& [key, v] : a.finite()) {
    const std::string where = "place " + std::to_string(key.q) + "." + std::to_string(key.index);
    const auto places = profile.places_over(key.q);
    if (!places) {
      report.fail(where + ": prime not covered by profile " + profile.name);
    } else if (key.index >= places->size()) {
      report.fail(where + ": only " + std::to_string(places->size()) + " places over " +
                  std::to_string(key.q));
    }
    if (!order_divides(v, d)) {
      report.fail(where + ": invariant " + v.str() + " has order not dividing " + std::to_string(d));
    }
  }
  const auto& sig = profile.signature;
  if (static_cast<std::int64_t>(a.arch().size()) != sig.place_count()) {
    report.fail("expected " + std::to_string(sig.place_count()) + " archimedean entries, got " +
                std::to_string(a.arch().size()));
  } else {
    for (std::size_t i = 0; i < a.arch().size(); ++i) {
      const auto& v = a.arch()[i];
      const bool real = static_cast<std::int64_t>(i) < sig.real;
      const std::string where = std::string(real ? "real" : "complex") + " place inf." + std::to_string(i);
      if (real && !(v.is_zero() || v == kHalf)) report.fail(where + ": invariant " + v.str() + " not in {0, 1/2}");
      if (!real && !v.is_zero()) report.fail(where + ": invariant " + v.str() + " must be 0");
      if (!order_divides(v, d)) {
        report.fail(where + ": invariant " + v.str() + " has order not dividing " + std::to_string(d));
      }
    }
  }
  const auto total = sum(a.all_invariants());
  if (!total.is_zero()) {
    report.fail("condition (b): invariants sum to " + total.str() + ", not 0 mod Z");
  }
  return report;
}

std::vector<PlaceId> ramification_set(const BrauerClass& a) {
  std::vector<PlaceId> out;
  for (const auto& [key, v] : a.finite()) out.push_back(PlaceId{false, key.q, key.index});
  for (std::size_t i = 0; i < a.arch().size(); ++i) {
    if (!a.arch()[i].is_zero()) out.push_back(PlaceId{true, 0, i});
  }
  return out;
}

BrauerClass restrict(const BrauerClass& b, const FieldProfile& profile) {
  if (b.field() != kRationalsName) {
    throw Error(ErrorCode::FieldMismatch, "restriction expects a class over Q, got " + b.field());
  }
  if (b.arch().size() != 1) {
    throw Error(ErrorCode::FieldMismatch, "a class over Q has exactly one archimedean place");
  }
  BrauerClass out = zero_class(profile, b.degree());
  for (const auto& [key, v] : b.finite()) {
    if (key.index != 0) {
      throw Error(ErrorCode::FieldMismatch,
                  "a class over Q has one place over " + std::to_string(key.q));
    }
    const auto places = profile.places_over(key.q);
    if (!places) {
      throw Error(ErrorCode::ProfileGap, "splitting of " + std::to_string(key.q) + " in " +
                                             profile.name + " is unknown");
    }
    for (std::size_t i = 0; i < places->size(); ++i) {
      out.set(key.q, i, scale((*places)[i].local_degree(), v));
    }
  }
  const auto inf = b.arch()[0];
  const auto& sig = profile.signature;
  for (std::int64_t i = 0; i < sig.real; ++i) out.set_arch(static_cast<std::size_t>(i), inf);
  for (std::int64_t j = 0; j < sig.complex; ++j) {
    out.set_arch(static_cast<std::size_t>(sig.real + j), scale(2, inf));
  }
  return out;
}

BrauerClass tensor(const BrauerClass& a1, const BrauerClass& a2) {
  if (a1.field() != a2.field() || a1.arch().size() != a2.arch().size()) {
    throw Error(ErrorCode::FieldMismatch, a1.field() + " vs " + a2.field());
  }
  if (a1.degree() != a2.degree()) {
    throw Error(ErrorCode::DegreeMismatch,
                std::to_string(a1.degree()) + " vs " + std::to_string(a2.degree()));
  }
  BrauerClass out = a1;
  for (const auto& [key, v] : a2.finite()) out.set(key.q, key.index, add(out.at(key.q, key.index), v));
  for (std::size_t i = 0; i < a2.arch().size(); ++i) out.set_arch(i, add(a1.arch()[i], a2.arch()[i]));
  return out;
}

std::int64_t index(const BrauerClass& a) {
  std::int64_t l = 1;
  for (const auto& v : a.all_invariants()) l = checked_lcm(l, order(v));
  return l;
}

bool is_division(const BrauerClass& a) { return index(a) == a.degree(); }

bool equal(const BrauerClass& a1, const BrauerClass& a2) {
  if (a1.field() != a2.field()) throw Error(ErrorCode::FieldMismatch, a1.field() + " vs " + a2.field());
  return a1.finite() == a2.finite() && a1.arch() == a2.arch();
}

std::string describe(const BrauerClass& a) {
  std::string out = a.field() + "[d=" + std::to_string(a.degree()) + ";";
  bool first = true;
  for (const auto& [key, v] : a.finite()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(key.q) + "." + std::to_string(key.index) + ":" + v.str();
  }
  out += ";inf:";
  for (std::size_t i = 0; i < a.arch().size(); ++i) {
    if (i > 0) out += ",";
    out += a.arch()[i].str();
  }
  return out + "]";
}

}  // namespace brauerlab
