#include "brauerlab/fiber.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "brauerlab/error.hpp"

namespace brauerlab {

namespace {

const InvariantValue kHalf = make_invariant(1, 2);

void require_degree(std::int64_t d) {
  if (d < 1 || d > kMaxDegree) {
    throw Error(ErrorCode::DegreeMismatch,
                "degree " + std::to_string(d) + " outside [1, " + std::to_string(kMaxDegree) + "]");
  }
}

// x in Z/d for a value whose order divides d.
std::int64_t residue(InvariantValue v, std::int64_t d) { return v.num() * (d / v.den()); }

using Mask = std::uint64_t;

Mask shift_mod(Mask m, std::int64_t r, std::int64_t d) {
  Mask out = 0;
  for (std::int64_t s = 0; s < d; ++s) {
    if (m & (Mask{1} << s)) out |= Mask{1} << ((s + r) % d);
  }
  return out;
}

Mask sums_reachable(const std::vector<const ValueSet*>& slots, std::int64_t d) {
  Mask reach = 1;
  for (const auto* slot : slots) {
    Mask next = 0;
    for (const auto& v : *slot) next |= shift_mod(reach, residue(v, d), d);
    reach = next;
  }
  return reach;
}

std::uint64_t add_count(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "fiber count overflows");
  return out;
}

ValueSet intersect(const ValueSet& a, const ValueSet& b) {
  ValueSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::int64_t> degree_key(const std::vector<LocalPlace>& splitting) {
  std::vector<std::int64_t> out;
  for (const auto& p : splitting) out.push_back(p.local_degree());
  std::sort(out.begin(), out.end());
  return out;
}

ValueSet unramified_class_values(std::span<const LocalPlace> splitting, std::int64_t d) {
  ValueSet out;
  for (const auto& x : multiples_of_inverse(d)) {
    const bool ok = std::all_of(splitting.begin(), splitting.end(), [&](const LocalPlace& p) {
      return scale(p.local_degree(), x).is_zero();
    });
    if (ok) out.push_back(x);
  }
  return out;
}

std::map<std::int64_t, const ValueSet*> coverage(const FiberDescription& f) {
  std::map<std::int64_t, const ValueSet*> out;
  for (const auto& [q, values] : f.profiled) out[q] = &values;
  for (const auto& c : f.classes) {
    for (std::int64_t q : c.primes) out.emplace(q, &c.values);
  }
  return out;
}

}  // namespace

std::string to_string(CardinalityKind k) {
  switch (k) {
    case CardinalityKind::Empty: return "EMPTY";
    case CardinalityKind::Finite: return "FINITE";
    case CardinalityKind::Infinite: return "INFINITE";
    case CardinalityKind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Verdict v) { return v == Verdict::Equal ? "EQUAL" : "UNEQUAL"; }

std::string Cardinality::str() const {
  if (kind == CardinalityKind::Finite) return "FINITE(" + std::to_string(count) + ")";
  return to_string(kind);
}

std::string format_values(const ValueSet& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].str();
  }
  return out + "}";
}

const ValueSet* FiberDescription::values_at(std::int64_t q) const {
  if (const auto it = profiled.find(q); it != profiled.end()) return &it->second;
  for (const auto& c : classes) {
    if (std::find(c.primes.begin(), c.primes.end(), q) != c.primes.end()) return &c.values;
  }
  return nullptr;
}

AdmissibleSet admissible_set(const BrauerClass& a, const FieldProfile& profile, std::int64_t q,
                             std::int64_t d) {
  require_degree(d);
  AdmissibleSet out{q, {}};
  if (q == kArchimedean) {
    const auto& sig = profile.signature;
    if (static_cast<std::int64_t>(a.arch().size()) != sig.place_count()) {
      throw Error(ErrorCode::FieldMismatch, "archimedean data does not match " + profile.name);
    }
    for (const auto& x : multiples_of_inverse(d)) {
      // Br(R) = Z/2: the rational archimedean invariant is 0 or 1/2.
      if (!(x.is_zero() || x == kHalf)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < a.arch().size() && ok; ++i) {
        const std::int64_t local = static_cast<std::int64_t>(i) < sig.real ? 1 : 2;
        ok = scale(local, x) == a.arch()[i];
      }
      if (ok) out.values.push_back(x);
    }
    return out;
  }
  const auto places = profile.places_over(q);
  if (!places) {
    throw Error(ErrorCode::UnprofiledPrime,
                "prime " + std::to_string(q) + " is not profiled in " + profile.name);
  }
  for (const auto& x : multiples_of_inverse(d)) {
    bool ok = true;
    for (std::size_t i = 0; i < places->size() && ok; ++i) {
      ok = scale((*places)[i].local_degree(), x) == a.at(q, i);
    }
    if (ok) out.values.push_back(x);
  }
  return out;
}

bool compatibility(const BrauerClass& a, const FieldProfile& profile, std::int64_t q) {
  return !admissible_set(a, profile, q).values.empty();
}

bool is_free_prime(std::span<const LocalPlace> splitting, std::int64_t d) {
  return std::all_of(splitting.begin(), splitting.end(),
                     [d](const LocalPlace& p) { return p.local_degree() % d == 0; });
}

FiberDescription fiber_description(const BrauerClass& a, const FieldProfile& profile, std::int64_t d) {
  require_degree(d);
  if (a.field() != profile.name) {
    throw Error(ErrorCode::FieldMismatch, "class is over " + a.field() + ", profile is " + profile.name);
  }
  FiberDescription f;
  f.algebra = describe(a);
  f.d = d;
  for (const auto& dec : profile.decompositions) {
    f.profiled[dec.q] = admissible_set(a, profile, dec.q, d).values;
  }
  // A ramified at a class-listed prime gets that prime solved explicitly.
  std::set<std::int64_t> promoted;
  for (const auto& [key, v] : a.finite()) {
    if (!profile.is_profiled(key.q) && promoted.insert(key.q).second) {
      f.profiled[key.q] = admissible_set(a, profile, key.q, d).values;
    }
  }
  f.arch = admissible_set(a, profile, kArchimedean, d).values;
  for (const auto& c : profile.cebotarev_classes) {
    ClassEntry entry{c.label, c.infinite, c.splitting_type, {}, unramified_class_values(c.splitting_type, d)};
    for (std::int64_t q : c.primes) {
      if (promoted.count(q) == 0) entry.primes.push_back(q);
    }
    std::sort(entry.primes.begin(), entry.primes.end());
    f.classes.push_back(std::move(entry));
  }
  f.cardinality = classify_cardinality(f);
  if (f.cardinality.kind == CardinalityKind::Infinite && d != 2) {
    f.notes.push_back("INFINITE for d = " + std::to_string(d) +
                      " relies on balancing free primes in batches of order(v); established only for d = 2");
  }
  return f;
}

Cardinality classify_cardinality(const FiberDescription& fiber) {
  const std::int64_t d = fiber.d;
  require_degree(d);
  if (fiber.arch.empty()) return {CardinalityKind::Empty};
  for (const auto& [q, values] : fiber.profiled) {
    if (values.empty()) return {CardinalityKind::Empty};
  }

  // Finite slots: the archimedean place, profiled primes, and listed primes of
  // finite classes. Infinite classes generate a subgroup g*Z/dZ that can
  // absorb any residue divisible by g.
  std::vector<const ValueSet*> slots{&fiber.arch};
  for (const auto& [q, values] : fiber.profiled) slots.push_back(&values);
  std::int64_t g = d;
  bool unbounded_nonzero = false;
  bool unknown = false;
  for (const auto& c : fiber.classes) {
    const bool has_nonzero = std::any_of(c.values.begin(), c.values.end(),
                                         [](const InvariantValue& v) { return !v.is_zero(); });
    if (c.infinite) {
      for (const auto& v : c.values) {
        if (v.is_zero()) continue;
        g = std::gcd(g, residue(v, d));
        if (scale(order(v), v).is_zero()) unbounded_nonzero = true;
      }
    } else {
      for (std::size_t i = 0; i < c.primes.size(); ++i) slots.push_back(&c.values);
      if (has_nonzero && c.primes.empty()) unknown = true;
    }
  }

  const Mask reach = sums_reachable(slots, d);
  bool feasible = false;
  for (std::int64_t s = 0; s < d; s += g) feasible = feasible || (reach & (Mask{1} << s));
  if (!feasible) return {CardinalityKind::Empty};
  if (unbounded_nonzero) return {CardinalityKind::Infinite};
  if (unknown) return {CardinalityKind::Unknown};

  // Exact counts keyed by (sum residue, lcm of orders so far).
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> counts{{{0, 1}, 1}};
  for (const auto* slot : slots) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> next;
    for (const auto& [state, n] : counts) {
      for (const auto& v : *slot) {
        const std::pair<std::int64_t, std::int64_t> key{(state.first + residue(v, d)) % d,
                                                        std::lcm(state.second, order(v))};
        next[key] = add_count(next[key], n);
      }
    }
    counts = std::move(next);
  }
  Cardinality out{CardinalityKind::Finite};
  for (const auto& [state, n] : counts) {
    if (state.first != 0) continue;
    out.count = add_count(out.count, n);
    if (state.second == d) out.division_count = add_count(out.division_count, n);
  }
  return out;
}

ComparisonResult compare(const FiberDescription& f1, const FiberDescription& f2) {
  if (f1.d != f2.d) {
    throw Error(ErrorCode::DegreeMismatch, std::to_string(f1.d) + " vs " + std::to_string(f2.d));
  }
  ComparisonResult result;
  FiberDescription& meet = result.intersection;
  meet.algebra = f1.algebra + " & " + f2.algebra;
  meet.d = f1.d;

  const auto cov1 = coverage(f1);
  const auto cov2 = coverage(f2);
  std::set<std::int64_t> primes;
  for (const auto& [q, s] : cov1) primes.insert(q);
  for (const auto& [q, s] : cov2) primes.insert(q);
  for (std::int64_t q : primes) {
    const auto it1 = cov1.find(q);
    const auto it2 = cov2.find(q);
    if (it1 == cov1.end() || it2 == cov2.end()) {
      throw Error(ErrorCode::IncomparableProfiles,
                  "prime " + std::to_string(q) + " is covered by only one fiber description");
    }
    const ValueSet& s1 = *it1->second;
    const ValueSet& s2 = *it2->second;
    if (s1 != s2) result.witness_differences.push_back({"q=" + std::to_string(q), s1, s2});
    meet.profiled[q] = intersect(s1, s2);
  }
  if (f1.arch != f2.arch) result.witness_differences.push_back({"inf", f1.arch, f2.arch});
  meet.arch = intersect(f1.arch, f2.arch);

  const ValueSet zero_only{InvariantValue{}};
  std::vector<bool> matched2(f2.classes.size(), false);
  for (const auto& c1 : f1.classes) {
    const auto key = degree_key(c1.splitting_type);
    bool found = false;
    for (std::size_t j = 0; j < f2.classes.size(); ++j) {
      const auto& c2 = f2.classes[j];
      if (degree_key(c2.splitting_type) != key) continue;
      found = true;
      matched2[j] = true;
      if (c1.values != c2.values) {
        result.witness_differences.push_back({"class " + c1.label, c1.values, c2.values});
      }
      const std::string label = c1.label == c2.label ? c1.label : c1.label + "|" + c2.label;
      meet.classes.push_back({label, c1.infinite && c2.infinite, c1.splitting_type, {},
                              intersect(c1.values, c2.values)});
      break;
    }
    if (!found && c1.values != zero_only) {
      result.witness_differences.push_back({"class " + c1.label, c1.values, {}});
    }
  }
  for (std::size_t j = 0; j < f2.classes.size(); ++j) {
    if (!matched2[j] && f2.classes[j].values != zero_only) {
      result.witness_differences.push_back({"class " + f2.classes[j].label, {}, f2.classes[j].values});
    }
  }

  meet.cardinality = classify_cardinality(meet);
  result.intersection_cardinality = meet.cardinality;
  result.verdict = result.witness_differences.empty() ? Verdict::Equal : Verdict::Unequal;
  return result;
}

std::vector<BrauerClass> enumerate(const FiberDescription& fiber, std::int64_t prime_bound,
                                   std::size_t limit) {
  const std::int64_t d = fiber.d;
  require_degree(d);
  std::vector<BrauerClass> out;
  if (limit == 0 || fiber.cardinality.kind == CardinalityKind::Empty) return out;

  // Profiled primes beyond the bound must carry 0.
  for (const auto& [q, values] : fiber.profiled) {
    if (q > prime_bound && std::find(values.begin(), values.end(), InvariantValue{}) == values.end()) {
      return out;
    }
  }

  std::vector<std::int64_t> primes;
  std::vector<const ValueSet*> slots{&fiber.arch};
  for (std::int64_t q = 2; q <= prime_bound; ++q) {
    if (!is_prime(q)) continue;
    const ValueSet* values = fiber.values_at(q);
    if (values == nullptr) {
      throw Error(ErrorCode::CoverageGap,
                  "prime " + std::to_string(q) + " <= " + std::to_string(prime_bound) + " is not covered");
    }
    primes.push_back(q);
    slots.push_back(values);
  }

  // suffix[i]: residues reachable using slots i.. onward.
  std::vector<Mask> suffix(slots.size() + 1, 1);
  for (std::size_t i = slots.size(); i-- > 0;) {
    Mask m = 0;
    for (const auto& v : *slots[i]) m |= shift_mod(suffix[i + 1], residue(v, d), d);
    suffix[i] = m;
  }

  std::vector<InvariantValue> chosen(slots.size());
  auto recurse = [&](auto&& self, std::size_t i, std::int64_t partial) -> void {
    if (out.size() >= limit) return;
    const std::int64_t need = (d - partial) % d;
    if (!(suffix[i] & (Mask{1} << need))) return;
    if (i == slots.size()) {
      std::map<std::int64_t, InvariantValue> finite;
      for (std::size_t k = 0; k < primes.size(); ++k) finite[primes[k]] = chosen[k + 1];
      out.push_back(rational_class(d, finite, chosen[0]));
      return;
    }
    for (const auto& v : *slots[i]) {
      chosen[i] = v;
      self(self, i + 1, (partial + residue(v, d)) % d);
      if (out.size() >= limit) return;
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

// Same answer as equal(restrict(b, profile), a) without building the restriction.
bool member(const BrauerClass& b, const BrauerClass& a, const FieldProfile& profile) {
  if (b.field() != kRationalsName || b.arch().size() != 1) return equal(restrict(b, profile), a);
  if (a.field() != profile.name) {
    throw Error(ErrorCode::FieldMismatch, "class over " + a.field() + " compared with " + profile.name);
  }
  for (const auto& [key, v] : b.finite()) {
    if (key.index != 0 || !profile.is_covered(key.q)) return equal(restrict(b, profile), a);
  }
  const auto& sig = profile.signature;
  if (static_cast<std::int64_t>(a.arch().size()) != sig.place_count()) return false;
  const auto inf = b.arch()[0];
  for (std::size_t i = 0; i < a.arch().size(); ++i) {
    const bool real = static_cast<std::int64_t>(i) < sig.real;
    if (a.arch()[i] != (real ? inf : scale(2, inf))) return false;
  }
  std::size_t matched = 0;
  for (const auto& [key, v] : b.finite()) {
    const auto places = *profile.places_over(key.q);
    for (std::size_t i = 0; i < places.size(); ++i) {
      const auto x = scale(places[i].local_degree(), v);
      if (x != a.at(key.q, i)) return false;
      if (!x.is_zero()) ++matched;
    }
  }
  // Every nonzero invariant of a must have been produced above.
  return matched == a.finite().size();
}

}  // namespace brauerlab
