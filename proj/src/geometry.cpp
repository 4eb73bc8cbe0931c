#include "brauerlab/geometry.hpp"

#include <algorithm>
#include <map>

#include "brauerlab/error.hpp"

namespace brauerlab {

std::string to_string(ArchFactorKind kind) {
  switch (kind) {
    case ArchFactorKind::SL_d_R: return "SL_d_R";
    case ArchFactorKind::SL_d_C: return "SL_d_C";
    case ArchFactorKind::SL_halfd_H: return "SL_halfd_H";
  }
  return "?";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Both: return "both";
    case Membership::FirstOnly: return "first-only";
    case Membership::SecondOnly: return "second-only";
  }
  return "?";
}

std::string GroupDescriptor::str() const {
  const std::string ds = std::to_string(d);
  const auto power = [](std::string base, std::int64_t n) {
    return n == 1 ? base : base + "^" + std::to_string(n);
  };
  std::vector<std::string> parts;
  if (r > 0) parts.push_back(power("SL(" + ds + ",R)", r));
  if (s > 0) parts.push_back(power("SL(" + ds + ",C)", s));
  if (quaternionic > 0) parts.push_back(power("SL(" + std::to_string(d / 2) + ",H)", quaternionic));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

GroupDescriptor archimedean_group(const BrauerClass& a, const FieldProfile& profile) {
  const auto& sig = profile.signature;
  if (a.field() != profile.name || static_cast<std::int64_t>(a.arch().size()) != sig.place_count()) {
    throw Error(ErrorCode::FieldMismatch, "class " + describe(a) + " is not over " + profile.name);
  }
  GroupDescriptor g;
  g.d = a.degree();
  for (std::int64_t i = 0; i < sig.real; ++i) {
    const auto v = a.arch()[static_cast<std::size_t>(i)];
    if (v.is_zero()) {
      g.factors.push_back({ArchFactorKind::SL_d_R, g.d});
      ++g.r;
    } else if (g.d % 2 == 0) {
      g.factors.push_back({ArchFactorKind::SL_halfd_H, g.d});
      ++g.quaternionic;
    } else {
      throw Error(ErrorCode::InconsistentArch,
                  "real place " + std::to_string(i) + " has invariant " + v.str() + " with odd degree");
    }
  }
  for (std::int64_t j = 0; j < sig.complex; ++j) {
    g.factors.push_back({ArchFactorKind::SL_d_C, g.d});
    ++g.s;
  }
  return g;
}

bool produces_arithmetic_subgroup(const BrauerClass& b) {
  if (b.field() != kRationalsName || b.arch().size() != 1) {
    throw Error(ErrorCode::FieldMismatch, "expected a class over Q, got " + b.field());
  }
  return b.arch()[0].is_zero();
}

SubmanifoldReport shared_submanifolds(const BrauerClass& a, const FieldProfile& profile,
                                      const BrauerClass& a_prime, const FieldProfile& profile_prime,
                                      std::int64_t d, std::int64_t prime_bound, std::size_t limit) {
  SubmanifoldReport report;
  report.ambient_first = archimedean_group(a, profile);
  report.ambient_second = archimedean_group(a_prime, profile_prime);
  if (report.ambient_first.quaternionic > 0 || report.ambient_second.quaternionic > 0) {
    report.notes.push_back("an ambient group has SL(d/2,H) factors; such algebras fall outside the "
                           "SL(d,R)^r x SL(d,C)^s manifold setting");
  }
  report.notes.push_back("the arithmetic-subgroup condition (B split at the real place) is enforced for every degree");
  report.notes.push_back("submanifolds from intermediate subfields Q < F < K are not covered");

  const auto f1 = fiber_description(a, profile, d);
  const auto f2 = fiber_description(a_prime, profile_prime, d);
  std::map<std::string, BrauerClass> candidates;
  for (const auto* f : {&f1, &f2}) {
    if (f->cardinality.kind == CardinalityKind::Empty) continue;
    for (auto& b : enumerate(*f, prime_bound, limit)) candidates.emplace(describe(b), std::move(b));
  }
  for (const auto& [label, b] : candidates) {
    if (!produces_arithmetic_subgroup(b)) {
      ++report.non_arithmetic;
      continue;
    }
    const bool in1 = member(b, a, profile);
    const bool in2 = member(b, a_prime, profile_prime);
    SubmanifoldClass entry{b, label, archimedean_group(b, rationals()), Membership::Both};
    if (in1 && in2) {
      ++report.shared;
    } else if (in1) {
      entry.membership = Membership::FirstOnly;
      ++report.first_only;
    } else {
      entry.membership = Membership::SecondOnly;
      ++report.second_only;
    }
    report.classes.push_back(std::move(entry));
  }
  return report;
}

}  // namespace brauerlab
