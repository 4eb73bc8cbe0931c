#include "brauerlab/fields.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "brauerlab/error.hpp"

namespace brauerlab {

namespace {

const LocalPlace kTrivialPlace{1, 1};

std::string place_str(const LocalPlace& p) {
  return "(e=" + std::to_string(p.e) + ",f=" + std::to_string(p.f) + ")";
}

std::vector<std::int64_t> derive_ramified(const std::vector<PrimeDecomposition>& decompositions) {
  std::vector<std::int64_t> out;
  for (const auto& d : decompositions) {
    if (std::any_of(d.places.begin(), d.places.end(), [](const LocalPlace& p) { return p.e > 1; })) {
      out.push_back(d.q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const PrimeDecomposition* FieldProfile::decomposition(std::int64_t q) const {
  for (const auto& d : decompositions) {
    if (d.q == q) return &d;
  }
  return nullptr;
}

const CebotarevClass* FieldProfile::class_listing(std::int64_t q) const {
  for (const auto& c : cebotarev_classes) {
    if (std::find(c.primes.begin(), c.primes.end(), q) != c.primes.end()) return &c;
  }
  return nullptr;
}

const CebotarevClass* FieldProfile::find_class(std::string_view label) const {
  for (const auto& c : cebotarev_classes) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::optional<std::span<const LocalPlace>> FieldProfile::places_over(std::int64_t q) const {
  if (const auto* d = decomposition(q)) return std::span<const LocalPlace>(d->places);
  if (const auto* c = class_listing(q)) return std::span<const LocalPlace>(c->splitting_type);
  if (degree == 1 && is_prime(q)) return std::span<const LocalPlace>(&kTrivialPlace, 1);
  return std::nullopt;
}

bool FieldProfile::is_ramified(std::int64_t q) const {
  return std::binary_search(ramified_primes.begin(), ramified_primes.end(), q);
}

std::vector<std::int64_t> FieldProfile::profiled_primes() const {
  std::vector<std::int64_t> out;
  for (const auto& d : decompositions) out.push_back(d.q);
  std::sort(out.begin(), out.end());
  return out;
}

FieldProfile make_profile(std::string name, std::int64_t degree, ArchSignature signature,
                          std::vector<PrimeDecomposition> decompositions,
                          std::vector<CebotarevClass> classes) {
  std::sort(decompositions.begin(), decompositions.end(),
            [](const PrimeDecomposition& a, const PrimeDecomposition& b) { return a.q < b.q; });
  FieldProfile p;
  p.name = std::move(name);
  p.degree = degree;
  p.signature = signature;
  p.ramified_primes = derive_ramified(decompositions);
  p.decompositions = std::move(decompositions);
  p.cebotarev_classes = std::move(classes);
  return p;
}

const FieldProfile& rationals() {
  static const FieldProfile q = make_profile(std::string(kRationalsName), 1, {1, 0}, {});
  return q;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

Report validate_profile(const FieldProfile& profile) {
  Report report;
  const std::string& name = profile.name;
  if (profile.degree < 1) {
    report.fail(name + ": degree " + std::to_string(profile.degree) + " is not positive");
    return report;
  }
  const auto& sig = profile.signature;
  if (sig.real < 0 || sig.complex < 0 || sig.real + 2 * sig.complex != profile.degree) {
    report.fail(name + ": signature r + 2s = " + std::to_string(sig.real + 2 * sig.complex) +
                " ≠ " + std::to_string(profile.degree));
  }

  std::set<std::int64_t> seen;
  for (const auto& d : profile.decompositions) {
    const std::string where = name + ": q=" + std::to_string(d.q);
    if (!is_prime(d.q)) report.fail(where + ": not a prime");
    if (!seen.insert(d.q).second) report.fail(where + ": profiled twice");
    if (d.places.empty()) {
      report.fail(where + ": no places");
      continue;
    }
    std::int64_t total = 0;
    for (const auto& p : d.places) {
      if (p.e < 1 || p.f < 1) report.fail(where + ": invalid place " + place_str(p));
      total += p.e * p.f;
    }
    if (total != profile.degree) {
      report.fail(where + ": sum " + std::to_string(total) + " ≠ " + std::to_string(profile.degree));
    }
  }

  if (profile.ramified_primes != derive_ramified(profile.decompositions)) {
    report.fail(name + ": ramified_primes does not match the primes with some e > 1");
  }

  std::set<std::string> labels;
  std::set<std::int64_t> listed;
  for (const auto& c : profile.cebotarev_classes) {
    const std::string where = name + ": class '" + c.label + "'";
    if (c.label.empty()) report.fail(name + ": class with empty label");
    if (!labels.insert(c.label).second) report.fail(where + ": duplicate label");
    std::int64_t total = 0;
    for (const auto& p : c.splitting_type) {
      if (p.e < 1 || p.f < 1) report.fail(where + ": invalid place " + place_str(p));
      total += p.e * p.f;
    }
    if (c.splitting_type.empty() || total != profile.degree) {
      report.fail(where + ": sum " + std::to_string(total) + " ≠ " + std::to_string(profile.degree));
    }
    for (std::int64_t q : c.primes) {
      if (!is_prime(q)) report.fail(where + ": listed member " + std::to_string(q) + " is not a prime");
      if (seen.count(q) != 0) {
        report.fail(where + ": listed member " + std::to_string(q) + " is also profiled");
      }
      if (!listed.insert(q).second) {
        report.fail(where + ": listed member " + std::to_string(q) + " belongs to another class");
      }
    }
  }

  if (!profile.signature_verified) {
    report.note(name + ": archimedean signature (" + std::to_string(sig.real) + "," +
                std::to_string(sig.complex) + ") is a declared default, unverified");
  }
  return report;
}

std::vector<std::int64_t> local_degrees(const FieldProfile& profile, std::int64_t q) {
  const auto places = profile.places_over(q);
  if (!places) {
    throw Error(ErrorCode::UnprofiledPrime,
                "prime " + std::to_string(q) + " is not profiled in " + profile.name);
  }
  std::vector<std::int64_t> out;
  out.reserve(places->size());
  for (const auto& p : *places) out.push_back(p.local_degree());
  return out;
}

const PrimePairing* PlaceBijection::pairing(std::int64_t q) const {
  for (const auto& p : pairs) {
    if (p.q == q) return &p;
  }
  return nullptr;
}

PlaceBijection profile_order_bijection(const FieldProfile& source, const FieldProfile& target) {
  PlaceBijection phi{source.name, target.name, {}};
  for (const auto& d : source.decompositions) {
    const auto* other = target.decomposition(d.q);
    if (other == nullptr) continue;
    PrimePairing pairing{d.q, {}};
    for (std::size_t i = 0; i < d.places.size() && i < other->places.size(); ++i) {
      pairing.image.push_back(i);
    }
    phi.pairs.push_back(std::move(pairing));
  }
  return phi;
}

namespace {

enum class Strength { Local, Arithmetic };

bool places_match(const LocalPlace& a, const LocalPlace& b, Strength strength) {
  return strength == Strength::Local ? a == b : a.f == b.f;
}

std::vector<LocalPlace> sorted_for(std::span<const LocalPlace> places, Strength strength) {
  std::vector<LocalPlace> out(places.begin(), places.end());
  if (strength == Strength::Arithmetic) {
    for (auto& p : out) p.e = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report check_equivalence(const FieldProfile& source, const FieldProfile& target,
                         const PlaceBijection& phi, Strength strength) {
  Report report;
  if (phi.source != source.name || phi.target != target.name) {
    report.fail("bijection connects " + phi.source + " → " + phi.target + ", expected " +
                source.name + " → " + target.name);
  }
  if (source.degree != target.degree) {
    report.fail("degrees differ: " + std::to_string(source.degree) + " vs " +
                std::to_string(target.degree));
  }
  if (strength == Strength::Local && !(source.signature == target.signature)) {
    report.fail("signatures differ");
  }

  for (const auto& d : source.decompositions) {
    const std::string where = "q=" + std::to_string(d.q);
    const auto* other = target.decomposition(d.q);
    if (other == nullptr) {
      report.fail(where + ": profiled in " + source.name + " only");
      continue;
    }
    const auto* pairing = phi.pairing(d.q);
    if (pairing == nullptr) {
      report.fail(where + ": bijection has no pairing");
      continue;
    }
    if (pairing->image.size() != d.places.size() || d.places.size() != other->places.size()) {
      report.fail(where + ": place counts " + std::to_string(d.places.size()) + " and " +
                  std::to_string(other->places.size()) + " cannot be paired by a map of size " +
                  std::to_string(pairing->image.size()));
      continue;
    }
    std::vector<bool> hit(other->places.size(), false);
    bool bijective = true;
    for (std::size_t j : pairing->image) {
      if (j >= hit.size() || hit[j]) {
        bijective = false;
        break;
      }
      hit[j] = true;
    }
    if (!bijective) {
      report.fail(where + ": pairing is not a bijection");
      continue;
    }
    for (std::size_t i = 0; i < d.places.size(); ++i) {
      const auto& a = d.places[i];
      const auto& b = other->places[pairing->image[i]];
      if (!places_match(a, b, strength)) {
        report.fail(where + ": place " + std::to_string(i) + " " + place_str(a) + " ↦ place " +
                    std::to_string(pairing->image[i]) + " " + place_str(b));
      }
    }
  }
  for (const auto& d : target.decompositions) {
    if (!source.is_profiled(d.q)) {
      report.fail("q=" + std::to_string(d.q) + ": profiled in " + target.name + " only");
    }
  }
  for (const auto& p : phi.pairs) {
    if (!source.is_profiled(p.q) || !target.is_profiled(p.q)) {
      report.fail("q=" + std::to_string(p.q) + ": pairing at a prime not profiled on both sides");
    }
  }

  // Class-listed primes carry no place-level certificate; their splitting
  // types must agree as multisets.
  for (const auto& c : source.cebotarev_classes) {
    for (std::int64_t q : c.primes) {
      const auto other = target.places_over(q);
      if (!other) {
        report.note("q=" + std::to_string(q) + ": listed in " + source.name + " only");
        continue;
      }
      if (sorted_for(c.splitting_type, strength) != sorted_for(*other, strength)) {
        report.fail("q=" + std::to_string(q) + ": class splitting types differ");
      }
    }
  }
  return report;
}

}  // namespace

Report check_local_equivalence(const FieldProfile& source, const FieldProfile& target,
                               const PlaceBijection& phi) {
  return check_equivalence(source, target, phi, Strength::Local);
}

Report check_arithmetic_equivalence(const FieldProfile& source, const FieldProfile& target,
                                    const PlaceBijection& phi) {
  return check_equivalence(source, target, phi, Strength::Arithmetic);
}

}  // namespace brauerlab
