#include "brauerlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "brauerlab/error.hpp"

namespace brauerlab::io {

namespace {

// Read-only view of a JSON node that remembers where it came from, so schema
// errors can name the file, path and field.
class Cursor {
 public:
  Cursor(const Json& node, const std::string& source, std::string path)
      : node_(&node), source_(&source), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError, *source_ + ": " + path_ + ": " + message);
  }

  const Json& node() const { return *node_; }

  Cursor field(const char* key) const {
    require_object();
    const auto it = node_->find(key);
    if (it == node_->end()) fail(std::string("missing field '") + key + "'");
    return Cursor(*it, *source_, path_ + "." + key);
  }

  std::optional<Cursor> optional_field(const char* key) const {
    require_object();
    const auto it = node_->find(key);
    if (it == node_->end()) return std::nullopt;
    return Cursor(*it, *source_, path_ + "." + key);
  }

  std::size_t size() const {
    if (!node_->is_array()) fail("expected an array");
    return node_->size();
  }

  Cursor operator[](std::size_t i) const {
    return Cursor((*node_)[i], *source_, path_ + "[" + std::to_string(i) + "]");
  }

  template <typename F>
  void for_each_member(F&& f) const {
    require_object();
    for (auto it = node_->begin(); it != node_->end(); ++it) {
      f(it.key(), Cursor(it.value(), *source_, path_ + "." + it.key()));
    }
  }

  std::int64_t as_int() const {
    if (!node_->is_number_integer()) fail("expected an integer");
    return node_->get<std::int64_t>();
  }

  std::int64_t as_positive() const {
    const auto v = as_int();
    if (v < 1) fail("expected a positive integer, got " + std::to_string(v));
    return v;
  }

  bool as_bool() const {
    if (!node_->is_boolean()) fail("expected a boolean");
    return node_->get<bool>();
  }

  std::string as_string() const {
    if (!node_->is_string()) fail("expected a string");
    return node_->get<std::string>();
  }

  void require_object() const {
    if (!node_->is_object()) fail("expected an object");
  }

 private:
  const Json* node_;
  const std::string* source_;
  std::string path_;
};

InvariantValue read_invariant(const Cursor& c) {
  const auto num = c.field("num").as_int();
  const auto den = c.field("den").as_int();
  if (den == 0) c.fail("denominator is 0");
  return make_invariant(num, den);
}

LocalPlace read_place(const Cursor& c) { return {c.field("e").as_positive(), c.field("f").as_positive()}; }

std::vector<LocalPlace> read_places(const Cursor& c) {
  std::vector<LocalPlace> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(read_place(c[i]));
  return out;
}

ValueSet read_values(const Cursor& c, std::int64_t d) {
  ValueSet out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto v = read_invariant(c[i]);
    if (!order_divides(v, d)) c[i].fail("value " + v.str() + " has order not dividing d = " + std::to_string(d));
    out.push_back(v);
  }
  if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
    c.fail("values must be strictly increasing");
  }
  return out;
}

std::vector<std::int64_t> read_ints(const Cursor& c) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c[i].as_int());
  return out;
}

Json values_json(const ValueSet& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json places_json(const std::vector<LocalPlace>& places) {
  Json out = Json::array();
  for (const auto& p : places) out.push_back(to_json(p));
  return out;
}

std::string kind_name(CardinalityKind k) { return to_string(k); }

CardinalityKind kind_from(const Cursor& c) {
  const auto s = c.as_string();
  for (auto k : {CardinalityKind::Empty, CardinalityKind::Finite, CardinalityKind::Infinite,
                 CardinalityKind::Unknown}) {
    if (to_string(k) == s) return k;
  }
  c.fail("unknown cardinality '" + s + "'");
}

}  // namespace

Json to_json(const InvariantValue& x) { return Json{{"num", x.num()}, {"den", x.den()}}; }

Json to_json(const LocalPlace& p) { return Json{{"e", p.e}, {"f", p.f}}; }

Json to_json(const FieldProfile& profile) {
  Json primes = Json::array();
  for (const auto& d : profile.decompositions) primes.push_back(Json{{"q", d.q}, {"places", places_json(d.places)}});
  Json classes = Json::array();
  for (const auto& c : profile.cebotarev_classes) {
    Json entry{{"label", c.label}, {"infinite", c.infinite}, {"splitting_type", places_json(c.splitting_type)}};
    if (!c.primes.empty()) entry["primes"] = c.primes;
    classes.push_back(std::move(entry));
  }
  Json out{{"name", profile.name},
           {"degree", profile.degree},
           {"signature", Json{{"real", profile.signature.real}, {"complex", profile.signature.complex}}},
           {"primes", std::move(primes)},
           {"cebotarev_classes", std::move(classes)}};
  if (!profile.signature_verified) out["signature_verified"] = false;
  return out;
}

Json to_json(const PlaceBijection& phi) {
  Json pairs = Json::array();
  for (const auto& p : phi.pairs) pairs.push_back(Json{{"q", p.q}, {"map", p.image}});
  return Json{{"source", phi.source}, {"target", phi.target}, {"pairs", std::move(pairs)}};
}

Json to_json(const CatalogPair& pair) {
  return Json{{"entry", pair.entry},
              {"equivalence", to_string(pair.equivalence)},
              {"source", to_json(pair.source)},
              {"target", to_json(pair.target)},
              {"bijection", to_json(pair.bijection)},
              {"notes", pair.notes}};
}

Json to_json(const BrauerClass& a) {
  Json invariants = Json::array();
  for (const auto& [key, v] : a.finite()) {
    invariants.push_back(Json{{"q", key.q}, {"place", key.index}, {"num", v.num()}, {"den", v.den()}});
  }
  return Json{{"field", a.field()}, {"degree", a.degree()}, {"invariants", std::move(invariants)},
              {"arch", values_json(a.arch())}};
}

Json to_json(const AdmissibleSet& set) {
  Json q = set.q == kArchimedean ? Json("inf") : Json(set.q);
  return Json{{"q", std::move(q)}, {"values", values_json(set.values)}};
}

Json to_json(const Cardinality& c) {
  Json out{{"kind", kind_name(c.kind)}};
  if (c.kind == CardinalityKind::Finite) {
    out["count"] = c.count;
    out["division_count"] = c.division_count;
  }
  return out;
}

Json to_json(const FiberDescription& f) {
  Json profiled = Json::object();
  for (const auto& [q, values] : f.profiled) profiled[std::to_string(q)] = values_json(values);
  Json classes = Json::object();
  Json meta = Json::object();
  for (const auto& c : f.classes) {
    classes[c.label] = values_json(c.values);
    meta[c.label] = Json{{"infinite", c.infinite}, {"splitting_type", places_json(c.splitting_type)},
                         {"primes", c.primes}};
  }
  return Json{{"algebra", f.algebra},   {"d", f.d},
              {"profiled", profiled},   {"arch", values_json(f.arch)},
              {"classes", classes},     {"class_meta", meta},
              {"cardinality", to_json(f.cardinality)}, {"notes", f.notes}};
}

Json to_json(const ComparisonResult& c) {
  Json diffs = Json::array();
  for (const auto& w : c.witness_differences) {
    diffs.push_back(Json{{"location", w.location}, {"first", values_json(w.first)}, {"second", values_json(w.second)}});
  }
  return Json{{"verdict", to_string(c.verdict)},
              {"intersection_cardinality", to_json(c.intersection_cardinality)},
              {"witness_differences", std::move(diffs)}};
}

Json to_json(const Report& r) {
  return Json{{"ok", r.ok()}, {"violations", r.violations}, {"notes", r.notes}};
}

Json to_json(const ReciprocityCertificate& c) {
  return Json{{"recomputed", to_json(c.recomputed)},
              {"symbolic", Json{{"num", c.symbolic_num}, {"den", c.symbolic_den}}},
              {"symbolic_reduced", to_json(c.symbolic)}};
}

Json to_json(const GroupDescriptor& g) {
  Json factors = Json::array();
  for (const auto& f : g.factors) factors.push_back(Json{{"kind", to_string(f.kind)}, {"d", f.d}});
  return Json{{"d", g.d}, {"factors", std::move(factors)}, {"r", g.r}, {"s", g.s},
              {"quaternionic", g.quaternionic}, {"text", g.str()}};
}

Json to_json(const SubmanifoldClass& s) {
  return Json{{"label", s.label}, {"algebra", to_json(s.algebra)}, {"descriptor", to_json(s.descriptor)},
              {"membership", to_string(s.membership)}};
}

Json to_json(const SubmanifoldReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c));
  return Json{{"ambient_first", to_json(r.ambient_first)},
              {"ambient_second", to_json(r.ambient_second)},
              {"shared", r.shared},
              {"first_only", r.first_only},
              {"second_only", r.second_only},
              {"non_arithmetic", r.non_arithmetic},
              {"classes", std::move(classes)},
              {"notes", r.notes}};
}

Json to_json(const RigidityReport& r) {
  Json out{{"common_member_found", r.common_member_found},
           {"classes_equal", r.classes_equal},
           {"members_checked", r.members_checked},
           {"consistent", r.consistent}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

Json to_json(const ScenarioReport& r) {
  Json primes = Json::array();
  for (const auto& p : r.plan.primes) primes.push_back(Json{{"q", p.q}, {"place", p.place}});
  return Json{{"scenario", r.name},
              {"source", r.plan.source.name},
              {"target", r.plan.target.name},
              {"d", r.plan.d},
              {"plan_primes", std::move(primes)},
              {"A", to_json(r.pair.source)},
              {"A_prime", to_json(r.pair.target)},
              {"certificate", to_json(r.certificate)},
              {"certificate_target", to_json(r.certificate_target)},
              {"admissible_at_2_source", to_json(r.ramified_prime_source)},
              {"admissible_at_2_target", to_json(r.ramified_prime_target)},
              {"fiber", to_json(r.fiber)},
              {"fiber_target", to_json(r.fiber_target)},
              {"comparison", to_json(r.comparison)},
              {"witness", to_json(r.witness)},
              {"ramified_member", to_json(r.ramified_member)},
              {"ramified_member_in_source", r.ramified_member_in_source},
              {"ramified_member_in_target", r.ramified_member_in_target},
              {"ramified_members_enumerated", r.ramified_members_enumerated},
              {"ramified_members_brute_force", r.ramified_members_brute_force},
              {"transcript", r.transcript},
              {"notes", r.notes}};
}

InvariantValue invariant_from_json(const Json& j, const std::string& source) {
  return read_invariant(Cursor(j, source, "$"));
}

FieldProfile profile_from_json(const Json& j, const std::string& source) {
  const Cursor root(j, source, "$");
  const auto name = root.field("name").as_string();
  const auto degree = root.field("degree").as_positive();
  const auto sig = root.field("signature");
  const ArchSignature signature{sig.field("real").as_int(), sig.field("complex").as_int()};
  std::vector<PrimeDecomposition> decompositions;
  std::set<std::int64_t> seen;
  const auto primes = root.field("primes");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto q = primes[i].field("q").as_int();
    if (!seen.insert(q).second) primes[i].field("q").fail("prime " + std::to_string(q) + " listed twice");
    decompositions.push_back({q, read_places(primes[i].field("places"))});
  }
  std::vector<CebotarevClass> classes;
  if (const auto cc = root.optional_field("cebotarev_classes")) {
    for (std::size_t i = 0; i < cc->size(); ++i) {
      const auto c = (*cc)[i];
      CebotarevClass entry{c.field("label").as_string(), c.field("infinite").as_bool(),
                           read_places(c.field("splitting_type")), {}};
      if (const auto listed = c.optional_field("primes")) entry.primes = read_ints(*listed);
      classes.push_back(std::move(entry));
    }
  }
  auto profile = make_profile(name, degree, signature, std::move(decompositions), std::move(classes));
  if (const auto v = root.optional_field("signature_verified")) profile.signature_verified = v->as_bool();
  return profile;
}

PlaceBijection bijection_from_json(const Json& j, const std::string& source) {
  const Cursor root(j, source, "$");
  PlaceBijection phi{root.field("source").as_string(), root.field("target").as_string(), {}};
  const auto pairs = root.field("pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    PrimePairing p{pairs[i].field("q").as_int(), {}};
    const auto map = pairs[i].field("map");
    for (std::size_t k = 0; k < map.size(); ++k) {
      const auto idx = map[k].as_int();
      if (idx < 0) map[k].fail("negative place index");
      p.image.push_back(static_cast<std::size_t>(idx));
    }
    phi.pairs.push_back(std::move(p));
  }
  return phi;
}

CatalogPair catalog_pair_from_json(const Json& j, const std::string& source) {
  const Cursor root(j, source, "$");
  CatalogPair pair;
  pair.entry = root.field("entry").as_string();
  const auto eq = root.field("equivalence");
  const auto eq_name = eq.as_string();
  if (eq_name == "local") {
    pair.equivalence = Equivalence::Local;
  } else if (eq_name == "arithmetic") {
    pair.equivalence = Equivalence::Arithmetic;
  } else {
    eq.fail("expected 'local' or 'arithmetic'");
  }
  pair.source = profile_from_json(root.field("source").node(), source + " (source)");
  pair.target = profile_from_json(root.field("target").node(), source + " (target)");
  pair.bijection = bijection_from_json(root.field("bijection").node(), source + " (bijection)");
  if (const auto notes = root.optional_field("notes")) {
    for (std::size_t i = 0; i < notes->size(); ++i) pair.notes.push_back((*notes)[i].as_string());
  }
  return pair;
}

BrauerClass class_from_json(const Json& j, const std::string& source) {
  const Cursor root(j, source, "$");
  const auto arch = root.field("arch");
  BrauerClass a(root.field("field").as_string(), root.field("degree").as_positive(), arch.size());
  for (std::size_t i = 0; i < arch.size(); ++i) a.set_arch(i, read_invariant(arch[i]));
  const auto inv = root.field("invariants");
  std::set<PlaceKey> seen;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const auto q = inv[i].field("q").as_int();
    const auto place = inv[i].field("place").as_int();
    if (place < 0) inv[i].field("place").fail("negative place index");
    if (!seen.insert(PlaceKey{q, static_cast<std::size_t>(place)}).second) {
      inv[i].fail("place " + std::to_string(q) + "." + std::to_string(place) + " listed twice");
    }
    a.set(q, static_cast<std::size_t>(place), read_invariant(inv[i]));
  }
  return a;
}

FiberDescription fiber_from_json(const Json& j, const std::string& source) {
  const Cursor root(j, source, "$");
  FiberDescription f;
  f.algebra = root.field("algebra").as_string();
  f.d = root.field("d").as_positive();
  if (f.d > kMaxDegree) root.field("d").fail("degree above " + std::to_string(kMaxDegree));
  root.field("profiled").for_each_member([&](const std::string& key, const Cursor& c) {
    std::int64_t q = 0;
    try {
      q = std::stoll(key);
    } catch (const std::exception&) {
      c.fail("key is not a prime");
    }
    f.profiled[q] = read_values(c, f.d);
  });
  f.arch = read_values(root.field("arch"), f.d);
  const auto meta = root.field("class_meta");
  root.field("classes").for_each_member([&](const std::string& label, const Cursor& c) {
    const auto m = meta.field(label.c_str());
    f.classes.push_back({label, m.field("infinite").as_bool(), read_places(m.field("splitting_type")),
                         read_ints(m.field("primes")), read_values(c, f.d)});
  });
  const auto card = root.field("cardinality");
  f.cardinality.kind = kind_from(card.field("kind"));
  if (f.cardinality.kind == CardinalityKind::Finite) {
    f.cardinality.count = static_cast<std::uint64_t>(card.field("count").as_int());
    f.cardinality.division_count = static_cast<std::uint64_t>(card.field("division_count").as_int());
  }
  if (const auto notes = root.optional_field("notes")) {
    for (std::size_t i = 0; i < notes->size(); ++i) f.notes.push_back((*notes)[i].as_string());
  }
  return f;
}

GroupDescriptor descriptor_from_json(const Json& j, const std::string& source) {
  const Cursor root(j, source, "$");
  GroupDescriptor g;
  g.d = root.field("d").as_positive();
  const auto factors = root.field("factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto kind = factors[i].field("kind");
    const auto name = kind.as_string();
    ArchFactor f{ArchFactorKind::SL_d_R, factors[i].field("d").as_positive()};
    if (name == "SL_d_R") {
      f.kind = ArchFactorKind::SL_d_R;
    } else if (name == "SL_d_C") {
      f.kind = ArchFactorKind::SL_d_C;
    } else if (name == "SL_halfd_H") {
      f.kind = ArchFactorKind::SL_halfd_H;
    } else {
      kind.fail("unknown factor kind '" + name + "'");
    }
    g.factors.push_back(f);
  }
  g.r = root.field("r").as_int();
  g.s = root.field("s").as_int();
  g.quaternionic = root.field("quaternionic").as_int();
  return g;
}

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path.string());
}

}  // namespace brauerlab::io
