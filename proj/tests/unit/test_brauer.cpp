#include <gtest/gtest.h>

#include "brauerlab/brauer.hpp"
#include "brauerlab/catalog.hpp"
#include "brauerlab/error.hpp"
#include "gen.hpp"

using namespace brauerlab;

namespace {

InvariantValue half() { return make_invariant(1, 2); }

BrauerClass twin4_class() {
  const auto p = load_catalog("twin4").source;
  BrauerClass a(p.name, 2, 4);
  a.set(5, 0, half());
  a.set(5, 1, half());
  a.set(13, 0, half());
  a.set(13, 1, half());
  return a;
}

}  // namespace

TEST(Brauer, ValidateExamples) {
  const auto p = load_catalog("twin4").source;
  EXPECT_TRUE(validate_class(twin4_class(), p).ok());
  for (std::int64_t d : {1, 2, 5, 8}) EXPECT_TRUE(validate_class(zero_class(p, d), p).ok());
  BrauerClass single(p.name, 2, 4);
  single.set(5, 0, half());
  const auto r = validate_class(single, p);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations.front().find("condition (b)"), std::string::npos);
}

TEST(Brauer, ValidateRejects) {
  const auto p = load_catalog("twin4").source;
  BrauerClass uncovered(p.name, 2, 4);
  uncovered.set(97, 0, half());
  uncovered.set(5, 0, half());
  EXPECT_FALSE(validate_class(uncovered, p).ok());
  BrauerClass bad_order(p.name, 2, 4);
  bad_order.set(5, 0, make_invariant(1, 3));
  bad_order.set(5, 1, make_invariant(2, 3));
  EXPECT_FALSE(validate_class(bad_order, p).ok());
  BrauerClass wrong_field("other", 2, 4);
  EXPECT_FALSE(validate_class(wrong_field, p).ok());
  auto odd_real = rational_class(3, {}, half());
  EXPECT_FALSE(validate_class(odd_real, rationals()).ok());
}

TEST(Brauer, RamificationSet) {
  const auto p = load_catalog("twin4").source;
  EXPECT_TRUE(ramification_set(zero_class(p, 2)).empty());
  const auto set = ramification_set(twin4_class());
  ASSERT_EQ(set.size(), 4u);
  EXPECT_EQ(set[0].str(), "5.0");
  EXPECT_EQ(set[3].str(), "13.1");
  const auto quat = rational_class(2, {{2, half()}}, half());
  const auto qset = ramification_set(quat);
  ASSERT_EQ(qset.size(), 2u);
  EXPECT_TRUE(qset[1].archimedean);
}

TEST(Brauer, RestrictExamples) {
  const auto perlis = load_catalog("perlis8");
  const auto b = rational_class(2, {{2, half()}, {3, half()}});
  const auto ak = restrict(b, perlis.source);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(ak.at(2, i).is_zero());
  const auto akp = restrict(b, perlis.target);
  EXPECT_EQ(akp.at(2, 0), half());
  EXPECT_EQ(akp.at(2, 1), half());
  EXPECT_TRUE(akp.at(2, 2).is_zero());
  EXPECT_TRUE(akp.at(2, 3).is_zero());
  EXPECT_EQ(restrict(zero_class(rationals(), 3), perlis.source), zero_class(perlis.source, 3));
}

TEST(Brauer, RestrictErrors) {
  const auto p = load_catalog("twin4").source;
  const auto gap = rational_class(2, {{97, half()}, {5, half()}});
  try {
    (void)restrict(gap, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ProfileGap);
  }
  EXPECT_THROW((void)restrict(twin4_class(), p), Error);
}

TEST(Brauer, TensorExamples) {
  const auto p = load_catalog("twin4").source;
  const auto a = twin4_class();
  EXPECT_EQ(tensor(a, zero_class(p, 2)), a);
  EXPECT_EQ(tensor(a, a), zero_class(p, 2));
  const auto third = rational_class(3, {{2, make_invariant(1, 3)}, {3, make_invariant(2, 3)}});
  EXPECT_EQ(tensor(third, third).at(2, 0), make_invariant(2, 3));
  try {
    (void)tensor(a, zero_class(p, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  try {
    (void)tensor(a, zero_class(rationals(), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(Brauer, IndexExamples) {
  const auto p = load_catalog("twin4").source;
  EXPECT_EQ(index(zero_class(p, 3)), 1);
  EXPECT_FALSE(is_division(zero_class(p, 3)));
  EXPECT_EQ(index(twin4_class()), 2);
  EXPECT_TRUE(is_division(twin4_class()));
  const auto deg4 = rational_class(4, {{2, half()}, {3, half()}});
  EXPECT_EQ(index(deg4), 2);
  EXPECT_FALSE(is_division(deg4));
}

TEST(Brauer, EqualExamples) {
  const auto p = load_catalog("twin4").source;
  EXPECT_TRUE(equal(twin4_class(), twin4_class()));
  EXPECT_FALSE(equal(twin4_class(), zero_class(p, 2)));
  EXPECT_THROW((void)equal(twin4_class(), zero_class(rationals(), 2)), Error);
}

TEST(BrauerProperty, RestrictionIsHomomorphism) {
  gen::Rng rng(23);
  for (const auto& entry : embedded_catalog_entries()) {
    const auto pair = load_catalog(entry);
    for (const auto* p : {&pair.source, &pair.target}) {
      const auto support = gen::covered_primes(*p, 50);
      for (int i = 0; i < 150; ++i) {
        const auto d = rng.pick(std::vector<std::int64_t>{2, 3, 4, 6});
        const auto b1 = gen::rational(rng, d, support);
        const auto b2 = gen::rational(rng, d, support);
        ASSERT_TRUE(validate_class(b1, rationals()).ok());
        const auto r1 = restrict(b1, *p);
        const auto r2 = restrict(b2, *p);
        EXPECT_EQ(restrict(tensor(b1, b2), *p), tensor(r1, r2));
        EXPECT_TRUE(validate_class(r1, *p).ok()) << describe(r1);
        for (const auto& [key, x] : r1.finite()) {
          EXPECT_EQ(order(b1.at(key.q, 0)) % order(x), 0);
        }
        for (const auto& id : ramification_set(r1)) {
          if (!id.archimedean) EXPECT_FALSE(r1.at(id.q, id.index).is_zero());
        }
        EXPECT_EQ(ramification_set(r1).empty(), equal(r1, zero_class(*p, d)));
      }
    }
  }
}
