#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "brauerlab/catalog.hpp"
#include "brauerlab/cli.hpp"
#include "brauerlab/construct.hpp"
#include "brauerlab/io.hpp"

using namespace brauerlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("brauerlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write_json(const std::string& name, const io::Json& j) { return write(name, j.dump(2)); }

  fs::path dir_;
};

const char* kDeficit =
    R"({"name":"deficit","degree":4,"signature":{"real":4,"complex":0},)"
    R"("primes":[{"q":2,"places":[{"e":1,"f":1},{"e":1,"f":2}]}]})";

}  // namespace

TEST_F(CliTest, ScenarioAlmostEqual) {
  const auto r = run({"scenario", "almost-equal"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: UNEQUAL"), std::string::npos);
  const auto j = run({"--json", "scenario", "almost-equal"});
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(io::parse_text(j.out, "out").at("comparison").at("verdict"), "UNEQUAL");
}

TEST_F(CliTest, ConstructPairTwin4) {
  const auto r = run({"--json", "construct-pair", "--catalog", "twin4", "--d", "2", "--r", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = io::parse_text(r.out, "out");
  const auto a = io::class_from_json(j.at("A"), "A");
  const auto ap = io::class_from_json(j.at("A_prime"), "A'");
  const auto w = io::class_from_json(j.at("witness"), "witness");
  const auto pair = load_catalog("twin4");
  const auto plan = make_plan(pair.source, pair.target, pair.bijection, 2, 2);
  const auto built = build_pair(plan);
  EXPECT_EQ(a, built.source);
  EXPECT_EQ(ap, built.target);
  EXPECT_EQ(w, build_witness(plan, built.source));
  EXPECT_TRUE(j.contains("certificate"));
  EXPECT_TRUE(j.at("witness_in_target_fiber").get<bool>());
}

TEST_F(CliTest, ValidateDeficitProfile) {
  const auto path = write("deficit.json", kDeficit);
  const auto r = run({"validate", "--profile", path});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("sum 3 ≠ 4"), std::string::npos) << r.out;
}

TEST_F(CliTest, ValidateCatalog) {
  for (const auto& entry : embedded_catalog_entries()) {
    const auto r = run({"validate", "--catalog", entry});
    EXPECT_EQ(r.status, 0) << entry << r.out << r.err;
  }
}

TEST_F(CliTest, MalformedJsonExitsTwoWithLocation) {
  const auto path = write("bad.json", "{\"name\": \"x\", ");
  const auto r = run({"validate", "--profile", path});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("bad.json"), std::string::npos);
  EXPECT_NE(r.err.find("byte"), std::string::npos);
}

TEST_F(CliTest, DuplicateSlotRejected) {
  const auto path = write("p.json", kDeficit);
  const auto r = run({"validate", "--catalog", "twin4", "--profile", path});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("DuplicateInput"), std::string::npos) << r.err;
}

TEST_F(CliTest, UnknownEntryAndBadFlags) {
  EXPECT_EQ(run({"validate", "--catalog", "nope"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"construct-pair", "--catalog", "twin4", "--d", "two"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
}

TEST_F(CliTest, DomainErrorsExitOne) {
  EXPECT_EQ(run({"construct-pair", "--catalog", "twin4", "--d", "2", "--r", "3"}).status, 1);
  EXPECT_EQ(run({"construct-pair", "--catalog", "perlis8"}).status, 1);
  EXPECT_EQ(run({"construct-pair", "--catalog", "perlis8", "--policy", "arithmetic"}).status, 0);
  EXPECT_EQ(run({"equiv", "--catalog", "perlis8", "--mode", "local"}).status, 1);
  EXPECT_EQ(run({"equiv", "--catalog", "perlis8"}).status, 0);
  EXPECT_EQ(run({"equiv", "--catalog", "twin8"}).status, 0);
}

TEST_F(CliTest, RestrictFiberCompare) {
  const auto perlis = load_catalog("perlis8");
  const auto b = rational_class(2, {{2, make_invariant(1, 2)}, {3, make_invariant(1, 2)}});
  const auto bpath = write_json("b.json", io::to_json(b));
  const auto r = run({"--json", "restrict", "--catalog", "perlis8", "--side", "target", "--class", bpath});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto a = io::class_from_json(io::parse_text(r.out, "out").at("restriction"), "out");
  EXPECT_EQ(a, restrict(b, perlis.target));

  const auto apath = write_json("a.json", io::to_json(restrict(b, perlis.source)));
  const auto appath = write_json("ap.json", io::to_json(a));
  const auto f = run({"--json", "fiber", "--catalog", "perlis8", "--class", apath, "--enumerate", "--prime-bound", "20"});
  ASSERT_EQ(f.status, 0) << f.err;
  const auto fj = io::parse_text(f.out, "out");
  EXPECT_EQ(io::fiber_from_json(fj.at("fiber"), "out"), fiber_description(restrict(b, perlis.source), perlis.source));
  bool has_b = false;
  for (const auto& m : fj.at("members")) has_b = has_b || io::class_from_json(m, "m") == b;
  EXPECT_TRUE(has_b);

  const auto c = run({"compare", "--catalog", "perlis8", "--class", apath, "--class2", appath});
  EXPECT_EQ(c.status, 0) << c.err;
  EXPECT_NE(c.out.find("compare: UNEQUAL"), std::string::npos) << c.out;
}

TEST_F(CliTest, WitnessAndGeometry) {
  const auto w = run({"witness", "--catalog", "twin4", "--free-class", "inert", "--free-count", "4"});
  EXPECT_EQ(w.status, 0) << w.err;
  EXPECT_EQ(run({"witness", "--catalog", "twin4", "--free-class", "inert", "--free-count", "3"}).status, 1);
  const auto g = run({"geometry", "--catalog", "twin4", "--prime-bound", "50"});
  EXPECT_EQ(g.status, 0) << g.err;
  EXPECT_NE(g.out.find("SL(2,R)^4"), std::string::npos) << g.out;
  const auto quat = write_json("q.json", io::to_json(rational_class(2, {{2, make_invariant(1, 2)}}, make_invariant(1, 2))));
  const auto gq = run({"geometry", "--class", quat});
  EXPECT_EQ(gq.status, 0) << gq.err;
  EXPECT_NE(gq.out.find("arithmetic subgroup: no"), std::string::npos) << gq.out;
}

TEST_F(CliTest, CatalogDirectoryOverride) {
  auto pair = load_catalog("twin4");
  pair.entry = "mine";
  write_json("mine.json", io::to_json(pair));
  const auto r = run({"--catalog-dir", dir_.string(), "validate", "--catalog", "mine"});
  EXPECT_EQ(r.status, 0) << r.err;
}

TEST_F(CliTest, EmittedJsonReparses) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "validate", "--catalog", "twin8"},
           {"--json", "equiv", "--catalog", "twin4"},
           {"--json", "witness", "--catalog", "twin8", "--d", "3", "--r", "6"},
           {"--json", "geometry", "--catalog", "twin8", "--d", "2", "--prime-bound", "30"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NO_THROW((void)io::parse_text(r.out, "out"));
  }
}
