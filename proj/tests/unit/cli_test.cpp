#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "catkit/error.hpp"
#include "catkit_tools/acceptance.hpp"
#include "catkit_tools/commands.hpp"
#include "catkit_tools/fixtures.hpp"

using namespace catkit;
using namespace catkit::tools;
namespace fs = std::filesystem;

namespace {

const std::string corpus = CATKIT_TEST_CORPUS;

RunConfig config(std::string command, std::vector<std::string> inputs = {}) {
  RunConfig c;
  c.command = std::move(command);
  for (auto& i : inputs) c.inputs.push_back(corpus + "/" + i);
  return c;
}

ErrorKind kind_of(const RunConfig& c) {
  try {
    run(c);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error from " << c.command;
  return ErrorKind::BadIndex;
}

// A scratch copy of the corpus, removed on destruction.
struct ScratchCorpus {
  fs::path dir;
  ScratchCorpus() {
    dir = fs::temp_directory_path() / ("catkit_corpus_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                       "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir);
    fs::copy(corpus, dir, fs::copy_options::recursive);
  }
  ~ScratchCorpus() { fs::remove_all(dir); }
};

}  // namespace

TEST(Report, ExitStatusMapping) {
  Report r;
  r.checks = {{"a", Holds()}};
  EXPECT_EQ(exit_status(r), 0);
  r.checks.push_back({"b", Unknown("budget")});
  EXPECT_EQ(exit_status(r), 2);
  r.checks.push_back({"c", Fails("x")});
  EXPECT_EQ(exit_status(r), 1);
  EXPECT_EQ(exit_status(Report{}), 0);
}

TEST(Report, JsonRoundTrip) {
  Report r;
  r.command = "check-cofcat lattice6.cat";
  r.provenance = {"divisors of 6", "tab\tand \"quotes\""};
  r.checks = {{"pushouts", Holds()}, {"initial", Fails("no object below 2 and 3")}, {"App2", Unknown("budget")}};
  r.counts = {{"objects", 4}, {"morphisms", 9}};
  r.dump = "objects:\n  1 2 3 6\n";
  auto back = report_from_json(to_json(r));
  EXPECT_EQ(back.command, r.command);
  EXPECT_EQ(back.provenance, r.provenance);
  ASSERT_EQ(back.checks.size(), r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    EXPECT_EQ(back.checks[i].name, r.checks[i].name);
    EXPECT_EQ(back.checks[i].verdict, r.checks[i].verdict);
  }
  EXPECT_EQ(back.counts, r.counts);
  EXPECT_EQ(back.dump, r.dump);
  EXPECT_EQ(to_json(back), to_json(r));
  EXPECT_EQ(to_json(r).find("seconds"), std::string::npos);
  r.with_timing = true;
  EXPECT_NE(to_json(r).find("seconds"), std::string::npos);
}

TEST(Report, MalformedJsonIsAParseError) {
  for (const char* text : {"", "{", "{\"checks\": 3}", "[1,2]"}) {
    try {
      report_from_json(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << text;
    }
  }
}

TEST(Run, CheckCofcatOnLattice) {
  auto r = run(config("check-cofcat", {"lattice6.cat"}));
  EXPECT_EQ(exit_status(r), 0);
  EXPECT_EQ(r.command, "check-cofcat lattice6.cat");
  EXPECT_FALSE(r.checks.empty());
}

TEST(Run, NfReportsCountsAndDump) {
  auto c = config("nf", {"lattice6.cat"});
  c.dim = 2;
  c.deg = 2;
  auto r = run(c);
  EXPECT_EQ(exit_status(r), 0);
  EXPECT_FALSE(r.counts.empty());
  EXPECT_FALSE(r.dump.empty());
}

TEST(Run, EveryCommandIsDeterministic) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"check-cat", {"chain2.cat"}},
      {"check-cofcat", {"lattice12.cat"}},
      {"check-model", {"model12_ids.model"}},
      {"d", {"chain2.cat"}},
      {"sd", {"lattice6.cat"}},
      {"dbar", {"chain2.cat"}},
      {"ex", {"chain2.cat"}},
      {"nf", {"lattice6.cat"}},
      {"bold-nf", {"lattice6.cat"}},
      {"classify", {"chain2.cat"}},
      {"mnf", {"model12_ids.model"}},
      {"lift", {"chain2.cat"}},
      {"bisieve-lift", {"model12_ids.model"}},
      {"approx", {"lattice6.cat"}},
      {"exact", {"lattice6.cat"}},
      {"cofinal", {"chain1_hat.cat", "chain2.cat", "maps/ends.map"}},
      {"sieve", {"chain1_hat.cat", "chain2.cat", "maps/initial.map"}},
      {"closure", {"adversarial/we_not_closed.cat"}},
  };
  std::set<std::string> covered;
  for (const auto& [cmd, inputs] : cases) {
    auto c = config(cmd, inputs);
    c.dim = cmd == "lift" ? 2 : 1;
    c.deg = 1;
    auto a = to_json(run(c));
    auto b = to_json(run(c));
    EXPECT_EQ(a, b) << cmd;
    EXPECT_EQ(a.find(corpus), std::string::npos) << cmd << " leaks a directory";
    covered.insert(cmd);
  }
  for (const auto& name : command_names()) {
    if (name != "corpus-verify") EXPECT_TRUE(covered.count(name)) << name;
  }
}

TEST(Run, Errors) {
  EXPECT_EQ(kind_of(config("no-such-command")), ErrorKind::UnknownCommand);
  EXPECT_EQ(kind_of(config("check-cat")), ErrorKind::PreconditionViolated);
  ScratchCorpus s;
  const auto bad = s.dir / "bad.cat";
  std::ofstream(bad) << "objects:\n  a b\nmorphisms:\n  f: a -> c\n";
  RunConfig c;
  c.command = "check-cat";
  c.inputs = {bad.string()};
  try {
    run(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(e.detail().find("line 4"), std::string::npos) << e.detail();
    EXPECT_NE(e.detail().find("'c'"), std::string::npos) << e.detail();
  }
  auto d = config("nf", {"lattice6.cat"});
  d.dim = -1;
  EXPECT_EQ(kind_of(d), ErrorKind::PreconditionViolated);
}

TEST(CorpusVerify, FixturesAsShipped) {
  for (const auto& f : list_fixtures(corpus)) EXPECT_TRUE(verify_fixture(f).verdict.holds()) << f.name;
  auto c = config("corpus-verify");
  c.criteria = "1";
  auto r = run(c);
  EXPECT_EQ(exit_status(r), 0);
  EXPECT_EQ(to_json(r), to_json(run(c)));
}

TEST(CorpusVerify, InjectedAdversarialFixtureIsNamed) {
  ScratchCorpus s;
  std::ofstream(s.dir / "injected.cat") << "divisors:\n  6\ncof:\n  all\nwe:\n  identities\n  1<=2\n";
  auto c = config("corpus-verify");
  c.corpus = s.dir.string();
  c.criteria = "1";
  auto r = run(c);
  EXPECT_EQ(exit_status(r), 1);
  bool named = false;
  for (const auto& ch : r.checks) named |= ch.name == "fixture injected.cat" && ch.verdict.fails();
  EXPECT_TRUE(named);
}

TEST(CorpusVerify, ExpectationThatDoesNotFireIsAFailure) {
  ScratchCorpus s;
  std::ofstream(s.dir / "too_good.cat") << "# expect-fail: pushouts\ndivisors:\n  6\ncof:\n  all\nwe:\n  identities\n";
  auto c = config("corpus-verify");
  c.corpus = s.dir.string();
  c.criteria = "1";
  EXPECT_EQ(exit_status(run(c)), 1);
}

TEST(CorpusVerify, ZeroBudgetIsUnknown) {
  auto c = config("corpus-verify");
  c.criteria = "10";
  c.budget = 0;
  EXPECT_EQ(exit_status(run(c)), 2);
}

TEST(CorpusVerify, CriteriaLists) {
  EXPECT_EQ(parse_criteria("1-3,5"), (std::set<int>{1, 2, 3, 5}));
  EXPECT_EQ(parse_criteria("15"), (std::set<int>{15}));
  for (const char* bad : {"", "0", "16", "3-1", "a", "1,,2", "1x", "2,"}) {
    try {
      parse_criteria(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}
