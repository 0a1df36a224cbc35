#include "cli/run_cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/sampler.hpp"
#include "cli/verify.hpp"

namespace ellrook::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliVerify, DocumentedExamplesPass) {
  const Outcome a = run({"verify", "--theorem", "alpha-fact", "--board", "0,1,2", "--alpha", "1", "--family", "elliptic",
                     "--trials", "50", "--seed", "7", "--tol", "1e-9"});
  EXPECT_EQ(a.code, kExitPass) << a.err;
  const Json r = a.json();
  EXPECT_EQ(r["theorem"], "alpha-fact");
  EXPECT_EQ(r["board"], "0,1,2");
  EXPECT_EQ(r["seed"], 7);
  EXPECT_EQ(r["trials"].size(), 50u);
  EXPECT_TRUE(r["pass"].get<bool>());
  EXPECT_NE(a.err.find("PASS"), std::string::npos);

  EXPECT_EQ(run({"verify", "--theorem", "matching", "--board", "l=1,1,1;a=3,2,1", "--family", "q", "--trials", "20",
                 "--seed", "1"})
                .code,
            kExitPass);
  EXPECT_EQ(run({"verify", "--theorem", "whipple", "--n", "6", "--trials", "100", "--seed", "3"}).code, kExitPass);
}

TEST(CliVerify, ReportSchema) {
  const Json r = run({"verify", "--theorem", "alpha-fact", "--board", "1,2", "--trials", "3", "--seed", "2"}).json();
  for (const char* key : {"theorem", "board", "family", "seed", "tol", "trials", "skipped", "max_relerr", "pass"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  EXPECT_EQ(r["family"], "elliptic");
  EXPECT_DOUBLE_EQ(r["tol"].get<double>(), 1e-9);
  const Json& t = r["trials"][0];
  for (const char* key : {"params", "lhs", "rhs", "relerr"}) EXPECT_TRUE(t.contains(key)) << key;
  EXPECT_EQ(t["lhs"].size(), 2u);
  for (const char* name : {"a", "b", "q", "p", "alpha", "z"}) EXPECT_TRUE(t["params"].contains(name)) << name;
}

TEST(CliVerify, EveryTheoremPassesOnDefaults) {
  for (const Suite& s : suites()) {
    const Outcome r = run({"verify", "--theorem", s.name, "--trials", "20", "--seed", "4"});
    EXPECT_EQ(r.code, kExitPass) << s.name << ": " << r.err;
  }
}

TEST(CliVerify, ByteIdenticalAcrossRunsAndThreads) {
  const std::vector<std::string> args{"verify", "--theorem", "matching", "--trials", "40", "--seed", "12"};
  const Outcome first = run(args);
  const Outcome second = run(args);
  EXPECT_EQ(first.out, second.out);
  setenv("ELLROOK_THREADS", "4", 1);
  const Outcome threaded = run(args);
  unsetenv("ELLROOK_THREADS");
  EXPECT_EQ(first.out, threaded.out);
  EXPECT_NE(first.out, run({"verify", "--theorem", "matching", "--trials", "40", "--seed", "13"}).out);
}

TEST(CliVerify, WrongConventionFails) {
  // Increment offsets break the product formula once some l_i exceeds 1.
  const Outcome r = run({"verify", "--theorem", "matching", "--board", "l=1,2,1", "--offset", "increment", "--trials", "5"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_FALSE(r.json()["pass"].get<bool>());
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "alpha-fact", "--board", "2,1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "alpha-fact", "--board", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "matching", "--board", "0,1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "q-matching", "--family", "elliptic"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "whipple", "--board", "0,1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "alpha-fact", "--z-mode", "disk:0:1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "alpha-fact", "--board", "1,1,1,1,1,1,1,1,1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "alpha-fact", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(CliVerify, IntegerZMode) {
  const Json r = run({"verify", "--theorem", "q-matching", "--board", "l=1,2;a=3,0", "--z-mode", "int:5:9", "--trials", "10"})
                     .json();
  for (const Json& t : r["trials"]) {
    const double z = t["params"]["z"][0].get<double>();
    EXPECT_EQ(z, std::floor(z));
    EXPECT_GE(z, 5);
    EXPECT_LE(z, 9);
    EXPECT_EQ(t["params"]["z"][1].get<double>(), 0);
  }
}

TEST(CliReplay, ReproducesRecordedRelerrs) {
  // Replay must reproduce failing trials as well, so the verdict is not checked.
  const Outcome v = run({"verify", "--theorem", "alpha-rec", "--trials", "15", "--seed", "21"});
  ASSERT_NE(v.code, kExitUsage);
  const auto path = std::filesystem::temp_directory_path() / "ellrook_replay_report.json";
  std::ofstream(path) << v.out;
  const Outcome r = run({"replay", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, kExitPass) << r.err;
  const Json doc = r.json();
  EXPECT_TRUE(doc["reproduced"].get<bool>());
  EXPECT_EQ(doc["trials"].size(), 15u);

  // A tampered parameter no longer reproduces its trial.
  Json report = v.json();
  report["trials"][3]["params"]["q"][0] = report["trials"][3]["params"]["q"][0].get<double>() * 0.9;
  const Json again = replay_report(report);
  EXPECT_FALSE(again["reproduced"].get<bool>());
  EXPECT_FALSE(again["trials"][3]["match"].get<bool>());
  EXPECT_TRUE(again["trials"][2]["match"].get<bool>());
}

TEST(CliReplay, BadInput) {
  EXPECT_EQ(run({"replay", "/nonexistent/report.json"}).code, kExitUsage);
  EXPECT_EQ(run({"replay"}).code, kExitUsage);
}

TEST(CliCompute, RAlphaTable) {
  const Outcome r = run({"compute", "r-alpha", "--board", "0,1,2", "--alpha", "2", "--family", "q", "--q", "0.7"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const Json rows = r.json()["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["k"], 0);
  // q=1 limit would be 1, 3, 3; at q = 0.7 the single rook count r_1 is a
  // sum of three powers of q
  EXPECT_NEAR(rows[0]["value"][0].get<double>(), 0.343, 1e-12);
  EXPECT_EQ(rows[3]["value"][0].get<double>(), 0.0);
}

TEST(CliCompute, PerfectTwoIsShiftedThree) {
  const Outcome r = run({"compute", "perfect", "--n", "2", "--family", "elliptic", "--a", "0.5,0.2", "--b", "1.1", "--q",
                     "0.6,0.3", "--p", "0.2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const Json rows = r.json()["rows"];
  ASSERT_EQ(rows.size(), 1u);
  const WeightFamily f = elliptic_family({0.5L, 0.2L}, {1.1L, 0}, {0.6L, 0.3L}, {0.2L, 0});
  const Complex expect = ell_number(shift_params(f, Real(-1)), Real(3));
  EXPECT_NEAR(rows[0]["value"][0].get<double>(), static_cast<double>(expect.real()), 1e-13);
  EXPECT_NEAR(rows[0]["value"][1].get<double>(), static_cast<double>(expect.imag()), 1e-13);
}

TEST(CliCompute, OtherKinds) {
  const Outcome m = run({"compute", "m-k", "--board", "l=1,1,1;a=3,2,1", "--family", "q", "--q", "0.5"});
  ASSERT_EQ(m.code, kExitPass) << m.err;
  EXPECT_EQ(m.json()["rows"].size(), 4u);
  const Outcome s = run({"compute", "stirling", "--n", "4", "--family", "aq", "--a", "0.8", "--q", "0.5,0.1"});
  ASSERT_EQ(s.code, kExitPass) << s.err;
  EXPECT_EQ(s.json()["rows"].size(), 5u);
  const Outcome a = run({"compute", "abel", "--n", "3", "--family", "q", "--q", "0.4"});
  ASSERT_EQ(a.code, kExitPass) << a.err;
  EXPECT_EQ(a.json()["rows"].size(), 3u);
}

TEST(CliCompute, UsageErrors) {
  EXPECT_EQ(run({"compute", "m-k", "--board", "l=1,1,1;a=3,2,1", "--family", "q", "--q", "1e0"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "perfect", "--n", "2", "--family", "elliptic", "--q", "0.5"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "r-alpha", "--board", "0,1,2", "--family", "q", "--q", "0.5"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "r-alpha", "--board", "0,1,2", "--alpha", "2", "--family", "q", "--q", "0.5x"}).code,
            kExitUsage);
  EXPECT_EQ(run({"compute", "volume"}).code, kExitUsage);
}

TEST(CliOracle, DocumentedCounts) {
  const Outcome m = run({"oracle", "count-match", "--board", "full-B4", "--k", "2"});
  ASSERT_EQ(m.code, kExitPass) << m.err;
  EXPECT_EQ(m.json()["value"], 3);
  EXPECT_EQ(run({"oracle", "count-file", "--board", "0,1,2", "--k", "1"}).json()["value"], 3);
  const Outcome b = run({"oracle", "binom-paths", "--n", "4", "--k", "2", "--family", "elliptic", "--a", "0.5", "--b",
                     "1.2", "--q", "0.6,0.2", "--p", "0.1"});
  ASSERT_EQ(b.code, kExitPass) << b.err;
  EXPECT_LT(b.json()["relerr"].get<double>(), 1e-12);
  EXPECT_EQ(run({"oracle", "count-match", "--board", "0,1", "--k", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"oracle", "count-match", "--board", "full-B14", "--k", "1"}).code, kExitUsage);
}

TEST(Sampler, ModuliWithinContract) {
  SamplerConfig c;
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 e = trial_engine(5, i);
    ParameterSampler s(c, e);
    const Real q = std::abs(s.q()), p = std::abs(s.p()), ab = std::abs(s.ab());
    EXPECT_TRUE(q >= 0.3L - 1e-15L && q <= 0.9L + 1e-15L);
    EXPECT_TRUE(p >= 0.05L - 1e-15L && p <= 0.5L + 1e-15L);
    EXPECT_TRUE(ab >= 0.2L - 1e-15L && ab <= 2.0L + 1e-15L);
    const Complex z = s.z();
    EXPECT_TRUE(std::abs(z.real()) <= 2 && std::abs(z.imag()) <= 2);
  }
  std::mt19937_64 x = trial_engine(5, 3), y = trial_engine(5, 3), w = trial_engine(5, 4);
  EXPECT_EQ(x(), y());
  EXPECT_NE(y(), w());
  EXPECT_EQ(ZMode::parse("int:-3:4").to_string(), "int:-3:4");
  EXPECT_THROW(ZMode::parse("box:2:1"), std::invalid_argument);
}

TEST(Sampler, RandomBoardsAreValid) {
  SamplerConfig c;
  std::mt19937_64 e = trial_engine(8, 0);
  ParameterSampler s(c, e);
  for (int i = 0; i < 300; ++i) {
    const AnyBoard f = parse_board(random_ferrers(s));
    ASSERT_TRUE(std::holds_alternative<FerrersBoard>(f));
    EXPECT_LE(std::get<FerrersBoard>(f).columns(), 5);
    const AnyBoard l = parse_board(random_lshifted(s));
    ASSERT_TRUE(std::holds_alternative<LShiftedBoard>(l));
    const LShiftedBoard& b = std::get<LShiftedBoard>(l);
    EXPECT_LE(b.vertex_count(), 10);
    for (long x : b.lvec().entries()) EXPECT_LE(x, 3);
  }
}

}  // namespace
}  // namespace ellrook::cli
