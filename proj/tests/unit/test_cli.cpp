#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bigyro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("bigyro_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string group(const std::string& name) {
    return std::string(BIGYRO_FIXTURE_DIR) + "/groups/" + name + ".json";
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, AddWithZeroSecondArgument) {
  const auto p1 = write("p1.json", R"({"rows":2,"cols":1,"data":[[0.3],[-1.2]]})");
  const auto p0 = write("p0.json", R"({"rows":2,"cols":1,"data":[[0],[0]]})");
  const Result r = run({"add", p1, p0});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["bg_add"]["data"], json::parse("[[0.3],[-1.2]]"));
  EXPECT_EQ(j["rgyr"]["data"], json::parse("[[1.0]]"));
  EXPECT_NEAR(j["lgyr"]["data"][0][0].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(j["lgyr"]["data"][0][1].get<double>(), 0.0, 1e-15);
}

TEST_F(Cli, AddScalarSinh) {
  const auto a = write("a.json", R"({"rows":1,"cols":1,"data":[[1.1752011936438014]]})");
  const auto b = write("b.json", R"({"rows":1,"cols":1,"data":[[0.5210953054937474]]})");
  const Result r = run({"add", "--in", a, "--in", b});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["bg_add"]["data"][0][0].get<double>(), std::sinh(1.5), 1e-14);
}

TEST_F(Cli, AddRejectsBadInput) {
  const auto a = write("a.json", R"({"rows":1,"cols":1,"data":[[1]]})");
  const auto b = write("b.json", R"({"rows":2,"cols":1,"data":[[1],[2]]})");
  const auto bad = write("bad.json", "{");
  Result r = run({"add", a, b});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("shape mismatch"), std::string::npos);
  EXPECT_EQ(run({"add", a, bad}).code, 2);
  EXPECT_EQ(run({"add", a}).code, 2);
  EXPECT_EQ(run({"add", a, a, "--m", "2"}).code, 2);
}

TEST_F(Cli, FactorIdentityAndRoundTrip) {
  const auto id = write("id.json", R"({"rows":3,"cols":3,"data":[[1,0,0],[0,1,0],[0,0,1]]})");
  Result r = run({"factor", id, "--m", "2", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["P"]["data"], json::parse("[[0.0,0.0]]"));

  // β(P) with P = [[0.75]] in SO(1,1).
  const double p = 0.75, c = std::sqrt(1 + p * p);
  std::ostringstream m;
  m.precision(17);
  m << R"({"rows":2,"cols":2,"data":[[)" << c << "," << p << "],[" << p << "," << c << "]]}";
  r = run({"factor", write("b.json", m.str()), "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_NEAR(j["P"]["data"][0][0].get<double>(), p, 1e-12);
  EXPECT_NEAR(j["O_m"]["data"][0][0].get<double>(), 1.0, 1e-12);
}

TEST_F(Cli, FactorExitCodes) {
  const auto bad = write("bad.json", R"({"rows":3,"cols":3,"data":[[2,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_EQ(run({"factor", bad, "--m", "2", "--n", "1"}).code, 1);
  EXPECT_EQ(run({"factor", bad}).code, 2);
  EXPECT_EQ(run({"factor", bad, "--m", "2", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"factor", write("r.json", R"({"rows":1,"cols":2,"data":[[1,0]]})"), "--m", "1"}).code, 2);
}

TEST_F(Cli, AxiomsDefaultsPassAndAreDeterministic) {
  const Result a = run({"axioms", "--trials", "40"});
  const Result b = run({"axioms", "--trials", "40", "--seed", "42"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_NE(run({"axioms", "--trials", "40", "--seed", "43"}).out, a.out);
}

TEST_F(Cli, AxiomsExitCodes) {
  const Result tight = run({"axioms", "--tol", "1e-18", "--trials", "10"});
  EXPECT_EQ(tight.code, 1);
  EXPECT_NE(tight.err.find("seed=42"), std::string::npos);
  EXPECT_EQ(run({"axioms", "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"axioms", "--m", "0"}).code, 2);
  EXPECT_EQ(run({"axioms", "--tol", "-1"}).code, 2);
  EXPECT_EQ(run({"axioms", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, OutFlagWritesFile) {
  const fs::path out = dir_ / "report.json";
  const Result r = run({"axioms", "--trials", "5", "--out", out.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  EXPECT_EQ(json::parse(in)["trials"], 5);
}

TEST_F(Cli, EnvironmentTolerance) {
  ::setenv("BIGYRO_TOL", "1e-18", 1);
  const int tight = run({"axioms", "--trials", "5"}).code;
  const int overridden = run({"axioms", "--trials", "5", "--tol", "1e-9"}).code;
  ::setenv("BIGYRO_TOL", "nonsense", 1);
  const int bad = run({"axioms", "--trials", "5"}).code;
  ::unsetenv("BIGYRO_TOL");
  EXPECT_EQ(tight, 1);
  EXPECT_EQ(overridden, 0);
  EXPECT_EQ(bad, 2);
}

TEST_F(Cli, FiniteCheck) {
  Result r = run({"finite", "check", group("S3")});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_TRUE(j["degenerate"].get<bool>());

  const auto bad_b = write("s3b.json", R"({"order":6,"table":[[0,1,2,3,4,5],[1,0,4,5,2,3],[2,3,0,1,5,4],[3,2,5,4,0,1],[4,5,1,0,3,2],[5,4,3,2,1,0]],"H_L":[0,2],"B":[0,1,3],"H_R":[0]})");
  r = run({"finite", "check", bad_b});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["pass"].get<bool>());

  const auto not_factoring = write("s3c.json", R"({"order":6,"table":[[0,1,2,3,4,5],[1,0,4,5,2,3],[2,3,0,1,5,4],[3,2,5,4,0,1],[4,5,1,0,3,2],[5,4,3,2,1,0]],"B":[0,1]})");
  r = run({"finite", "check", not_factoring});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["bitransversal"].get<bool>());
}

TEST_F(Cli, FiniteRejectsCorruptTables) {
  const auto latin = write("latin.json", R"({"order":3,"table":[[0,1,2],[1,2,0],[2,1,0]]})");
  const Result r = run({"finite", "check", latin});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("column"), std::string::npos);
  EXPECT_EQ(run({"finite", "search", latin}).code, 2);
  EXPECT_EQ(run({"finite", "check", write("x.json", R"({"order":2})")}).code, 2);
  EXPECT_EQ(run({"finite", "check", group("S3"), group("S3")}).code, 2);
  EXPECT_EQ(run({"finite"}).code, 2);
}

TEST_F(Cli, FiniteSearchCatalog) {
  const Result a = run({"finite", "search", group("D8")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run({"finite", "search", "--in", group("D8")}).out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["count"], 19);
  EXPECT_EQ(j["decompositions"].size(), 19u);
  EXPECT_EQ(j["decompositions"][0]["H_L"], json::parse("[0]"));
  EXPECT_EQ(json::parse(run({"finite", "search", group("D8"), "--level", "bt"}).out)["count"], 187);
  EXPECT_EQ(json::parse(run({"finite", "search", group("D8"), "--max-results", "2"}).out)["count"], 2);
  EXPECT_EQ(run({"finite", "search", group("D8"), "--level", "xyz"}).code, 2);
}

TEST_F(Cli, SpinVerify) {
  for (const auto& [m, n] : {std::pair{"1", "1"}, {"2", "1"}}) {
    const Result r = run({"spin", "verify", "--m", m, "--n", n, "--trials", "30"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(json::parse(r.out)["pass"].get<bool>());
  }
  EXPECT_EQ(run({"spin", "verify", "--m", "3", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"spin"}).code, 2);
}
