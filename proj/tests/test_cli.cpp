#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cantor/cli.hpp"
#include "cantor/json_io.hpp"

using namespace cantor;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpandText) {
  const auto r = run({"expand", "--q", "const:2", "--x", "1/3", "--depth", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find("x: ")), "digits: 0,1,0,1,0,1\ntail: 1/3\n");
}

TEST(Cli, ExpandOutsideUnitInterval) {
  const auto r = run({"expand", "--q", "const:2", "--x", "3/2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "error: x must lie in [0,1)\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"expand", "--q", "const:2", "--x", "1/3"}).code, 2);
  EXPECT_EQ(run({"expand", "--q", "const:2", "--x", "1/3", "--bogus", "1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"expand", "--q", "const:1", "--x", "1/3", "--depth", "2"}).code, 1);
  EXPECT_EQ(run({"expand", "--q", "const:2", "--x", "1/x", "--depth", "2"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TraceJson) {
  const auto r = run({"trace", "--q", "const:2", "--x", "1/3", "--horizon", "4", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "cantor-kit/1");
  EXPECT_EQ(j["trace"].size(), 5u);
  EXPECT_EQ(j["certificate"]["m1"], 1);
  EXPECT_EQ(j["certificate"]["m2"], 3);
  EXPECT_EQ(j["certificate"]["reconstructed"], "1/3");
}

TEST(Cli, JsonRationalsReparse) {
  const auto r = run({"trace", "--q", "rule:succ", "--x", "5/7", "--horizon", "9", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  for (const auto& e : j["trace"]) {
    const auto v = parse_rational(e["value"].get<std::string>());
    EXPECT_EQ(to_string(v), e["value"].get<std::string>());
  }
  EXPECT_EQ(parse_rational(j["certificate"]["reconstructed"].get<std::string>()), make_rational(5, 7));
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--q", "cycle:2,3", "--x", "2/3", "--depth", "20"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS collision-roundtrip"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = run({"verify", "--q", "rule:succ", "--x", "355/1113", "--depth", "30", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 6u);
}

TEST(Cli, ShiftAndGshift) {
  auto r = run({"shift", "--q", "const:2", "--x", "3/4", "--n", "1", "--json"});
  EXPECT_EQ(Json::parse(r.out)["value"], "1/2");
  r = run({"gshift", "--q", "cycle:2,3", "--x", "2/3", "--m", "2", "--json"});
  EXPECT_EQ(Json::parse(r.out)["value"], "1/2");
  EXPECT_EQ(run({"gshift", "--q", "cycle:2,3", "--x", "2/3", "--m", "0"}).code, 1);
}

TEST(Cli, EvalCylinderDual) {
  auto r = run({"eval", "--q", "rule:succ", "--base", "0,2", "--json"});
  EXPECT_EQ(Json::parse(r.out)["value"], "1/3");

  r = run({"cylinder", "--q", "rule:succ", "--base", "0,2", "--x", "2/5", "--json"});
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["lo"], "1/3");
  EXPECT_EQ(j["hi"], "1/2");
  EXPECT_TRUE(j["contains"].get<bool>());

  r = run({"dual", "--q", "const:10", "--base", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dual: 4,…max"), std::string::npos);

  r = run({"dual", "--q", "rule:succ", "--x", "1/3", "--horizon", "5", "--json"});
  j = Json::parse(r.out);
  EXPECT_EQ(j["dual"]["digits"], Json::parse("[0,1]"));
  EXPECT_EQ(j["dual"]["tail"], "max");

  EXPECT_EQ(run({"dual", "--q", "const:10", "--base", "0"}).code, 1);
  EXPECT_EQ(run({"dual", "--q", "const:2", "--x", "1/3", "--horizon", "10"}).code, 1);
}

TEST(Cli, SpecFromFile) {
  const std::string path = testing::TempDir() + "cantor_q_spec.txt";
  std::ofstream(path) << "cycle:2,3\n";
  const auto r = run({"gshift", "--q", "@" + path, "--x", "2/3", "--m", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["q"], "cycle:2,3");
  EXPECT_EQ(run({"gshift", "--q", "@/nonexistent/q", "--x", "2/3", "--m", "2"}).code, 1);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"trace", "--q", "list:3,5;then;rule:succ", "--x", "11/17", "--horizon", "20", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
