#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"

using namespace monocover;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, SolveNo) {
  const auto r = run({"solve", "-r", "1", "-s", "2", "2 1 4 3 6 5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NO\n");
}

TEST(Cli, SolveYesPrintsChains) {
  const auto r = run({"solve", "-r", "1", "-s", "1", "2 4 1 3"});
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "YES");
}

TEST(Cli, SolveFromStdin) {
  EXPECT_EQ(run({"solve", "-r", "1", "-s", "2"}, "2 1 4 3 6 5\n").code, 1);
  EXPECT_EQ(run({"solve", "-r", "1", "-s", "2", "-"}, "1 2 3\n").code, 0);
}

TEST(Cli, EnvironmentDefaults) {
  ::setenv("MONOCOVER_FORMAT", "structured", 1);
  const auto r = run({"dset", "2 1"});
  ::unsetenv("MONOCOVER_FORMAT");
  EXPECT_EQ(r.out, "dset=1 1\nsize=2\n");
  EXPECT_EQ(run({"dset", "2 1"}).out, "1 1\n");
}

TEST(Cli, CheckMinimal) {
  EXPECT_EQ(run({"check-minimal", "--target", "T3", "10 5 1 7 11 4 9 2 6 12 8 3"}).code, 0);
  EXPECT_EQ(run({"check-minimal", "--target", "T3", "10 5 1 7 11 4 9 2 6 12 8 3 13"}).code, 1);
}

TEST(Cli, CheckCritical) {
  EXPECT_EQ(run({"check-critical", "--target", "2x1", "5 2 7 1 6 3 9 8 4"}).code, 0);
  const auto r = run({"check-critical", "--target", "1x1", "2 4 1 3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "coverable\n");
  const auto c = run({"--format", "structured", "check-critical", "--certificates", "--target",
                      "T1", "1 3 2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(lines(c.out)[0], "status=critical");
}

TEST(Cli, CheckSharp) {
  EXPECT_EQ(run({"check-sharp", "-r", "2", "-s", "2", "12 14 5 10 3 9 1 7 15 13 11 4 2 8 6"}).code, 0);
  EXPECT_EQ(run({"check-sharp", "-r", "1", "-s", "1", "2 4 1 3"}).code, 1);
}

TEST(Cli, Dset) {
  EXPECT_EQ(run({"dset", "1"}).out, "1\n");
  EXPECT_EQ(run({"dset", "10 5 1 7 11 4 9 2 6 12 8 3"}).out, "4 3 2 1\n");
  EXPECT_EQ(run({"dset", "2", "1"}).out, "1 1\n");
}

TEST(Cli, Compose) {
  EXPECT_EQ(run({"compose", "dsum", "1 3 2", "2 1"}).out, "1 3 2 5 4\n");
  EXPECT_EQ(run({"compose", "ssum", "1 3 2", "2 1"}).out, "3 5 4 2 1\n");
  EXPECT_EQ(run({"compose", "tensor", "2 1", "1 2"}).out, "3 4 1 2\n");
  EXPECT_EQ(run({"compose", "dsum", "1 3 2"}).code, 64);
}

TEST(Cli, Construct) {
  const auto r = run({"construct", "epic-step", "-k", "3", "--verify", "10 5 1 7 11 4 9 2 6 12 8 3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out)[0], "15 10 6 12 16 9 14 7 11 17 13 8 1 2 3 4 5");
  EXPECT_EQ(run({"construct", "enkel", "--r1", "0", "--r2", "0", "-s", "1", "--verify", "2 1", "2 1"}).code, 1);
  EXPECT_EQ(run({"construct", "family15", "-n", "1"}).out, "12 14 5 10 3 9 1 7 15 13 11 4 2 8 6\n");
  EXPECT_EQ(run({"construct", "nio-embed", "-r", "2", "-s", "1", "-N", "3", "1 2"}).code, 64);
  const auto s = run({"--format", "structured", "construct", "punkt", "-k", "4"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("claim.length=17"), std::string::npos);
}

TEST(Cli, Criticalize) {
  const auto r = run({"criticalize", "--target", "T3", "10 5 1 7 11 4 9 2 6 12 8 3 13"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10 5 1 7 11 4 9 2 6 12 8 3\n");
  EXPECT_EQ(run({"criticalize", "--target", "T3", "1 2 3"}).code, 1);
}

TEST(Cli, Separable) {
  EXPECT_EQ(run({"separable", "decompose", "2 1 4 3"}).out, "+(-(1,1),-(1,1))\n");
  EXPECT_EQ(run({"separable", "decompose", "3 1 4 2"}).code, 1);
  EXPECT_EQ(run({"separable", "dset", "1 3 2 5 4"}).out, "3 2\n");
  const auto e = run({"separable", "enumerate", "--target", "T1"});
  EXPECT_EQ(e.out, "1 3 2\n2 1 3\n2 3 1\n3 1 2\n");
}

TEST(Cli, Bounds) {
  EXPECT_EQ(run({"bounds", "upper", "-r", "2", "-s", "1"}).out, "C(2,1) <= 128\n");
  EXPECT_EQ(run({"bounds", "upper", "-k", "3"}).out, "C(3) <= 264\n");
  EXPECT_EQ(run({"bounds", "upper", "-r", "2", "-d", "4"}).out, "N(2,4) <= 128\n");
  EXPECT_EQ(run({"bounds", "upper", "-r", "2"}).code, 64);
  EXPECT_EQ(run({"bounds", "gadget", "-r", "2", "-d", "2"}).code, 0);
  EXPECT_EQ(run({"bounds", "gadget", "-r", "2", "-d", "3"}).code, 64);
  const auto l = run({"bounds", "lower", "--k-max", "5", "--rs-max", "2"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("M(k)\t4\t17\t"), std::string::npos);
}

TEST(Cli, Search) {
  const auto r = run({"search", "--target", "T1", "--max-len", "4", "--no-symmetry"});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls.back(), "# hits=4 complete=yes nodes=" + ls.back().substr(ls.back().rfind('=') + 1));
  ls.pop_back();
  std::sort(ls.begin(), ls.end());
  EXPECT_EQ(ls, (std::vector<std::string>{"3: 1 3 2", "3: 2 1 3", "3: 2 3 1", "3: 3 1 2"}));
  EXPECT_EQ(run({"search", "--target", "T1", "--max-len", "12"}).code, 64);
  EXPECT_EQ(run({"search", "--target", "2x1", "--max-len", "9", "--search-budget", "0"}).code, 2);
}

TEST(Cli, UsageErrors) {
  const auto bad = run({"dset", "1 3 3"});
  EXPECT_EQ(bad.code, 64);
  EXPECT_NE(bad.err.find("position"), std::string::npos);
  EXPECT_EQ(run({"dset", "1 x"}).code, 64);
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"solve", "-r", "1", "1 2"}).code, 64);
  EXPECT_EQ(run({"check-critical", "--target", "T", "1"}).code, 64);
  EXPECT_EQ(run({"--format", "xml", "dset", "1"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputRoundTrips) {
  const std::vector<std::vector<std::string>> perm_cmds{
      {"compose", "tensor", "2 4 1 3", "3 1 2"},
      {"construct", "nio-lift", "-k", "2", "1 3 2"},
      {"construct", "ghee", "-a", "2", "-b", "2", "-c", "2", "-d", "2", "2 1 4 3", "3 4 1 2"},
      {"criticalize", "--target", "T2", "10 5 1 7 11 4 9 2 6 12 8 3"},
  };
  for (const auto& cmd : perm_cmds) {
    const auto r = run(cmd);
    ASSERT_EQ(r.code, 0) << cmd[0] << r.err;
    const std::string line = lines(r.out)[0];
    EXPECT_EQ(to_string(parse_permutation(line)), line);
  }
  for (const std::string p : {"1", "2 1", "5 3 1 4 2", "10 5 1 7 11 4 9 2 6 12 8 3"}) {
    const auto r = run({"dset", p});
    const std::string line = lines(r.out)[0];
    EXPECT_EQ(to_string(parse_downset(line)), line);
    EXPECT_EQ(run({"check-critical", "--target", line, p}).code == 0,
              is_critical(parse_permutation(p), parse_downset(line)).critical());
  }
}
