#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qtchar/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qtchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qtchar::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

size_t count_lines(const std::string& s) { return static_cast<size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    cache_ = fs::temp_directory_path() /
             ("qtchar-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(cache_);
  }
  void TearDown() override { fs::remove_all(cache_); }

  Result cmd(std::vector<std::string> args) {
    args.push_back("--cache-dir");
    args.push_back(cache_.string());
    return run(std::move(args));
  }

  fs::path cache_;
};

TEST_F(Cli, Fundamental) {
  auto r = cmd({"--type", "A3", "fundamental", "--node", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 6u);

  r = cmd({"--type", "D4", "fundamental", "--node", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(qtchar::character_from_json(r.out).size(), 28u);

  r = cmd({"--type", "A1", "fundamental", "--node", "1", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "digraph qchar {\n  v0 [label=\"Y[1,0]\"];\n  v1 [label=\"Y[1,2]^-1\"];\n  v0 -> v1 [label=\"1,e^1\"];\n}\n");

  r = cmd({"--type", "A1", "fundamental", "--node", "1", "--step", "3"});
  EXPECT_EQ(r.out, "Y[1,3]\nY[1,5]^-1\n");
}

TEST_F(Cli, Standard) {
  auto r = cmd({"--type", "A1", "standard", "1:2 1:0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(t^-1) 1\n"), std::string::npos);
  EXPECT_EQ(count_lines(r.out), 4u);

  r = cmd({"--type", "A2", "standard", "2:1^2 1:0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 15u);
  EXPECT_NE(r.out.find("(t^2 + 2 + t^-2) Y[1,4]^-1 Y[2,1] Y[2,3]^-1\n"), std::string::npos);

  EXPECT_EQ(cmd({"--type", "A3", "standard", "1:0"}).out, cmd({"--type", "A3", "fundamental", "--node", "1"}).out);
}

TEST_F(Cli, Multiplicity) {
  auto r = cmd({"--type", "A1", "multiplicity", "1:2 1:0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Q\tZ_QP(t)\t[M_P:L_Q]\n1:0 1:2\t1\t1\n1\tt^-1\t1\n");

  r = cmd({"--type", "A1", "multiplicity", "1:4 1:0"});
  EXPECT_EQ(count_lines(r.out), 2u);
  r = cmd({"--type", "D4", "multiplicity", "2:0"});
  EXPECT_EQ(r.out, "Q\tZ_QP(t)\t[M_P:L_Q]\n2:0\t1\t1\n");

  r = cmd({"--type", "A1", "multiplicity", "1:2 1:0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("z":[[{"0":1},{"-1":1}],[{},{"0":1}]])"), std::string::npos) << r.out;
}

TEST_F(Cli, SimpleAndBranch) {
  auto r = cmd({"--type", "A1", "simple", "1:2 1:0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Y[1,0] Y[1,2]\nY[1,0] Y[1,4]^-1\nY[1,2]^-1 Y[1,4]^-1\n");

  r = cmd({"--type", "A1", "branch", "2"});
  EXPECT_EQ(r.out, "weight\tc(t)\tZ\n2L1\t1\t1\n0\tt^2 + 1\t1\n");
  r = cmd({"--type", "D4", "branch", "0,1,0,0"});
  EXPECT_EQ(r.out, "weight\tc(t)\tZ\nL2\t1\t1\n0\tt^2 + 4\t1\n");
  r = cmd({"--type", "A3", "branch", "0,1,0", "--orientation", "2>1,2>3"});
  EXPECT_EQ(r.out, "weight\tc(t)\tZ\nL2\t1\t1\n");
}

TEST_F(Cli, Graph) {
  auto ratio = cmd({"--type", "D4", "graph", "--node", "2"});
  auto string = cmd({"--type", "D4", "graph", "--node", "2", "--edges", "string"});
  EXPECT_EQ(std::count(ratio.out.begin(), ratio.out.end(), '>'), 46);
  EXPECT_EQ(std::count(string.out.begin(), string.out.end(), '>'), 43);
  EXPECT_EQ(cmd({"--type", "A2", "graph", "2:1^2 1:0"}).code, 0);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(cmd({"--type", "Q2", "fundamental", "--node", "1"}).code, 2);
  EXPECT_EQ(cmd({"--type", "A2", "fundamental", "--node", "3"}).code, 2);
  EXPECT_EQ(cmd({"--type", "A2", "fundamental"}).code, 2);
  EXPECT_EQ(cmd({"--type", "A2"}).code, 2);
  EXPECT_EQ(cmd({"--type", "A2", "standard", "1:x"}).code, 2);
  EXPECT_EQ(cmd({"--type", "A2", "branch", "1"}).code, 2);
  EXPECT_EQ(cmd({"--type", "A2", "fundamental", "--node", "1", "--format", "svg"}).code, 2);
  EXPECT_EQ(cmd({"--type", "D4", "fundamental", "--node", "2", "--max-monomials", "5"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, CorruptCacheIsInconsistency) {
  ASSERT_EQ(cmd({"--type", "A2", "fundamental", "--node", "1"}).code, 0);
  const auto file = cache_ / "A2-1.json";
  ASSERT_TRUE(fs::exists(file));
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto pos = text.find(R"({"0":1})", text.find("terms"));
  text.replace(pos, 7, R"({"0":-1})");
  std::ofstream(file) << text;
  const auto r = cmd({"--type", "A2", "fundamental", "--node", "1"});
  EXPECT_EQ(r.code, 3) << r.out;
}

TEST_F(Cli, DeterministicAndCacheIndependent) {
  const std::vector<std::vector<std::string>> commands = {
      {"--type", "D4", "fundamental", "--node", "2", "--format", "json"},
      {"--type", "D4", "graph", "--node", "2"},
      {"--type", "A2", "standard", "2:1^2 1:0", "--format", "json"},
      {"--type", "A2", "multiplicity", "1:0 2:1 1:2", "--format", "json"},
      {"--type", "D4", "branch", "0,1,0,0"},
  };
  for (const auto& c : commands) {
    auto no_cache = c;
    no_cache.push_back("--no-cache");
    const auto reference = run(no_cache);
    ASSERT_EQ(reference.code, 0) << reference.err;
    const auto cold = cmd(c);
    const auto warm = cmd(c);
    EXPECT_EQ(cold.out, reference.out);
    EXPECT_EQ(warm.out, reference.out);
  }
  EXPECT_FALSE(fs::is_empty(cache_));
}
