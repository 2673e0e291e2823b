#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string command = std::string(BOXCUB_CLI_PATH) + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("boxcub_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::string generate(const std::string& name, const std::string& args) {
    return write(name, run("generate " + args).out);
  }

  fs::path dir_;
};

TEST_F(CliTest, AnalyzeStar) {
  const std::string g = generate("star.txt", "--family star --n 8");
  const Result r = run("analyze " + g + " --oracle-limit 9");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["alpha"], 8);
  EXPECT_EQ(j["chi"], 2);
  EXPECT_EQ(j["box"], 1);
  EXPECT_EQ(j["cub"], 3);
  EXPECT_EQ(j["volume_lb"], 2);
  EXPECT_EQ(j["theorem_bound"], 8);
  EXPECT_EQ(j["adiga_bound"], 3);
}

TEST_F(CliTest, AnalyzeK44AndK5) {
  const std::string k44 = generate("k44.txt", "--family multipartite --parts 4,4");
  const Result r = run("analyze " + k44 + " --oracle-limit 8");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["box"], 2);
  EXPECT_EQ(j["cub"], 4);

  const std::string k5 = generate("k5.txt", "--family complete --n 5");
  const Json c = Json::parse(run("analyze " + k5).out);
  EXPECT_EQ(c["box"], 0);
  EXPECT_EQ(c["cub"], 0);
}

TEST_F(CliTest, AnalyzeFieldOrder) {
  const std::string g = write("p3.txt", "3\n0 1\n1 2\n");
  const Json j = Json::parse(run("analyze " + g).out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected{
      "n", "m", "alpha", "chi", "diameter", "connected", "box", "cub", "volume_lb",
      "theorem_bound", "adiga_bound", "max_box_volume", "max_star_leaves", "star_lb",
      "sources"};
  EXPECT_EQ(keys, expected);
}

TEST_F(CliTest, AnalyzeGapWitnessOmitsCubicity) {
  const std::string g = generate("glue.txt", "--family glue --n 4");
  const Result r = run("analyze " + g);
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 13);
  EXPECT_EQ(j["box"], 1);
  EXPECT_EQ(j["alpha"], 8);
  EXPECT_EQ(j["diameter"], 10);
  EXPECT_EQ(j["max_box_volume"], 1);
  EXPECT_EQ(j["star_lb"], 2);
  EXPECT_FALSE(j.contains("cub"));
  EXPECT_TRUE(j["omitted"].contains("cub"));
}

TEST_F(CliTest, AnalyzeReadsStdinAndGraph6) {
  const Result r = run("analyze - --format graph6 < " + write("k4.g6", "C~\n"));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["m"], 6);
  EXPECT_EQ(j["box"], 0);
}

TEST_F(CliTest, AnalyzeParseErrorExitsTwo) {
  EXPECT_EQ(run("analyze " + write("bad.txt", "3\n0 5\n")).code, 2);
  EXPECT_EQ(run("analyze " + dir_.string() + "/missing.txt").code, 2);
}

TEST_F(CliTest, ConstructK44) {
  const std::string g = generate("k44.txt", "--family multipartite --parts 4,4");
  const std::string out = (dir_ / "k44.json").string();
  const Result r = run("construct " + g + " --oracle-limit 8 --out " + out);
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(read(out));
  EXPECT_EQ(j["report"]["total_dims"], 8);
  EXPECT_EQ(j["report"]["verified"], true);
  EXPECT_EQ(j["representation"]["kind"], "cube");
  EXPECT_EQ(j["representation"]["dims"].size(), 8u);

  // The written representation verifies on its own.
  const std::string rep = write("rep.json", j["representation"].dump());
  EXPECT_EQ(run("verify " + rep + " " + g).code, 0);
}

TEST_F(CliTest, ConstructCompleteAndFiveCycle) {
  const std::string k7 = generate("k7.txt", "--family complete --n 7");
  const Json k = Json::parse(run("construct " + k7).out);
  EXPECT_EQ(k["report"]["total_dims"], 0);
  EXPECT_EQ(k["report"]["verified"], true);

  const std::string c5 = write("c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  const Result r = run("construct " + c5 + " --coloring exact --boxrep oracle");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["report"]["b_used"], 2);
  EXPECT_EQ(j["report"]["total_dims"], 2 * 2 * 2 + 2);
}

TEST_F(CliTest, ConstructWithGivenBoxFile) {
  const std::string g = write("c4.txt", "4\n0 1\n1 2\n2 3\n0 3\n");
  const std::string box = write(
      "box.json",
      R"({"n":4,"kind":"box","dims":[)"
      R"([[[0,1],[1,1]],[[0,1],[3,1]],[[2,1],[3,1]],[[0,1],[3,1]]],)"
      R"([[[0,1],[3,1]],[[0,1],[1,1]],[[0,1],[3,1]],[[2,1],[3,1]]]]})");
  ASSERT_EQ(run("verify " + box + " " + g).code, 0);
  const Result r = run("construct " + g + " --coloring greedy --boxrep " + box);
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["report"]["parameters"], "heuristic");
  EXPECT_EQ(j["report"]["verified"], true);

  const std::string wrong = write("wrong.json", R"({"n":4,"kind":"box","dims":[]})");
  EXPECT_EQ(run("construct " + g + " --boxrep " + wrong).code, 2);
}

TEST_F(CliTest, ConstructRefusesLargeOracleInput) {
  const std::string g = generate("star.txt", "--family star --n 8");
  EXPECT_EQ(run("construct " + g).code, 2);
  EXPECT_EQ(run("construct " + g + " --force").code, 0);
}

TEST_F(CliTest, VerifyExitCodes) {
  const std::string g = generate("k44.txt", "--family multipartite --parts 4,4");
  const Json j = Json::parse(run("construct " + g + " --oracle-limit 8").out);
  Json rep = j["representation"];
  EXPECT_EQ(run("verify " + write("ok.json", rep.dump()) + " " + g).code, 0);

  rep["dims"].erase(rep["dims"].size() - 1);
  const Result dropped = run("verify " + write("dropped.json", rep.dump()) + " " + g);
  EXPECT_EQ(dropped.code, 1);
  const Json diff = Json::parse(dropped.out);
  EXPECT_FALSE(diff["extra_edges"].empty());
  EXPECT_TRUE(diff["missing_edges"].empty());

  const std::string k3 = generate("k3.txt", "--family complete --n 3");
  EXPECT_EQ(run("verify " + write("ok2.json", j["representation"].dump()) + " " + k3).code,
            2);
  EXPECT_EQ(run("verify " + write("junk.json", "{\"n\":1}") + " " + k3).code, 2);
  EXPECT_EQ(run("verify " + write("notjson.json", "[") + " " + k3).code, 2);
}

TEST_F(CliTest, BenchTightnessSweep) {
  const Result r = run("bench --family tk --k 2 --n 8,32,1024");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "k,n,cub_closed_form,pipeline_dims,theorem_bound,ratio\n"
            "2,8,4,8,8,2.000000\n"
            "2,32,8,12,12,1.500000\n"
            "2,1024,18,22,22,1.222222\n");
}

TEST_F(CliTest, BenchInvalidSweepExitsTwo) {
  const Result r = run("bench --family tk --k 3 --n 10");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run("bench --family nope").code, 2);
  EXPECT_EQ(run("bench --family random --n 6 --count 3").code, 2);
  EXPECT_EQ(run("bench --family random --n 20 --count 3 --seed 1").code, 2);
}

TEST_F(CliTest, BenchRandomIsReproducible) {
  const Result a = run("bench --family random --n 6 --count 100 --seed 7");
  const Result b = run("bench --family random --n 6 --count 100 --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "# family=random n=6 count=100 seed=7 p=0.5");
  std::getline(lines, line);
  EXPECT_EQ(line, "k,n,cub_closed_form,pipeline_dims,theorem_bound,ratio");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 100);
  EXPECT_NE(a.out, run("bench --family random --n 6 --count 100 --seed 8").out);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("generate --family star").code, 2);
}

}  // namespace
