#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <json.hpp>

#ifndef CHROMA_CLI
#error "CHROMA_CLI must point at the chroma executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CHROMA_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, CsfExamples) {
  EXPECT_EQ(run("csf --uio 3,3 --basis e").out, "{\"2\": 2}\n");
  EXPECT_EQ(run("csf --uio 2,3 --basis e").out, "{\"1,1\": 1}\n");
  const auto r = run("csf --uio 3,4,4 --basis e");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"2,1\": 1, \"3\": 3}\n");
}

TEST(Cli, CsfFullReport) {
  const auto r = run("csf --uio 3,4,4");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("uio"), "3,4,4");
  EXPECT_EQ(j.at("ePositive"), true);
  EXPECT_EQ(j.at("sinkCheck"), true);
}

TEST(Cli, VerifyExamples) {
  for (const char* args : {"verify ppos --max-n 4 --max-k 4", "verify sink --max-n 4", "verify involutions --max-n 3 --max-k 3"}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("failures").empty()) << args;
  }
}

TEST(Cli, VerifyIsByteStable) {
  const auto a = run("verify lgv --max-n 3 --jobs 1");
  const auto b = run("verify lgv --max-n 3 --jobs 3");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyReplaysAnInstance) {
  const auto r = run("verify gasharov --instance 'uio=3,4,4;partition=2,1'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("instances"), 1);
}

TEST(Cli, Scan) {
  const auto r = run("scan --max-n 4");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("scanned"), 22);
  EXPECT_EQ(j.at("negatives"), 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify nosuchsuite").code, 2);
  EXPECT_EQ(run("csf --uio 1,2").code, 2);
  EXPECT_EQ(run("csf --uio a,b").code, 2);
  EXPECT_EQ(run("csf").code, 2);
  EXPECT_EQ(run("--bogus-flag").code, 2);
  EXPECT_EQ(run("csf --uio 3,4,4 --format xml").code, 2);
}

TEST(Cli, Cache) {
  const auto dir = std::filesystem::temp_directory_path() / ("chroma-cli-" + std::to_string(std::random_device{}()));
  const std::string flag = "--cache-dir " + dir.string();
  EXPECT_EQ(run("cache rebuild --max-degree 3 " + flag).code, 0);
  const auto list = run("cache list " + flag);
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("e>m:3"), std::string::npos);
  EXPECT_EQ(run("cache clear " + flag).code, 0);
  EXPECT_EQ(run("cache list " + flag).out.find("e>m:3"), std::string::npos);
  std::filesystem::remove_all(dir);
}
