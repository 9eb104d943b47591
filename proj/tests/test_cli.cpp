#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "test_support.hpp"

#ifndef CAPZIP_CLI
#define CAPZIP_CLI "capzip"
#endif

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(CAPZIP_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / "capzip_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, BuildCap) {
  const CliRun r = run("build-cap --eps 0.1 --za 0.02 --zc 0.1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "capzip.cap/1");
  EXPECT_NEAR(j.at("curvature_deg").at("a1").get<double>(), 1.9, 0.05);
  EXPECT_NEAR(j.at("curvature_deg").at("c").get<double>(), 5.6, 0.05);
  const auto obj = temp_dir() / "cap.obj";
  ASSERT_EQ(run("build-cap --wa 5 --wc 10 --obj " + obj.string()).code, 0);
  EXPECT_EQ(capzip::read_obj_file(obj.string()).num_vertices(), 7);
}

TEST(Cli, Lemma) {
  const CliRun r = run("lemma 1 --wa 5 --wc 10 --eps 0.1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const double a = j.at("angles").at(0).at("value_deg").get<double>();
  EXPECT_GT(a, 65.0);
  EXPECT_LT(a, 75.0);
  EXPECT_FALSE(j.at("straight").at("verdict").at("unzipping").get<bool>());
}

TEST(Cli, CheckExitCodes) {
  const CliRun closed = run("check --wa 5 --wc 10 --type acaab --strategy lemma-arc --closed");
  EXPECT_EQ(closed.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(closed.out).at("unzipping").get<bool>());
  EXPECT_EQ(run("check --wa 5 --wc 10 --type caaab").code, 3);
  EXPECT_EQ(run("check --wa 5 --wc 10 --type acaab --strategy lemma-arc").code, 3);
}

TEST(Cli, CheckPathFile) {
  const auto path = temp_dir() / "path.json";
  std::ofstream(path) << R"({"name":"custom","stops":["a1","c","a2","a3","b3"],)"
                      << R"("segments":[{"kind":"geodesic"},{"kind":"geodesic"},)"
                      << R"({"kind":"geodesic"},{"kind":"geodesic"}]})";
  const CliRun r = run("check --wa 5 --wc 10 --path " + path.string());
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("path").at("name"), "custom");
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run("check --path " + path.string()).code, 1);
}

TEST(Cli, DevelopWritesSvg) {
  const auto svg = temp_dir() / "dev.svg";
  std::filesystem::remove(svg);
  const CliRun r = run("develop --wa 5 --wc 10 --type aaacb --strategy lemma-arc --svg " + svg.string());
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "capzip.development/1");
  EXPECT_GE(j.at("crossings").get<int>(), 1);
  EXPECT_TRUE(std::filesystem::exists(svg));
}

TEST(Cli, Sweep) {
  const auto cfg = temp_dir() / "grid.json";
  const auto csv = temp_dir() / "grid.csv";
  std::ofstream(cfg) << R"({"omega_a_deg":[1,5],"omega_c_deg":[10],"epsilon":[0.01]})";
  const CliRun r = run("sweep --workers 2 --config " + cfg.string() + " --csv " + csv.string());
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "capzip.sweep/1");
  EXPECT_EQ(j.at("unzippings").get<int>(), 0);
  EXPECT_TRUE(std::filesystem::exists(csv));
}

TEST(Cli, EdgeUnzip) {
  const CliRun r = run("edge-unzip " + capzip::testing::solid_path("cube"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "capzip.edge-unzip/1");
  EXPECT_TRUE(j.at("three_connected").get<bool>());
  EXPECT_EQ(run("edge-unzip /nonexistent.obj").code, 1);
}

TEST(Cli, Render) {
  const CliRun list = run("render --list");
  ASSERT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("closed-unzipping"), std::string::npos);
  const CliRun svg = run("render --figure acaab-arc");
  ASSERT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out.rfind("<?xml", 0), 0u);
  EXPECT_EQ(run("render --figure nope").code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("lemma 7").code, 2);
  EXPECT_EQ(run("build-cap --eps").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  // parameters that parse but make no cap
  EXPECT_EQ(run("build-cap --eps -1").code, 1);
  EXPECT_EQ(run("build-cap --wa 5").code, 1);
}
