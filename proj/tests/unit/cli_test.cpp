#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation call(std::vector<std::string> args) {
  args.insert(args.begin(), "dynlist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Invocation r;
  r.code = dynlist::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dynlist_cli_" + name);
}

}  // namespace

TEST(Cli, SimulateTriangleWithVerify) {
  const auto r = call({"simulate", "--algo", "triangle", "--scenario", "random", "--n", "16",
                       "--rounds", "500", "--seed", "7", "--verify"});
  ASSERT_EQ(r.code, dynlist::cli::kExitOk) << r.err;
  const auto json_end = r.out.rfind('}');
  const auto j = nlohmann::json::parse(r.out.substr(0, json_end + 1));
  EXPECT_LE(j["max_ratio"].get<double>(), 3.0);
  EXPECT_EQ(j["verify"]["mismatches"].get<int>(), 0);
  EXPECT_NE(r.out.find("verify: "), std::string::npos);
}

TEST(Cli, EmptyScenarioZeroRatio) {
  const auto r = call({"simulate", "--scenario", "empty", "--n", "8", "--rounds", "20"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["max_ratio"].get<double>(), 0.0);
}

TEST(Cli, OutputFiles) {
  const auto metrics = temp_file("metrics.json");
  const auto csv = temp_file("rounds.csv");
  const auto trace = temp_file("trace.txt");
  const auto jsonl = temp_file("trace.jsonl");
  const auto r = call({"simulate", "--algo", "robust3hop", "--n", "8", "--rounds", "30",
                       "--metrics-out", metrics.string(), "--csv-out", csv.string(),
                       "--trace-out", trace.string(), "--jsonl-out", jsonl.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("algorithm=robust3hop"), std::string::npos);
  for (const auto& p : {metrics, csv, trace, jsonl}) {
    EXPECT_GT(std::filesystem::file_size(p), 0u) << p;
  }

  // The written trace replays to the same metrics.
  const auto replay = temp_file("replay.json");
  const auto again = call({"simulate", "--algo", "robust3hop", "--scenario", "trace",
                           "--trace-in", trace.string(), "--metrics-out", replay.string()});
  ASSERT_EQ(again.code, 0) << again.err;
  auto counters = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    auto j = nlohmann::json::parse(in);
    return std::make_pair(j["topology_changes"], j["ratio_series"]);
  };
  EXPECT_EQ(counters(metrics), counters(replay));
  for (const auto& p : {metrics, csv, trace, jsonl, replay}) std::filesystem::remove(p);
}

TEST(Cli, MalformedTrace) {
  const auto path = temp_file("bad.txt");
  std::ofstream(path) << "1 I 0 1\n1 Q 0 2\n";
  const auto r = call({"simulate", "--scenario", "trace", "--trace-in", path.string()});
  EXPECT_EQ(r.code, dynlist::cli::kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  std::filesystem::remove(path);
  EXPECT_NE(call({"simulate", "--scenario", "trace", "--trace-in", "/nonexistent/x"}).code, 0);
}

TEST(Cli, VerifyRejectsLargeNetworks) {
  const auto r = call({"verify", "--n", "32"});
  EXPECT_EQ(r.code, dynlist::cli::kExitUsage);
  EXPECT_NE(r.err.find("simulate --verify"), std::string::npos);
}

TEST(Cli, VerifyPassesAndFaultIsReported) {
  EXPECT_EQ(call({"verify", "--algo", "robust2hop", "--n", "8", "--rounds", "300"}).code, 0);
  const auto bad = call({"verify", "--algo", "robust2hop", "--n", "8", "--rounds", "300",
                         "--fault", "skip-removal"});
  EXPECT_EQ(bad.code, dynlist::cli::kExitVerifyFailed);
  EXPECT_NE(bad.err.find("mismatch: round "), std::string::npos);
  EXPECT_NE(bad.err.find(" node "), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, dynlist::cli::kExitUsage);
  EXPECT_EQ(call({"simulate", "--algo", "nope"}).code, dynlist::cli::kExitUsage);
  EXPECT_EQ(call({"simulate", "--bogus"}).code, dynlist::cli::kExitUsage);
  EXPECT_EQ(call({"simulate", "--scenario", "cycle-lb", "--n", "24"}).code,
            dynlist::cli::kExitUsage);
  EXPECT_EQ(call({"simulate", "--fault", "nope"}).code, dynlist::cli::kExitUsage);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, BandwidthOverride) {
  const auto r = call({"simulate", "--n", "8", "--rounds", "20", "--bandwidth", "6"});
  EXPECT_EQ(r.code, dynlist::cli::kExitInvariant);
  EXPECT_NE(r.err.find("bandwidth"), std::string::npos);
}

TEST(Cli, BenchSingleCell) {
  const auto r = call({"bench", "--algos", "robust2hop", "--scenarios", "random", "--sizes", "8",
                       "--rounds", "50", "--no-wall-time"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 2u);
  EXPECT_EQ(call({"bench", "--algos", "robust2hop", "--scenarios", "random", "--sizes", "8",
                  "--rounds", "50", "--no-wall-time"})
                .out,
            r.out);
}

TEST(Cli, BenchMembershipSeparation) {
  const auto r = call({"bench", "--no-wall-time"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("naive2hop"), std::string::npos);
  EXPECT_NE(r.out.find("robust2hop"), std::string::npos);
}
