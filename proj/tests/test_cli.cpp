#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "banach/cli.hpp"
#include "banach/intset.hpp"

namespace banach::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("banach_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(ParseArgs, Examples) {
  const Command profile = parse_args({"profile", "--set", "gen congruence 2 1", "--window", "0:4096"});
  EXPECT_EQ(profile.subcommand, "profile");
  EXPECT_EQ(profile.window_length, 4096u);
  EXPECT_EQ(profile.set_text, "gen congruence 2 1");

  const Command escape = parse_args({"escape", "--t", "5", "--i-max", "30"});
  EXPECT_EQ(escape.subcommand, "escape");
  EXPECT_EQ(escape.t, BigInt(5));
  EXPECT_EQ(escape.i_max, 30u);

  try {
    parse_args({"profile", "--bogus"});
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("--bogus"), std::string::npos);
  }
  EXPECT_EQ(call({"profile", "--bogus"}).code, kUsage);
}

TEST(ParseArgs, Defaults) {
  const Command c = parse_args({"construct-b", "--set", "gen full"});
  EXPECT_EQ(c.window_length, 4096u);
  EXPECT_EQ(c.ells, "j");
  EXPECT_EQ(c.k, 8u);
  EXPECT_EQ(c.format, "json");
  EXPECT_EQ(c.digit_budget, 100000u);
}

TEST(ParseArgs, Validation) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"profile"},
           {"profile", "--set", "gen full", "--set-file", "x"},
           {"profile", "--set", "gen full", "--window", "12"},
           {"profile", "--set", "gen full", "--window", "0:0"},
           {"profile", "--set", "gen full", "--window", "-3:5"},
           {"escape", "--t", "-1", "--i-max", "3"},
           {"escape", "--t", "1"},
           {"construct-b", "--set", "gen full", "--ells", "1,2", "--k", "3"},
           {"construct-b", "--set", "gen full", "--ells", "0"},
           {"family", "--set", "gen full", "--scheme", "zigzag"},
           {"profile", "--set", "gen full", "--format", "xml"},
       }) {
    EXPECT_THROW(parse_args(args), UsageError) << ::testing::PrintToString(args);
    EXPECT_EQ(call(args).code, kUsage) << ::testing::PrintToString(args);
  }
}

TEST(ExpandElls, Forms) {
  EXPECT_EQ(expand_ells("j", 4), (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(expand_ells("3", 3), (std::vector<std::uint64_t>{3, 3, 3}));
  EXPECT_EQ(expand_ells("5,1,2,9", 3), (std::vector<std::uint64_t>{5, 1, 2}));
  EXPECT_THROW(expand_ells("1,x", 2), UsageError);
}

TEST(Execute, VerifyExitCodes) {
  const Result built = call({"construct-b", "--set", "gen poly_runs 2", "--ells", "1", "--k", "3"});
  ASSERT_EQ(built.code, kOk) << built.err;
  const auto seq = nlohmann::json::parse(built.out);
  EXPECT_EQ(seq["bs"], nlohmann::json({"1", "9", "169"}));

  const std::string good = temp_file("good.json", built.out);
  const Result ok = call({"verify", "--set", "gen poly_runs 2", "--input", good, "--k", "3"});
  EXPECT_EQ(ok.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["status"], "Pass");

  auto corrupted = seq;
  corrupted["bs"][1] = "8";
  const std::string bad = temp_file("bad.json", corrupted.dump());
  const Result fail = call({"verify", "--set", "gen poly_runs 2", "--input", bad, "--k", "3"});
  EXPECT_EQ(fail.code, kFailed);
  const auto verdict = nlohmann::json::parse(fail.out);
  EXPECT_EQ(verdict["status"], "Fail");
  EXPECT_EQ(verdict["witness"], "8");
  EXPECT_EQ(verdict["subset"], nlohmann::json({2}));

  const Result none = call({"construct-b", "--set", "gen congruence 2 1", "--ells", "2"});
  EXPECT_EQ(none.code, kResource);
  EXPECT_NE(none.err.find("step 1"), std::string::npos);
}

TEST(Execute, ResourceAndInputErrors) {
  EXPECT_EQ(call({"construct-b", "--set", "gen pow_runs 4", "--ells", "1", "--k", "4"}).code, kResource);
  EXPECT_EQ(call({"runs", "--set", "run 1 3", "--min-len", "5"}).code, kResource);
  EXPECT_EQ(call({"profile", "--set", "run 1 3;run 2 2"}).code, kUsage);
  EXPECT_EQ(call({"profile", "--set", "gen nope"}).code, kUsage);
  EXPECT_EQ(call({"profile", "--set-file", "/nonexistent/banach.set"}).code, kUsage);
  EXPECT_EQ(call({"verify", "--set", "gen full", "--input", temp_file("junk.json", "{not json")}).code, kUsage);
  EXPECT_EQ(call({"runs", "--set", "gen full", "--window", "0:16", "--d", "2"}).code, kUsage);
  EXPECT_EQ(call({"escape", "--t", "5", "--i-max", "1"}).code, kUsage);
}

TEST(Execute, ProfileJsonAndCsv) {
  const Result json = call({"profile", "--set", "gen congruence 2 1", "--window", "0:8"});
  ASSERT_EQ(json.code, kOk);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["f"], nlohmann::json({1, 1, 2, 2, 3, 3, 4, 4}));
  EXPECT_EQ(j["density"]["num"], 1);
  EXPECT_EQ(j["density"]["den"], 2);
  EXPECT_EQ(j["density"]["argmin"], 2);
  EXPECT_EQ(j["forced_density"]["den"], "2");

  const Result csv = call({"profile", "--set", "gen congruence 2 1", "--window", "0:4", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,f,fn_over_n\n1,1,1/1\n2,1,1/2\n3,2,2/3\n4,2,1/2\n");
}

TEST(Execute, FamilyAndDisjointness) {
  const Result fam = call({"family", "--set", "gen poly_runs 2", "--ells", "1", "--k", "4", "--k-sets", "2"});
  ASSERT_EQ(fam.code, kOk) << fam.err;
  const auto j = nlohmann::json::parse(fam.out);
  EXPECT_EQ(j["verdict"]["status"], "Pass");
  EXPECT_EQ(j["index_sets"], nlohmann::json({{1, 3}, {2, 4}}));
}

TEST(Execute, EscapeApReduceRunsGen) {
  const Result esc = call({"escape", "--t", "5", "--i-max", "30"});
  EXPECT_EQ(esc.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(esc.out)["all_escaped"], true);

  const Result ap = call({"ap-reduce", "--set", "gen congruence 7 3", "--window", "0:700", "--m0", "10"});
  ASSERT_EQ(ap.code, kOk);
  const auto red = nlohmann::json::parse(ap.out);
  EXPECT_EQ(red["m"], 7);
  EXPECT_EQ(red["r"], 3);

  const Result runs = call({"runs", "--set", "gen poly_runs 3", "--min-len", "3", "--from", "10"});
  ASSERT_EQ(runs.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(runs.out)["next_run"]["start"], "27");

  const Result gen = call({"gen", "--set", "gen pow_runs 4;shift 3"});
  EXPECT_EQ(gen.code, kOk);
  EXPECT_EQ(parse_set(gen.out), translate(IntSet::pow_runs(4), 3));
  const Result window = call({"gen", "--set", "gen pow_runs 4", "--window", "0:20"});
  EXPECT_EQ(window.out, "run 4 1\nrun 16 2\n");
}

TEST(Execute, DeterministicOutput) {
  const std::vector<std::string> args{"family", "--set", "gen poly_runs 3", "--k", "4", "--k-sets", "3"};
  const Result a = call(args);
  const Result b = call(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Execute, HelpExitsZero) {
  const Result help = call({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("profile"), std::string::npos);
}

}  // namespace
}  // namespace banach::cli
