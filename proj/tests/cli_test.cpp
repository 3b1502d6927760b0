#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "barbell/cli.hpp"
#include "barbell/errors.hpp"
#include "barbell/theorems.hpp"

using namespace barbell;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tempFile(const std::string& name, const std::string& body) {
  const auto dir = std::filesystem::temp_directory_path() / ("barbell_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << body;
  return path;
}

std::string scenarioPath(const std::string& name) {
  return (std::filesystem::path(BARBELL_SOURCE_DIR) / "scenarios" / name).string();
}

}  // namespace

TEST(Cli, PassingTheoremExitsZero) {
  const CliRun r = cli({"theorem", "morsesimple-s3", "--k", "2", "--l", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("== morsesimple-s3 (k=2 l=3) =="), std::string::npos);
  EXPECT_NE(r.out.find("  dim "), std::string::npos);
  EXPECT_NE(r.out.find("PASS (2/2 checks)"), std::string::npos);
}

TEST(Cli, FailedCheckExitsOne) {
  const auto path = tempFile("wrong.json", R"({
    "geometry": "torus", "field": "f2",
    "barbells": [{"cuff1": "S_h", "cuff2": "S_h", "holonomy": 1},
                 {"cuff1": "S_v", "cuff2": "S_v", "holonomy": 1}],
    "attaching": ["S_v"], "disks": ["D_v"],
    "expected": {"dim": 7}})");
  const CliRun r = cli({"scenario", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("  FAIL dim: expected 7, got 6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("FAIL (0/1 checks)"), std::string::npos) << r.out;
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(cli({"theorem", "morsesimple-s3", "--k", "0", "--l", "1"}).code, 2);
  EXPECT_EQ(cli({"theorem", "genus1-handlebody", "--m", "50", "--k", "1"}).code, 2);
  EXPECT_EQ(cli({"theorem", "no-such-theorem"}).code, 2);
  EXPECT_EQ(cli({"theorem", "morsesimple-s3", "--k", "abc", "--l", "1"}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--format", "xml", "list"}).code, 2);
  EXPECT_EQ(cli({"scenario", "/nonexistent.json"}).code, 2);
  const auto bad = tempFile("bad.json", "{ not json");
  const CliRun r = cli({"scenario", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpIsLongFormOnly) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("theorem"), std::string::npos);
  // -h is not a help alias because --h is a run parameter.
  EXPECT_EQ(cli({"-h"}).code, 2);
}

TEST(Cli, ListNamesEverything) {
  const CliRun r = cli({"list"});
  EXPECT_EQ(r.code, 0);
  for (const auto& name : theoremNames()) EXPECT_NE(r.out.find(name), std::string::npos) << name;
  for (const auto& name : sweepNames()) EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, EmptyReportPrintsHeaderOnly) {
  EXPECT_EQ(emitReport(Report{"empty", {}, {}, {}, {}, {}}, Format::Table), "== empty ==\n");
  EXPECT_EQ(emitReport(Report{"empty", Params{{"k", "1"}}, {}, {}, {}, {}}, Format::Table), "== empty (k=1) ==\n");
}

TEST(Cli, MachineRoundTrip) {
  const Report r = runTheorem("simple-5d", Params{{"k", "3"}});
  const std::string text = emitReport(r, Format::Machine);
  const Report back = parseMachineReport(text);
  EXPECT_EQ(back, r);
  EXPECT_EQ(emitReport(back, Format::Machine), text);
  EXPECT_EQ(rerunReport(back), r);
  EXPECT_THROW(parseMachineReport("[1]"), InvalidArgument);
  EXPECT_THROW(parseMachineReport("nope"), InvalidArgument);
}

TEST(Cli, ScenarioReportReplays) {
  const std::string path = scenarioPath("simple5d_k2.json");
  const CliRun first = cli({"--format", "machine", "scenario", path});
  ASSERT_EQ(first.code, 0) << first.err;
  const auto saved = tempFile("replay.json", first.out);
  const CliRun again = cli({"--format", "machine", "scenario", saved.string()});
  EXPECT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(again.out, first.out);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"--format", "machine", "sweep", "morsesimple-s3", "--max", "4"};
  const CliRun a = cli(args);
  const CliRun b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutWritesFile) {
  const auto target = tempFile("report.txt", "");
  const CliRun r = cli({"--out", target.string(), "theorem", "unknots"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(target);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_NE(body.str().find("== unknots"), std::string::npos);
}
