#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "ortho/cli.hpp"

namespace ortho::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::string& group, Command command, OutputFormat format = OutputFormat::text,
              std::size_t jobs = 1) {
  RunConfig config;
  config.group_spec = group;
  config.command = command;
  config.format = format;
  config.jobs = jobs;
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(GroupSpecParsing, Accepted) {
  EXPECT_EQ(parse_group_spec("cyclic:7").cyclic_factors, std::vector<std::size_t>{7});
  EXPECT_EQ(parse_group_spec("z2xz4").cyclic_factors, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(parse_group_spec("klein").cyclic_factors, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(parse_group_spec("product:cyclic:3,cyclic:3").order(), 9u);
  EXPECT_EQ(parse_group_spec("product:klein,cyclic:2").cyclic_factors, (std::vector<std::size_t>{2, 2, 2}));
}

TEST(GroupSpecParsing, Rejected) {
  for (const char* bad : {"", "cyclic:", "cyclic:0", "cyclic:x", "cyclic:-3", "dihedral:4", "product:cyclic:2",
                          "cyclic:99999"})
    EXPECT_THROW(parse_group_spec(bad), std::invalid_argument) << bad;
}

TEST(Run, EnumerateZ2xZ4) {
  const auto r = invoke("z2xz4", Command::enumerate);
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(first_line(r.out), "48");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 49);
}

TEST(Run, EnumerateCyclicFourIsEmpty) {
  const auto r = invoke("cyclic:4", Command::enumerate);
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Run, EnumerateCycles) {
  const auto r = invoke("cyclic:3", Command::enumerate, OutputFormat::cycles);
  EXPECT_EQ(r.out, "1\n(1 2)\n");
}

TEST(Run, CliqueNumber) {
  EXPECT_EQ(invoke("z2xz4", Command::clique).out, "2\n");
  EXPECT_EQ(invoke("klein", Command::clique).out, "2\n");
}

TEST(Run, ClassifyCounts) {
  const auto r = invoke("z2xz4", Command::classify);
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_TRUE(r.out.starts_with("I 8\nII 16\nIII 16\nIV 8\n")) << r.out;
}

TEST(Run, ClassifyNeedsZ2xZ4) { EXPECT_EQ(invoke("klein", Command::classify).code, exit_code::kUsage); }

TEST(Run, ErrorsMapToExitCodes) {
  EXPECT_EQ(invoke("nonsense", Command::enumerate).code, exit_code::kUsage);
  EXPECT_EQ(invoke("cyclic:13", Command::enumerate).code, exit_code::kBoundExceeded);
  EXPECT_EQ(invoke("product:cyclic:4,cyclic:4", Command::graph).code, exit_code::kBoundExceeded);
  EXPECT_EQ(invoke("z2xz4", Command::clique, OutputFormat::dot).code, exit_code::kUsage);
  EXPECT_EQ(invoke("z2xz4", Command::graph, OutputFormat::cycles).code, exit_code::kUsage);
}

TEST(Run, VerifyZ2xZ4ReportsFailingStatement) {
  const auto r = invoke("z2xz4", Command::verify);
  EXPECT_EQ(r.code, exit_code::kVerificationFailed);
  EXPECT_NE(r.out.find("THM1-COUNT PASS\n"), std::string::npos);
  EXPECT_NE(r.out.find("PROP4 FAIL "), std::string::npos);
  EXPECT_NE(r.err.find("PROP4"), std::string::npos);
}

TEST(Run, VerifySmallGroupsPass) {
  for (const char* g : {"klein", "cyclic:3", "cyclic:5"}) {
    const auto r = invoke(g, Command::verify);
    EXPECT_EQ(r.code, exit_code::kOk) << g << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST(Run, OutputIsIndependentOfJobs) {
  for (Command c : {Command::enumerate, Command::graph, Command::verify, Command::latin}) {
    const auto one = invoke("z2xz4", c, OutputFormat::text, 1);
    const auto many = invoke("z2xz4", c, OutputFormat::text, 4);
    EXPECT_EQ(one.out, many.out);
    EXPECT_EQ(one.code, many.code);
  }
  EXPECT_EQ(invoke("z2xz4", Command::graph, OutputFormat::json, 1).out,
            invoke("z2xz4", Command::graph, OutputFormat::json, 3).out);
}

TEST(Run, JsonOutputsCarrySchema) {
  for (Command c : {Command::enumerate, Command::classify, Command::graph, Command::clique, Command::verify,
                    Command::latin}) {
    const auto r = invoke("z2xz4", c, OutputFormat::json);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["schema"], 1);
  }
  const auto doc = nlohmann::json::parse(invoke("z2xz4", Command::enumerate, OutputFormat::json).out);
  EXPECT_EQ(doc["count"], 48);
  EXPECT_EQ(doc["orthomorphisms"].size(), 48u);
}

TEST(Run, DotGraph) {
  const auto r = invoke("klein", Command::graph, OutputFormat::dot);
  EXPECT_TRUE(r.out.starts_with("graph orth {\n"));
  EXPECT_NE(r.out.find("  0 -- 1;\n"), std::string::npos);
}

TEST(Run, LatinReportsAgreement) {
  const auto r = invoke("z2xz4", Command::latin);
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_NE(r.out.find("oracle agree 1128 pairs"), std::string::npos);
}

TEST(Run, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "orthograph_cli_test.txt";
  RunConfig config;
  config.group_spec = "z2xz4";
  config.command = Command::clique;
  config.output_path = path.string();
  std::ostringstream out, err;
  EXPECT_EQ(run(config, out, err), exit_code::kOk);
  EXPECT_TRUE(out.str().empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "2");
  std::filesystem::remove(path);
}

int exit_status(const std::string& args) {
  const std::string cmd = std::string(ORTHOGRAPH_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(exit_status("enumerate --group z2xz4"), 0);
  EXPECT_EQ(exit_status("clique --group z2xz4 --jobs 2"), 0);
  EXPECT_EQ(exit_status("verify --group klein"), 0);
  EXPECT_EQ(exit_status("verify --group z2xz4"), 1);
  EXPECT_EQ(exit_status("enumerate --group bogus"), 2);
  EXPECT_EQ(exit_status("frobnicate --group z2xz4"), 2);
  EXPECT_EQ(exit_status("enumerate"), 2);
  EXPECT_EQ(exit_status("enumerate --group cyclic:13"), 3);
  EXPECT_EQ(exit_status("enumerate --group cyclic:3 --max-order 2"), 3);
  EXPECT_EQ(exit_status("--help"), 0);
}

}  // namespace
}  // namespace ortho::cli
