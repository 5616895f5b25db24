#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "config.hpp"
#include "suites.hpp"
#include "zetasphere/errors.hpp"

using namespace zetasphere;
using namespace zetasphere::cli;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("zetasphere_test_" + name);
}

}  // namespace

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("2"), Complex(2.0, 0.0));
  EXPECT_EQ(parse_complex("-3.5i"), Complex(0.0, -3.5));
  EXPECT_EQ(parse_complex("0.5+14.1i"), Complex(0.5, 14.1));
  EXPECT_EQ(parse_complex("0.5-14.1j"), Complex(0.5, -14.1));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), Complex(1e-3, 20.0));
  EXPECT_THROW(parse_complex(""), DomainError);
  EXPECT_THROW(parse_complex("abc"), DomainError);
  EXPECT_THROW(parse_complex("1+2"), DomainError);
}

TEST(ParseRange, CountsInclusiveEndpoints) {
  const auto r = parse_range("0:50:0.05");
  EXPECT_EQ(r.count(), 1001U);
  EXPECT_DOUBLE_EQ(r.at(1000), 50.0);
  EXPECT_THROW(parse_range("1:0:0.1"), DomainError);
  EXPECT_THROW(parse_range("0:1:0"), DomainError);
  EXPECT_THROW(parse_range("0:1"), DomainError);
}

TEST(Config, ParseAndDigest) {
  const Config defaults;
  EXPECT_EQ(defaults.canonical(), "flow_a=0.10000000000000001\nflow_t=1\nscan_step=0.25\nworkers=1\n");
  const Config c = parse_config("# comment\n\nworkers = 4\nscan_step=0.5\n");
  EXPECT_EQ(c.workers, 4);
  EXPECT_EQ(c.scan_step, 0.5);
  EXPECT_EQ(c.digest().size(), 16U);
  EXPECT_NE(c.digest(), defaults.digest());
  EXPECT_EQ(parse_config("scan_step=0.5\nworkers=4").digest(), c.digest());
  EXPECT_THROW(parse_config("colour=blue"), DomainError);
  EXPECT_THROW(parse_config("workers"), DomainError);
  EXPECT_THROW(parse_config("workers=many"), DomainError);
}

TEST(Config, Fnv1a) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Config, LoadFromEnvironment) {
  const auto path = temp_file("conf");
  std::ofstream(path) << "workers=3\n";
  ::setenv("ZETASPHERE_CONFIG", path.c_str(), 1);
  EXPECT_EQ(load_config().workers, 3);
  ::setenv("ZETASPHERE_CONFIG", (path.string() + ".missing").c_str(), 1);
  EXPECT_THROW(load_config(), DomainError);
  ::unsetenv("ZETASPHERE_CONFIG");
  std::filesystem::remove(path);
}

TEST(Cli, EvalZetaAtTwo) {
  const auto r = invoke({"eval", "zeta", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("1.64493406684822", 0), 0U) << r.out;
}

TEST(Cli, EvalJson) {
  const auto r = invoke({"eval", "completed", "0.5", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["value"]["re"].get<double>(), -3.97696622550651, 1e-12);
  EXPECT_TRUE(j.contains("note"));
}

TEST(Cli, EvalPoleIsAnError) {
  const auto r = invoke({"eval", "zeta", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("residue"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "zeta", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"zeros", "--workers", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, ZerosCsv) {
  const auto r = invoke({"zeros", "--from", "0", "--to", "50"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 12U);
  EXPECT_EQ(rows[0], "# zetasphere v0.1.0");
  EXPECT_EQ(rows[1], "ordinate,residual,criterion");
  EXPECT_EQ(rows[2].rfind("14.13472514", 0), 0U);
}

TEST(Cli, ZerosJsonIsDeterministicAcrossWorkers) {
  const auto one = invoke({"zeros", "--from", "10", "--to", "40", "--format", "json", "--workers", "1"});
  const auto four = invoke({"zeros", "--from", "10", "--to", "40", "--format", "json", "--workers", "4"});
  ASSERT_EQ(one.code, kExitOk);
  const auto a = nlohmann::json::parse(one.out);
  const auto b = nlohmann::json::parse(four.out);
  EXPECT_EQ(a["zeros"], b["zeros"]);
  EXPECT_EQ(a["zeros"].size(), 6U);
}

TEST(Cli, VerifyJsonSchema) {
  ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  const auto path = temp_file("report.json");
  const auto r = invoke({"verify", "--suite", "flow", "--json", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  ASSERT_TRUE(j["items"].is_array());
  for (const auto& item : j["items"]) {
    for (const char* key : {"name", "target", "computed", "tolerance", "status"}) EXPECT_TRUE(item.contains(key)) << key;
  }
  EXPECT_EQ(j["meta"]["timestamp"], "2023-11-14T22:13:20Z");
  EXPECT_EQ(j["meta"]["suite"], "flow");
  EXPECT_EQ(j["meta"]["config_digest"], Config{}.digest());

  const auto again = temp_file("report2.json");
  invoke({"verify", "--suite", "flow", "--json", again.string()});
  std::ifstream in2(again);
  EXPECT_EQ(nlohmann::json::parse(in2), j);
  std::filesystem::remove(path);
  std::filesystem::remove(again);
  ::unsetenv("SOURCE_DATE_EPOCH");
}

TEST(Cli, VerifyFlagsDiscrepanciesWithoutFailing) {
  const auto r = invoke({"verify", "--suite", "table1"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("discrepancy"), std::string::npos);
}

TEST(Cli, ExtendPrintedAnchor) {
  const auto r = invoke({"extend", "--paper-anchor"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("c = 6.80"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("b = 2"), std::string::npos);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
  EXPECT_NE(r.out.find("discrepancy vs printed 6.8046"), std::string::npos);
}

TEST(Cli, PlotdataZline) {
  const auto r = invoke({"plotdata", "--what", "zline"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1003U);
  EXPECT_EQ(rows[0], "# zetasphere v0.1.0");
  EXPECT_EQ(rows[1].rfind("# columns:", 0), 0U);
}

TEST(Cli, PlotdataToFile) {
  const auto path = temp_file("fabs.csv");
  const auto r = invoke({"plotdata", "--what", "fabs", "--range", "0.1:0.9:0.4", "--yrange", "1:2:1", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(lines(buf.str()).size(), 2U + 3U * 2U);
  std::filesystem::remove(path);
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().back(), "all");
  EXPECT_THROW(run_suite("nope", Config{}), DomainError);
}

TEST(Cli, EverySuiteRunsWithoutFailures) {
  const auto r = invoke({"verify", "--suite", "all"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(" 0 fail,"), std::string::npos) << lines(r.out).back();
}
