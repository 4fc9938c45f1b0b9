#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "effmodel/error.hpp"
#include "effmodel/model/report.hpp"
#include "effmodel_cli/cli.hpp"

using namespace effmodel;
using namespace effmodel::cli;

namespace {

struct Outcome {
  int code;
  std::string out, log;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, log;
  int code = main_entry(args, out, log);
  return {code, out.str(), log.str()};
}

// Run the installed binary through the shell and capture stdout.
std::string run_binary(const std::string& args) {
  std::string cmd = std::string(EFFMODEL_BINARY) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, n);
  return out;
}

}  // namespace

TEST(ParseArgs, DegenerateRegimeB) {
  auto cmd = parse_args({"degenerate", "--p", "3", "--m1", "-9", "--m2", "0"});
  auto* d = std::get_if<DegenerateCommand>(&cmd);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->spec.regime, model::Regime::B);
  EXPECT_EQ(d->spec.n1, 1);
  EXPECT_EQ(d->format, Format::Text);
}

TEST(ParseArgs, ClassicalWittAdd) {
  auto cmd = parse_args({"witt", "add", "--p", "2", "--lambda", "1", "--a1", "x1", "--a2", "x2", "--b1", "y1",
                         "--b2", "y2"});
  auto* w = std::get_if<WittCommand>(&cmd);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->op, "add");
  EXPECT_EQ(w->lambda, ring::BaseElement::constant(2, 1));
  ASSERT_EQ(w->operands.size(), 2u);
  EXPECT_EQ(w->operands[1].first.to_string(), "y1");
}

TEST(ParseArgs, Rejections) {
  EXPECT_THROW(parse_args({"degenerate", "--p", "4", "--m1", "0", "--m2", "-4"}), UsageError);
  EXPECT_THROW(parse_args({"degenerate", "--p", "3", "--m1", "1", "--m2", "1"}), UnsupportedRegime);
  EXPECT_THROW(parse_args({"degenerate", "--p", "3", "--m1", "0", "--m2", "-3", "--bogus"}), UsageError);
  EXPECT_THROW(parse_args({"witt", "neg", "--p", "3", "--a1", "u1 *", "--a2", "u2"}), UsageError);
  EXPECT_THROW(parse_args({"hopf", "check", "--p", "3", "--lambda", "u1"}), UsageError);
  EXPECT_THROW(parse_args({"sweep", "--p-list", "3,9", "--out", "x.json"}), UsageError);
  EXPECT_THROW(parse_args({"verify", "--primes", "3,6"}), UsageError);
  EXPECT_THROW(parse_args({"degenerate", "--p", "3", "--m1", "0", "--m2", "-3", "--format", "xml"}), UsageError);
  EXPECT_THROW(parse_args({}), UsageError);
}

TEST(ParseArgs, SweepGrid) {
  auto cmd = parse_args({"sweep", "--p-list", "3,5", "--regimes", "B", "--n1-max", "2", "--out", "r.json"});
  auto& s = std::get<SweepCommand>(cmd);
  ASSERT_EQ(s.specs.size(), 4u);
  EXPECT_EQ(s.specs[1], model::ConductorSpec::regime_b(3, 2));
  EXPECT_EQ(s.specs[2], model::ConductorSpec::regime_b(5, 1));
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(invoke({"degenerate", "--p", "3", "--m1", "0", "--m2", "-3"}).code, kOk);
  auto unsupported = invoke({"degenerate", "--p", "3", "--m1", "1", "--m2", "1"});
  EXPECT_EQ(unsupported.code, kUnsupported);
  EXPECT_NE(unsupported.log.find("unsupported regime"), std::string::npos);
  EXPECT_TRUE(unsupported.out.empty());
  auto usage = invoke({"degenerate", "--p", "4", "--m1", "0", "--m2", "-4"});
  EXPECT_EQ(usage.code, kUsage);
  EXPECT_NE(usage.log.find("p must be prime"), std::string::npos);
  EXPECT_EQ(invoke({"hopf", "check", "--p", "2"}).code, kUsage);
  auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("degenerate"), std::string::npos);
}

TEST(Witt, TextAndJson) {
  auto t = invoke({"witt", "add", "--p", "3", "--lambda", "pi", "--a1", "x", "--a2", "0", "--b1", "y", "--b2", "0"});
  EXPECT_EQ(t.out, "(x + y, pi*x^2*y + pi*x*y^2)\n");
  auto j = invoke({"witt", "frobenius", "--p", "3", "--a1", "x", "--a2", "y", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out), (nlohmann::json{{"first", "x^3"}, {"second", "y^3"}}));
}

TEST(Hopf, CheckJson) {
  auto r = invoke({"hopf", "check", "--p", "3", "--lambda", "pi^4", "--nu", "pi^2", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 9);
  EXPECT_EQ(j["fiber_class"], "Product(AlphaP,AlphaP)");
  EXPECT_TRUE(j["coassoc"] && j["counit"] && j["relations"] && j["antipode"]);
}

TEST(Verify, PrimeTwoSkipsKernelRows) {
  auto r = invoke({"verify", "--primes", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("skipped (p=2)"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Verify, RowsInGivenOrder) {
  auto r = invoke({"verify", "--primes", "5,3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_LT(r.out.find("\n5 "), r.out.find("\n3 "));
}

TEST(Report, TextMatchesJson) {
  auto text = invoke({"degenerate", "--p", "5", "--m1", "-25", "--m2", "0"});
  auto json = invoke({"degenerate", "--p", "5", "--m1", "-25", "--m2", "0", "--format", "json"});
  ASSERT_EQ(text.code, kOk);
  EXPECT_EQ(model::text_to_json(text.out), nlohmann::json::parse(json.out));
}

TEST(Sweep, WritesOrderedArray) {
  auto path = std::filesystem::temp_directory_path() / "effmodel_sweep_test.json";
  auto r = invoke({"sweep", "--p-list", "5,3", "--regimes", "A,B", "--n1-max", "1", "--out", path.string()});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.log.find("4 reports"), std::string::npos);
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  ASSERT_EQ(j.size(), 4u);
  std::vector<std::pair<int, std::string>> order;
  for (const auto& x : j) order.emplace_back(x["spec"]["p"], x["spec"]["regime"]);
  EXPECT_EQ(order, (std::vector<std::pair<int, std::string>>{{5, "A"}, {5, "B"}, {3, "A"}, {3, "B"}}));
  std::filesystem::remove(path);
}

TEST(Binary, DeterministicJson) {
  const std::string args = "degenerate --p 3 --m1 -9 --m2 0 --format json";
  auto first = run_binary(args);
  ASSERT_FALSE(first.empty());
  EXPECT_EQ(first, run_binary(args));
  EXPECT_EQ(nlohmann::json::parse(first), nlohmann::json::parse(invoke({"degenerate", "--p", "3", "--m1", "-9",
                                                                        "--m2", "0", "--format", "json"})
                                                                    .out));
}
