#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "wss/constructions.hpp"
#include "wss/corpus.hpp"
#include "wss/report.hpp"
#include "wss/statements.hpp"
#include "wss/verification.hpp"

using namespace wss;

namespace {

const std::filesystem::path kSource(WSS_SOURCE_DIR);

std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& e : builtin_corpus()) {
    if (e.order <= 24) out.push_back(std::move(e));
  }
  return out;
}

std::string json_of(const VerificationRun& run) {
  std::ostringstream os;
  write_json(os, run);
  return os.str();
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(Report, DeterministicAcrossRunsAndJobs) {
  VerifyOptions opt;
  opt.statements = {"thmB", "Q1.3", "L2.7", "hierarchy"};
  const auto corpus = small_corpus();
  const std::string a = json_of(run_verification(corpus, opt));
  const std::string b = json_of(run_verification(corpus, opt));
  opt.jobs = 4;
  const std::string c = json_of(run_verification(corpus, opt));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Report, Shape) {
  VerifyOptions opt;
  opt.statements = {"thmB", "L2.6"};
  opt.max_order = 24;
  const VerificationRun run = run_verification(small_corpus(), opt);
  const auto j = report_to_json(run);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["summary"]["inconsistent"], 0);
  EXPECT_EQ(j["verdicts"].size(), run.verdicts.size());
  EXPECT_FALSE(j.contains("timing_seconds"));
  ASSERT_FALSE(j["verdicts"].empty());
  const auto& v = j["verdicts"][0];
  for (const char* k : {"group", "order", "statement", "hypothesis_satisfied", "consistent", "hypothesis"}) {
    EXPECT_TRUE(v.contains(k)) << k;
  }
  EXPECT_TRUE(v["hypothesis"].contains("per_prime"));
  // L2.6 is capped at 720, below nothing here, so no restriction is listed.
  EXPECT_TRUE(j["restrictions"].empty());
  EXPECT_TRUE(report_to_json(run, {true}).contains("timing_seconds"));
}

TEST(Report, RestrictionsArePrinted) {
  VerifyOptions opt;
  opt.statements = {"L2.6"};
  opt.max_order = 1000;
  std::vector<CorpusEntry> one{*builtin_group("A5")};
  const auto j = report_to_json(run_verification(one, opt));
  ASSERT_EQ(j["restrictions"].size(), 1u);
  EXPECT_EQ(j["restrictions"][0]["statement"], "L2.6");
  EXPECT_EQ(j["restrictions"][0]["max_order"], 720);
}

TEST(Report, Csv) {
  VerifyOptions opt;
  opt.statements = {"thmB", "hierarchy"};
  const VerificationRun run = run_verification(small_corpus(), opt);
  std::ostringstream os;
  write_csv(os, run);
  EXPECT_EQ(count_lines(os.str()), run.verdicts.size() + 1);
  EXPECT_EQ(os.str().rfind("group,", 0), 0u);
}

TEST(Report, CapErrorsAreReported) {
  VerifyOptions opt;
  opt.statements = {"hierarchy"};
  opt.lattice_cap = 10;
  std::vector<CorpusEntry> one{*builtin_group("S4")};
  const VerificationRun run = run_verification(one, opt);
  ASSERT_EQ(run.cap_errors.size(), 1u);
  EXPECT_TRUE(run.verdicts.empty());
  EXPECT_EQ(report_to_json(run)["cap_errors"].size(), 1u);
}

TEST(Dot, S4) {
  const auto l = enumerate_subgroups(symmetric_group(4));
  std::ostringstream os;
  write_lattice_dot(os, l, "S4");
  const std::string s = os.str();
  const std::regex node(R"(^\s*c\d+ \[)");
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    if (std::regex_search(line, node)) ++nodes;
    if (line.find("->") != std::string::npos) ++edges;
  }
  EXPECT_EQ(nodes, 11u);
  EXPECT_GE(edges, 10u);
  EXPECT_NE(s.find("24×1"), std::string::npos);
  EXPECT_NE(s.find("4×3"), std::string::npos);  // the three cyclic subgroups of order 4
  EXPECT_EQ(s.rfind("digraph", 0), 0u);
}

TEST(Golden, SampleDirectory) {
  VerifyOptions opt;
  // Same run as `wss verify --corpus data/groups --report tests/golden/sample_report.json`.
  opt.statements = expand_statements("all");
  opt.corpus_label = "data/groups";
  const VerificationRun run = run_verification(load_corpus_dir(kSource / "data" / "groups"), opt);
  std::ifstream in(kSource / "tests" / "golden" / "sample_report.json", std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(json_of(run), want.str());
}
