#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclebound/search.hpp"

using namespace cyclebound;
namespace fs = std::filesystem;

namespace {

class Search : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cyclebound_search_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static ScanConfig config(int n = 6) {
    ScanConfig cfg;
    cfg.stream.kind = StreamSpec::Kind::kEnumerate;
    cfg.stream.n = n;
    cfg.statements = {StatementId::kThmE, StatementId::kThm1, StatementId::kLemC};
    return cfg;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Search, ConfigRoundTrip) {
  ScanConfig cfg = config();
  cfg.budget_ms = 250;
  cfg.workers = 3;
  cfg.output = "rows.jsonl";
  cfg.limit = 40;
  cfg.seed = 9;
  cfg.resume = ScanCursor{"enum:n=6", 5, 5};
  EXPECT_EQ(scan_config_from_json(to_json(cfg)), cfg);
  ScanConfig rnd;
  rnd.stream.kind = StreamSpec::Kind::kRandom;
  rnd.stream.n = 9;
  rnd.stream.p = 0.3;
  rnd.stream.count = 12;
  rnd.statements = {StatementId::kThmA};
  EXPECT_EQ(scan_config_from_json(to_json(rnd)), rnd);
  EXPECT_THROW(scan_config_from_json(Json::parse(R"({"stream":{}})")), ScanError);
}

TEST_F(Search, CursorRoundTrip) {
  const ScanCursor c{"x", 17, 4};
  EXPECT_EQ(scan_cursor_from_json(to_json(c)), c);
  EXPECT_THROW(scan_cursor_from_json(Json::parse("[]")), ScanError);
}

TEST_F(Search, RepeatedScansAreByteIdentical) {
  ScanConfig cfg = config();
  cfg.output = path("a.jsonl");
  const ScanOutcome a = run_scan(cfg);
  cfg.output = path("b.jsonl");
  const ScanOutcome b = run_scan(cfg);
  EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("b.jsonl")));
  EXPECT_EQ(a.graphs, 112);
  EXPECT_EQ(a.checked, 3 * 112);
  EXPECT_EQ(a.checked, a.held + a.vacuous + a.candidates + a.unknown);
  EXPECT_EQ(a.candidates, 0);
  EXPECT_EQ(a.unknown, 0);
  EXPECT_TRUE(a.exhausted);
  EXPECT_EQ(exit_code(a), 0);
  EXPECT_EQ(a.cursor, b.cursor);
}

TEST_F(Search, ParallelMatchesSerial) {
  ScanConfig cfg = config();
  cfg.output = path("serial.jsonl");
  run_scan(cfg);
  cfg.workers = 4;
  cfg.output = path("parallel.jsonl");
  run_scan(cfg);
  EXPECT_EQ(slurp(path("serial.jsonl")), slurp(path("parallel.jsonl")));
}

TEST_F(Search, SinkReceivesTheSameRows) {
  ScanConfig cfg = config(5);
  cfg.output = path("rows.jsonl");
  std::ostringstream sink;
  run_scan(cfg, &sink);
  EXPECT_EQ(sink.str(), slurp(path("rows.jsonl")));
  std::istringstream lines(sink.str());
  std::string line;
  std::uint64_t expect_idx = 0;
  int k = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    EXPECT_EQ(j["idx"].get<std::uint64_t>(), expect_idx);
    if (++k % 3 == 0) ++expect_idx;
  }
}

TEST_F(Search, SplitAndResumeEqualsOneShot) {
  ScanConfig cfg = config();
  cfg.output = path("full.jsonl");
  const ScanOutcome full = run_scan(cfg);

  cfg.output = path("part1.jsonl");
  cfg.limit = 37;
  const ScanOutcome first = run_scan(cfg);
  EXPECT_EQ(first.graphs, 37);
  EXPECT_FALSE(first.exhausted);
  cfg.output = path("part2.jsonl");
  cfg.limit.reset();
  const ScanOutcome second = resume_scan(cfg, first.cursor);
  EXPECT_EQ(first.graphs + second.graphs, full.graphs);
  EXPECT_EQ(second.cursor, full.cursor);
  EXPECT_EQ(slurp(path("part1.jsonl")) + slurp(path("part2.jsonl")), slurp(path("full.jsonl")));

  // Same thing appending to one file, in three pieces.
  cfg.output = path("appended.jsonl");
  cfg.limit = 50;
  ScanOutcome o = run_scan(cfg);
  cfg.append = true;
  cfg.limit = 20;
  o = resume_scan(cfg, o.cursor);
  cfg.limit.reset();
  o = resume_scan(cfg, o.cursor);
  EXPECT_TRUE(o.exhausted);
  EXPECT_EQ(slurp(path("appended.jsonl")), slurp(path("full.jsonl")));
}

TEST_F(Search, ResumeThroughConfig) {
  ScanConfig cfg = config(5);
  cfg.output = path("full.jsonl");
  run_scan(cfg);
  cfg.output = path("split.jsonl");
  cfg.limit = 5;
  const ScanOutcome first = run_scan(cfg);
  cfg.limit.reset();
  cfg.append = true;
  cfg.resume = first.cursor;
  run_scan(cfg);
  EXPECT_EQ(slurp(path("split.jsonl")), slurp(path("full.jsonl")));
}

TEST_F(Search, AppendRepairsTruncatedOutput) {
  ScanConfig cfg = config();
  cfg.output = path("full.jsonl");
  run_scan(cfg);
  const std::string full = slurp(path("full.jsonl"));

  cfg.output = path("crash.jsonl");
  cfg.limit = 30;
  const ScanOutcome first = run_scan(cfg);
  // Simulate a crash that lost the end of the file mid-graph, mid-line.
  std::string text = slurp(path("crash.jsonl"));
  text.resize(text.size() - 200);
  std::ofstream(path("crash.jsonl"), std::ios::binary | std::ios::trunc) << text;
  cfg.append = true;
  cfg.limit.reset();
  resume_scan(cfg, first.cursor);
  EXPECT_EQ(slurp(path("crash.jsonl")), full);
}

TEST_F(Search, AppendDropsRowsPastTheCursor) {
  ScanConfig cfg = config(5);
  cfg.output = path("full.jsonl");
  run_scan(cfg);
  cfg.output = path("ahead.jsonl");
  cfg.limit = 4;
  const ScanOutcome first = run_scan(cfg);
  cfg.append = true;
  cfg.limit = 3;
  resume_scan(cfg, first.cursor);  // writes graphs 4..6 but we resume from 4 again
  cfg.limit.reset();
  resume_scan(cfg, first.cursor);
  EXPECT_EQ(slurp(path("ahead.jsonl")), slurp(path("full.jsonl")));
}

TEST_F(Search, ResumeAtEndIsEmpty) {
  ScanConfig cfg = config(4);
  cfg.output = path("rows.jsonl");
  const ScanOutcome done = run_scan(cfg);
  cfg.output = path("more.jsonl");
  const ScanOutcome more = resume_scan(cfg, done.cursor);
  EXPECT_EQ(more.graphs, 0);
  EXPECT_TRUE(more.exhausted);
  EXPECT_EQ(slurp(path("more.jsonl")), "");
}

TEST_F(Search, ForeignCursorRefused) {
  ScanConfig cfg = config(5);
  const ScanOutcome other = run_scan(config(4));
  EXPECT_THROW(resume_scan(cfg, other.cursor), ScanError);
}

TEST_F(Search, ZeroBudgetMakesEverythingUnknown) {
  ScanConfig cfg = config(5);
  cfg.budget_ms = 0;
  const ScanOutcome o = run_scan(cfg);
  EXPECT_EQ(o.unknown, o.checked);
  EXPECT_EQ(exit_code(o), 3);
}

TEST_F(Search, ExitCodes) {
  ScanOutcome o;
  EXPECT_EQ(exit_code(o), 0);
  o.unknown = 1;
  EXPECT_EQ(exit_code(o), 3);
  o.candidates = 1;
  EXPECT_EQ(exit_code(o), 2);
}

TEST_F(Search, RandomAndFileStreams) {
  ScanConfig cfg;
  cfg.stream.kind = StreamSpec::Kind::kRandom;
  cfg.stream.n = 8;
  cfg.stream.p = 0.5;
  cfg.stream.count = 25;
  cfg.seed = 77;
  cfg.statements = {StatementId::kThmE};
  cfg.output = path("r1.jsonl");
  run_scan(cfg);
  cfg.output = path("r2.jsonl");
  const ScanOutcome o = run_scan(cfg);
  EXPECT_EQ(o.graphs, 25);
  EXPECT_EQ(slurp(path("r1.jsonl")), slurp(path("r2.jsonl")));

  std::ofstream(path("in.g6")) << "Bw\n>>graph6<<D~{\n\nIheA@GUAo\n";
  ScanConfig file;
  file.stream.kind = StreamSpec::Kind::kGraph6File;
  file.stream.path = path("in.g6");
  file.statements = {StatementId::kThmA};
  const ScanOutcome f = run_scan(file);
  EXPECT_EQ(f.graphs, 3);
}

TEST_F(Search, Errors) {
  ScanConfig cfg = config(4);
  cfg.output = path("missing/dir/rows.jsonl");
  EXPECT_THROW(run_scan(cfg), ScanError);
  ScanConfig none = config(4);
  none.statements.clear();
  EXPECT_THROW(run_scan(none), ScanError);
  ScanConfig file;
  file.stream.kind = StreamSpec::Kind::kGraph6File;
  file.stream.path = path("nope.g6");
  file.statements = {StatementId::kThmA};
  EXPECT_THROW(run_scan(file), ScanError);
}
