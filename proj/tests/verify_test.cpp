#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gelfand/error.hpp"
#include "gelfand/verify.hpp"
#include "json.hpp"

namespace gelfand {
namespace {

using json = nlohmann::json;

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("gelfand_verify_" + tag + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string str() const { return path_.string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(RunVerify, SmallestGeneralLinearPair) {
  const auto r = run_verify({GroupKind::GL, 1, 2});
  EXPECT_EQ(r.group_order, 6u);
  EXPECT_EQ(r.subgroup_order, 1u);
  EXPECT_EQ(r.cosets.k, 1u);
  EXPECT_EQ(r.max_dim_inv, 2u);
  EXPECT_EQ(r.bound, 2u);
  EXPECT_TRUE(r.bound_attained);
  EXPECT_TRUE(r.passed());
  for (const char* name : {"lemma_3_1", "corollary_3_3", "k_plus_one_bound", "mackey_sum", "dual_dims",
                           "transpose_classes", "table_consistent"}) {
    EXPECT_TRUE(r.check(name)) << name;
  }
  EXPECT_FALSE(r.check("theorem_4_1"));
  EXPECT_EQ(r.cosets.nonfixed_reps.size(), 2u);
}

TEST(RunVerify, OrthogonalPair) {
  const auto r = run_verify({GroupKind::O, 2, 3});
  EXPECT_EQ(r.group_order, 48u);
  EXPECT_EQ(r.subgroup_order, 8u);
  EXPECT_EQ(r.cosets.k, 0u);
  EXPECT_EQ(r.cosets.plain_sigma_nonfixed, 0u);
  EXPECT_LE(r.max_dim_inv, 1u);
  EXPECT_TRUE(r.check("theorem_4_1"));
  EXPECT_TRUE(r.passed());
}

TEST(RunVerify, PreconditionErrors) {
  EXPECT_THROW(run_verify({GroupKind::O, 2, 4}), DomainError);
  EXPECT_THROW(run_verify({GroupKind::GL, 0, 3}), DomainError);
  EXPECT_THROW(run_verify({GroupKind::GL, 1, 6}), DomainError);
}

TEST(RunVerify, StageNameIsPrefixedAndCategoryKept) {
  RunOptions small_cap;
  small_cap.group_order_cap = 10;
  try {
    run_verify({GroupKind::GL, 2, 3}, small_cap);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(std::string(e.what()).rfind("stage enumerate: ", 0), 0u) << e.what();
  }
  RunOptions field_cap;
  field_cap.field_size_cap = 4;
  try {
    run_verify({GroupKind::GL, 1, 5}, field_cap);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(std::string(e.what()).rfind("stage build_field: ", 0), 0u) << e.what();
  }
}

TEST(Report, DeterministicWithoutTimings) {
  const auto a = report_to_json(run_verify({GroupKind::GL, 2, 2}), false);
  const auto b = report_to_json(run_verify({GroupKind::GL, 2, 2}), false);
  EXPECT_EQ(a, b);
  const auto doc = json::parse(a);
  EXPECT_EQ(doc["schema"], "gelfand-report/1");
  EXPECT_FALSE(doc.contains("timings_ms"));
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(doc["pair"]["kind"], "gl");
  EXPECT_EQ(doc["pair"]["n"], 2);
  const auto timed = json::parse(report_to_json(run_verify({GroupKind::GL, 1, 3})));
  EXPECT_TRUE(timed.contains("timings_ms"));
  EXPECT_TRUE(timed["timings_ms"].contains("character_table"));
}

TEST(Report, CachedTableGivesIdenticalReport) {
  TempDir dir("cache");
  RunOptions opts;
  opts.cache_dir = dir.str();
  const auto cold = run_verify({GroupKind::GL, 1, 4}, opts);
  const auto warm = run_verify({GroupKind::GL, 1, 4}, opts);
  EXPECT_FALSE(cold.table_from_cache);
  EXPECT_TRUE(warm.table_from_cache);
  EXPECT_EQ(report_to_json(cold, false), report_to_json(warm, false));
  EXPECT_EQ(report_to_json(cold, false), report_to_json(run_verify({GroupKind::GL, 1, 4}), false));
}

TEST(Report, ThreadCountDoesNotChangeReport) {
  RunOptions many;
  many.threads = 4;
  EXPECT_EQ(report_to_json(run_verify({GroupKind::GL, 1, 5}), false),
            report_to_json(run_verify({GroupKind::GL, 1, 5}, many), false));
}

TEST(Grid, Parsing) {
  EXPECT_TRUE(parse_grid("").empty());
  EXPECT_EQ(parse_grid("gl:1:2,o:2:3"), (std::vector<PairSpec>{{GroupKind::GL, 1, 2}, {GroupKind::O, 2, 3}}));
  EXPECT_EQ(parse_grid("default"), default_grid());
  EXPECT_EQ(parse_grid("default-o"), default_o_grid());
  EXPECT_EQ(parse_grid("default-gl,o:1:3").size(), default_gl_grid().size() + 1);
  EXPECT_THROW(parse_grid("gl:1"), DomainError);
  EXPECT_THROW(parse_grid("gl:x:3"), DomainError);
  EXPECT_THROW(parse_grid("sp:1:3"), DomainError);
}

TEST(Grid, DefaultsNameTheStatedBigGroups) {
  std::vector<std::pair<int, int>> gl_big;
  for (const auto& p : default_gl_grid()) gl_big.emplace_back(p.n + 1, p.q);
  EXPECT_EQ(gl_big, (std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}}));
  std::vector<std::pair<int, int>> o_big;
  for (const auto& p : default_o_grid()) o_big.emplace_back(p.n + 1, p.q);
  EXPECT_EQ(o_big, (std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}}));
}

TEST(Sweep, EmptyGrid) {
  TempDir dir("empty");
  const auto rows = run_sweep({}, dir.str());
  EXPECT_TRUE(rows.empty());
  std::ifstream in(dir.path() / "summary.txt");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), format_summary({}));
}

TEST(Sweep, OrthogonalDefaultGrid) {
  TempDir dir("o");
  RunOptions opts;
  opts.threads = 2;
  const auto rows = run_sweep(default_o_grid(), dir.str(), opts);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.ok) << row.error;
    EXPECT_TRUE(row.passed);
    EXPECT_EQ(row.k, 0u);
    EXPECT_TRUE(std::filesystem::exists(dir.path() / report_file_name(row.pair)));
  }
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "summary.txt"));
}

TEST(Sweep, ErrorsAreRecordedAndTheSweepContinues) {
  const auto rows = run_sweep({{GroupKind::O, 1, 4}, {GroupKind::GL, 1, 2}}, "");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].ok);
  EXPECT_NE(rows[0].error.find("power of 2"), std::string::npos);
  EXPECT_TRUE(rows[1].ok);
  EXPECT_TRUE(rows[1].passed);
  EXPECT_NE(format_summary(rows).find("ERR"), std::string::npos);
}

}  // namespace
}  // namespace gelfand
