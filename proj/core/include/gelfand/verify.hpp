#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gelfand/chartab.hpp"
#include "gelfand/field.hpp"
#include "gelfand/group.hpp"

namespace gelfand {

inline constexpr std::string_view kReportSchema = "gelfand-report/1";

/// The pair (G_{n+1}(F_q), G_n(F_q)) of the given kind.
struct PairSpec {
  GroupKind kind = GroupKind::GL;
  int n = 1;
  int q = 2;

  std::string label() const;
  friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

struct RunOptions {
  std::string cache_dir;
  unsigned threads = 1;  // 0 = hardware concurrency
  std::size_t group_order_cap = kDefaultGroupOrderCap;
  int field_size_cap = kDefaultFieldSizeCap;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct CosetSummary {
  std::size_t plain_count = 0;
  std::size_t mod_center_count = 0;
  std::size_t sigma_fixed = 0;
  std::size_t sigma_nonfixed = 0;
  std::size_t k = 0;
  std::size_t plain_sigma_nonfixed = 0;
  std::vector<std::string> nonfixed_reps;  // matrix literals, coset order
};

struct VerificationReport {
  PairSpec pair;
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::size_t center_order = 0;
  CosetSummary cosets;
  std::vector<CharacterInvariants> characters;
  std::uint64_t max_dim_inv = 0;
  std::uint64_t bound = 0;
  bool bound_attained = false;
  std::vector<std::pair<std::string, bool>> checks;
  std::string counterexample;
  std::vector<StageTiming> timings;
  bool table_from_cache = false;

  bool passed() const;
  bool check(std::string_view name) const;
};

/// Runs the whole pipeline for one pair. Stage failures are rethrown with
/// the stage name prefixed and the original error category preserved;
/// failed checks are reported, not thrown.
VerificationReport run_verify(const PairSpec& pair, const RunOptions& options = {});

/// JSON report. Everything except the "timings" member is byte-stable for
/// identical inputs.
std::string report_to_json(const VerificationReport& report, bool include_timings = true);

struct SweepRow {
  PairSpec pair;
  bool ok = false;  // pipeline completed
  bool passed = false;
  std::size_t k = 0;
  std::uint64_t max_dim_inv = 0;
  std::uint64_t bound = 0;
  double milliseconds = 0;
  std::string error;
};

/// Pairs from "gl:1:2,o:2:3" notation; "default" expands to default_grid().
std::vector<PairSpec> parse_grid(std::string_view text);
std::vector<PairSpec> default_gl_grid();
std::vector<PairSpec> default_o_grid();
std::vector<PairSpec> default_grid();

/// Verifies every pair (in parallel per options.threads), writing one JSON
/// report per pair plus summary.txt into out_dir when it is non-empty.
/// Errors at one pair are recorded and the sweep continues.
std::vector<SweepRow> run_sweep(const std::vector<PairSpec>& grid, const std::string& out_dir,
                                const RunOptions& options = {});

std::string format_summary(const std::vector<SweepRow>& rows);
std::string report_file_name(const PairSpec& pair);

}  // namespace gelfand
