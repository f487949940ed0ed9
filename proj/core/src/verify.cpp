#include "gelfand/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gelfand/cosets.hpp"
#include "gelfand/error.hpp"
#include "gelfand/parallel.hpp"
#include "json.hpp"

namespace gelfand {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

template <typename Fn>
auto stage(const char* name, std::vector<StageTiming>& timings, Fn&& fn) {
  const auto start = Clock::now();
  auto finish = [&] {
    timings.push_back({name, std::chrono::duration<double, std::milli>(Clock::now() - start).count()});
  };
  const std::string prefix = std::string("stage ") + name + ": ";
  try {
    auto result = fn();
    finish();
    return result;
  } catch (const InternalError& e) {
    throw InternalError(prefix + e.what());
  } catch (const CapExceeded& e) {
    throw CapExceeded(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const Error& e) {
    throw Error(prefix + e.what());
  }
}

// The two mod-center cosets moved by transpose should be represented by
// matrices whose last row (corner excluded) vanishes while the last column
// does not, and the mirror image.
bool border_classification(const GroupTable& g, const std::vector<ElemId>& reps) {
  if (reps.size() != 2) return false;
  const int n = g.n() - 1;
  int row_zero = 0;
  int col_zero = 0;
  for (ElemId r : reps) {
    const Matrix m = g.element(r);
    bool last_row_zero = true;
    bool last_col_zero = true;
    for (int i = 0; i < n; ++i) {
      last_row_zero = last_row_zero && m(n, i).idx == 0;
      last_col_zero = last_col_zero && m(i, n).idx == 0;
    }
    if (last_row_zero == last_col_zero) return false;
    row_zero += last_row_zero;
    col_zero += last_col_zero;
  }
  return row_zero == 1 && col_zero == 1;
}

}  // namespace

std::string PairSpec::label() const {
  return to_string(kind) + "(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")";
}

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool VerificationReport::check(std::string_view name) const {
  for (const auto& [key, value] : checks) {
    if (key == name) return value;
  }
  return false;
}

VerificationReport run_verify(const PairSpec& pair, const RunOptions& options) {
  if (pair.n < 1) throw DomainError("pair size n must be at least 1");
  VerificationReport report;
  report.pair = pair;
  auto& timings = report.timings;

  const FieldRef field = stage("build_field", timings, [&] { return Field::of_order(pair.q, options.field_size_cap); });
  if (pair.kind == GroupKind::O && field->characteristic() == 2) {
    throw DomainError("orthogonal pairs need q not a power of 2 (q = " + std::to_string(pair.q) + ")");
  }
  const GroupRef big =
      stage("enumerate", timings, [&] { return enumerate(pair.kind, pair.n + 1, field, options.group_order_cap); });
  const GroupRef small =
      stage("enumerate_subgroup", timings, [&] { return enumerate(pair.kind, pair.n, field, options.group_order_cap); });
  const Embedding emb = stage("embed", timings, [&] { return embed_standard(small, big); });
  const auto center = stage("center", timings, [&] { return center_ids(*big); });

  const auto plain = stage("double_cosets", timings, [&] {
    return involution_action(double_cosets(big, emb, false, options.group_order_cap));
  });
  const auto reduced = stage("double_cosets_mod_center", timings, [&] {
    return involution_action(double_cosets(big, emb, true, options.group_order_cap));
  });
  const ConjClasses classes = stage("conjugacy_classes", timings, [&] { return conjugacy_classes(big, options.group_order_cap); });
  const CharacterTable table = stage("character_table", timings, [&] {
    return cached_character_table(classes, options.cache_dir, options.threads, &report.table_from_cache);
  });
  const InvariantReport inv = stage("dim_invariants", timings, [&] { return dim_invariants(table, emb); });
  const VerificationOutcome outcome = stage("verify_pair", timings, [&] { return verify_pair(emb, inv, reduced); });

  report.group_order = big->order();
  report.subgroup_order = small->order();
  report.center_order = center.size();
  report.cosets.plain_count = plain.decomp.count();
  report.cosets.mod_center_count = reduced.decomp.count();
  report.cosets.sigma_fixed = reduced.fixed_count;
  report.cosets.sigma_nonfixed = reduced.nonfixed_count;
  report.cosets.k = reduced.k();
  report.cosets.plain_sigma_nonfixed = plain.nonfixed_count;
  std::vector<ElemId> moved;
  for (CosetId c : reduced.nonfixed()) {
    moved.push_back(reduced.decomp.reps[c]);
    report.cosets.nonfixed_reps.push_back(to_literal(big->element(reduced.decomp.reps[c])));
  }
  report.characters = inv.characters;
  report.max_dim_inv = inv.max_dim_inv;
  report.bound = outcome.bound;
  report.bound_attained = outcome.attained;
  report.counterexample = outcome.counterexample;

  auto& checks = report.checks;
  if (pair.kind == GroupKind::GL) {
    const auto nf = reduced.nonfixed();
    const bool swapped = nf.size() == 2 && reduced.perm[nf[0]] == nf[1];
    checks.emplace_back("lemma_3_1", reduced.nonfixed_count == 2 && swapped && border_classification(*big, moved));
    checks.emplace_back("corollary_3_3", outcome.within_kind_bound);
  } else {
    checks.emplace_back("theorem_4_1",
                        reduced.nonfixed_count == 0 && plain.nonfixed_count == 0 && outcome.within_kind_bound);
  }
  checks.emplace_back("k_plus_one_bound", outcome.within_bound);
  checks.emplace_back("mackey_sum", inv.sum_squares() == plain.decomp.count());
  checks.emplace_back("dual_dims", inv.duals_agree());
  checks.emplace_back("transpose_classes", transpose_preserves_classes(classes));
  checks.emplace_back("table_consistent", rows_orthogonal(table) && columns_orthogonal(table) &&
                                              degrees_consistent(table) &&
                                              central_characters_coherent(table, center));
  return report;
}

std::string report_to_json(const VerificationReport& r, bool include_timings) {
  json doc;
  doc["schema"] = std::string(kReportSchema);
  doc["pair"] = {{"kind", to_string(r.pair.kind)}, {"n", r.pair.n}, {"q", r.pair.q}};
  doc["group_order"] = r.group_order;
  doc["subgroup_order"] = r.subgroup_order;
  doc["center_order"] = r.center_order;
  doc["cosets"] = {{"plain_count", r.cosets.plain_count},
                   {"mod_center_count", r.cosets.mod_center_count},
                   {"sigma_fixed", r.cosets.sigma_fixed},
                   {"sigma_nonfixed", r.cosets.sigma_nonfixed},
                   {"k", r.cosets.k},
                   {"plain_sigma_nonfixed", r.cosets.plain_sigma_nonfixed},
                   {"nonfixed_reps", r.cosets.nonfixed_reps}};
  json chars = json::array();
  for (const auto& c : r.characters) {
    chars.push_back({{"degree", c.degree}, {"dim_inv", c.dim_inv}, {"dim_dual_inv", c.dim_dual_inv}});
  }
  doc["characters"] = std::move(chars);
  doc["max_dim_inv"] = r.max_dim_inv;
  doc["bound"] = r.bound;
  doc["bound_attained"] = r.bound_attained;
  json checks = json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  doc["checks"] = std::move(checks);
  doc["pass"] = r.passed();
  if (!r.counterexample.empty()) doc["counterexample"] = r.counterexample;
  if (include_timings) {
    json t = json::object();
    for (const auto& s : r.timings) t[s.stage] = std::round(s.milliseconds * 1000.0) / 1000.0;
    doc["timings_ms"] = std::move(t);
  }
  return doc.dump(2);
}

std::vector<PairSpec> default_gl_grid() {
  // Big groups GL_2(F_2..5), GL_3(F_2), GL_3(F_3), GL_4(F_2).
  return {{GroupKind::GL, 1, 2}, {GroupKind::GL, 1, 3}, {GroupKind::GL, 1, 4}, {GroupKind::GL, 1, 5},
          {GroupKind::GL, 2, 2}, {GroupKind::GL, 2, 3}, {GroupKind::GL, 3, 2}};
}

std::vector<PairSpec> default_o_grid() {
  // Big groups O_2(F_3), O_3(F_3), O_2(F_5).
  return {{GroupKind::O, 1, 3}, {GroupKind::O, 2, 3}, {GroupKind::O, 1, 5}};
}

std::vector<PairSpec> default_grid() {
  auto g = default_gl_grid();
  for (const auto& p : default_o_grid()) g.push_back(p);
  return g;
}

std::vector<PairSpec> parse_grid(std::string_view text) {
  std::vector<PairSpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (item == "default") {
      for (const auto& p : default_grid()) out.push_back(p);
    } else if (item == "default-gl") {
      for (const auto& p : default_gl_grid()) out.push_back(p);
    } else if (item == "default-o") {
      for (const auto& p : default_o_grid()) out.push_back(p);
    } else {
      const auto c1 = item.find(':');
      const auto c2 = c1 == std::string::npos ? std::string::npos : item.find(':', c1 + 1);
      if (c2 == std::string::npos) throw DomainError("grid entry '" + item + "' is not kind:n:q");
      PairSpec p;
      p.kind = parse_group_kind(item.substr(0, c1));
      try {
        p.n = std::stoi(item.substr(c1 + 1, c2 - c1 - 1));
        p.q = std::stoi(item.substr(c2 + 1));
      } catch (const std::exception&) {
        throw DomainError("grid entry '" + item + "' is not kind:n:q");
      }
      out.push_back(p);
    }
    if (end == text.size()) break;
  }
  return out;
}

std::string report_file_name(const PairSpec& pair) {
  return "report_" + to_string(pair.kind) + "_n" + std::to_string(pair.n) + "_q" + std::to_string(pair.q) + ".json";
}

std::vector<SweepRow> run_sweep(const std::vector<PairSpec>& grid, const std::string& out_dir,
                                const RunOptions& options) {
  std::vector<SweepRow> rows(grid.size());
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  RunOptions inner = options;
  inner.threads = 1;
  parallel_for(grid.size(), options.threads, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.pair = grid[i];
    const auto start = Clock::now();
    try {
      const VerificationReport report = run_verify(grid[i], inner);
      row.ok = true;
      row.passed = report.passed();
      row.k = report.cosets.k;
      row.max_dim_inv = report.max_dim_inv;
      row.bound = report.bound;
      if (!out_dir.empty()) {
        std::ofstream out(std::filesystem::path(out_dir) / report_file_name(grid[i]));
        out << report_to_json(report) << '\n';
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.milliseconds = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  });
  if (!out_dir.empty()) {
    std::ofstream out(std::filesystem::path(out_dir) / "summary.txt");
    out << format_summary(rows);
  }
  return rows;
}

std::string format_summary(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "pair" << std::setw(4) << "n" << std::setw(4) << "q" << std::setw(4) << "k"
     << std::setw(9) << "max_dim" << std::setw(7) << "bound" << std::setw(6) << "pass" << "runtime_ms\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(6) << to_string(r.pair.kind) << std::setw(4) << r.pair.n << std::setw(4)
       << r.pair.q;
    if (r.ok) {
      os << std::setw(4) << r.k << std::setw(9) << r.max_dim_inv << std::setw(7) << r.bound << std::setw(6)
         << (r.passed ? "yes" : "NO");
    } else {
      os << std::setw(4) << "-" << std::setw(9) << "-" << std::setw(7) << "-" << std::setw(6) << "ERR";
    }
    os << std::fixed << std::setprecision(1) << r.milliseconds;
    if (!r.ok) os << "  " << r.error;
    os << '\n';
  }
  return os.str();
}

}  // namespace gelfand
