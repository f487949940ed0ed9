// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gelfand/cosets.hpp"
#include "gelfand/group.hpp"
#include "gelfand/reflections.hpp"
#include "gelfand/symsolve.hpp"
#include "gelfand/verify.hpp"

namespace {

using namespace gelfand;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<std::vector<Scalar>> nonzero_vectors(int n, int q) {
  std::vector<std::vector<Scalar>> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  for (int code = 1; code < total; ++code) {
    std::vector<Scalar> v(n);
    int rest = code;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = Scalar{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    out.push_back(v);
  }
  return out;
}

std::string big_name(const PairSpec& p) {
  return to_string(p.kind) + "(" + std::to_string(p.n + 1) + "," + std::to_string(p.q) + ")";
}

RunOptions options() {
  RunOptions o;
  o.threads = 0;
  return o;
}

// Full reports are shared by several criteria; criterion 2 pays for them.
std::map<std::string, VerificationReport> g_reports;

const VerificationReport& report_for(const PairSpec& p) {
  const auto key = big_name(p);
  auto it = g_reports.find(key);
  if (it == g_reports.end()) it = g_reports.emplace(key, run_verify(p, options())).first;
  return it->second;
}

Outcome criterion_transpose_cosets() {
  Outcome out;
  std::ostringstream os;
  for (const auto& p : default_gl_grid()) {
    const auto f = Field::of_order(p.q);
    const auto big = enumerate_gl(p.n + 1, f);
    const auto emb = embed_standard(enumerate_gl(p.n, f), big);
    const auto action = involution_action(double_cosets(big, emb, true));
    const auto moved = action.nonfixed();
    const bool swapped = moved.size() == 2 && action.perm[moved[0]] == moved[1] && action.perm[moved[1]] == moved[0];
    const bool ok = action.nonfixed_count == 2 && action.k() == 1 && swapped;
    out.ok = out.ok && ok;
    os << big_name(p) << " nonfixed=" << action.nonfixed_count << (ok ? "" : " BAD") << "; ";
  }
  out.detail = os.str();
  return out;
}

Outcome criterion_gl_bound() {
  Outcome out;
  std::ostringstream os;
  for (const auto& p : default_gl_grid()) {
    const auto& r = report_for(p);
    bool ok = r.max_dim_inv <= 2;
    for (const auto& c : r.characters) ok = ok && c.dim_inv <= 2;
    ok = ok && r.check("corollary_3_3") && r.passed();
    out.ok = out.ok && ok;
    os << big_name(p) << " max=" << r.max_dim_inv << (r.max_dim_inv == 2 ? " (attained)" : "") << (ok ? "" : " BAD")
       << "; ";
  }
  out.detail = os.str();
  return out;
}

Outcome criterion_orthogonal() {
  Outcome out;
  std::ostringstream os;
  for (const auto& p : default_o_grid()) {
    const auto& r = report_for(p);
    bool ok = r.cosets.k == 0 && r.cosets.sigma_nonfixed == 0 && r.cosets.plain_sigma_nonfixed == 0 &&
              r.max_dim_inv <= 1 && r.check("theorem_4_1") && r.passed();
    for (const auto& c : r.characters) ok = ok && c.dim_inv <= 1;
    out.ok = out.ok && ok;
    os << big_name(p) << " k=" << r.cosets.k << " max=" << r.max_dim_inv << (ok ? "" : " BAD") << "; ";
  }
  out.detail = os.str();
  return out;
}

Outcome criterion_symmetric_solver() {
  Outcome out;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::ostringstream first;
  for (int q : {2, 3, 5}) {
    const auto f = Field::of_order(q);
    for (int n = 1; n <= 3; ++n) {
      const auto vs = nonzero_vectors(n, q);
      for (const auto& phi : vs) {
        for (const auto& v : vs) {
          ++instances;
          const SymSolveInstance inst{f, phi, v};
          bool ok = false;
          try {
            const Matrix b = solve_symmetric(inst);
            ok = is_symmetric(b) && det(b).idx != 0 && b * Matrix::column(f, phi) == Matrix::column(f, v) &&
                 oracle_symmetric(inst).has_value();
          } catch (const std::exception& e) {
            if (first.str().empty()) first << e.what();
          }
          if (!ok) {
            ++failures;
            if (first.str().empty()) first << "q=" << q << " n=" << n;
          }
        }
      }
    }
  }
  out.ok = failures == 0;
  out.detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " failures" +
               (first.str().empty() ? "" : " (first: " + first.str() + ")");
  return out;
}

Outcome criterion_reflections() {
  Outcome out;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::size_t second_formula = 0;
  for (auto [n, q] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 5}, std::pair{3, 5}}) {
    const auto f = Field::of_order(q);
    const auto points = sphere_points(n, f);
    const Matrix id = Matrix::identity(f, n);
    for (const auto& u : points) {
      const Matrix cu = Matrix::column(f, u.coords);
      for (const auto& v : points) {
        ++pairs;
        const Matrix cv = Matrix::column(f, v.coords);
        const Matrix g = swap_element(f, u, v);
        const bool ok = transpose(g) * g == id && g * g == id && g * cu == cv && g * cv == cu;
        failures += !ok;
        second_formula += !uses_difference_reflection(f, u, v);
      }
    }
  }
  // The self-orthogonal difference example must take the second formula.
  const auto f5 = Field::of_order(5);
  const auto u = make_sphere_point(f5, {Scalar{1}, Scalar{0}, Scalar{0}});
  const auto v = make_sphere_point(f5, {Scalar{1}, Scalar{1}, Scalar{2}});
  const bool example_ok = !uses_difference_reflection(f5, u, v) &&
                          swap_element(f5, u, v) * Matrix::column(f5, u.coords) == Matrix::column(f5, v.coords);
  out.ok = failures == 0 && example_ok && second_formula > 0;
  out.detail = std::to_string(pairs) + " ordered pairs, " + std::to_string(failures) + " failures, " +
               std::to_string(second_formula) + " via the second formula";
  return out;
}

Outcome criterion_duals() {
  Outcome out;
  std::ostringstream os;
  auto grid = default_gl_grid();
  for (const auto& p : default_o_grid()) grid.push_back(p);
  for (const auto& p : grid) {
    const auto& r = report_for(p);
    bool ok = r.check("dual_dims") && r.check("transpose_classes");
    for (const auto& c : r.characters) ok = ok && c.dim_inv == c.dim_dual_inv;
    out.ok = out.ok && ok;
    if (!ok) os << big_name(p) << " BAD; ";
  }
  out.detail = os.str().empty() ? std::to_string(grid.size()) + " grid points" : os.str();
  return out;
}

Outcome criterion_mackey() {
  Outcome out;
  std::ostringstream os;
  auto grid = default_gl_grid();
  for (const auto& p : default_o_grid()) grid.push_back(p);
  for (const auto& p : grid) {
    const auto& r = report_for(p);
    std::uint64_t squares = 0;
    for (const auto& c : r.characters) squares += c.dim_inv * c.dim_inv;
    const bool ok = squares == r.cosets.plain_count && r.check("mackey_sum");
    out.ok = out.ok && ok;
    os << big_name(p) << " " << squares << "=" << r.cosets.plain_count << (ok ? "" : " BAD") << "; ";
  }
  out.detail = os.str();
  return out;
}

}  // namespace

int main() {
  // Criterion 6 reuses the reports built under criterion 2's budget.
  const std::vector<Criterion> criteria = {
      {1, "GL mod-center cosets: exactly two moved by transpose, swapped", 120, criterion_transpose_cosets},
      {2, "GL pairs: dim pi^H <= 2", 600, criterion_gl_bound},
      {3, "O pairs: all cosets transpose-fixed, dim pi^H <= 1", 60, criterion_orthogonal},
      {4, "symmetric solver exhaustive, n <= 3, q in {2,3,5}", 120, criterion_symmetric_solver},
      {5, "sphere swap reflections exhaustive", 60, criterion_reflections},
      {6, "dim pi^H = dim (pi*)^H and transpose-stable classes", 600, criterion_duals},
      {7, "sum of (dim pi^H)^2 equals |H\\G/H|", 600, criterion_mackey},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = out.ok && in_time;
    failed += !pass;
    std::printf("[%s] C%d %s | %.2fs (limit %.0fs)%s | %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                c.limit_seconds, in_time ? "" : " TIMEOUT", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
