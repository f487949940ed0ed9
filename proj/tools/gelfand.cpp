// gelfand: command-line front end for the double-coset, character-table and
// invariant-dimension computations.
//
// Exit status: 0 pass, 1 verification failure, 2 usage error, 3 internal or
// consistency error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gelfand/chartab.hpp"
#include "gelfand/cosets.hpp"
#include "gelfand/error.hpp"
#include "gelfand/field.hpp"
#include "gelfand/group.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/reflections.hpp"
#include "gelfand/symsolve.hpp"
#include "gelfand/verify.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gelfand;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GlobalFlags {
  std::string cache_dir;
  bool json = false;
  unsigned threads = 1;
  std::size_t cap_group_order = kDefaultGroupOrderCap;

  RunOptions run_options() const {
    RunOptions o;
    o.cache_dir = cache_dir;
    o.threads = threads;
    o.group_order_cap = cap_group_order;
    return o;
  }
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Scalar> coords_of(const Matrix& v) {
  return std::vector<Scalar>(v.entries().begin(), v.entries().end());
}

std::string vector_literal(std::span<const Scalar> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i].idx);
  }
  return out;
}

int cmd_field_info(const GlobalFlags& g, int q) {
  const FieldRef f = Field::of_order(q);
  std::vector<int> modulus(f->modulus().begin(), f->modulus().end());
  if (g.json) {
    json doc{{"p", f->characteristic()}, {"e", f->degree()}, {"q", f->order()}, {"modulus", modulus},
             {"generator", f->generator().idx}};
    std::cout << doc.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << "field " << f->describe() << '\n'
            << "p = " << f->characteristic() << '\n'
            << "e = " << f->degree() << '\n'
            << "q = " << f->order() << '\n'
            << "modulus =";
  for (std::size_t i = 0; i < modulus.size(); ++i) std::cout << (i == 0 ? " " : ",") << modulus[i];
  if (modulus.empty()) std::cout << " none";
  std::cout << '\n' << "generator = " << f->generator().idx << '\n';
  return kExitPass;
}

int cmd_group_order(const GlobalFlags& g, const std::string& type, int n, int q, const std::string& dump) {
  const GroupRef group = enumerate(parse_group_kind(type), n, Field::of_order(q), g.cap_group_order);
  if (!dump.empty()) {
    std::ofstream out(dump);
    if (!out) throw DomainError("cannot open " + dump + " for writing");
    dump_elements(*group, out);
  }
  if (g.json) {
    std::cout << json{{"type", type}, {"n", n}, {"q", q}, {"order", group->order()}}.dump(2) << '\n';
  } else {
    std::cout << group->name() << " order " << group->order() << '\n';
  }
  return kExitPass;
}

int cmd_cosets(const GlobalFlags& g, const std::string& type, int n, int q, bool mod_center,
               const std::string& involution) {
  if (involution != "transpose") throw DomainError("only the transpose involution is supported");
  const auto kind = parse_group_kind(type);
  const FieldRef f = Field::of_order(q);
  if (kind == GroupKind::O && f->characteristic() == 2) throw DomainError("orthogonal pairs need q odd");
  const GroupRef big = enumerate(kind, n + 1, f, g.cap_group_order);
  const GroupRef small = enumerate(kind, n, f, g.cap_group_order);
  const Embedding emb = embed_standard(small, big);
  const InvolutionAction act = involution_action(double_cosets(big, emb, mod_center, g.cap_group_order));

  std::vector<std::string> reps;
  for (CosetId c : act.nonfixed()) reps.push_back(to_literal(big->element(act.decomp.reps[c])));
  if (g.json) {
    json doc{{"pair", {{"kind", type}, {"n", n}, {"q", q}}},
             {"mod_center", mod_center},
             {"count", act.decomp.count()},
             {"fixed", act.fixed_count},
             {"nonfixed", act.nonfixed_count},
             {"k", act.k()},
             {"nonfixed_reps", reps}};
    std::cout << doc.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << "pair " << big->name() << " > " << small->name() << '\n'
            << "mod_center " << (mod_center ? "true" : "false") << '\n'
            << "count " << act.decomp.count() << '\n'
            << "fixed " << act.fixed_count << '\n'
            << "nonfixed " << act.nonfixed_count << '\n'
            << "k " << act.k() << '\n';
  if (!reps.empty()) {
    std::cout << "nonfixed representatives:\n";
    for (const auto& r : reps) std::cout << "  " << r << '\n';
  }
  return kExitPass;
}

int cmd_solve_symmetric(const GlobalFlags& g, int q, const std::string& phi_text, const std::string& v_text) {
  const FieldRef f = Field::of_order(q);
  const Matrix phi = parse_vector(phi_text, f);
  const Matrix v = parse_vector(v_text, f);
  const Matrix b = solve_symmetric({f, coords_of(phi), coords_of(v)});
  const bool symmetric = is_symmetric(b);
  const bool invertible = det(b).idx != 0;
  const bool maps = b * phi == v;
  if (g.json) {
    json doc{{"B", to_literal(b)}, {"symmetric", symmetric}, {"invertible", invertible}, {"B_phi_equals_v", maps}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "B = " << to_literal(b) << '\n'
              << "symmetric " << yes_no(symmetric) << '\n'
              << "invertible " << yes_no(invertible) << '\n'
              << "B*phi == v " << yes_no(maps) << '\n';
  }
  return symmetric && invertible && maps ? kExitPass : kExitFail;
}

int cmd_swap_reflection(const GlobalFlags& g, int q, const std::string& u_text, const std::string& v_text) {
  const FieldRef f = Field::of_order(q);
  const Matrix um = parse_vector(u_text, f);
  const Matrix vm = parse_vector(v_text, f);
  const SpherePoint u = make_sphere_point(f, coords_of(um));
  const SpherePoint v = make_sphere_point(f, coords_of(vm));
  const Matrix m = swap_element(f, u, v);
  const int n = m.rows();
  const bool orthogonal = transpose(m) * m == Matrix::identity(f, n);
  const bool involutive = m * m == Matrix::identity(f, n);
  const bool u_to_v = m * um == vm;
  const bool v_to_u = m * vm == um;
  const bool first = uses_difference_reflection(f, u, v);
  if (g.json) {
    json doc{{"g", to_literal(m)},         {"formula", first ? "difference" : "sum"},
             {"orthogonal", orthogonal},   {"involution", involutive},
             {"g_u_equals_v", u_to_v},     {"g_v_equals_u", v_to_u}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "g = " << to_literal(m) << '\n'
              << "formula " << (first ? "reflection in (u-v)^perp" : "reflection through u+v") << '\n'
              << "g^T g == I " << yes_no(orthogonal) << '\n'
              << "g^2 == I " << yes_no(involutive) << '\n'
              << "g u == v " << yes_no(u_to_v) << '\n'
              << "g v == u " << yes_no(v_to_u) << '\n';
  }
  return orthogonal && involutive && u_to_v && v_to_u ? kExitPass : kExitFail;
}

int cmd_chartab(const GlobalFlags& g, const std::string& type, int n, int q, const std::string& json_out) {
  const GroupRef group = enumerate(parse_group_kind(type), n, Field::of_order(q), g.cap_group_order);
  const ConjClasses classes = conjugacy_classes(group, g.cap_group_order);
  bool hit = false;
  const CharacterTable t = cached_character_table(classes, g.cache_dir, g.threads, &hit);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw DomainError("cannot open " + json_out + " for writing");
    out << table_to_json(t) << '\n';
  }
  if (g.json) {
    std::cout << table_to_json(t) << '\n';
    return kExitPass;
  }
  std::cout << group->name() << ": order " << group->order() << ", " << classes.count() << " classes, exponent "
            << t.exponent << '\n'
            << "modulus " << t.modulus << ", root " << t.root << (hit ? " (cached)" : "") << '\n'
            << "class sizes:";
  for (auto s : classes.sizes) std::cout << ' ' << s;
  std::cout << '\n';
  for (std::size_t a = 0; a < t.size(); ++a) {
    std::cout << "chi" << a << " degree " << t.degrees[a] << ":";
    for (auto v : t.values[a]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_verify(const GlobalFlags& g, const std::string& type, int n, int q, const std::string& out_file) {
  const PairSpec pair{parse_group_kind(type), n, q};
  const VerificationReport r = run_verify(pair, g.run_options());
  const std::string doc = report_to_json(r);
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw DomainError("cannot open " + out_file + " for writing");
    out << doc << '\n';
  }
  if (g.json) {
    std::cout << doc << '\n';
  } else {
    std::cout << "pair " << pair.label() << ": |G| = " << r.group_order << ", |H| = " << r.subgroup_order
              << ", |Z| = " << r.center_order << '\n'
              << "double cosets " << r.cosets.plain_count << ", mod center " << r.cosets.mod_center_count
              << ", transpose-moved " << r.cosets.sigma_nonfixed << " (k = " << r.cosets.k << ")\n"
              << "max dim pi^H = " << r.max_dim_inv << ", bound k+1 = " << r.bound
              << (r.bound_attained ? " (attained)" : "") << '\n';
    for (const auto& [name, ok] : r.checks) std::cout << "  " << (ok ? "ok   " : "FAIL ") << name << '\n';
    std::cout << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  if (!r.counterexample.empty()) std::cerr << r.counterexample;
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_sweep(const GlobalFlags& g, const std::string& grid_text, const std::string& out_dir) {
  const auto grid = parse_grid(grid_text);
  const auto rows = run_sweep(grid, out_dir, g.run_options());
  bool all = true;
  bool internal = false;
  json doc = json::array();
  for (const auto& r : rows) {
    all = all && r.ok && r.passed;
    internal = internal || !r.ok;
    doc.push_back({{"kind", to_string(r.pair.kind)},
                   {"n", r.pair.n},
                   {"q", r.pair.q},
                   {"ok", r.ok},
                   {"pass", r.passed},
                   {"k", r.k},
                   {"max_dim_inv", r.max_dim_inv},
                   {"bound", r.bound},
                   {"error", r.error}});
  }
  if (g.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << format_summary(rows);
  }
  if (internal) return kExitInternal;
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double cosets, character tables and invariant-dimension bounds for (GL_{n+1}, GL_n) and "
               "(O_{n+1}, O_n) over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--cache-dir", g.cache_dir, "Character table cache directory")->envname("GELFAND_CACHE_DIR");
  app.add_flag("--json", g.json, "Emit JSON on stdout");
  app.add_option("--threads", g.threads, "Worker threads (0 = auto)");
  app.add_option("--cap-group-order", g.cap_group_order, "Largest group order to enumerate");

  int q = 0;
  int n = 0;
  std::string type;

  auto* field = app.add_subcommand("field", "Finite field information");
  field->require_subcommand(1);
  auto* field_info = field->add_subcommand("info", "Print p, e, modulus and a generator");
  field_info->add_option("--q", q, "Field order")->required();

  auto* group = app.add_subcommand("group", "Enumerated matrix groups");
  group->require_subcommand(1);
  auto* group_order = group->add_subcommand("order", "Enumerate GL_n or O_n and print its order");
  std::string dump;
  group_order->add_option("--type", type, "gl or o")->required();
  group_order->add_option("--n", n, "Matrix size")->required();
  group_order->add_option("--q", q, "Field order")->required();
  group_order->add_option("--dump", dump, "Write elements as matrix literals, one per line");

  auto* cosets = app.add_subcommand("cosets", "Double cosets of the standard pair and the transpose action");
  bool mod_center = false;
  std::string involution = "transpose";
  cosets->add_option("--pair", type, "gl or o")->required();
  cosets->add_option("--n", n, "Subgroup size n (pair G_{n+1} > G_n)")->required();
  cosets->add_option("--q", q, "Field order")->required();
  cosets->add_flag("--mod-center", mod_center, "Reduce modulo the center: H\\G/Z(G)H");
  cosets->add_option("--involution", involution, "Anti-involution (transpose)");

  auto* solve = app.add_subcommand("solve-symmetric", "Symmetric invertible B with B phi = v");
  std::string phi_text;
  std::string v_text;
  solve->add_option("--q", q, "Field order")->required();
  solve->add_option("--phi", phi_text, "Comma-separated scalars")->required();
  solve->add_option("--v", v_text, "Comma-separated scalars")->required();

  auto* swap = app.add_subcommand("swap-reflection", "Orthogonal g exchanging unit vectors u and v");
  std::string u_text;
  swap->add_option("--q", q, "Field order")->required();
  swap->add_option("--u", u_text, "Comma-separated scalars")->required();
  swap->add_option("--v", v_text, "Comma-separated scalars")->required();

  auto* chartab = app.add_subcommand("chartab", "Character table mod l by Dixon's method");
  std::string chartab_json;
  chartab->add_option("--type", type, "gl or o")->required();
  chartab->add_option("--n", n, "Matrix size")->required();
  chartab->add_option("--q", q, "Field order")->required();
  chartab->add_option("--json", chartab_json, "Write the table (cache format) to this file");

  auto* verify = app.add_subcommand("verify", "Full pipeline for one pair");
  std::string out_file;
  verify->add_option("--pair", type, "gl or o")->required();
  verify->add_option("--n", n, "Subgroup size n (pair G_{n+1} > G_n)")->required();
  verify->add_option("--q", q, "Field order")->required();
  verify->add_option("--out", out_file, "Also write the JSON report here");

  auto* sweep = app.add_subcommand("sweep", "Verify a grid of pairs");
  std::string grid_text = "default";
  std::string out_dir;
  sweep->add_option("--grid", grid_text, "Comma-separated kind:n:q entries, or default, default-gl, default-o");
  sweep->add_option("--out-dir", out_dir, "Directory for per-pair reports and summary.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*field_info) return cmd_field_info(g, q);
    if (*group_order) return cmd_group_order(g, type, n, q, dump);
    if (*cosets) return cmd_cosets(g, type, n, q, mod_center, involution);
    if (*solve) return cmd_solve_symmetric(g, q, phi_text, v_text);
    if (*swap) return cmd_swap_reflection(g, q, u_text, v_text);
    if (*chartab) return cmd_chartab(g, type, n, q, chartab_json);
    if (*verify) return cmd_verify(g, type, n, q, out_file);
    if (*sweep) return cmd_sweep(g, grid_text, out_dir);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
