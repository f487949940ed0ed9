#include "gelfand/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "gelfand/error.hpp"
#include "gelfand/parallel.hpp"

namespace gelfand {

using modp::Residue;

std::uint64_t ConjClasses::exponent() const {
  std::uint64_t e = 1;
  for (int o : orders) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

ConjClasses conjugacy_classes(GroupRef g, std::size_t cap) {
  if (g->order() > cap) {
    throw CapExceeded("conjugacy classes of a group of order " + std::to_string(g->order()) + " exceed cap " +
                      std::to_string(cap));
  }
  constexpr ClassId kUnset = std::numeric_limits<ClassId>::max();
  ConjClasses c;
  c.group = g;
  c.class_of.assign(g->order(), kUnset);
  std::vector<ElemId> stack;
  for (ElemId seed = 0; seed < g->order(); ++seed) {
    if (c.class_of[seed] != kUnset) continue;
    const auto id = static_cast<ClassId>(c.reps.size());
    c.reps.push_back(seed);
    c.class_of[seed] = id;
    std::uint64_t size = 1;
    stack.push_back(seed);
    while (!stack.empty()) {
      const ElemId x = stack.back();
      stack.pop_back();
      for (ElemId s : g->generators()) {
        const ElemId y = g->multiply(g->multiply(s, x), g->inverse(s));
        if (c.class_of[y] == kUnset) {
          c.class_of[y] = id;
          ++size;
          stack.push_back(y);
        }
      }
    }
    c.sizes.push_back(size);
  }
  c.inverse_class.resize(c.count());
  c.orders.resize(c.count());
  for (ClassId k = 0; k < c.count(); ++k) {
    c.inverse_class[k] = c.class_of[g->inverse(c.reps[k])];
    c.orders[k] = g->element_order(c.reps[k]);
  }
  c.identity_class = c.class_of[g->identity()];
  if (c.sizes[c.identity_class] != 1) throw InternalError("identity class is not a singleton");
  return c;
}

bool transpose_preserves_classes(const ConjClasses& classes) {
  const GroupTable& g = *classes.group;
  if (!g.transpose_closed()) return false;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (classes.class_of[x] != classes.class_of[g.transpose(x)]) return false;
  }
  return true;
}

namespace {

using Rows = std::vector<std::vector<Residue>>;

// counts[l][j * r + k] = #{x in C_j : x^{-1} z_l in C_k}, the structure
// constant a_{jkl} of C_j C_k = sum_l a_{jkl} C_l.
std::vector<std::vector<std::uint64_t>> structure_constants(const ConjClasses& c, unsigned threads) {
  const GroupTable& g = *c.group;
  const std::size_t r = c.count();
  std::vector<std::vector<std::uint64_t>> counts(r, std::vector<std::uint64_t>(r * r, 0));
  parallel_for(r, threads, [&](std::size_t l) {
    const ElemId z = c.reps[l];
    auto& out = counts[l];
    for (ElemId x = 0; x < g.order(); ++x) {
      const ElemId y = g.multiply(g.inverse(x), z);
      ++out[c.class_of[x] * r + c.class_of[y]];
    }
  });
  return counts;
}

struct Subspace {
  Rows basis;  // reduced row echelon form
  std::vector<int> pivots;
};

// Matrix of the class matrix M restricted to an invariant subspace, in the
// coordinates of its echelon basis.
Rows restrict_to(const Rows& m, const Subspace& w, Residue l) {
  const std::size_t dim = w.basis.size();
  const std::size_t r = m.size();
  Rows out(dim, std::vector<Residue>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Residue> image(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
      Residue acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc = modp::add(acc, modp::mul(m[k][j], w.basis[i][j], l), l);
      image[k] = acc;
    }
    // Coordinates are read off at the pivots; confirm the image lies in W.
    std::vector<Residue> rebuilt(r, 0);
    for (std::size_t t = 0; t < dim; ++t) {
      const Residue coeff = image[w.pivots[t]];
      out[t][i] = coeff;
      for (std::size_t k = 0; k < r; ++k) rebuilt[k] = modp::add(rebuilt[k], modp::mul(coeff, w.basis[t][k], l), l);
    }
    if (rebuilt != image) throw InternalError("class matrix does not preserve a common eigenspace");
  }
  return out;
}

bool is_scalar(const Rows& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j && a[i][j] != 0) return false;
      if (a[i][i] != a[0][0]) return false;
    }
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t v) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

}  // namespace

CharacterTable character_table(const ConjClasses& classes, unsigned threads) {
  const GroupTable& g = *classes.group;
  const std::size_t r = classes.count();
  const std::uint64_t order = g.order();

  CharacterTable t;
  t.classes = classes;
  t.exponent = classes.exponent();
  t.modulus = modp::prime_in_progression(t.exponent, 2 * order);
  const Residue l = t.modulus;
  t.root = modp::pow(modp::primitive_root(l), (l - 1) / t.exponent, l);

  const auto counts = structure_constants(classes, threads);
  // Class matrix M_j has entry (k, l) = a_{jkl}; the vector of central
  // character values (omega(C_l))_l is a common right eigenvector.
  auto class_matrix = [&](std::size_t j) {
    Rows m(r, std::vector<Residue>(r));
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t col = 0; col < r; ++col) m[k][col] = counts[col][j * r + k] % l;
    }
    return m;
  };

  std::vector<Subspace> spaces;
  {
    Subspace whole;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Residue> e(r, 0);
      e[i] = 1;
      whole.basis.push_back(std::move(e));
      whole.pivots.push_back(static_cast<int>(i));
    }
    spaces.push_back(std::move(whole));
  }
  auto all_lines = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; });
  };

  for (std::size_t j = 0; j < r && !all_lines(); ++j) {
    const Rows m = class_matrix(j);
    std::vector<Subspace> next;
    for (Subspace& w : spaces) {
      const std::size_t dim = w.basis.size();
      if (dim == 1) {
        next.push_back(std::move(w));
        continue;
      }
      const Rows restricted = restrict_to(m, w, l);
      if (is_scalar(restricted)) {
        next.push_back(std::move(w));
        continue;
      }
      const auto eigenvalues = modp::roots(modp::charpoly(restricted, l), l);
      std::size_t covered = 0;
      for (Residue lambda : eigenvalues) {
        Rows shifted = restricted;
        for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = modp::sub(shifted[i][i], lambda, l);
        Subspace piece;
        for (const auto& coeffs : modp::kernel(shifted, l)) {
          std::vector<Residue> v(r, 0);
          for (std::size_t i = 0; i < dim; ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = modp::add(v[k], modp::mul(coeffs[i], w.basis[i][k], l), l);
          }
          piece.basis.push_back(std::move(v));
        }
        piece.pivots = modp::rref(piece.basis, l);
        covered += piece.basis.size();
        next.push_back(std::move(piece));
      }
      if (covered != dim) {
        throw InternalError("class matrix " + std::to_string(j) + " is not diagonalizable over F_" +
                            std::to_string(l));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r || !all_lines()) {
    throw InternalError("common eigenspaces of the class matrices did not split into lines");
  }

  const ClassId id = classes.identity_class;
  std::vector<Residue> size_inv(r);
  for (std::size_t k = 0; k < r; ++k) size_inv[k] = modp::inv(classes.sizes[k] % l, l);

  struct Row {
    std::uint64_t degree;
    std::vector<Residue> values;
  };
  std::vector<Row> rows;
  for (const Subspace& w : spaces) {
    std::vector<Residue> omega = w.basis[0];
    if (omega[id] == 0) throw InternalError("central character vanishes at the identity");
    const Residue norm = modp::inv(omega[id], l);
    for (auto& x : omega) x = modp::mul(x, norm, l);

    // |G| / d^2 = sum_k omega_k omega_{k'} / |C_k|
    Residue s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = modp::add(s, modp::mul(modp::mul(omega[k], omega[classes.inverse_class[k]], l), size_inv[k], l), l);
    }
    if (s == 0) throw InternalError("degree normalisation vanishes");
    const Residue d2 = modp::mul(order % l, modp::inv(s, l), l);
    const std::uint64_t d = isqrt(d2);
    if (d == 0 || d * d != d2 || d2 > order) {
      throw InternalError("degree residue " + std::to_string(d2) + " is not a square at most |G|");
    }
    Row row{d, std::vector<Residue>(r)};
    for (std::size_t k = 0; k < r; ++k) row.values[k] = modp::mul(modp::mul(omega[k], d % l, l), size_inv[k], l);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.degree, a.values) < std::tie(b.degree, b.values);
  });
  for (auto& row : rows) {
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.values));
  }
  if (!degrees_consistent(t)) throw InternalError("character degrees do not square-sum to |G|");
  return t;
}

bool rows_orthogonal(const CharacterTable& t) {
  const Residue l = t.modulus;
  const auto& c = t.classes;
  const Residue order = c.group->order() % l;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      Residue acc = 0;
      for (std::size_t k = 0; k < c.count(); ++k) {
        acc = modp::add(acc, modp::mul(c.sizes[k] % l, modp::mul(t.values[a][k], t.values[b][c.inverse_class[k]], l), l), l);
      }
      if (acc != (a == b ? order : 0)) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const CharacterTable& t) {
  const Residue l = t.modulus;
  const auto& c = t.classes;
  const std::uint64_t order = c.group->order();
  for (std::size_t i = 0; i < c.count(); ++i) {
    for (std::size_t j = 0; j < c.count(); ++j) {
      Residue acc = 0;
      for (std::size_t a = 0; a < t.size(); ++a) {
        acc = modp::add(acc, modp::mul(t.values[a][i], t.values[a][c.inverse_class[j]], l), l);
      }
      const Residue expected = i == j ? (order / c.sizes[i]) % l : 0;
      if (acc != expected) return false;
    }
  }
  return true;
}

bool degrees_consistent(const CharacterTable& t) {
  const std::uint64_t order = t.classes.group->order();
  std::uint64_t sum = 0;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const std::uint64_t d = t.degrees[a];
    if (d == 0 || order % d != 0) return false;
    if (t.values[a][t.classes.identity_class] != d % t.modulus) return false;
    sum += d * d;
  }
  return sum == order && t.size() == t.classes.count();
}

bool central_characters_coherent(const CharacterTable& t, const std::vector<ElemId>& center) {
  const Residue l = t.modulus;
  const auto& c = t.classes;
  const GroupTable& g = *c.group;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const Residue dinv = modp::inv(t.degrees[a] % l, l);
    for (ElemId z : center) {
      const ClassId k = c.class_of[z];
      if (c.sizes[k] != 1) return false;
      const Residue scalar = modp::mul(t.values[a][k], dinv, l);
      if (modp::pow(scalar, t.exponent, l) != 1) return false;
      if (t.values[a][c.class_of[g.transpose(z)]] != t.values[a][k]) return false;
    }
  }
  return true;
}

std::uint64_t InvariantReport::sum_squares() const {
  std::uint64_t s = 0;
  for (const auto& ch : characters) s += ch.dim_inv * ch.dim_inv;
  return s;
}

bool InvariantReport::duals_agree() const {
  return std::all_of(characters.begin(), characters.end(),
                     [](const CharacterInvariants& c) { return c.dim_inv == c.dim_dual_inv; });
}

InvariantReport dim_invariants(const CharacterTable& t, const Embedding& emb) {
  const auto& c = t.classes;
  if (emb.big != c.group) throw DomainError("embedding does not target the table's group");
  const Residue l = t.modulus;
  std::vector<std::uint64_t> hits(c.count(), 0);
  for (ElemId h = 0; h < emb.small->order(); ++h) ++hits[c.class_of[emb.map[h]]];
  const Residue h_inv = modp::inv(emb.small->order() % l, l);

  InvariantReport report;
  for (std::size_t a = 0; a < t.size(); ++a) {
    Residue direct = 0;
    Residue dual = 0;
    for (std::size_t k = 0; k < c.count(); ++k) {
      if (hits[k] == 0) continue;
      direct = modp::add(direct, modp::mul(hits[k] % l, t.values[a][k], l), l);
      dual = modp::add(dual, modp::mul(hits[k] % l, t.values[a][c.inverse_class[k]], l), l);
    }
    direct = modp::mul(direct, h_inv, l);
    dual = modp::mul(dual, h_inv, l);
    const std::uint64_t d = t.degrees[a];
    if (direct > d || dual > d) {
      std::ostringstream os;
      os << "invariant dimension residues (" << direct << ", " << dual << ") for character " << a
         << " of degree " << d << " fall outside [0, degree]";
      throw InternalError(os.str());
    }
    report.characters.push_back({d, direct, dual});
    report.max_dim_inv = std::max(report.max_dim_inv, direct);
    ++report.histogram[direct];
  }
  return report;
}

VerificationOutcome verify_pair(const Embedding& emb, const InvariantReport& report,
                                const InvolutionAction& mod_center_action) {
  if (!mod_center_action.decomp.mod_center) {
    throw DomainError("the k+1 bound needs the decomposition taken modulo the center");
  }
  if (mod_center_action.decomp.group != emb.big) throw DomainError("coset data is for a different group");

  VerificationOutcome out;
  out.k = mod_center_action.k();
  out.max_dim_inv = report.max_dim_inv;
  out.bound = out.k + 1;
  out.kind_bound = emb.big->kind() == GroupKind::GL ? 2 : 1;
  out.within_bound = out.max_dim_inv <= out.bound;
  out.within_kind_bound = out.max_dim_inv <= out.kind_bound;
  out.attained = out.max_dim_inv == out.bound;
  if (!out.passed()) {
    std::ostringstream os;
    os << "pair " << emb.big->name() << " > " << emb.small->name() << ": k = " << out.k
       << ", bound k+1 = " << out.bound << ", kind bound = " << out.kind_bound << "\n";
    for (std::size_t a = 0; a < report.characters.size(); ++a) {
      const auto& ch = report.characters[a];
      if (ch.dim_inv > std::min(out.bound, out.kind_bound)) {
        os << "  character " << a << ": degree " << ch.degree << ", dim pi^H = " << ch.dim_inv
           << ", dim (pi*)^H = " << ch.dim_dual_inv << "\n";
      }
    }
    out.counterexample = os.str();
  }
  return out;
}

}  // namespace gelfand
