#include "gelfand/symsolve.hpp"

#include <algorithm>
#include <span>

#include "gelfand/error.hpp"

namespace gelfand {
namespace {

using Vec = std::vector<Scalar>;

bool all_zero(std::span<const Scalar> x) {
  return std::all_of(x.begin(), x.end(), [](Scalar s) { return s.idx == 0; });
}

int first_nonzero(std::span<const Scalar> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].idx != 0) return static_cast<int>(i);
  }
  return -1;
}

void validate(const SymSolveInstance& inst) {
  if (!inst.field) throw DomainError("instance has no field");
  if (inst.phi.empty() || inst.phi.size() != inst.v.size()) {
    throw DimensionMismatch("phi and v must be nonempty vectors of equal length");
  }
  for (Scalar s : inst.phi) inst.field->check(s);
  for (Scalar s : inst.v) inst.field->check(s);
  if (all_zero(inst.phi) || all_zero(inst.v)) throw DomainError("phi and v must both be nonzero");
}

// [[c, r^T], [r, A]]
Matrix assemble(const FieldRef& f, Scalar c, std::span<const Scalar> r, const Matrix& a) {
  const int n = a.rows() + 1;
  Matrix b(f, n, n);
  b(0, 0) = c;
  for (int i = 1; i < n; ++i) {
    b(0, i) = r[i - 1];
    b(i, 0) = r[i - 1];
    for (int j = 1; j < n; ++j) b(i, j) = a(i - 1, j - 1);
  }
  return b;
}

Matrix solve(const FieldRef& fr, const Vec& phi, const Vec& v, std::vector<SolveCase>* trace) {
  const Field& f = *fr;
  const int n = static_cast<int>(phi.size());
  auto note = [trace](SolveCase c) {
    if (trace) trace->push_back(c);
  };

  if (n == 1) {
    note(SolveCase::Scalar);
    return Matrix(fr, 1, 1, {f.div(v[0], phi[0])});
  }

  const Scalar b1 = phi[0];
  const Scalar a1 = v[0];
  const Vec phi1(phi.begin() + 1, phi.end());
  const Vec v1(v.begin() + 1, v.end());

  if (all_zero(phi1)) {
    // b1 != 0 because phi != 0.
    const Scalar c = f.div(a1, b1);
    Vec r1(n - 1);
    for (int i = 0; i < n - 1; ++i) r1[i] = f.div(v1[i], b1);
    Matrix a = Matrix::identity(fr, n - 1);
    const int j = first_nonzero(r1);
    if (j < 0) {
      note(SolveCase::HeadOnly);
    } else {
      // Pairing the corner with coordinate j makes the {0, j} block
      // [[c', r_j], [r_j, 0]] after clearing the other coordinates, which has
      // determinant -r_j^2.
      note(SolveCase::HeadOnlyPaired);
      a(j, j) = f.zero();
    }
    return assemble(fr, c, r1, a);
  }

  if (all_zero(v1) || (a1.idx == 0 && b1.idx != 0)) {
    note(SolveCase::SwapInverse);
    return inverse(solve(fr, v, phi, trace));
  }

  if (b1.idx == 0) {
    note(SolveCase::ZeroHead);
    const Matrix a = solve(fr, phi1, v1, trace);
    Vec r1(n - 1, f.zero());
    const int j = first_nonzero(phi1);
    r1[j] = f.div(a1, phi1[j]);
    for (Scalar c : {f.zero(), f.one()}) {
      Matrix b = assemble(fr, c, r1, a);
      if (det(b).idx != 0) return b;
    }
    throw InternalError("no corner value in {0, 1} makes the symmetric solution invertible for phi=" +
                        to_literal(transpose(Matrix::column(fr, phi))) +
                        " v=" + to_literal(transpose(Matrix::column(fr, v))) + " over F_" +
                        std::to_string(f.order()));
  }

  note(SolveCase::Diagonal);
  const Matrix a = solve(fr, phi1, v1, trace);
  return assemble(fr, f.div(a1, b1), Vec(n - 1, f.zero()), a);
}

}  // namespace

Matrix solve_symmetric(const SymSolveInstance& inst, std::vector<SolveCase>* trace) {
  validate(inst);
  Matrix b = solve(inst.field, inst.phi, inst.v, trace);
  const Matrix phi = Matrix::column(inst.field, inst.phi);
  const Matrix v = Matrix::column(inst.field, inst.v);
  if (!is_symmetric(b) || det(b).idx == 0 || !(b * phi == v)) {
    throw InternalError("symmetric solver produced an invalid matrix " + to_literal(b));
  }
  return b;
}

std::optional<Matrix> oracle_symmetric(const SymSolveInstance& inst) {
  validate(inst);
  const Field& f = *inst.field;
  const int n = inst.n();
  const int slots = n * (n + 1) / 2;
  const std::uint64_t q = f.order();
  std::uint64_t space = 1;
  for (int i = 0; i < slots; ++i) {
    space *= q;
    if (space > kOracleSearchCap) {
      throw CapExceeded("symmetric search space " + std::to_string(q) + "^" + std::to_string(slots) +
                        " exceeds " + std::to_string(kOracleSearchCap));
    }
  }

  // Upper-triangle slots in row-major order; the first slot is the most
  // significant digit, so codes ascend in lexicographic entry order.
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) pos.emplace_back(i, j);
  }
  const Matrix phi = Matrix::column(inst.field, inst.phi);
  const Matrix v = Matrix::column(inst.field, inst.v);
  Matrix b(inst.field, n, n);
  for (std::uint64_t code = 0; code < space; ++code) {
    std::uint64_t rest = code;
    for (int s = slots - 1; s >= 0; --s) {
      const Scalar e{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
      b(pos[s].first, pos[s].second) = e;
      b(pos[s].second, pos[s].first) = e;
    }
    if (b * phi == v && det(b).idx != 0) return b;
  }
  return std::nullopt;
}

}  // namespace gelfand
