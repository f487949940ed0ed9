#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/matrix.hpp"

namespace gelfand {

/// Find a symmetric invertible B with B phi = v, both vectors nonzero.
struct SymSolveInstance {
  FieldRef field;
  std::vector<Scalar> phi;
  std::vector<Scalar> v;

  int n() const { return static_cast<int>(phi.size()); }
};

/// Which branch of the recursive construction handled a (sub)instance.
/// Writing phi = (b1; phi1), v = (a1; v1):
enum class SolveCase : std::uint8_t {
  Scalar,          // n = 1
  HeadOnly,        // phi1 = 0, r1 = 0: B = diag(a1/b1, I)
  HeadOnlyPaired,  // phi1 = 0, r1 != 0: diagonal slot under r1's first nonzero zeroed
  SwapInverse,     // v1 = 0, or a1 = 0 with b1 != 0: solve (v, phi) and invert
  ZeroHead,        // b1 = 0: recurse, then c in {0, 1}
  Diagonal,        // all of a1, b1, phi1, v1 nonzero: B = diag(a1/b1, A)
};

/// Throws DomainError on zero or mismatched vectors; InternalError if both
/// corner candidates are singular or the output fails verification.
/// The trace, when given, receives the case used at each recursion level.
Matrix solve_symmetric(const SymSolveInstance& inst, std::vector<SolveCase>* trace = nullptr);

inline constexpr std::uint64_t kOracleSearchCap = 15'625;

/// First invertible symmetric solution in lexicographic entry order, found by
/// exhaustive search. Throws CapExceeded when q^{n(n+1)/2} > kOracleSearchCap.
std::optional<Matrix> oracle_symmetric(const SymSolveInstance& inst);

}  // namespace gelfand
