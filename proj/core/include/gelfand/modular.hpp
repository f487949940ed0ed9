#pragma once

#include <cstdint>
#include <vector>

// Arithmetic in Z/lZ for a prime l < 2^32.
namespace gelfand::modp {

using Residue = std::uint64_t;

inline Residue add(Residue a, Residue b, Residue l) {
  const Residue s = a + b;
  return s >= l ? s - l : s;
}
inline Residue sub(Residue a, Residue b, Residue l) { return a >= b ? a - b : a + l - b; }
inline Residue mul(Residue a, Residue b, Residue l) { return a * b % l; }
inline Residue neg(Residue a, Residue l) { return a == 0 ? 0 : l - a; }

Residue pow(Residue a, std::uint64_t e, Residue l);
/// a must be nonzero mod l.
Residue inv(Residue a, Residue l);
/// Residue of a (possibly negative) integer.
Residue reduce(long long v, Residue l);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Least primitive root modulo the prime l.
Residue primitive_root(Residue l);
/// Smallest prime l with l = 1 (mod m) and l > lower_bound.
std::uint64_t prime_in_progression(std::uint64_t m, std::uint64_t lower_bound);

/// Coefficients lowest degree first.
using Poly = std::vector<Residue>;

/// Characteristic polynomial det(xI - A) of a square matrix, by reduction
/// to Hessenberg form. A is row-major, size n x n.
Poly charpoly(std::vector<std::vector<Residue>> a, Residue l);

/// Distinct roots in ascending order. Intended for polynomials that split
/// over F_l; stops once the deflated polynomial is constant.
std::vector<Residue> roots(Poly p, Residue l);

/// Basis of the null space of A (m x n), each vector of length n.
std::vector<std::vector<Residue>> kernel(std::vector<std::vector<Residue>> a, Residue l);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Residue>>& rows, Residue l);

}  // namespace gelfand::modp
