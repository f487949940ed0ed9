#pragma once

#include <cstdint>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/matrix.hpp"

namespace gelfand {

/// A vector x with <x, x> = 1 under the dot product.
struct SpherePoint {
  std::vector<Scalar> coords;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

inline constexpr std::uint64_t kSphereSearchCap = 10'000'000;

/// All unit vectors of F_q^n in lexicographic coordinate order.
std::vector<SpherePoint> sphere_points(int n, const FieldRef& field);

/// Throws DomainError unless <x, x> = 1.
SpherePoint make_sphere_point(const FieldRef& field, std::vector<Scalar> coords);

/// Orthogonal involution exchanging u and v.
///
/// Reflection in the hyperplane orthogonal to d = u - v when <d, d> != 0,
/// otherwise x -> (<s, x>/2) s - x with s = u + v (then <u, v> = 1 and
/// <s, s> = 4). Columns of the result are the images of the basis vectors.
/// Throws DomainError in characteristic 2.
Matrix swap_element(const FieldRef& field, const SpherePoint& u, const SpherePoint& v);

/// Whether swap_element uses the hyperplane reflection (first formula).
bool uses_difference_reflection(const FieldRef& field, const SpherePoint& u, const SpherePoint& v);

}  // namespace gelfand
