#include "gelfand/reflections.hpp"

#include "gelfand/error.hpp"

namespace gelfand {
namespace {

Scalar self_dot(const Field& f, const std::vector<Scalar>& x) {
  Scalar acc = f.zero();
  for (Scalar s : x) acc = f.add(acc, f.mul(s, s));
  return acc;
}

void check_pair(const FieldRef& field, const SpherePoint& u, const SpherePoint& v) {
  if (field->characteristic() == 2) {
    throw DomainError("sphere swaps divide by 2; F_" + std::to_string(field->order()) + " has characteristic 2");
  }
  if (u.coords.size() != v.coords.size() || u.coords.empty()) {
    throw DimensionMismatch("sphere points must have equal positive dimension");
  }
  for (const auto* x : {&u, &v}) {
    for (Scalar s : x->coords) field->check(s);
    if (self_dot(*field, x->coords) != field->one()) throw DomainError("point is not on the unit sphere");
  }
}

}  // namespace

std::vector<SpherePoint> sphere_points(int n, const FieldRef& field) {
  if (n < 1) throw DomainError("sphere dimension must be at least 1");
  const std::uint64_t q = field->order();
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= q;
    if (count > kSphereSearchCap) {
      throw CapExceeded("q^n = " + std::to_string(q) + "^" + std::to_string(n) + " exceeds sphere search cap");
    }
  }
  std::vector<SpherePoint> out;
  std::vector<Scalar> x(n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      x[i] = Scalar{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    if (self_dot(*field, x) == field->one()) out.push_back(SpherePoint{x});
  }
  return out;
}

SpherePoint make_sphere_point(const FieldRef& field, std::vector<Scalar> coords) {
  for (Scalar s : coords) field->check(s);
  if (coords.empty() || self_dot(*field, coords) != field->one()) {
    throw DomainError("vector is not on the unit sphere");
  }
  return SpherePoint{std::move(coords)};
}

bool uses_difference_reflection(const FieldRef& field, const SpherePoint& u, const SpherePoint& v) {
  check_pair(field, u, v);
  const Matrix d = Matrix::column(field, u.coords) - Matrix::column(field, v.coords);
  return dot(d, d).idx != 0;
}

Matrix swap_element(const FieldRef& field, const SpherePoint& u, const SpherePoint& v) {
  check_pair(field, u, v);
  const Field& f = *field;
  const int n = static_cast<int>(u.coords.size());
  const Matrix uu = Matrix::column(field, u.coords);
  const Matrix vv = Matrix::column(field, v.coords);
  const Matrix id = Matrix::identity(field, n);
  const Scalar two = f.from_int(2);

  const Matrix d = uu - vv;
  const Scalar dd = dot(d, d);
  if (dd.idx != 0) {
    // x - 2 (<d, x> / <d, d>) d
    return id - scale(f.div(two, dd), d * transpose(d));
  }
  // (<s, x> / 2) s - x
  const Matrix s = uu + vv;
  return scale(f.inv(two), s * transpose(s)) - id;
}

}  // namespace gelfand
