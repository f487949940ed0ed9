#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gelfand {

inline constexpr int kDefaultFieldSizeCap = 25;

/// An element of F_q. The index encodes the polynomial sum c_i x^i whose
/// coefficients c_i are the base-p digits of idx; 0 and 1 are the additive
/// and multiplicative identities.
struct Scalar {
  std::uint32_t idx = 0;

  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// F_q for q = p^e with all operations served from precomputed tables.
///
/// The modulus is the monic irreducible of degree e over F_p with the least
/// coefficient string when read from x^{e-1} down to x^0. For prime fields
/// the modulus is left empty. Instances are immutable and shared through
/// FieldRef.
class Field {
 public:
  /// Throws DomainError for non-prime p or e < 1, CapExceeded when p^e
  /// exceeds size_cap.
  static FieldRef build(int p, int e, int size_cap = kDefaultFieldSizeCap);

  /// Factors q as a prime power and builds the field.
  static FieldRef of_order(int q, int size_cap = kDefaultFieldSizeCap);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return q_; }

  /// Coefficients c_0..c_e of the monic modulus, empty when e = 1.
  std::span<const int> modulus() const { return modulus_; }

  bool contains(Scalar a) const { return a.idx < static_cast<std::uint32_t>(q_); }
  void check(Scalar a) const;

  Scalar zero() const { return Scalar{0}; }
  Scalar one() const { return Scalar{1}; }

  Scalar add(Scalar a, Scalar b) const { return Scalar{add_[a.idx * q_ + b.idx]}; }
  Scalar mul(Scalar a, Scalar b) const { return Scalar{mul_[a.idx * q_ + b.idx]}; }
  Scalar neg(Scalar a) const { return Scalar{neg_[a.idx]}; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

  /// Throws DomainError for a = 0.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t k) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Scalar from_int(long long v) const;

  /// Multiplicative order of a nonzero element.
  int multiplicative_order(Scalar a) const;

  /// Least index generating F_q^*.
  Scalar generator() const { return generator_; }

  // Raw table access for hot loops in the group code.
  const std::uint8_t* add_table() const { return add_.data(); }
  const std::uint8_t* mul_table() const { return mul_.data(); }

  bool operator==(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  std::string describe() const;

 private:
  Field(int p, int e, std::vector<int> modulus);

  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
  Scalar generator_;
};

/// Same field by value (p, e, modulus), not merely the same pointer.
bool same_field(const FieldRef& a, const FieldRef& b);

bool is_prime(long long n);

// Free-function aliases.
inline FieldRef build_field(int p, int e, int size_cap = kDefaultFieldSizeCap) {
  return Field::build(p, e, size_cap);
}
inline Scalar fe_add(Scalar a, Scalar b, const Field& f) { return f.add(a, b); }
inline Scalar fe_mul(Scalar a, Scalar b, const Field& f) { return f.mul(a, b); }
inline Scalar fe_neg(Scalar a, const Field& f) { return f.neg(a); }
inline Scalar fe_inv(Scalar a, const Field& f) { return f.inv(a); }

}  // namespace gelfand
