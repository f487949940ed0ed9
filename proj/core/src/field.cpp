#include "gelfand/field.hpp"

#include <algorithm>
#include <sstream>

#include "gelfand/error.hpp"

namespace gelfand {
namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first, with no
// trailing zeros (the zero polynomial is empty).
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  // p is prime and small; Fermat is plenty.
  long long r = 1, b = a % p;
  for (int k = p - 2; k > 0; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

// Remainder of a modulo a nonzero b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of code.
Poly monic_from_code(int degree, long long code, int p) {
  Poly f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<int>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= e / 2; ++d) {
    const long long count = ipow(p, d);
    for (long long code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(d, code, p), p).empty()) return false;
    }
  }
  return true;
}

Poly digits(std::uint32_t idx, int p, int e) {
  Poly c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, int p) {
  std::uint32_t idx = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
  return idx;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldRef Field::build(int p, int e, int size_cap) {
  if (!is_prime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw DomainError("extension degree must be at least 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > size_cap || q > 256) {
      throw CapExceeded("field size " + std::to_string(p) + "^" + std::to_string(e) +
                        " exceeds cap " + std::to_string(std::min(size_cap, 256)));
    }
  }
  Poly modulus;
  if (e > 1) {
    const long long candidates = ipow(p, e);
    for (long long code = 0; code < candidates; ++code) {
      Poly f = monic_from_code(e, code, p);
      if (irreducible(f, p)) {
        modulus = std::move(f);
        break;
      }
    }
    if (modulus.empty()) throw InternalError("no irreducible polynomial found");
  }
  return FieldRef(new Field(p, e, std::move(modulus)));
}

FieldRef Field::of_order(int q, int size_cap) {
  if (q < 2) throw DomainError("field order must be at least 2");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  return build(p, e, size_cap);
}

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(static_cast<int>(ipow(p, e))), modulus_(std::move(modulus)) {
  const auto q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly ca = digits(a, p_, e_);
    Poly cn(e_);
    for (int i = 0; i < e_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(cn, p_));
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly cb = digits(b, p_, e_);
      Poly sum(e_);
      for (int i = 0; i < e_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
      add_[a * q + b] = static_cast<std::uint8_t>(encode(sum, p_));

      Poly prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i) {
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      }
      if (e_ > 1) prod = poly_mod(prod, modulus_, p_);
      prod.resize(e_, 0);
      mul_[a * q + b] = static_cast<std::uint8_t>(encode(prod, p_));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  generator_ = Scalar{1};
  for (std::uint32_t g = 1; g < q; ++g) {
    if (multiplicative_order(Scalar{g}) == q_ - 1) {
      generator_ = Scalar{g};
      break;
    }
  }
}

void Field::check(Scalar a) const {
  if (!contains(a)) {
    throw DomainError("scalar index " + std::to_string(a.idx) + " out of range for F_" +
                      std::to_string(q_));
  }
}

Scalar Field::inv(Scalar a) const {
  check(a);
  if (a.idx == 0) throw DomainError("inverse of zero");
  return Scalar{inv_[a.idx]};
}

Scalar Field::pow(Scalar a, std::uint64_t k) const {
  Scalar r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Scalar Field::from_int(long long v) const {
  const long long r = ((v % p_) + p_) % p_;
  return Scalar{static_cast<std::uint32_t>(r)};
}

int Field::multiplicative_order(Scalar a) const {
  if (a.idx == 0) throw DomainError("zero has no multiplicative order");
  int k = 1;
  for (Scalar x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (int i = e_; i >= 0; --i) {
      const int c = modulus_[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

bool same_field(const FieldRef& a, const FieldRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace gelfand
