#include "gelfand/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <ostream>
#include <random>
#include <unordered_set>

#include "gelfand/error.hpp"

namespace gelfand {
namespace {

constexpr int kMaxEntries = 64;
constexpr std::uint64_t kDenseIndexLimit = 1u << 21;
constexpr std::uint64_t kFilterCrossCheckLimit = 10'000'000;

// q^k, or nullopt if it does not fit comfortably in 63 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::numeric_limits<std::uint64_t>::max() >> 1) / q) return std::nullopt;
    r *= q;
  }
  return r;
}

std::uint64_t key_space(int n, const Field& f) {
  const auto space = checked_pow(f.order(), n * n);
  if (!space || n * n > kMaxEntries) {
    throw CapExceeded("matrices of size " + std::to_string(n) + " over F_" + std::to_string(f.order()) +
                      " do not fit the 64-bit element key");
  }
  return *space;
}

void decode_key(std::uint64_t key, int q, int count, std::uint8_t* out) {
  for (int i = count - 1; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(key % q);
    key /= q;
  }
}

std::uint64_t encode_key(const std::uint8_t* entries, int q, int count) {
  std::uint64_t key = 0;
  for (int i = 0; i < count; ++i) key = key * q + entries[i];
  return key;
}

void multiply_raw(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, int n, const Field& f) {
  const int q = f.order();
  const std::uint8_t* add = f.add_table();
  const std::uint8_t* mul = f.mul_table();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint8_t acc = 0;
      for (int k = 0; k < n; ++k) acc = add[acc * q + mul[a[i * n + k] * q + b[k * n + j]]];
      out[i * n + j] = acc;
    }
  }
}

bool is_orthogonal_raw(const std::uint8_t* g, int n, const Field& f) {
  const int q = f.order();
  const std::uint8_t* add = f.add_table();
  const std::uint8_t* mul = f.mul_table();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::uint8_t acc = 0;
      for (int k = 0; k < n; ++k) acc = add[acc * q + mul[g[k * n + i] * q + g[k * n + j]]];
      if (acc != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(GroupKind kind) { return kind == GroupKind::GL ? "gl" : "o"; }

GroupKind parse_group_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "gl") return GroupKind::GL;
  if (lower == "o") return GroupKind::O;
  throw DomainError("unknown group type '" + std::string(text) + "' (expected gl or o)");
}

std::uint64_t gl_order(int n, int q) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto qn = checked_pow(q, n);
  if (!qn) return kMax;
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t factor = *qn - qi;
    if (order > kMax / factor) return kMax;
    order *= factor;
    qi *= q;
  }
  return order;
}

GroupTable::GroupTable(GroupKind kind, int n, FieldRef field, std::vector<std::uint64_t> keys)
    : kind_(kind), n_(n), field_(std::move(field)), keys_(std::move(keys)) {
  finish();
}

GroupRef GroupTable::enumerate_gl(int n, FieldRef field, std::size_t cap) {
  if (n < 1) throw DomainError("matrix size must be at least 1");
  const int q = field->order();
  key_space(n, *field);
  const std::uint64_t expected = gl_order(n, q);
  if (expected > cap) {
    throw CapExceeded("GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ") has order " +
                      (expected == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                             : std::to_string(expected)) +
                      ", above cap " + std::to_string(cap));
  }

  // Vectors of F_q^n keyed like rows: first coordinate most significant.
  const auto vec_count = static_cast<std::size_t>(*checked_pow(q, n));
  std::vector<std::uint8_t> coords(vec_count * n);
  for (std::size_t v = 0; v < vec_count; ++v) decode_key(v, q, n, &coords[v * n]);
  const std::uint8_t* add = field->add_table();
  const std::uint8_t* mul = field->mul_table();
  auto combine = [&](std::size_t s, std::uint8_t c, std::size_t r) {
    std::uint8_t out[kMaxEntries];
    for (int i = 0; i < n; ++i) out[i] = add[coords[s * n + i] * q + mul[c * q + coords[r * n + i]]];
    return static_cast<std::size_t>(encode_key(out, q, n));
  };

  std::vector<std::uint64_t> keys;
  keys.reserve(expected);
  const std::uint64_t row_weight = vec_count;
  // Depth-first over rows outside the span of the rows chosen so far. Rows
  // are tried in ascending key order, so matrices come out sorted.
  auto extend = [&](auto&& self, int depth, const std::vector<char>& span, std::uint64_t prefix) -> void {
    if (depth == n) {
      keys.push_back(prefix);
      return;
    }
    for (std::size_t r = 0; r < vec_count; ++r) {
      if (span[r]) continue;
      std::vector<char> next(vec_count, 0);
      for (std::size_t s = 0; s < vec_count; ++s) {
        if (!span[s]) continue;
        for (int c = 0; c < q; ++c) next[combine(s, static_cast<std::uint8_t>(c), r)] = 1;
      }
      self(self, depth + 1, next, prefix * row_weight + r);
    }
  };
  std::vector<char> zero_span(vec_count, 0);
  zero_span[0] = 1;
  extend(extend, 0, zero_span, 0);

  if (keys.size() != expected || !std::is_sorted(keys.begin(), keys.end())) {
    throw InternalError("GL enumeration disagrees with the order formula");
  }
  return GroupRef(new GroupTable(GroupKind::GL, n, std::move(field), std::move(keys)));
}

GroupRef GroupTable::enumerate_o(int n, FieldRef field, std::size_t cap) {
  if (n < 1) throw DomainError("matrix size must be at least 1");
  if (field->characteristic() == 2) {
    throw DomainError("orthogonal groups need odd characteristic (q = " + std::to_string(field->order()) + ")");
  }
  const int q = field->order();
  const int count = n * n;
  const std::uint64_t space = key_space(n, *field);
  const Field& f = *field;

  // Reflections x -> x - 2 (<w,x>/<w,w>) w over all non-isotropic w.
  std::vector<std::array<std::uint8_t, kMaxEntries>> reflections;
  {
    const auto vec_count = *checked_pow(q, n);
    std::unordered_set<std::uint64_t> seen;
    std::uint8_t w[kMaxEntries];
    for (std::uint64_t v = 1; v < vec_count; ++v) {
      decode_key(v, q, n, w);
      Scalar ww = f.zero();
      for (int i = 0; i < n; ++i) ww = f.add(ww, f.mul(Scalar{w[i]}, Scalar{w[i]}));
      if (ww.idx == 0) continue;
      const Scalar coeff = f.neg(f.div(f.from_int(2), ww));
      std::array<std::uint8_t, kMaxEntries> r{};
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Scalar e = f.mul(coeff, f.mul(Scalar{w[i]}, Scalar{w[j]}));
          if (i == j) e = f.add(e, f.one());
          r[i * n + j] = static_cast<std::uint8_t>(e.idx);
        }
      }
      if (seen.insert(encode_key(r.data(), q, count)).second) reflections.push_back(r);
    }
  }

  std::vector<std::uint64_t> keys;
  std::unordered_set<std::uint64_t> visited;
  std::vector<std::uint64_t> frontier;
  {
    std::uint8_t id[kMaxEntries] = {};
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    const std::uint64_t k = encode_key(id, q, count);
    visited.insert(k);
    frontier.push_back(k);
  }
  std::uint8_t cur[kMaxEntries];
  std::uint8_t prod[kMaxEntries];
  while (!frontier.empty()) {
    const std::uint64_t k = frontier.back();
    frontier.pop_back();
    keys.push_back(k);
    decode_key(k, q, count, cur);
    for (const auto& r : reflections) {
      multiply_raw(cur, r.data(), prod, n, f);
      const std::uint64_t pk = encode_key(prod, q, count);
      if (visited.insert(pk).second) {
        if (visited.size() > cap) {
          throw CapExceeded("O_" + std::to_string(n) + "(F_" + std::to_string(q) + ") exceeds order cap " +
                            std::to_string(cap));
        }
        frontier.push_back(pk);
      }
    }
  }
  std::sort(keys.begin(), keys.end());

  if (space <= kFilterCrossCheckLimit) {
    std::vector<std::uint64_t> filtered;
    for (std::uint64_t k = 0; k < space; ++k) {
      decode_key(k, q, count, cur);
      if (is_orthogonal_raw(cur, n, f)) filtered.push_back(k);
    }
    if (filtered != keys) {
      throw InternalError("reflection closure of O_" + std::to_string(n) + "(F_" + std::to_string(q) +
                          ") has " + std::to_string(keys.size()) + " elements, direct filter found " +
                          std::to_string(filtered.size()));
    }
  }
  return GroupRef(new GroupTable(GroupKind::O, n, std::move(field), std::move(keys)));
}

void GroupTable::finish() {
  const int q = field_->order();
  const int count = n_ * n_;
  const std::size_t order = keys_.size();
  entries_.resize(order * count);
  for (std::size_t i = 0; i < order; ++i) decode_key(keys_[i], q, count, &entries_[i * count]);

  const std::uint64_t space = key_space(n_, *field_);
  if (space <= kDenseIndexLimit) {
    dense_index_.assign(space, -1);
    for (std::size_t i = 0; i < order; ++i) dense_index_[keys_[i]] = static_cast<std::int32_t>(i);
  }

  const Matrix id = Matrix::identity(field_, n_);
  identity_ = index_of(id);

  inverse_.assign(order, 0);
  transpose_.assign(order, std::numeric_limits<ElemId>::max());
  std::vector<char> have_inverse(order, 0);
  std::uint8_t t[kMaxEntries];
  for (ElemId a = 0; a < order; ++a) {
    if (!have_inverse[a]) {
      const ElemId b = index_of(gelfand::inverse(element(a)));
      inverse_[a] = b;
      inverse_[b] = a;
      have_inverse[a] = have_inverse[b] = 1;
    }
    const std::uint8_t* e = raw(a);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) t[j * n_ + i] = e[i * n_ + j];
    }
    if (auto tid = find_key(key_of(t))) {
      transpose_[a] = *tid;
    } else {
      transpose_closed_ = false;
    }
  }
  choose_generators();
}

void GroupTable::choose_generators() {
  const std::size_t order = keys_.size();
  std::vector<char> in_closure(order, 0);
  std::size_t closure_size = 0;
  auto recompute = [&] {
    std::fill(in_closure.begin(), in_closure.end(), 0);
    std::vector<ElemId> stack{identity_};
    in_closure[identity_] = 1;
    closure_size = 1;
    while (!stack.empty()) {
      const ElemId x = stack.back();
      stack.pop_back();
      for (ElemId g : generators_) {
        const ElemId y = multiply(x, g);
        if (!in_closure[y]) {
          in_closure[y] = 1;
          ++closure_size;
          stack.push_back(y);
        }
      }
    }
  };
  recompute();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, order - 1);
  while (closure_size < order) {
    ElemId candidate;
    do {
      candidate = static_cast<ElemId>(pick(rng));
    } while (in_closure[candidate]);
    generators_.push_back(candidate);
    recompute();
  }
}

std::uint64_t GroupTable::key_of(const std::uint8_t* entries) const {
  return encode_key(entries, field_->order(), n_ * n_);
}

std::optional<ElemId> GroupTable::find_key(std::uint64_t key) const {
  if (!dense_index_.empty()) {
    if (key >= dense_index_.size() || dense_index_[key] < 0) return std::nullopt;
    return static_cast<ElemId>(dense_index_[key]);
  }
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<ElemId>(it - keys_.begin());
}

Matrix GroupTable::element(ElemId id) const {
  const int count = n_ * n_;
  std::vector<Scalar> e(count);
  const std::uint8_t* r = raw(id);
  for (int i = 0; i < count; ++i) e[i] = Scalar{r[i]};
  return Matrix(field_, n_, n_, std::move(e));
}

std::optional<ElemId> GroupTable::find(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_ || !same_field(m.field(), field_)) return std::nullopt;
  std::uint8_t e[kMaxEntries];
  const auto entries = m.entries();
  for (int i = 0; i < n_ * n_; ++i) e[i] = static_cast<std::uint8_t>(entries[i].idx);
  return find_key(key_of(e));
}

ElemId GroupTable::index_of(const Matrix& m) const {
  if (auto id = find(m)) return *id;
  throw InternalError("matrix " + to_literal(m) + " is not an element of " + name());
}

ElemId GroupTable::multiply(ElemId a, ElemId b) const {
  std::uint8_t prod[kMaxEntries];
  multiply_raw(raw(a), raw(b), prod, n_, *field_);
  if (auto id = find_key(key_of(prod))) return *id;
  throw InternalError(name() + " is not closed under multiplication");
}

ElemId GroupTable::transpose(ElemId a) const {
  const ElemId t = transpose_[a];
  if (t == std::numeric_limits<ElemId>::max()) {
    throw InternalError("transpose of element " + std::to_string(a) + " leaves " + name());
  }
  return t;
}

int GroupTable::element_order(ElemId a) const {
  int k = 1;
  for (ElemId x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

std::string GroupTable::name() const {
  return std::string(kind_ == GroupKind::GL ? "GL_" : "O_") + std::to_string(n_) + "(F_" +
         std::to_string(field_->order()) + ")";
}

std::vector<ElemId> Embedding::image_generators() const {
  std::vector<ElemId> out;
  for (ElemId g : small->generators()) out.push_back(map[g]);
  return out;
}

GroupRef enumerate_gl(int n, FieldRef field, std::size_t cap) {
  return GroupTable::enumerate_gl(n, std::move(field), cap);
}

GroupRef enumerate_o(int n, FieldRef field, std::size_t cap) {
  return GroupTable::enumerate_o(n, std::move(field), cap);
}

GroupRef enumerate(GroupKind kind, int n, FieldRef field, std::size_t cap) {
  return kind == GroupKind::GL ? enumerate_gl(n, std::move(field), cap) : enumerate_o(n, std::move(field), cap);
}

std::vector<ElemId> center_ids(const GroupTable& g) {
  std::vector<ElemId> out;
  for (ElemId z = 0; z < g.order(); ++z) {
    bool central = true;
    for (ElemId s : g.generators()) {
      if (g.multiply(z, s) != g.multiply(s, z)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return out;
}

Embedding embed_standard(GroupRef h, GroupRef g) {
  if (h->kind() != g->kind()) throw DomainError("embedding needs groups of the same kind");
  if (h->n() + 1 != g->n()) throw DomainError("embedding needs sizes n and n+1");
  if (!same_field(h->field(), g->field())) throw DomainError("embedding needs a common field");

  const int n = h->n();
  Embedding emb{h, g, std::vector<ElemId>(h->order())};
  for (ElemId i = 0; i < h->order(); ++i) {
    const Matrix b = h->element(i);
    Matrix big(g->field(), n + 1, n + 1);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) big(r, c) = b(r, c);
    }
    big(n, n) = Scalar{1};
    emb.map[i] = g->index_of(big);
  }

  std::vector<ElemId> sorted = emb.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InternalError("standard embedding is not injective");
  }
  if (h->order() <= 10'000) {
    for (ElemId a = 0; a < h->order(); ++a) {
      for (ElemId b = 0; b < h->order(); ++b) {
        if (emb.map[h->multiply(a, b)] != g->multiply(emb.map[a], emb.map[b])) {
          throw InternalError("standard embedding is not a homomorphism");
        }
      }
    }
  }
  return emb;
}

void dump_elements(const GroupTable& g, std::ostream& out) {
  for (ElemId i = 0; i < g.order(); ++i) out << to_literal(g.element(i)) << '\n';
}

}  // namespace gelfand
