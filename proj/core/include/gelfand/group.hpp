#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/matrix.hpp"

namespace gelfand {

inline constexpr std::size_t kDefaultGroupOrderCap = 25'000;

enum class GroupKind { GL, O };

std::string to_string(GroupKind kind);
/// Accepts "gl" or "o" (case-insensitive).
GroupKind parse_group_kind(std::string_view text);

using ElemId = std::uint32_t;

class GroupTable;
using GroupRef = std::shared_ptr<const GroupTable>;

/// A finite matrix group held as a sorted table of its elements.
///
/// Elements are ordered by their canonical key, which is the row-major entry
/// string read as a base-q number, so element ids follow the lexicographic
/// order of entries. Inverse and transpose are precomputed per element;
/// products are computed on demand and looked up by key.
class GroupTable {
 public:
  static GroupRef enumerate_gl(int n, FieldRef field, std::size_t cap = kDefaultGroupOrderCap);
  static GroupRef enumerate_o(int n, FieldRef field, std::size_t cap = kDefaultGroupOrderCap);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const FieldRef& field() const { return field_; }
  std::size_t order() const { return keys_.size(); }

  Matrix element(ElemId id) const;
  std::uint64_t key(ElemId id) const { return keys_[id]; }
  std::optional<ElemId> find(const Matrix& m) const;
  /// Throws InternalError if m is not in the group.
  ElemId index_of(const Matrix& m) const;

  ElemId identity() const { return identity_; }
  ElemId multiply(ElemId a, ElemId b) const;
  ElemId inverse(ElemId a) const { return inverse_[a]; }
  /// Throws InternalError when the group is not transpose-closed.
  ElemId transpose(ElemId a) const;
  bool transpose_closed() const { return transpose_closed_; }

  /// Small generating set, chosen deterministically.
  std::span<const ElemId> generators() const { return generators_; }

  /// Order of an element (smallest k >= 1 with g^k = 1).
  int element_order(ElemId a) const;

  std::string name() const;

 private:
  GroupTable(GroupKind kind, int n, FieldRef field, std::vector<std::uint64_t> keys);

  std::uint64_t key_of(const std::uint8_t* entries) const;
  std::optional<ElemId> find_key(std::uint64_t key) const;
  const std::uint8_t* raw(ElemId id) const { return &entries_[static_cast<std::size_t>(id) * n_ * n_]; }
  void finish();
  void choose_generators();

  GroupKind kind_;
  int n_;
  FieldRef field_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::int32_t> dense_index_;
  std::vector<ElemId> inverse_;
  std::vector<ElemId> transpose_;
  std::vector<ElemId> generators_;
  ElemId identity_ = 0;
  bool transpose_closed_ = true;
};

/// The standard embedding H -> G, B -> diag(B, 1).
struct Embedding {
  GroupRef small;
  GroupRef big;
  std::vector<ElemId> map;

  /// Images of the generators of the small group.
  std::vector<ElemId> image_generators() const;
};

/// Order of GL_n(F_q) from the product formula; saturates at UINT64_MAX.
std::uint64_t gl_order(int n, int q);

GroupRef enumerate_gl(int n, FieldRef field, std::size_t cap = kDefaultGroupOrderCap);
GroupRef enumerate_o(int n, FieldRef field, std::size_t cap = kDefaultGroupOrderCap);
GroupRef enumerate(GroupKind kind, int n, FieldRef field, std::size_t cap = kDefaultGroupOrderCap);

/// Elements commuting with all of g, ascending ids.
std::vector<ElemId> center_ids(const GroupTable& g);

/// Throws DomainError if the groups are not a standard pair, InternalError if
/// an image is missing or the homomorphism check fails.
Embedding embed_standard(GroupRef h, GroupRef g);

/// Writes one matrix literal per line, in element order.
void dump_elements(const GroupTable& g, std::ostream& out);

}  // namespace gelfand
