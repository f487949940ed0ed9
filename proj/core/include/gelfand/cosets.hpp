#pragma once

#include <cstddef>
#include <vector>

#include "gelfand/group.hpp"

namespace gelfand {

using CosetId = std::uint32_t;

/// Partition of G into double cosets H x K, where K = H, or K = Z(G)H when
/// reduced modulo the center. Coset ids follow their minimal element ids.
struct DoubleCosetDecomposition {
  GroupRef group;
  Embedding embedding;
  bool mod_center = false;
  std::vector<CosetId> coset_of;
  std::vector<ElemId> reps;

  std::size_t count() const { return reps.size(); }
};

/// Transpose acting on a double-coset decomposition.
struct InvolutionAction {
  DoubleCosetDecomposition decomp;
  std::vector<CosetId> perm;
  std::size_t fixed_count = 0;
  std::size_t nonfixed_count = 0;

  /// Half the number of non-fixed cosets.
  std::size_t k() const { return nonfixed_count / 2; }
  std::vector<CosetId> nonfixed() const;
};

/// Throws CapExceeded above the order cap.
DoubleCosetDecomposition double_cosets(GroupRef g, const Embedding& emb, bool mod_center,
                                       std::size_t cap = kDefaultGroupOrderCap);

/// Throws InternalError if transpose does not map some double coset onto a
/// single double coset, or the induced map is not an involution.
InvolutionAction involution_action(DoubleCosetDecomposition d);

inline std::size_t count_nonfixed(const InvolutionAction& a) { return a.nonfixed_count; }

}  // namespace gelfand
