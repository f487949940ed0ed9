#include "gelfand/cosets.hpp"

#include <algorithm>
#include <limits>

#include "gelfand/error.hpp"

namespace gelfand {

std::vector<CosetId> InvolutionAction::nonfixed() const {
  std::vector<CosetId> out;
  for (CosetId c = 0; c < perm.size(); ++c) {
    if (perm[c] != c) out.push_back(c);
  }
  return out;
}

DoubleCosetDecomposition double_cosets(GroupRef g, const Embedding& emb, bool mod_center, std::size_t cap) {
  if (emb.big != g) throw DomainError("embedding does not target this group");
  if (g->order() > cap) {
    throw CapExceeded("double cosets of a group of order " + std::to_string(g->order()) + " exceed cap " +
                      std::to_string(cap));
  }
  const std::vector<ElemId> left = emb.image_generators();
  std::vector<ElemId> right = left;
  if (mod_center) {
    for (ElemId z : center_ids(*g)) {
      if (z != g->identity()) right.push_back(z);
    }
  }

  constexpr CosetId kUnset = std::numeric_limits<CosetId>::max();
  DoubleCosetDecomposition d{g, emb, mod_center, std::vector<CosetId>(g->order(), kUnset), {}};
  std::vector<ElemId> stack;
  for (ElemId seed = 0; seed < g->order(); ++seed) {
    if (d.coset_of[seed] != kUnset) continue;
    const auto id = static_cast<CosetId>(d.reps.size());
    d.reps.push_back(seed);
    d.coset_of[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const ElemId x = stack.back();
      stack.pop_back();
      auto visit = [&](ElemId y) {
        if (d.coset_of[y] == kUnset) {
          d.coset_of[y] = id;
          stack.push_back(y);
        }
      };
      for (ElemId h : left) visit(g->multiply(h, x));
      for (ElemId k : right) visit(g->multiply(x, k));
    }
  }
  return d;
}

InvolutionAction involution_action(DoubleCosetDecomposition d) {
  const GroupTable& g = *d.group;
  InvolutionAction a;
  a.perm.resize(d.count());
  for (CosetId c = 0; c < d.count(); ++c) a.perm[c] = d.coset_of[g.transpose(d.reps[c])];

  for (ElemId x = 0; x < g.order(); ++x) {
    if (d.coset_of[g.transpose(x)] != a.perm[d.coset_of[x]]) {
      throw InternalError("transpose is not well defined on double cosets of " + g.name() +
                          " (element " + to_literal(g.element(x)) + ")");
    }
  }
  for (CosetId c = 0; c < d.count(); ++c) {
    if (a.perm[a.perm[c]] != c) throw InternalError("transpose action on double cosets is not an involution");
    if (a.perm[c] == c) {
      ++a.fixed_count;
    } else {
      ++a.nonfixed_count;
    }
  }
  a.decomp = std::move(d);
  return a;
}

}  // namespace gelfand
