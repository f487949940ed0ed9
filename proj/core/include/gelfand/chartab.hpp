#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/cosets.hpp"
#include "gelfand/group.hpp"
#include "gelfand/modular.hpp"

namespace gelfand {

using ClassId = std::uint32_t;

/// Conjugacy classes, numbered by their minimal element id.
struct ConjClasses {
  GroupRef group;
  std::vector<ClassId> class_of;
  std::vector<ElemId> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<ClassId> inverse_class;
  std::vector<int> orders;  // element order of each class
  ClassId identity_class = 0;

  std::size_t count() const { return reps.size(); }
  /// lcm of element orders.
  std::uint64_t exponent() const;
};

ConjClasses conjugacy_classes(GroupRef g, std::size_t cap = kDefaultGroupOrderCap);

/// class_of(g) == class_of(g^T) for every element.
bool transpose_preserves_classes(const ConjClasses& classes);

/// Complex character table held as residues modulo a prime l with
/// l = 1 (mod exponent) and l > 2|G|. Rows are irreducibles sorted by
/// (degree, residues); columns are classes.
struct CharacterTable {
  ConjClasses classes;
  modp::Residue modulus = 0;
  std::uint64_t exponent = 0;
  /// root = g^((l-1)/exponent) for the least primitive root g mod l.
  modp::Residue root = 0;
  std::vector<std::vector<modp::Residue>> values;
  std::vector<std::uint64_t> degrees;

  std::size_t size() const { return degrees.size(); }
};

/// Dixon's method: exact class-algebra structure constants, then common
/// eigenvectors of the class matrices over F_l. `threads` parallelizes the
/// structure constants; the result does not depend on it.
CharacterTable character_table(const ConjClasses& classes, unsigned threads = 1);

// Consistency checks on a finished table. All exact, mod l.
bool rows_orthogonal(const CharacterTable& t);
bool columns_orthogonal(const CharacterTable& t);
/// Sum of squared degrees is |G|, each degree divides |G| and matches the
/// identity column.
bool degrees_consistent(const CharacterTable& t);
/// For central z: chi(z)/chi(1) is an exponent-th root of unity and
/// chi(z^T) = chi(z).
bool central_characters_coherent(const CharacterTable& t, const std::vector<ElemId>& center);

struct CharacterInvariants {
  std::uint64_t degree = 0;
  std::uint64_t dim_inv = 0;       // dim pi^H
  std::uint64_t dim_dual_inv = 0;  // dim (pi^*)^H
};

struct InvariantReport {
  std::vector<CharacterInvariants> characters;  // table row order
  std::uint64_t max_dim_inv = 0;
  std::map<std::uint64_t, std::size_t> histogram;  // dim_inv -> count

  /// Sum of dim_inv^2 over irreducibles.
  std::uint64_t sum_squares() const;
  bool duals_agree() const;
};

/// dim pi^H as the average of chi over the embedded H, lifted from F_l into
/// [0, degree]. Throws InternalError if a residue lies outside that range.
InvariantReport dim_invariants(const CharacterTable& t, const Embedding& emb);

struct VerificationOutcome {
  std::size_t k = 0;
  std::uint64_t max_dim_inv = 0;
  std::uint64_t bound = 0;       // k + 1
  std::uint64_t kind_bound = 0;  // 2 for GL pairs, 1 for O pairs
  bool within_bound = false;
  bool within_kind_bound = false;
  bool attained = false;  // max_dim_inv == bound
  std::string counterexample;  // empty unless a bound fails

  bool passed() const { return within_bound && within_kind_bound; }
};

/// Checks max dim pi^H <= k + 1 with k from the mod-center transpose action,
/// plus the absolute bound for the pair kind.
VerificationOutcome verify_pair(const Embedding& emb, const InvariantReport& report,
                                const InvolutionAction& mod_center_action);

// Cache files: JSON with l, root, class representatives (matrix literals),
// sizes, degrees and value rows.
inline constexpr int kTableFormatVersion = 1;

std::string table_to_json(const CharacterTable& t);
/// Rebuilds a table against freshly computed classes; nullopt if the file
/// does not match them (different reps, sizes, version or group).
std::optional<CharacterTable> table_from_json(std::string_view text, const ConjClasses& classes);
std::string cache_file_name(GroupKind kind, int n, int q);

/// Loads from cache_dir when a matching file exists, otherwise computes and
/// writes it. An empty cache_dir disables caching.
CharacterTable cached_character_table(const ConjClasses& classes, const std::string& cache_dir,
                                      unsigned threads = 1, bool* cache_hit = nullptr);

}  // namespace gelfand
